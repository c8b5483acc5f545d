// convexa: command-line front end.
//
// Exit codes: 0 analyzed, 1 input error, 2 realization mismatch,
// 3 obstruction certificate found, 4 budget exceeded.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "convexa/catalog.hpp"
#include "convexa/errors.hpp"
#include "convexa/geometry/constructions.hpp"
#include "convexa/geometry/svg.hpp"
#include "convexa/report.hpp"

using namespace convexa;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kMismatch = 2;
constexpr int kObstruction = 3;
constexpr int kBudget = 4;

struct Source {
  std::string name;
  std::string file;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParsedCode load_code(const Source& src) {
  if (!src.name.empty() && !src.file.empty()) throw InvalidArgument("give either --name or --file, not both");
  if (!src.name.empty()) return {named_code(src.name), {}};
  if (!src.file.empty()) return parse_code(read_file(src.file));
  throw InvalidArgument("a code is required (--name or --file)");
}

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("--name", src.name, "Catalog code name (see `catalog list`)");
  cmd->add_option("--file", src.file, "Code file, text or JSON ('-' for stdin)");
}

int env_threads() {
  const char* v = std::getenv("CONVEXA_THREADS");
  if (!v) return 1;
  try {
    int t = std::stoi(v);
    return t < 1 ? 1 : t;
  } catch (...) {
    return 1;
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

RFTuple parse_tuple(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(std::stoi(item));
  if (v.size() != 5) throw InvalidArgument("--tuple expects five comma-separated neurons");
  return {v[0], v[1], v[2], v[3], v[4]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial and geometric analysis of convex neural codes"};
  app.require_subcommand(1);

  Source src;
  bool json = false;
  bool no_timing = false;
  AnalyzeOptions opts;
  opts.threads = env_threads();
  std::size_t atom_calls = AtomOptions{}.max_calls;
  std::string realization_file;
  bool nondeg = false;
  std::string svg_file;
  bool additions = false;
  std::string tuple_text;
  bool all = false;
  int sunflower_n = 0;
  bool theta = false;
  std::string show_name;

  auto add_budgets = [&](CLI::App* cmd) {
    cmd->add_option("--budget-max-support", opts.rigid.max_support, "Largest support size for rigid witnesses");
    cmd->add_option("--budget-max-pairs", opts.rigid.max_pairs, "Cap on tested witness pairs");
  };

  auto* analyze = app.add_subcommand("analyze", "Full report for one code");
  add_source(analyze, src);
  add_budgets(analyze);
  analyze->add_option("--budget-atom-calls", atom_calls, "Cap on LP feasibility calls");
  analyze->add_option("--realization", realization_file, "Realization JSON to verify against the code");
  analyze->add_flag("--nondegeneracy", nondeg, "Also decide nondegeneracy of the realization");
  analyze->add_flag("--json", json, "JSON output");
  analyze->add_flag("--no-timing", no_timing, "Omit timings (deterministic output)");

  auto* cf = app.add_subcommand("canonical-form", "Canonical form of the neural ideal");
  add_source(cf, src);
  cf->add_flag("--json", json, "JSON output");

  auto* rf = app.add_subcommand("rf-check", "Receptive-field tuple search");
  add_source(rf, src);
  rf->add_flag("--additions", additions, "List codewords that can be added keeping the tuple valid");
  rf->add_option("--tuple", tuple_text, "Check this tuple i,j,k,l,m instead of searching");
  rf->add_flag("--json", json, "JSON output");

  auto* rigid = app.add_subcommand("rigid-search", "Search for rigid-pair or cycle certificates");
  add_source(rigid, src);
  add_budgets(rigid);
  rigid->add_flag("--all", all, "Collect one certificate per distinguished subcode");
  rigid->add_flag("--json", json, "JSON output");

  auto* verify = app.add_subcommand("verify-realization", "Compare a realization with a code");
  add_source(verify, src);
  verify->add_option("--realization", realization_file, "Realization JSON")->required();
  verify->add_flag("--nondegeneracy", nondeg, "Also decide nondegeneracy");
  verify->add_option("--budget-atom-calls", atom_calls, "Cap on LP feasibility calls");
  verify->add_option("--svg", svg_file, "Write an SVG drawing (planar realizations)");
  verify->add_flag("--json", json, "JSON output");

  auto* build = app.add_subcommand("build-realization", "Print a built-in realization as JSON");
  build->add_option("--sunflower", sunflower_n, "Sunflower realization for this n (2..6)");
  build->add_flag("--theta", theta, "The planar figure realizing C_theta");

  auto* catalog = app.add_subcommand("catalog", "Named codes");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List names");
  auto* show = catalog->add_subcommand("show", "Print a named code");
  show->add_option("name", show_name, "Code name")->required();
  show->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    AtomOptions atom;
    atom.max_calls = atom_calls;

    if (*analyze) {
      ParsedCode pc = load_code(src);
      for (const auto& w : pc.warnings) std::cerr << "warning: " << w << "\n";
      AnalysisReport report = convexa::analyze(pc.code, opts);
      for (const auto& w : pc.warnings) report.warnings.push_back(w);
      if (!realization_file.empty()) {
        report.realization =
            verify_realization(pc.code, parse_realization(read_file(realization_file)), nondeg, atom);
      }
      if (json) {
        emit(to_json(report, !no_timing));
      } else {
        std::cout << render_text(report);
        if (!no_timing) std::cout << "\ntotal time: " << report.timing_ms.at("total") << " ms\n";
      }
      if (report.obstruction_found()) return kObstruction;
      if (report.rigid.status == SearchStatus::BudgetExceeded || report.canonical_form_error) return kBudget;
      return kOk;
    }

    if (*cf) {
      ParsedCode pc = load_code(src);
      CanonicalForm form = canonical_form(pc.code);
      auto rels = rf_relationships(pc.code, form);
      if (json) {
        Json j;
        j["code"] = to_json(pc.code);
        j["canonical_form"] = to_json(form);
        j["rf_relationships"] = to_json(rels);
        emit(j);
      } else {
        for (std::size_t i = 0; i < form.size(); ++i) {
          std::cout << to_string(form[i]) << "    " << to_string(rels[i]) << "\n";
        }
      }
      return kOk;
    }

    if (*rf) {
      ParsedCode pc = load_code(src);
      std::vector<RFMatch> matches;
      if (!tuple_text.empty()) {
        RFTuple t = parse_tuple(tuple_text);
        TupleCheck c = check_tuple(pc.code, t);
        if (!json) {
          std::cout << "tuple (" << t.i << "," << t.j << "," << t.k << "," << t.l << "," << t.m << "):";
          for (int r = 0; r < 7; ++r) std::cout << " row" << r + 1 << "=" << (c.rows[r] ? "T" : "F");
          std::cout << (c.passes() ? "  passes\n" : "  fails\n");
        }
        if (c.passes()) {
          matches.push_back({t, c});
        } else if (json) {
          Json j;
          j["tuple"] = {t.i, t.j, t.k, t.l, t.m};
          j["rows"] = c.rows;
          j["passes"] = false;
          emit(j);
          return kOk;
        }
      } else {
        matches = search_rf_obstruction(pc.code, opts.threads);
      }
      Json j = to_json(matches);
      if (additions && !matches.empty()) {
        auto adds = safe_codeword_additions(pc.code, matches.front().tuple);
        j["additions"] = to_json(adds);
        if (!json) {
          const RFTuple& t = matches.front().tuple;
          std::cout << "safe additions for (" << t.i << "," << t.j << "," << t.k << "," << t.l << "," << t.m
                    << "): " << format_codewords(adds, pc.code.n()) << "\n";
        }
      }
      if (json) {
        emit(j);
      } else if (tuple_text.empty()) {
        if (matches.empty()) std::cout << "no certificate found\n";
        for (const auto& m : matches) {
          std::cout << "(" << m.tuple.i << "," << m.tuple.j << "," << m.tuple.k << "," << m.tuple.l << ","
                    << m.tuple.m << ")\n";
        }
      }
      return matches.empty() ? kOk : kObstruction;
    }

    if (*rigid) {
      ParsedCode pc = load_code(src);
      opts.rigid.collect_all = all;
      RigidSearchResult res = search_rigid_obstruction(pc.code, opts.rigid);
      if (json) {
        Json j;
        j["status"] = res.status == SearchStatus::Found      ? "certificate found"
                      : res.status == SearchStatus::NotFound ? "no certificate found"
                                                             : "budget exceeded";
        j["pairs_tested"] = res.pairs_tested;
        Json certs = Json::array();
        if (all) {
          for (const auto& c : res.all) certs.push_back(to_json(c));
        } else if (res.certificate) {
          certs.push_back(to_json(*res.certificate));
        }
        j["certificates"] = certs;
        emit(j);
      } else {
        AnalysisReport view;
        view.code = pc.code;
        if (all) {
          view.certificates = res.all;
        } else if (res.certificate) {
          view.certificates.push_back(*res.certificate);
        }
        const int n = pc.code.n();
        if (view.certificates.empty()) {
          std::cout << (res.status == SearchStatus::BudgetExceeded ? "budget exceeded, " : "")
                    << "no certificate found (" << res.pairs_tested << " pairs tested)\n";
        }
        for (const auto& c : view.certificates) {
          std::cout << "[" << to_string(c.kind) << "] subcode " << format_codewords(c.subcode, n) << "\n";
          for (const auto& w : c.witnesses) {
            std::cout << "  (" << to_string(w.support, n) << ", " << to_string(w.mode) << ")\n";
          }
        }
      }
      if (res.certificate) return kObstruction;
      return res.status == SearchStatus::BudgetExceeded ? kBudget : kOk;
    }

    if (*verify) {
      ParsedCode pc = load_code(src);
      Realization r = parse_realization(read_file(realization_file));
      RealizationCheck check = verify_realization(pc.code, r, nondeg, atom);
      if (!svg_file.empty()) {
        std::ofstream out(svg_file);
        if (!out) throw ParseError("cannot write " + svg_file);
        out << render_svg(normalized(r));
      }
      if (json) {
        emit(to_json(check));
      } else {
        std::cout << render_text(check, pc.code.n());
      }
      return check.match ? kOk : kMismatch;
    }

    if (*build) {
      if ((sunflower_n > 0) == theta) throw InvalidArgument("give exactly one of --sunflower N or --theta");
      Realization r = theta ? theta_figure_realization() : build_sunflower_realization(sunflower_n);
      emit(to_json(r));
      return kOk;
    }

    if (*list) {
      for (const auto& e : catalog_entries()) std::cout << e.name << "\t" << e.description << "\n";
      return kOk;
    }
    if (*show) {
      NeuralCode code = named_code(show_name);
      if (json) {
        emit(to_json(code));
      } else {
        std::cout << format_code(code) << "\n";
      }
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
