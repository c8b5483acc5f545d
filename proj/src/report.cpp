#include "convexa/report.hpp"

#include <chrono>
#include <future>
#include <sstream>

#include "convexa/errors.hpp"
#include "convexa/geometry/realization.hpp"

namespace convexa {

GraphSummary summarize_graph(const NeuralCode& code) {
  GraphSummary s;
  ContainmentGraph g(code.without_empty().codewords());
  s.vertices = g.size();
  s.edges = g.edge_count();
  s.components = g.components().size();
  if (g.size() == 0) {
    s.shape = "empty";
    return s;
  }
  if (auto p = recognize_path(g)) {
    s.shape = "path";
    s.ordering = p;
  } else if (auto c = recognize_cycle(g)) {
    s.shape = "cycle";
    s.ordering = c;
  } else {
    s.shape = "other";
    return s;
  }
  s.triplewise = triplewise_condition(*s.ordering);
  s.alternating = alternating_condition(*s.ordering);
  if (s.shape == "path") s.interval_violation = interval_condition(*s.ordering, code.n());
  return s;
}

namespace {

std::vector<NeuronSet> difference(const NeuralCode& a, const NeuralCode& b) {
  std::vector<NeuronSet> out;
  for (NeuronSet s : a) {
    if (!b.contains(s)) out.push_back(s);
  }
  return out;
}

}  // namespace

RealizationCheck verify_realization(const NeuralCode& code, const Realization& r, bool nondegeneracy,
                                    const AtomOptions& options) {
  const Realization nr = normalized(r);
  if (nr.neurons() != code.n()) {
    throw InvalidArgument("realization has " + std::to_string(nr.neurons()) + " bodies but the code has " +
                          std::to_string(code.n()) + " neurons");
  }
  RealizationCheck out;
  out.realized = realized_code(nr, options);
  out.missing = difference(code, out.realized);
  out.extra = difference(out.realized, code);
  out.match = out.missing.empty() && out.extra.empty();
  if (nondegeneracy) {
    if (nr.mode == RealizationMode::Closed) {
      NondegeneracyReport rep = nondegeneracy_check_closed(nr, options);
      out.nondegeneracy = to_string(rep.verdict);
      out.companion_code = rep.interior_code;
      out.lower_dimensional = rep.lower_dimensional;
    } else {
      out.companion_code = realized_code(closure_realization(nr), options);
      out.nondegeneracy = *out.companion_code == out.realized ? "nondegenerate" : "degenerate";
    }
  }
  return out;
}

AnalysisReport analyze(const NeuralCode& code, const AnalyzeOptions& options) {
  using Clock = std::chrono::steady_clock;
  auto ms = [](Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  };
  AnalysisReport report;
  report.code = code;
  if (!code.has_empty()) report.warnings.push_back("code does not contain the empty codeword");

  RigidSearchBudget rigid_budget = options.rigid;
  rigid_budget.try_cycle = false;
  rigid_budget.collect_all = false;

  auto run_cf = [&] {
    auto t0 = Clock::now();
    try {
      CanonicalFormOptions cfo = options.canonical;
      cfo.threads = 1;
      report.canonical_form = canonical_form(code, cfo);
      report.rf_relations = rf_relationships(code, *report.canonical_form);
    } catch (const BudgetExceeded& e) {
      report.canonical_form_error = e.what();
    }
    return ms(t0, Clock::now());
  };
  auto run_rigid = [&] {
    auto t0 = Clock::now();
    report.cycle = cycle_criterion(code);
    report.rigid = search_rigid_obstruction(code, rigid_budget);
    return ms(t0, Clock::now());
  };
  auto run_rf = [&] {
    auto t0 = Clock::now();
    report.rf_tuples = search_rf_obstruction(code, 1);
    return ms(t0, Clock::now());
  };

  auto t0 = Clock::now();
  report.graph = summarize_graph(code);
  report.timing_ms["containment_graph"] = ms(t0, Clock::now());
  if (options.threads > 1) {
    auto a = std::async(std::launch::async, run_cf);
    auto b = std::async(std::launch::async, run_rigid);
    auto c = std::async(std::launch::async, run_rf);
    report.timing_ms["canonical_form"] = a.get();
    report.timing_ms["rigid_search"] = b.get();
    report.timing_ms["rf_search"] = c.get();
  } else {
    report.timing_ms["canonical_form"] = run_cf();
    report.timing_ms["rigid_search"] = run_rigid();
    report.timing_ms["rf_search"] = run_rf();
  }

  if (report.cycle) report.certificates.push_back(*report.cycle);
  if (report.rigid.certificate) report.certificates.push_back(*report.rigid.certificate);
  if (!report.rf_tuples.empty()) report.certificates.push_back(rf_certificate(report.rf_tuples.front()));
  for (const auto& cert : report.certificates) {
    if (!replay(code, cert)) throw std::logic_error("emitted certificate failed to replay");
  }
  report.timing_ms["total"] = ms(t0, Clock::now());
  return report;
}

std::string verdict_text(const AnalysisReport& report) {
  return report.obstruction_found() ? "obstruction found: not closed-convex" : "no certificate found";
}

namespace {

const char* status_text(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "certificate found";
    case SearchStatus::NotFound:
      return "no certificate found";
    case SearchStatus::BudgetExceeded:
      return "budget exceeded";
  }
  return "?";
}

}  // namespace

Json to_json(const GraphSummary& g) {
  Json out;
  out["shape"] = g.shape;
  out["vertices"] = g.vertices;
  out["edges"] = g.edges;
  out["components"] = g.components;
  if (g.ordering) {
    out["ordering"] = to_json(g.ordering->sequence);
    out["triplewise"] = g.triplewise;
    out["alternating"] = *g.alternating;
    if (g.shape == "path") {
      if (g.interval_violation) {
        out["interval_violation"] = {{"neuron", g.interval_violation->neuron},
                                     {"positions", g.interval_violation->positions}};
      } else {
        out["interval_violation"] = nullptr;
      }
    }
  }
  return out;
}

Json to_json(const RealizationCheck& check) {
  Json out;
  out["realized"] = to_json(check.realized);
  out["match"] = check.match;
  out["missing"] = to_json(check.missing);
  out["extra"] = to_json(check.extra);
  if (check.nondegeneracy) {
    Json nd;
    nd["verdict"] = *check.nondegeneracy;
    if (check.companion_code) nd["companion_code"] = to_json(*check.companion_code);
    nd["lower_dimensional_bodies"] = check.lower_dimensional;
    out["nondegeneracy"] = nd;
  }
  return out;
}

Json to_json(const AnalysisReport& report, bool with_timing) {
  Json out;
  out["code"] = to_json(report.code);
  out["warnings"] = report.warnings;
  out["verdict"] = verdict_text(report);
  if (report.canonical_form) {
    out["canonical_form"] = to_json(*report.canonical_form);
    out["rf_relationships"] = to_json(report.rf_relations);
  } else {
    out["canonical_form"] = nullptr;
    out["canonical_form_error"] = *report.canonical_form_error;
    out["rf_relationships"] = Json::array();
  }
  out["containment_graph"] = to_json(report.graph);
  Json cyc;
  cyc["status"] = report.cycle ? "certificate found" : "no certificate found";
  if (report.cycle) cyc["certificate"] = to_json(*report.cycle);
  out["cycle_criterion"] = cyc;
  Json rigid;
  rigid["status"] = status_text(report.rigid.status);
  rigid["pairs_tested"] = report.rigid.pairs_tested;
  rigid["union_witnesses"] = report.rigid.union_witnesses;
  rigid["candidate_supports"] = report.rigid.candidate_supports;
  if (report.rigid.certificate) rigid["certificate"] = to_json(*report.rigid.certificate);
  out["rigid_search"] = rigid;
  Json rf = to_json(report.rf_tuples);
  rf["status"] = report.rf_tuples.empty() ? "no certificate found" : "certificate found";
  out["rf_criterion"] = rf;
  Json certs = Json::array();
  for (const auto& c : report.certificates) certs.push_back(to_json(c));
  out["certificates"] = certs;
  if (report.realization) out["realization"] = to_json(*report.realization);
  if (with_timing) out["timing_ms"] = report.timing_ms;
  return out;
}

std::string render_text(const RealizationCheck& check, int n) {
  std::ostringstream out;
  out << "realized code: " << format_codewords(check.realized.codewords(), n) << "\n";
  out << "match: " << (check.match ? "yes" : "no") << "\n";
  if (!check.missing.empty()) out << "missing codewords: " << format_codewords(check.missing, n) << "\n";
  if (!check.extra.empty()) out << "extra codewords: " << format_codewords(check.extra, n) << "\n";
  if (check.nondegeneracy) {
    out << "nondegeneracy: " << *check.nondegeneracy << "\n";
    if (check.companion_code) {
      out << "  companion code: " << format_codewords(check.companion_code->codewords(), n) << "\n";
    }
    if (!check.lower_dimensional.empty()) {
      out << "  bodies with empty interior:";
      for (int b : check.lower_dimensional) out << ' ' << b;
      out << "\n";
    }
  }
  return out.str();
}

namespace {

void render_certificate(std::ostringstream& out, const ObstructionCertificate& cert, int n) {
  out << "  [" << to_string(cert.kind) << "]";
  if (cert.kind == CertificateKind::RFTuple) {
    const RFTuple& t = *cert.tuple;
    out << " (i,j,k,l,m) = (" << t.i << "," << t.j << "," << t.k << "," << t.l << "," << t.m << ")\n";
    return;
  }
  out << "\n";
  if (cert.cycle) out << "    cycle: " << to_string(*cert.cycle, n) << "\n";
  for (const auto& w : cert.witnesses) {
    out << "    witness (" << to_string(w.support, n) << ", " << to_string(w.mode) << ")";
    if (w.path) out << " via path " << to_string(*w.path, n);
    out << "\n";
  }
  out << "    distinguished subcode: " << format_codewords(cert.subcode, n) << "\n";
  out << "    components: " << format_codewords(cert.components[0], n) << " | "
      << format_codewords(cert.components[1], n) << "\n";
}

}  // namespace

std::string render_text(const AnalysisReport& report) {
  const int n = report.code.n();
  std::ostringstream out;
  out << "code (n=" << n << ", " << report.code.size() << " codewords): "
      << format_codewords(report.code.codewords(), n) << "\n";
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  out << "verdict: " << verdict_text(report) << "\n\n";

  if (report.canonical_form) {
    out << "canonical form (" << report.canonical_form->size() << " elements):\n";
    for (std::size_t i = 0; i < report.canonical_form->size(); ++i) {
      out << "  " << to_string((*report.canonical_form)[i]) << "    " << to_string(report.rf_relations[i]) << "\n";
    }
  } else {
    out << "canonical form: skipped (" << *report.canonical_form_error << ")\n";
  }

  const GraphSummary& g = report.graph;
  out << "\ncontainment graph of nonempty codewords: " << g.shape << " (" << g.vertices << " vertices, " << g.edges
      << " edges, " << g.components << " components)\n";
  if (g.ordering) {
    out << "  ordering: " << to_string(*g.ordering, n) << "\n";
    out << "  triplewise condition: " << (g.triplewise ? "holds" : "fails") << "\n";
    out << "  alternating containments: " << (*g.alternating ? "hold" : "fail") << "\n";
    if (g.shape == "path") {
      if (g.interval_violation) {
        out << "  interval condition: fails at neuron " << g.interval_violation->neuron << "\n";
      } else {
        out << "  interval condition: holds\n";
      }
    }
  }

  out << "\ncycle criterion: " << (report.cycle ? "certificate found" : "no certificate found") << "\n";
  out << "rigid-pair search: " << status_text(report.rigid.status) << " (" << report.rigid.pairs_tested
      << " pairs over " << report.rigid.union_witnesses << " union witnesses)\n";
  out << "receptive-field criterion: ";
  if (report.rf_tuples.empty()) {
    out << "no certificate found\n";
  } else {
    out << report.rf_tuples.size() << " passing tuples, first ";
    const RFTuple& t = report.rf_tuples.front().tuple;
    out << "(" << t.i << "," << t.j << "," << t.k << "," << t.l << "," << t.m << ")\n";
  }

  out << "\ncertificates:";
  if (report.certificates.empty()) {
    out << " none (no certificate found)\n";
  } else {
    out << "\n";
    for (const auto& c : report.certificates) render_certificate(out, c, n);
  }
  if (report.realization) out << "\nrealization check:\n" << render_text(*report.realization, n);
  return out.str();
}

}  // namespace convexa
