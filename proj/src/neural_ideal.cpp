#include "convexa/neural_ideal.hpp"

#include <algorithm>
#include <cctype>
#include <thread>

#include "convexa/errors.hpp"

namespace convexa {

PseudoMonomial make_pseudo_monomial(NeuronSet sigma, NeuronSet tau) {
  if (sigma.intersects(tau)) {
    throw InvalidArgument("sigma " + to_string(sigma) + " and tau " + to_string(tau) + " overlap");
  }
  return PseudoMonomial{sigma, tau};
}

bool canonical_less(const PseudoMonomial& a, const PseudoMonomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.sigma != b.sigma) return lex_less(a.sigma, b.sigma);
  return lex_less(a.tau, b.tau);
}

bool divides(const PseudoMonomial& g, const PseudoMonomial& f) {
  return g.sigma.is_subset_of(f.sigma) && g.tau.is_subset_of(f.tau);
}

PseudoMonomial characteristic(NeuronSet v, int n) {
  const NeuronSet all = NeuronSet::universe(n);
  if (!v.is_subset_of(all)) throw InvalidArgument("v is not a subset of [n]");
  return PseudoMonomial{v, all - v};
}

bool evaluate(const PseudoMonomial& pm, NeuronSet v) {
  return pm.sigma.is_subset_of(v) && !pm.tau.intersects(v);
}

bool ideal_contains(const NeuralCode& code, const PseudoMonomial& pm) {
  if (!(pm.sigma | pm.tau).is_subset_of(code.universe())) {
    throw InvalidArgument("pseudo-monomial " + to_string(pm) + " uses variables beyond n=" + std::to_string(code.n()));
  }
  for (NeuronSet c : code) {
    if (evaluate(pm, c)) return false;
  }
  return true;
}

namespace {

bool in_ideal(const std::vector<std::uint64_t>& words, std::uint64_t sigma, std::uint64_t tau) {
  for (std::uint64_t c : words) {
    if ((sigma & ~c) == 0 && (tau & c) == 0) return false;
  }
  return true;
}

// Membership is upward closed under divisibility, so a member is minimal iff
// dropping any single variable leaves the ideal.
void scan_sigmas(const std::vector<std::uint64_t>& words, std::uint64_t all, std::uint64_t first, std::uint64_t stride,
                 CanonicalForm& out) {
  const std::uint64_t limit = all + 1;
  for (std::uint64_t sigma = first; sigma < limit; sigma += stride) {
    const std::uint64_t rest = all & ~sigma;
    std::uint64_t tau = 0;
    while (true) {
      if (in_ideal(words, sigma, tau)) {
        bool minimal = true;
        for (std::uint64_t m = sigma; m && minimal; m &= m - 1) {
          if (in_ideal(words, sigma & ~(m & (~m + 1)), tau)) minimal = false;
        }
        for (std::uint64_t m = tau; m && minimal; m &= m - 1) {
          if (in_ideal(words, sigma, tau & ~(m & (~m + 1)))) minimal = false;
        }
        if (minimal) out.push_back(PseudoMonomial{NeuronSet::from_mask(sigma), NeuronSet::from_mask(tau)});
      }
      if (tau == rest) break;
      tau = (tau - rest) & rest;
    }
  }
}

}  // namespace

CanonicalForm canonical_form(const NeuralCode& code, const CanonicalFormOptions& options) {
  if (code.n() > options.max_neurons) {
    throw BudgetExceeded("canonical form enumerates 3^n pseudo-monomials; n=" + std::to_string(code.n()) +
                         " exceeds the budget of " + std::to_string(options.max_neurons));
  }
  std::vector<std::uint64_t> words;
  for (NeuronSet c : code) words.push_back(c.mask());
  const std::uint64_t all = code.universe().mask();
  const int workers = std::max(1, std::min(options.threads, 64));

  CanonicalForm cf;
  if (workers == 1) {
    scan_sigmas(words, all, 0, 1, cf);
  } else {
    std::vector<CanonicalForm> parts(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { scan_sigmas(words, all, static_cast<std::uint64_t>(w), workers, parts[w]); });
    }
    for (auto& t : pool) t.join();
    for (auto& p : parts) cf.insert(cf.end(), p.begin(), p.end());
  }
  std::sort(cf.begin(), cf.end(), canonical_less);
  return cf;
}

std::string to_string(const PseudoMonomial& pm) {
  if (pm.sigma.empty() && pm.tau.empty()) return "1";
  std::string out;
  for (int l : pm.sigma.labels()) {
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(l);
  }
  for (int l : pm.tau.labels()) {
    if (!out.empty()) out += '*';
    out += "(1+x" + std::to_string(l) + ")";
  }
  return out;
}

PseudoMonomial parse_pseudo_monomial(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}') s += c;
  }
  if (s == "1") return {};
  NeuronSet sigma, tau;
  std::size_t i = 0;
  auto read_var = [&](std::size_t& p) -> int {
    if (p >= s.size() || s[p] != 'x') throw ParseError("expected variable in \"" + text + "\"");
    ++p;
    if (p < s.size() && s[p] == '_') ++p;
    std::size_t q = p;
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
    if (q == p || q - p > 2) throw ParseError("bad variable index in \"" + text + "\"");
    const int label = std::stoi(s.substr(p, q - p));
    if (label < 1 || label > kMaxNeurons) throw ParseError("variable index out of range in \"" + text + "\"");
    p = q;
    return label;
  };
  auto add = [&](NeuronSet& target, int label) {
    if (sigma.contains(label) || tau.contains(label)) throw ParseError("repeated variable in \"" + text + "\"");
    target = target.with(label);
  };
  while (i < s.size()) {
    if (s[i] == '*') {
      ++i;
    } else if (s[i] == 'x') {
      add(sigma, read_var(i));
    } else if (s[i] == '(') {
      ++i;
      int label;
      if (s.compare(i, 2, "1+") == 0) {
        i += 2;
        label = read_var(i);
      } else {
        label = read_var(i);
        if (s.compare(i, 2, "+1") != 0) throw ParseError("expected \"+1\" in \"" + text + "\"");
        i += 2;
      }
      if (i >= s.size() || s[i] != ')') throw ParseError("expected ')' in \"" + text + "\"");
      ++i;
      add(tau, label);
    } else {
      throw ParseError("unexpected character in \"" + text + "\"");
    }
  }
  if (sigma.empty() && tau.empty()) throw ParseError("empty pseudo-monomial \"" + text + "\"");
  return PseudoMonomial{sigma, tau};
}

std::vector<RFRelation> rf_relationships(const NeuralCode&, const CanonicalForm& cf) {
  std::vector<RFRelation> out;
  out.reserve(cf.size());
  for (const auto& pm : cf) {
    out.push_back(RFRelation{pm.sigma, pm.tau, pm.tau.empty() ? RFKind::EmptyIntersection : RFKind::Covering});
  }
  return out;
}

const char* to_string(RFKind kind) {
  return kind == RFKind::EmptyIntersection ? "empty-intersection" : "covering";
}

namespace {

std::string u_name(NeuronSet s) {
  if (s.empty()) return "X";
  std::string out = "U_";
  if (s.max_label() <= 9) return out + to_string(s);
  return out + to_string(s, 10);
}

}  // namespace

std::string to_string(const RFRelation& rel) {
  if (rel.kind == RFKind::EmptyIntersection) return u_name(rel.sigma) + " = empty";
  std::string rhs;
  for (int l : rel.tau.labels()) {
    if (!rhs.empty()) rhs += " cup ";
    rhs += u_name(NeuronSet{l});
  }
  return u_name(rel.sigma) + " subset " + rhs;
}

PseudoMonomial permute(const PseudoMonomial& pm, const std::vector<int>& perm) {
  return PseudoMonomial{permute(pm.sigma, perm), permute(pm.tau, perm)};
}

}  // namespace convexa
