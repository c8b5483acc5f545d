#include "convexa/rigidity.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "convexa/errors.hpp"

namespace convexa {

std::optional<RigidWitness> path_rigidity_witness(const NeuralCode& code, NeuronSet R,
                                                  std::optional<NeuronSet> sigma_prime) {
  if (R.empty()) throw InvalidArgument("rigid support must be nonempty");
  if (!R.is_subset_of(code.universe())) throw InvalidArgument("rigid support is not a subset of [n]");
  NeuronSet scope = code.universe();
  if (sigma_prime) {
    if (!R.is_subset_of(*sigma_prime) || !sigma_prime->is_subset_of(code.universe())) {
      throw InvalidArgument("restriction set must satisfy R ⊆ sigma' ⊆ [n]");
    }
    scope = *sigma_prime;
  }
  std::vector<NeuronSet> members;
  for (NeuronSet s : code) {
    NeuronSet t = s & scope;
    if (t.intersects(R)) members.push_back(t);
  }
  auto path = recognize_path(containment_graph(members));
  // consecutive triples must share a neuron of R itself
  if (!path || !triplewise_condition(*path, R)) return std::nullopt;
  return RigidWitness{R, RigidMode::Union, std::move(path), scope};
}

RigidWitness intersection_witness(NeuronSet R) {
  if (R.empty()) throw InvalidArgument("rigid support must be nonempty");
  return RigidWitness{R, RigidMode::Intersection, std::nullopt, NeuronSet{}};
}

namespace {

bool selects(const RigidWitness& w, NeuronSet s) {
  return w.mode == RigidMode::Union ? s.intersects(w.support) : w.support.is_subset_of(s);
}

}  // namespace

NeuralCode distinguished_subcode(const NeuralCode& code, const RigidWitness& w1, const RigidWitness& w2) {
  if (!w1.support.is_subset_of(code.universe()) || !w2.support.is_subset_of(code.universe())) {
    throw InvalidArgument("witness support is not a subset of [n]");
  }
  std::vector<NeuronSet> words;
  for (NeuronSet s : code) {
    if (!s.empty() && selects(w1, s) && selects(w2, s)) words.push_back(s);
  }
  return NeuralCode(code.n(), std::move(words));
}

namespace {

ObstructionCertificate pair_certificate(const RigidWitness& w1, const RigidWitness& w2, const ContainmentGraph& g) {
  auto comps = g.components();
  ObstructionCertificate cert;
  cert.kind = CertificateKind::RigidPair;
  cert.witnesses = {w1, w2};
  cert.subcode = g.vertices();
  for (int c = 0; c < 2; ++c) {
    for (std::size_t v : comps[c]) cert.components[c].push_back(g.vertices()[v]);
  }
  return cert;
}

}  // namespace

std::optional<ObstructionCertificate> rigid_pair_obstruction(const NeuralCode& code, const RigidWitness& w1,
                                                             const RigidWitness& w2) {
  if (!verify_witness(code, w1) || !verify_witness(code, w2)) {
    throw InvalidArgument("rigid_pair_obstruction needs verified witnesses");
  }
  ContainmentGraph g(distinguished_subcode(code, w1, w2).codewords());
  if (g.components().size() < 2) return std::nullopt;
  return pair_certificate(w1, w2, g);
}

std::optional<ObstructionCertificate> cycle_criterion(const NeuralCode& code) {
  auto cycle = recognize_cycle(containment_graph(code.without_empty().codewords()));
  if (!cycle || cycle->sequence.size() < 4 || !triplewise_condition(*cycle)) return std::nullopt;
  const auto& seq = cycle->sequence;
  const std::size_t q = seq.size();
  std::size_t p = q;
  for (std::size_t i = 0; i < q && p == q; ++i) {
    bool maximal = true;
    for (NeuronSet t : code) {
      if (seq[i].is_proper_subset_of(t)) {
        maximal = false;
        break;
      }
    }
    if (maximal) p = i;
  }
  if (p == q) return std::nullopt;
  const NeuronSet sigma2 = seq[(p + 1) % q];
  RigidWitness r = intersection_witness(sigma2);
  auto c = path_rigidity_witness(code, code.universe() - sigma2);
  if (!c) return std::nullopt;
  auto cert = rigid_pair_obstruction(code, r, *c);
  if (!cert) return std::nullopt;
  cert->kind = CertificateKind::Cycle;
  cert->cycle = cycle;
  cert->chosen_r = sigma2;
  return cert;
}

std::vector<NeuronSet> candidate_supports(const NeuralCode& code, int max_support) {
  std::vector<NeuronSet> out;
  std::unordered_set<std::uint64_t> seen;
  auto push = [&](NeuronSet s) {
    if (!s.empty() && seen.insert(s.mask()).second) out.push_back(s);
  };
  for (NeuronSet s : code) push(s);
  for (NeuronSet s : code) push(code.universe() - s);
  const int n = code.n();
  const int top = std::min(max_support, n);
  for (int size = 1; size <= top; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i + 1;
    while (true) {
      push(NeuronSet::from_labels(pick));
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i + 1) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool any(const Bits& b) {
  for (auto w : b)
    if (w) return true;
  return false;
}

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : b) h = (h ^ w) * 1099511628211ull;
    return h;
  }
};

// Containment graph of the whole code as adjacency bitsets.
class SubcodeTester {
 public:
  explicit SubcodeTester(const NeuralCode& code) : words_(code.codewords()) {
    adj_.assign(words_.size(), make_bits(words_.size()));
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::size_t j = 0; j < words_.size(); ++j) {
        if (i != j && (words_[i].is_proper_subset_of(words_[j]) || words_[j].is_proper_subset_of(words_[i]))) {
          set_bit(adj_[i], j);
        }
      }
    }
  }

  Bits selection(const RigidWitness& w) const {
    Bits b = make_bits(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (!words_[i].empty() && selects(w, words_[i])) set_bit(b, i);
    }
    return b;
  }

  bool disconnected(const Bits& sub) const {
    std::size_t first = words_.size();
    for (std::size_t w = 0; w < sub.size() && first == words_.size(); ++w) {
      if (sub[w]) first = w * 64 + static_cast<std::size_t>(std::countr_zero(sub[w]));
    }
    if (first == words_.size()) return false;
    Bits reached = make_bits(words_.size());
    set_bit(reached, first);
    std::vector<std::size_t> stack{first};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < sub.size(); ++w) {
        std::uint64_t fresh = adj_[v][w] & sub[w] & ~reached[w];
        reached[w] |= fresh;
        for (; fresh; fresh &= fresh - 1) stack.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(fresh)));
      }
    }
    return reached != sub;
  }

 private:
  std::vector<NeuronSet> words_;
  std::vector<Bits> adj_;
};

}  // namespace

RigidSearchResult search_rigid_obstruction(const NeuralCode& code, const RigidSearchBudget& budget) {
  RigidSearchResult result;
  std::set<std::vector<std::uint64_t>> seen_subcodes;
  auto record = [&](ObstructionCertificate cert) -> bool {
    std::vector<std::uint64_t> key;
    for (NeuronSet s : cert.subcode) key.push_back(s.mask());
    if (!result.certificate) result.certificate = cert;
    result.status = SearchStatus::Found;
    if (budget.collect_all && seen_subcodes.insert(key).second) result.all.push_back(std::move(cert));
    return !budget.collect_all;
  };

  if (budget.try_cycle) {
    if (auto cert = cycle_criterion(code)) {
      if (record(std::move(*cert))) return result;
    }
  }

  const std::vector<NeuronSet> pool = candidate_supports(code, budget.max_support);
  result.candidate_supports = pool.size();
  std::vector<RigidWitness> unions, inters;
  for (NeuronSet R : pool) {
    auto w = path_rigidity_witness(code, R, R);
    if (!w && R != code.universe()) w = path_rigidity_witness(code, R);
    if (w) unions.push_back(std::move(*w));
    inters.push_back(intersection_witness(R));
  }
  result.union_witnesses = unions.size();

  SubcodeTester tester(code);
  std::vector<Bits> union_bits, inter_bits;
  for (const auto& w : unions) union_bits.push_back(tester.selection(w));
  for (const auto& w : inters) inter_bits.push_back(tester.selection(w));

  std::unordered_set<Bits, BitsHash> tested;
  // Returns true when the search should stop.
  auto try_pair = [&](const RigidWitness& a, const Bits& ab, const RigidWitness& b, const Bits& bb) -> bool {
    if (++result.pairs_tested > budget.max_pairs) {
      result.status = result.certificate ? SearchStatus::Found : SearchStatus::BudgetExceeded;
      if (budget.collect_all) result.status = SearchStatus::BudgetExceeded;
      return true;
    }
    Bits sub = ab;
    for (std::size_t w = 0; w < sub.size(); ++w) sub[w] &= bb[w];
    if (!any(sub) || !tested.insert(sub).second) return false;
    if (!tester.disconnected(sub)) return false;
    auto cert = rigid_pair_obstruction(code, a, b);
    return cert && record(std::move(*cert));
  };

  for (std::size_t u = 0; u < unions.size(); ++u) {
    for (std::size_t v = 0; v < inters.size(); ++v) {
      if (try_pair(unions[u], union_bits[u], inters[v], inter_bits[v])) return result;
    }
  }
  for (std::size_t u = 0; u < unions.size(); ++u) {
    for (std::size_t v = u; v < unions.size(); ++v) {
      if (try_pair(unions[u], union_bits[u], unions[v], union_bits[v])) return result;
    }
  }
  for (std::size_t u = 0; u < inters.size(); ++u) {
    for (std::size_t v = u; v < inters.size(); ++v) {
      if (try_pair(inters[u], inter_bits[u], inters[v], inter_bits[v])) return result;
    }
  }
  return result;
}

}  // namespace convexa
