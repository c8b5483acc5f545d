#include "convexa/containment_graph.hpp"

#include <algorithm>

namespace convexa {

namespace {

bool comparable(NeuronSet a, NeuronSet b) { return a.is_proper_subset_of(b) || b.is_proper_subset_of(a); }

}  // namespace

ContainmentGraph::ContainmentGraph(std::vector<NeuronSet> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end(), LexLess{});
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  adjacency_.resize(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      if (comparable(vertices_[i], vertices_[j])) {
        adjacency_[i].push_back(j);
        adjacency_[j].push_back(i);
      }
    }
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

bool ContainmentGraph::has_edge(std::size_t u, std::size_t v) const {
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::size_t ContainmentGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& a : adjacency_) total += a.size();
  return total / 2;
}

std::optional<std::size_t> ContainmentGraph::index_of(NeuronSet s) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), s, LexLess{});
  if (it == vertices_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::vector<std::size_t>> ContainmentGraph::components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(vertices_.size(), false);
  for (std::size_t start = 0; start < vertices_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp{start};
    seen[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (std::size_t w : adjacency_[comp[k]]) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

ContainmentGraph containment_graph(const std::vector<NeuronSet>& codewords) { return ContainmentGraph(codewords); }

namespace {

// Walks from `start` through `next`, never stepping back; returns the visit order.
std::vector<std::size_t> walk(const ContainmentGraph& g, std::size_t start, std::size_t next) {
  std::vector<std::size_t> order{start};
  std::size_t prev = start, cur = next;
  while (cur != start) {
    order.push_back(cur);
    const auto& nb = g.neighbors(cur);
    auto step = std::find_if(nb.begin(), nb.end(), [prev](std::size_t w) { return w != prev; });
    if (step == nb.end()) break;
    prev = cur;
    cur = *step;
  }
  return order;
}

}  // namespace

std::optional<LinearOrdering> recognize_path(const ContainmentGraph& g) {
  const std::size_t q = g.size();
  if (q == 0) return std::nullopt;
  if (q == 1) return LinearOrdering{{g.vertices()[0]}, OrderingKind::Path};
  std::vector<std::size_t> ends;
  for (std::size_t v = 0; v < q; ++v) {
    const std::size_t d = g.degree(v);
    if (d == 1) {
      ends.push_back(v);
    } else if (d != 2) {
      return std::nullopt;
    }
  }
  if (ends.size() != 2) return std::nullopt;
  // ends[0] is the lexicographically smaller endpoint since vertices are sorted.
  std::vector<std::size_t> order = walk(g, ends[0], g.neighbors(ends[0])[0]);
  if (order.size() != q) return std::nullopt;
  LinearOrdering out{{}, OrderingKind::Path};
  for (std::size_t v : order) out.sequence.push_back(g.vertices()[v]);
  return out;
}

std::optional<LinearOrdering> recognize_cycle(const ContainmentGraph& g) {
  const std::size_t q = g.size();
  if (q < 3) return std::nullopt;
  for (std::size_t v = 0; v < q; ++v) {
    if (g.degree(v) != 2) return std::nullopt;
  }
  std::vector<std::size_t> order = walk(g, 0, g.neighbors(0)[0]);
  if (order.size() != q) return std::nullopt;
  LinearOrdering out{{}, OrderingKind::Cycle};
  for (std::size_t v : order) out.sequence.push_back(g.vertices()[v]);
  return out;
}

bool triplewise_condition(const LinearOrdering& ord, NeuronSet within) {
  const std::size_t q = ord.sequence.size();
  const auto& s = ord.sequence;
  if (ord.kind == OrderingKind::Path) {
    for (std::size_t i = 0; i + 2 < q; ++i) {
      if ((s[i] & s[i + 1] & s[i + 2] & within).empty()) return false;
    }
    return true;
  }
  if (q < 3) return false;
  for (std::size_t i = 0; i < q; ++i) {
    if ((s[i] & s[(i + 1) % q] & s[(i + 2) % q] & within).empty()) return false;
  }
  return true;
}

bool triplewise_condition(const LinearOrdering& ord) {
  return triplewise_condition(ord, NeuronSet::from_mask(~std::uint64_t{0}));
}

std::optional<IntervalViolation> interval_condition(const LinearOrdering& ord, int n) {
  for (int neuron = 1; neuron <= n; ++neuron) {
    std::vector<int> positions;
    for (std::size_t p = 0; p < ord.sequence.size(); ++p) {
      if (ord.sequence[p].contains(neuron)) positions.push_back(static_cast<int>(p) + 1);
    }
    if (positions.empty()) continue;
    if (positions.back() - positions.front() + 1 != static_cast<int>(positions.size())) {
      return IntervalViolation{neuron, positions};
    }
  }
  return std::nullopt;
}

bool alternating_condition(const LinearOrdering& ord) {
  const auto& s = ord.sequence;
  const std::size_t q = s.size();
  const std::size_t steps = ord.kind == OrderingKind::Cycle ? q : (q == 0 ? 0 : q - 1);
  std::vector<int> dir;
  for (std::size_t i = 0; i < steps; ++i) {
    NeuronSet a = s[i], b = s[(i + 1) % q];
    if (a.is_proper_subset_of(b)) {
      dir.push_back(1);
    } else if (b.is_proper_subset_of(a)) {
      dir.push_back(-1);
    } else {
      return false;
    }
  }
  const std::size_t pairs = ord.kind == OrderingKind::Cycle ? dir.size() : (dir.empty() ? 0 : dir.size() - 1);
  for (std::size_t i = 0; i < pairs; ++i) {
    if (dir[i] == dir[(i + 1) % dir.size()]) return false;
  }
  return true;
}

bool is_induced_ordering(const LinearOrdering& ord) {
  const auto& s = ord.sequence;
  const std::size_t q = s.size();
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i + 1; j < q; ++j) {
      const bool consecutive = j == i + 1 || (ord.kind == OrderingKind::Cycle && q >= 3 && i == 0 && j == q - 1);
      if (comparable(s[i], s[j]) != consecutive) return false;
    }
  }
  return true;
}

std::string to_dot(const ContainmentGraph& g, int n) {
  std::string out = "graph containment {\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + to_string(g.vertices()[v], n) + "\"];\n";
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t w : g.neighbors(v)) {
      if (w > v) out += "  v" + std::to_string(v) + " -- v" + std::to_string(w) + ";\n";
    }
  }
  return out + "}\n";
}

std::string to_string(const LinearOrdering& ord, int n) {
  std::string out;
  for (std::size_t i = 0; i < ord.sequence.size(); ++i) {
    if (i) out += " - ";
    out += to_string(ord.sequence[i], n);
  }
  if (ord.kind == OrderingKind::Cycle && !ord.sequence.empty()) out += " - " + to_string(ord.sequence[0], n);
  return out;
}

}  // namespace convexa
