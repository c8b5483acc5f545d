#pragma once

#include <optional>
#include <string>
#include <vector>

#include "convexa/neuron_set.hpp"

namespace convexa {

// Vertices are codewords (sorted by lex_less, deduplicated); an edge joins
// two codewords when one properly contains the other.
class ContainmentGraph {
 public:
  explicit ContainmentGraph(std::vector<NeuronSet> vertices);

  const std::vector<NeuronSet>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t edge_count() const;
  std::optional<std::size_t> index_of(NeuronSet s) const;

  // Connected components as vertex index lists; components are ordered by
  // their smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;
  bool connected() const { return components().size() <= 1; }

 private:
  std::vector<NeuronSet> vertices_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

ContainmentGraph containment_graph(const std::vector<NeuronSet>& codewords);

enum class OrderingKind { Path, Cycle };

struct LinearOrdering {
  std::vector<NeuronSet> sequence;
  OrderingKind kind = OrderingKind::Path;

  friend bool operator==(const LinearOrdering&, const LinearOrdering&) = default;
};

// Simple path (q = 1 allowed), smaller endpoint first.
std::optional<LinearOrdering> recognize_path(const ContainmentGraph& g);
// Simple cycle with q >= 3, starting at the smallest vertex and heading to
// its smaller neighbor.
std::optional<LinearOrdering> recognize_cycle(const ContainmentGraph& g);

// Every window of three consecutive codewords (wrapping for cycles) has a
// common neuron.  Paths with q <= 2 pass vacuously.
bool triplewise_condition(const LinearOrdering& ord);
// Same, but each window must share a neuron of `within`.
bool triplewise_condition(const LinearOrdering& ord, NeuronSet within);

struct IntervalViolation {
  int neuron;
  std::vector<int> positions;  // 1-based
};

std::optional<IntervalViolation> interval_condition(const LinearOrdering& ord, int n);

// Consecutive codewords are comparable and the direction of containment
// flips at every step (including the closing step of a cycle).
bool alternating_condition(const LinearOrdering& ord);

// True when consecutive codewords are edges and no other pair is.
bool is_induced_ordering(const LinearOrdering& ord);

std::string to_dot(const ContainmentGraph& g, int n);
std::string to_string(const LinearOrdering& ord, int n);

}  // namespace convexa
