#include <doctest.h>

#include "convexa/catalog.hpp"
#include "convexa/containment_graph.hpp"
#include "support.hpp"

using namespace convexa;
using testing_support::code_of;

namespace {

ContainmentGraph graph_of(const NeuralCode& c) { return ContainmentGraph(c.without_empty().codewords()); }

// Equal up to rotation and reflection.
bool same_cycle(std::vector<NeuronSet> a, const std::vector<NeuronSet>& b) {
  if (a.size() != b.size()) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < a.size(); ++r) {
      std::rotate(a.begin(), a.begin() + 1, a.end());
      if (a == b) return true;
    }
    std::reverse(a.begin(), a.end());
  }
  return false;
}

}  // namespace

TEST_CASE("containment graph basics") {
  ContainmentGraph g = graph_of(code_of("n=3\n1 12 123 3 {}"));
  CHECK(g.size() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.components().size() == 1);
  ContainmentGraph h = graph_of(code_of("n=3\n1 2 3"));
  CHECK(h.edge_count() == 0);
  CHECK(h.components().size() == 3);
  CHECK_FALSE(h.connected());
  std::string dot = to_dot(g, 3);
  CHECK(dot.find("label=\"123\"") != std::string::npos);
  CHECK(dot.find("v1 -- v2;") != std::string::npos);
}

TEST_CASE("path recognition orients from the smaller endpoint") {
  ContainmentGraph g = graph_of(code_of("n=5\n15 125 12 123 23"));
  auto p = recognize_path(g);
  REQUIRE(p);
  std::vector<NeuronSet> want{{1, 5}, {1, 2, 5}, {1, 2}, {1, 2, 3}, {2, 3}};
  CHECK(p->sequence == want);
  CHECK(triplewise_condition(*p));
  CHECK(alternating_condition(*p));
  CHECK(is_induced_ordering(*p));
  CHECK_FALSE(interval_condition(*p, 5));
  CHECK_FALSE(recognize_cycle(g));
}

TEST_CASE("interval condition reports the first broken neuron") {
  LinearOrdering ord{{{1, 2}, {2}, {2, 3}, {3}, {1, 3}}, OrderingKind::Path};
  auto v = interval_condition(ord, 3);
  REQUIRE(v);
  CHECK(v->neuron == 1);
  CHECK(v->positions == std::vector<int>{1, 5});
}

TEST_CASE("triplewise condition") {
  LinearOrdering short_path{{{1}, {1, 2}}, OrderingKind::Path};
  CHECK(triplewise_condition(short_path));
  LinearOrdering broken{{{1}, {1, 2}, {2}}, OrderingKind::Path};
  CHECK_FALSE(triplewise_condition(broken));
}

TEST_CASE("cycles of C15 and C_Cr match the printed orderings") {
  auto c15 = recognize_cycle(graph_of(named_code("C15")));
  REQUIRE(c15);
  std::vector<NeuronSet> printed15{{1, 2, 5}, {1, 5}, {1, 4, 5}, {4, 5}, {3, 4, 5},
                                   {3, 4},    {2, 3, 4}, {2, 3}, {1, 2, 3}, {1, 2}};
  CHECK(same_cycle(c15->sequence, printed15));
  CHECK(c15->sequence.front() == NeuronSet{1, 2});
  CHECK(c15->sequence[1] == NeuronSet{1, 2, 3});
  CHECK(triplewise_condition(*c15));
  CHECK(alternating_condition(*c15));

  auto cr = recognize_cycle(graph_of(named_code("C_Cr")));
  REQUIRE(cr);
  std::vector<NeuronSet> printed{{1, 2, 3}, {1, 2}, {1, 2, 6}, {1, 6}, {1, 5, 6}, {5, 6},
                                 {4, 5, 6}, {4, 5}, {3, 4, 5}, {3, 4}, {2, 3, 4}, {2, 3}};
  CHECK(same_cycle(cr->sequence, printed));
  CHECK(is_induced_ordering(*cr));
}

TEST_CASE("C6 graph is an 8-cycle failing the triple condition") {
  auto c = recognize_cycle(graph_of(named_code("C6")));
  REQUIRE(c);
  CHECK(c->sequence.size() == 8);
  CHECK_FALSE(triplewise_condition(*c));
  CHECK_FALSE(recognize_path(graph_of(named_code("C6"))));
}

TEST_CASE("D_n graph is the printed pinwheel cycle") {
  auto c = recognize_cycle(graph_of(generate_Dn(5)));
  REQUIRE(c);
  std::vector<NeuronSet> printed{{2, 3, 4}, {3, 4}, {3, 4, 5}, {4, 5}, {4, 5, 6},
                                 {6},       {1, 2, 6}, {1, 2}, {1, 2, 3}, {2, 3}};
  CHECK(same_cycle(c->sequence, printed));
  // 45 ∩ 456 ∩ 6 is empty
  CHECK_FALSE(triplewise_condition(*c));
}
