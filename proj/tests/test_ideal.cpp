#include <doctest.h>

#include "convexa/catalog.hpp"
#include "convexa/errors.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace convexa;
using testing_support::as_set;
using testing_support::code_of;
using testing_support::pms_of;

TEST_CASE("pseudo-monomials: parse and print") {
  PseudoMonomial pm = parse_pseudo_monomial("x1(x2+1)(x5+1)");
  CHECK(pm.sigma == NeuronSet{1});
  CHECK(pm.tau == NeuronSet{2, 5});
  CHECK(to_string(pm) == "x1*(1+x2)*(1+x5)");
  CHECK(parse_pseudo_monomial(to_string(pm)) == pm);
  CHECK(parse_pseudo_monomial("x_1 x_3 (1+x_2)") == make_pseudo_monomial({1, 3}, {2}));
  CHECK(to_string(parse_pseudo_monomial("1")) == "1");
  CHECK_THROWS_AS(parse_pseudo_monomial("x1(x1+1)"), ParseError);
  CHECK_THROWS_AS(make_pseudo_monomial({1}, {1}), InvalidArgument);
  CHECK_THROWS_AS(parse_pseudo_monomial("y2"), ParseError);
}

TEST_CASE("pseudo-monomials: evaluation and membership") {
  NeuralCode c = code_of("n=3\n12 2 {}");
  CHECK(ideal_contains(c, make_pseudo_monomial({3}, {})));
  CHECK(ideal_contains(c, make_pseudo_monomial({1}, {2})));
  CHECK_FALSE(ideal_contains(c, make_pseudo_monomial({2}, {})));
  CHECK(evaluate(characteristic(NeuronSet{1, 3}, 3), NeuronSet{1, 3}));
  CHECK_FALSE(evaluate(characteristic(NeuronSet{1, 3}, 3), NeuronSet{1}));
  CHECK(divides(make_pseudo_monomial({1}, {}), make_pseudo_monomial({1, 2}, {3})));
  CHECK_THROWS_AS(ideal_contains(c, make_pseudo_monomial({4}, {})), InvalidArgument);
}

TEST_CASE("canonical form of small codes") {
  CHECK(canonical_form(code_of("n=2\n1 2 12 {}")).empty());
  CanonicalForm all_empty = canonical_form(NeuralCode(2, {}));
  REQUIRE(all_empty.size() == 1);
  CHECK(all_empty[0].degree() == 0);
  // {∅, 1}: x2 and nothing else on 2 neurons
  CanonicalForm cf = canonical_form(code_of("n=2\n1 {}"));
  CHECK(cf == pms_of({"x2"}));
}

TEST_CASE("canonical form of C6 has the ten printed elements") {
  auto want = pms_of({"(x1+1)x5", "(x2+1)x3", "x3x5", "(x1+1)x2(x3+1)", "x1x2x4", "x2(x3+1)x4", "x2x4x5",
                      "x1(x2+1)(x5+1)", "x1x4(x5+1)", "x1x3x4"});
  CHECK(as_set(canonical_form(named_code("C6"))) == as_set(want));
}

TEST_CASE("canonical form: threaded run agrees") {
  CanonicalFormOptions o;
  o.threads = 4;
  for (const char* name : {"C8", "S3", "C_Cr"}) {
    NeuralCode c = named_code(name);
    CHECK(canonical_form(c, o) == canonical_form(c));
  }
}

TEST_CASE("canonical form respects the neuron budget") {
  CanonicalFormOptions o;
  o.max_neurons = 5;
  CHECK_THROWS_AS(canonical_form(named_code("C_Cr"), o), BudgetExceeded);
}

TEST_CASE("canonical form agrees with the F2 brute-force oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    NeuralCode c = testing_support::random_code(rng, n, 0.45, trial % 3 != 0);
    CHECK(as_set(canonical_form(c)) == as_set(oracle::minimal_pseudo_monomials(c)));
  }
}

TEST_CASE("RF relationships read off the canonical form") {
  NeuralCode c = named_code("C6");
  CanonicalForm cf = canonical_form(c);
  auto rels = rf_relationships(c, cf);
  REQUIRE(rels.size() == cf.size());
  CHECK(to_string(rels[0]) == "U_3 subset U_2");
  CHECK(to_string(rels[1]) == "U_35 = empty");
  bool saw_cover = false;
  for (const auto& r : rels) {
    if (r.kind == RFKind::Covering && r.sigma == NeuronSet{5} && r.tau == NeuronSet{1}) saw_cover = true;
  }
  CHECK(saw_cover);
  RFRelation cover{NeuronSet{1}, NeuronSet{7}, RFKind::Covering};
  CHECK(to_string(cover) == "U_1 subset U_7");
}
