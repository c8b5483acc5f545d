#include <doctest.h>

#include <set>

#include "convexa/catalog.hpp"
#include "convexa/geometry/constructions.hpp"
#include "convexa/rf_criterion.hpp"
#include "convexa/rigidity.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace convexa;
using testing_support::as_set;

namespace {

std::vector<PseudoMonomial> permuted(const CanonicalForm& cf, const std::vector<int>& perm) {
  std::vector<PseudoMonomial> out;
  for (const auto& pm : cf) out.push_back(permute(pm, perm));
  return as_set(out);
}

std::set<std::array<int, 5>> tuple_set(const std::vector<RFMatch>& ms, const std::vector<int>* perm = nullptr) {
  std::set<std::array<int, 5>> out;
  for (const auto& m : ms) {
    std::array<int, 5> t{m.tuple.i, m.tuple.j, m.tuple.k, m.tuple.l, m.tuple.m};
    if (perm) {
      for (int& x : t) x = (*perm)[x - 1];
    }
    out.insert(t);
  }
  return out;
}

std::set<std::vector<std::uint64_t>> subcodes(const RigidSearchResult& r, const std::vector<int>* perm = nullptr) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& c : r.all) {
    std::vector<std::uint64_t> s;
    for (NeuronSet w : c.subcode) s.push_back((perm ? permute(w, *perm) : w).mask());
    std::sort(s.begin(), s.end());
    out.insert(s);
  }
  return out;
}

const char* kNamed[] = {"C6", "C10", "C15", "C_Cr", "C_star", "C_theta", "RemoveHyp", "D5"};

}  // namespace

TEST_CASE("permutation equivariance of canonical forms and RF tuples") {
  std::mt19937 rng(5);
  for (const char* name : kNamed) {
    CAPTURE(name);
    NeuralCode c = named_code(name);
    for (int trial = 0; trial < 3; ++trial) {
      auto perm = testing_support::random_perm(rng, c.n());
      NeuralCode pc = permute(c, perm);
      CHECK(as_set(canonical_form(pc)) == permuted(canonical_form(c), perm));
      CHECK(tuple_set(search_rf_obstruction(pc)) == tuple_set(search_rf_obstruction(c), &perm));
    }
  }
}

TEST_CASE("permutation equivariance of rigid and cycle searches") {
  std::mt19937 rng(6);
  RigidSearchBudget b;
  b.collect_all = true;
  b.try_cycle = false;
  for (const char* name : kNamed) {
    CAPTURE(name);
    NeuralCode c = named_code(name);
    RigidSearchResult base = search_rigid_obstruction(c, b);
    auto cyc = cycle_criterion(c);
    for (int trial = 0; trial < 2; ++trial) {
      auto perm = testing_support::random_perm(rng, c.n());
      NeuralCode pc = permute(c, perm);
      RigidSearchResult moved = search_rigid_obstruction(pc, b);
      CHECK(subcodes(moved) == subcodes(base, &perm));
      CHECK(cycle_criterion(pc).has_value() == cyc.has_value());
      for (const auto& cert : base.all) CHECK(replay(pc, permute(cert, perm)));
    }
  }
}

TEST_CASE("restriction undoes adding a redundant or union neuron") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    NeuralCode c = testing_support::random_code(rng, n, 0.4);
    NeuronSet sigma = NeuronSet::from_mask(std::uniform_int_distribution<std::uint64_t>(1, (1u << n) - 1)(rng));
    NeuralCode red = add_redundant_neuron(c, sigma);
    CHECK(red.n() == n + 1);
    CHECK(restrict(red, c.universe()).code == c);
    NeuralCode uni = adjoin_union_neuron(c, sigma);
    CHECK(restrict(uni, c.universe()).code == c);
    for (NeuronSet w : uni) CHECK(w.contains(n + 1) == w.intersects(sigma));
    for (NeuronSet w : red) CHECK(w.contains(n + 1) == sigma.is_subset_of(w));
  }
}

TEST_CASE("every emitted certificate replays on random codes") {
  std::mt19937 rng(9);
  RigidSearchBudget b;
  b.collect_all = true;
  int certs = 0;
  for (int trial = 0; trial < 60; ++trial) {
    NeuralCode c = testing_support::random_code(rng, 5, 0.2);
    RigidSearchResult r = search_rigid_obstruction(c, b);
    for (const auto& cert : r.all) {
      CHECK(replay(c, cert));
      ++certs;
    }
    for (const auto& m : search_rf_obstruction(c)) CHECK(replay(c, rf_certificate(m)));
  }
  CHECK(certs > 0);
}

TEST_CASE("canonical form is exactly the minimal elements, n <= 4") {
  std::mt19937 rng(10);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      NeuralCode c = testing_support::random_code(rng, n, 0.5, trial % 2 == 0);
      CanonicalForm cf = canonical_form(c);
      CHECK(as_set(cf) == as_set(oracle::minimal_pseudo_monomials(c)));
      for (const auto& f : cf) {
        CHECK(ideal_contains(c, f));
        for (const auto& g : cf) {
          if (!(f == g)) CHECK_FALSE(divides(g, f));
        }
      }
    }
  }
}

TEST_CASE("ideal membership matches the F2 span oracle on all 3^n monomials") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    NeuralCode c = testing_support::random_code(rng, 3, 0.5, trial % 2 == 0);
    for (std::uint64_t s = 0; s < 8; ++s) {
      for (std::uint64_t t = 0; t < 8; ++t) {
        if (s & t) continue;
        PseudoMonomial pm{NeuronSet::from_mask(s), NeuronSet::from_mask(t)};
        CHECK(ideal_contains(c, pm) == oracle::f2_span_contains(c, pm));
      }
    }
  }
}

TEST_CASE("closed-convex interval codes never get certificates, n <= 5") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> end(-8, 8);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    std::vector<std::pair<Rational, Rational>> ivs;
    for (int i = 0; i < n; ++i) {
      int a = end(rng), b = end(rng);
      if (a > b) std::swap(a, b);
      ivs.emplace_back(Rational(a), Rational(b));
    }
    NeuralCode c = realized_code(interval_realization(ivs));
    CAPTURE(format_code(c));
    CHECK_FALSE(search_rigid_obstruction(c).certificate);
    CHECK(search_rf_obstruction(c).empty());
  }
}
