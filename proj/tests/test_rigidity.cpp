#include <doctest.h>

#include "convexa/catalog.hpp"
#include "convexa/errors.hpp"
#include "convexa/rigidity.hpp"
#include "support.hpp"

using namespace convexa;
using testing_support::code_of;

namespace {

bool has_subcode(const RigidSearchResult& r, const std::vector<NeuronSet>& want) {
  for (const auto& c : r.all) {
    if (c.subcode == want) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("path witnesses for the table rows") {
  struct Row {
    const char* name;
    NeuronSet R;
  };
  for (Row row : {Row{"C6", {1, 2, 3, 5}}, Row{"C10", {3, 4}}, Row{"C_Cr", {1, 4, 5, 6}}}) {
    CAPTURE(row.name);
    auto w = path_rigidity_witness(named_code(row.name), row.R, NeuronSet::universe(named_code(row.name).n()));
    REQUIRE(w);
    CHECK(w->mode == RigidMode::Union);
    REQUIRE(w->path);
    CHECK(triplewise_condition(*w->path));
    CHECK(verify_witness(named_code(row.name), *w));
  }
}

TEST_CASE("C6 path for (1235, union) is the printed one") {
  auto w = path_rigidity_witness(named_code("C6"), NeuronSet{1, 2, 3, 5});
  REQUIRE(w);
  std::vector<NeuronSet> want{{1, 4, 5}, {1, 5}, {1, 2, 5}, {1, 2}, {1, 2, 3}, {2, 3}, {2, 3, 4}};
  auto seq = w->path->sequence;
  if (seq.front() != want.front()) std::reverse(seq.begin(), seq.end());
  CHECK(seq == want);
}

TEST_CASE("union witness rejected when the graph is not a path") {
  // the codewords meeting {1,2,3,4,5} in C6 form an 8-cycle
  CHECK_FALSE(path_rigidity_witness(named_code("C6"), NeuronSet::universe(5), NeuronSet::universe(5)));
}

TEST_CASE("rigid pairs from the table give the printed subcodes") {
  struct Row {
    const char* name;
    NeuronSet uni, inter;
    std::vector<NeuronSet> subcode;
  };
  std::vector<Row> rows{
      {"C6", {1, 2, 3, 5}, {4}, {{1, 4, 5}, {2, 3, 4}}},
      {"C10", {3, 4}, {5}, {{1, 3, 5}, {2, 4, 5}}},
      {"C15", {3, 4, 5}, {1, 2}, {{1, 2, 3}, {1, 2, 5}}},
      {"C_Cr", {1, 4, 5, 6}, {2, 3}, {{1, 2, 3}, {2, 3, 4}}},
  };
  for (const auto& row : rows) {
    CAPTURE(row.name);
    NeuralCode c = named_code(row.name);
    std::optional<RigidWitness> u;
    for (NeuronSet sp : {row.uni, c.universe()}) {
      u = path_rigidity_witness(c, row.uni, sp);
      if (u) break;
    }
    REQUIRE(u);
    auto cert = rigid_pair_obstruction(c, *u, intersection_witness(row.inter));
    REQUIRE(cert);
    CHECK(cert->subcode == row.subcode);
    CHECK(replay(c, *cert));
  }
}

TEST_CASE("distinguished subcode of nested supports is connected") {
  NeuralCode c = code_of("n=3\n1 12 123 {}");
  CHECK_FALSE(rigid_pair_obstruction(c, intersection_witness({1}), intersection_witness({1, 2})));
  NeuralCode sub = distinguished_subcode(c, intersection_witness({1}), intersection_witness({1, 2}));
  CHECK(sub.size() == 2);
}

TEST_CASE("C_star: raw triples meet but not inside R, so (12, union) is not certified") {
  NeuralCode c = named_code("C_star");
  std::vector<NeuronSet> members;
  for (NeuronSet s : c) {
    if (s.intersects(NeuronSet{1, 2})) members.push_back(s);
  }
  auto path = recognize_path(containment_graph(members));
  REQUIRE(path);
  CHECK(triplewise_condition(*path));
  CHECK_FALSE(triplewise_condition(*path, NeuronSet{1, 2}));
  CHECK_FALSE(path_rigidity_witness(c, NeuronSet{1, 2}));
  CHECK_FALSE(search_rigid_obstruction(c).certificate);
}

TEST_CASE("rigid_pair_obstruction refuses an unverified union witness") {
  RigidWitness fake{NeuronSet{1}, RigidMode::Union, std::nullopt, NeuronSet::universe(3)};
  CHECK_THROWS_AS(rigid_pair_obstruction(code_of("n=3\n1 2 3 {}"), fake, intersection_witness({2})),
                  InvalidArgument);
}

TEST_CASE("cycle criterion") {
  for (const char* name : {"C15", "C_Cr"}) {
    CAPTURE(name);
    NeuralCode c = named_code(name);
    auto cert = cycle_criterion(c);
    REQUIRE(cert);
    CHECK(cert->kind == CertificateKind::Cycle);
    CHECK(cert->subcode.size() == 2);
    CHECK(replay(c, *cert));
  }
  CHECK_FALSE(cycle_criterion(named_code("C6")));
  CHECK_FALSE(cycle_criterion(named_code("C8")));
  // triangle 1 - 12 - 2 is not a cycle of the containment graph
  CHECK_FALSE(cycle_criterion(code_of("n=3\n1 12 13 123 {}")));
}

TEST_CASE("search finds certificates for the four table codes") {
  RigidSearchBudget b;
  b.collect_all = true;
  CHECK(has_subcode(search_rigid_obstruction(named_code("C6"), b), {{1, 4, 5}, {2, 3, 4}}));
  CHECK(has_subcode(search_rigid_obstruction(named_code("C10"), b), {{1, 3, 5}, {2, 4, 5}}));
  CHECK(has_subcode(search_rigid_obstruction(named_code("C15"), b), {{1, 2, 3}, {1, 2, 5}}));
  CHECK(has_subcode(search_rigid_obstruction(named_code("C_Cr"), b), {{1, 2, 3}, {2, 3, 4}}));
}

TEST_CASE("search tries the cycle criterion first") {
  RigidSearchResult r = search_rigid_obstruction(named_code("C15"));
  REQUIRE(r.certificate);
  CHECK(r.certificate->kind == CertificateKind::Cycle);
  CHECK(r.status == SearchStatus::Found);
}

TEST_CASE("D_n: ([n], union) with (n+1, intersection) separates the two petals") {
  for (int n = 5; n <= 12; ++n) {
    CAPTURE(n);
    NeuralCode d = generate_Dn(n);
    auto u = path_rigidity_witness(d, NeuronSet::universe(n));
    REQUIRE(u);
    auto cert = rigid_pair_obstruction(d, *u, intersection_witness({n + 1}));
    REQUIRE(cert);
    std::vector<NeuronSet> want{NeuronSet{1, 2, n + 1}, NeuronSet{n - 1, n, n + 1}};
    CHECK(cert->subcode == want);
    CHECK(search_rigid_obstruction(d).status == SearchStatus::Found);
  }
}

TEST_CASE("search budget is reported distinctly") {
  RigidSearchBudget b;
  b.max_pairs = 3;
  RigidSearchResult r = search_rigid_obstruction(named_code("C8"), b);
  CHECK(r.status == SearchStatus::BudgetExceeded);
  CHECK_FALSE(r.certificate);
}

TEST_CASE("search is silent on full codes") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<NeuronSet> all;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) all.push_back(NeuronSet::from_mask(m));
    CHECK(search_rigid_obstruction(NeuralCode(n, all)).status == SearchStatus::NotFound);
  }
}

TEST_CASE("candidate supports are ordered and deduplicated") {
  auto s = candidate_supports(code_of("n=3\n12 3 {}"), 1);
  std::vector<NeuronSet> want{{1, 2}, {3}, {1, 2, 3}, {1}, {2}};
  CHECK(s == want);
}

TEST_CASE("replay rejects tampered certificates") {
  NeuralCode c = named_code("C6");
  RigidSearchResult r = search_rigid_obstruction(c);
  REQUIRE(r.certificate);
  ObstructionCertificate bad = *r.certificate;
  bad.subcode.pop_back();
  CHECK_FALSE(replay(c, bad));
  ObstructionCertificate other = *r.certificate;
  CHECK_FALSE(replay(named_code("C8"), other));
}
