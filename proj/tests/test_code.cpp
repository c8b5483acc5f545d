#include <doctest.h>

#include "convexa/catalog.hpp"
#include "convexa/errors.hpp"
#include "support.hpp"

using namespace convexa;
using testing_support::code_of;

TEST_CASE("neuron sets: lexicographic order puts prefixes first") {
  std::vector<NeuronSet> v{{2}, {1, 3}, {1, 2, 3}, {1, 2}, {1}, {}};
  std::sort(v.begin(), v.end(), LexLess{});
  std::vector<NeuronSet> want{{}, {1}, {1, 2}, {1, 2, 3}, {1, 3}, {2}};
  CHECK(v == want);
}

TEST_CASE("neuron sets: printing") {
  CHECK(to_string(NeuronSet{1, 3, 4}) == "134");
  CHECK(to_string(NeuronSet{}) == "{}");
  CHECK(to_string(NeuronSet{2, 11}) == "{2,11}");
  CHECK(to_string(NeuronSet{2, 3}, 12) == "{2,3}");
  CHECK(NeuronSet{5, 9}.max_label() == 9);
  CHECK(NeuronSet{5, 9}.min_label() == 5);
  CHECK(NeuronSet{5, 9}.labels() == std::vector<int>{5, 9});
}

TEST_CASE("codes: parse, dedupe, sort, warnings") {
  ParsedCode pc = parse_code("n=4\n12 3, 12 {}");
  CHECK(pc.code.n() == 4);
  CHECK(pc.code.size() == 3);
  CHECK(pc.code.codewords().front() == NeuronSet{});
  CHECK(pc.warnings.size() == 1);

  ParsedCode no_empty = parse_code("12 3");
  CHECK(no_empty.code.n() == 3);
  CHECK_FALSE(no_empty.code.has_empty());
  CHECK_FALSE(no_empty.warnings.empty());

  ParsedCode big = parse_code("{1,10} {}");
  CHECK(big.code.n() == 10);
  CHECK(big.code.contains(NeuronSet{1, 10}));

  ParsedCode js = parse_code(R"({"n": 3, "codewords": [[1,2],[3],[]]})");
  CHECK(js.code == code_of("n=3\n12 3 {}"));
}

TEST_CASE("codes: bad input is rejected") {
  CHECK_THROWS_AS(parse_code("n=2\n123"), ParseError);
  CHECK_THROWS_AS(NeuralCode(2, {NeuronSet{3}}), InvalidArgument);
  CHECK_THROWS_AS(parse_code("1x2"), ParseError);
  CHECK_THROWS_AS(parse_code("{1,2"), ParseError);
  CHECK_THROWS_AS(NeuralCode(-1, {}), InvalidArgument);
}

TEST_CASE("codes: text format round-trips") {
  for (const char* name : {"C6", "C8", "C_star", "S3", "D7"}) {
    NeuralCode c = named_code(name);
    CHECK(parse_code(format_code(c)).code == c);
  }
}

TEST_CASE("codes: restriction relabels densely") {
  NeuralCode c = named_code("C6");
  Restriction r = restrict(c, NeuronSet{2, 4, 5});
  CHECK(r.label_map == std::vector<int>{2, 4, 5});
  CHECK(r.code == code_of("n=3\n1 13 23 12 3 2 {}"));
  CHECK(unmap_labels(NeuronSet{1, 3}, r.label_map) == NeuronSet{2, 5});
  NeuralCode in_place = restrict_in_place(c, NeuronSet{2, 4, 5});
  CHECK(in_place.n() == 5);
  CHECK(in_place.contains(NeuronSet{2, 4}));
}

TEST_CASE("codes: adjoining a union neuron to SimplD and restricting") {
  NeuralCode d = named_code("SimplD");
  NeuralCode adj = adjoin_union_neuron(d, NeuronSet{4, 5, 6, 7});
  CHECK(adj.n() == 9);
  Restriction r = restrict(adj, NeuronSet{1, 2, 3, 8, 9});
  // labels 1,2,3,8,9 become 1..5
  NeuralCode want = code_of("n=5\n123 125 134 245 35 12 13 25 3 4 5 {}");
  CHECK(r.code == want);
}

TEST_CASE("codes: maximal codewords and permutation") {
  NeuralCode c = named_code("C6");
  std::vector<NeuronSet> want{{1, 2, 3}, {1, 2, 5}, {1, 4, 5}, {2, 3, 4}};
  CHECK(maximal_codewords(c) == want);
  std::vector<int> perm{2, 3, 1, 5, 4};
  CHECK(permute(NeuronSet{1, 4}, perm) == NeuronSet{2, 5});
  NeuralCode p = permute(c, perm);
  CHECK(p.size() == c.size());
  CHECK(p.contains(NeuronSet{2, 3, 1}));
  CHECK_THROWS_AS(permute(c, std::vector<int>{1, 1, 2, 3, 4}), InvalidArgument);
}

TEST_CASE("catalog: families") {
  NeuralCode d5 = generate_Dn(5);
  CHECK(d5 == code_of("12 123 23 234 34 345 45 126 6 456 {}"));
  CHECK(generate_sunflower(2) == code_of("{} 13 23 4 5 6 234 135 1236 456"));
  CHECK(generate_sunflower(3) == code_of("{} 14 24 34 124 134 234 5 6 7 8 2345 1247 1346 12348 5678"));
  CHECK(generate_sunflower(4).n() == 10);
  CHECK(generate_sunflower(4).size() == std::size_t{1} + 14 + 5 + 4 + 1 + 1);
  CHECK_THROWS_AS(generate_Dn(4), InvalidArgument);
  CHECK_THROWS_AS(named_code("nope"), InvalidArgument);
  CHECK(named_code("D9") == generate_Dn(9));
  CHECK(catalog_entries().size() >= 9);
}
