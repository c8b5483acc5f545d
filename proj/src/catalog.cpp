#include "convexa/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "convexa/errors.hpp"

namespace convexa {

NeuralCode generate_Dn(int n) {
  if (n < 5) throw InvalidArgument("D_n needs n >= 5");
  if (n + 1 > kMaxNeurons) throw InvalidArgument("D_n exceeds the neuron cap");
  std::vector<NeuronSet> words;
  for (int a = 1; a + 1 <= n; ++a) words.push_back(NeuronSet{a, a + 1});
  for (int a = 1; a + 2 <= n; ++a) words.push_back(NeuronSet{a, a + 1, a + 2});
  words.push_back(NeuronSet{1, 2, n + 1});
  words.push_back(NeuronSet{n + 1});
  words.push_back(NeuronSet{n - 1, n, n + 1});
  words.push_back(NeuronSet{});
  return NeuralCode(n + 1, std::move(words));
}

NeuralCode generate_sunflower(int n) {
  if (n < 2) throw InvalidArgument("S_n needs n >= 2");
  if (n > 20) throw InvalidArgument("S_n enumerates 2^n codewords; n above 20 refused");
  const NeuronSet base = NeuronSet::universe(n);
  const int circle = n + 1;
  const int pyramid = 2 * n + 2;
  std::vector<NeuronSet> words{NeuronSet{}};
  for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << n); ++m) words.push_back(NeuronSet::from_mask(m).with(circle));
  for (int p = n + 2; p <= pyramid; ++p) words.push_back(NeuronSet{p});
  for (int i = 1; i <= n; ++i) words.push_back((base - NeuronSet{i}).with(circle).with(circle + i));
  words.push_back(base.with(circle).with(pyramid));
  words.push_back(NeuronSet::universe(pyramid) - NeuronSet::universe(circle));
  return NeuralCode(pyramid, std::move(words));
}

namespace {

struct Fixture {
  const char* text;
  const char* description;
};

const std::map<std::string, Fixture>& fixtures() {
  static const std::map<std::string, Fixture> table{
      {"C6", {"123, 125, 145, 234, 12, 15, 23, 4, {}", "non-closed-convex code on 5 neurons"}},
      {"C10", {"134, 135, 234, 245, 12, 13, 24, 34, 1, 2, 5, {}", "non-closed-convex code on 5 neurons"}},
      {"C15",
       {"123, 125, 145, 234, 345, 12, 15, 23, 34, 45, {}", "non-closed-convex code whose graph is a 10-cycle"}},
      {"C_Cr",
       {"123, 126, 156, 234, 345, 456, 12, 16, 23, 34, 45, 56, {}",
        "non-closed-convex code on 6 neurons whose graph is a 12-cycle"}},
      {"C8",
       {"12378, 1457, 2456, 3468, 278, 17, 38, 45, 46, 2, {}",
        "non-closed-convex code that no rigid-pair or RF criterion detects"}},
      {"C_theta", {"123, 14, 24, 34, 1, 2, 3, 4, {}", "closed-convex code realized degenerately in the plane"}},
      {"C_star", {"2345, 123, 134, 145, 13, 14, 23, 34, 45, 3, 4, {}", "closed-convex but not open-convex"}},
      {"RemoveHyp",
       {"123, 124, 235, 45, 12, 14, 23, 35, 4, 5, {}", "closed-convex code meeting six of the seven RF rows"}},
      {"SimplD",
       {"12467, 2678, 123, 138, 345, 456, 1246, 1267, 2467, 267, 467, 12, 13, 45, 46, 67, 3, 8, {}",
        "8-neuron code simplified by adjoining a union neuron"}},
  };
  return table;
}

}  // namespace

NeuralCode named_code(const std::string& name) {
  auto it = fixtures().find(name);
  if (it != fixtures().end()) return parse_code(it->second.text).code;
  if (name.size() >= 2 && (name[0] == 'D' || name[0] == 'S')) {
    const std::string digits = name.substr(1);
    if (digits.size() <= 2 && std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const int k = std::stoi(digits);
      return name[0] == 'D' ? generate_Dn(k) : generate_sunflower(k);
    }
  }
  throw InvalidArgument("unknown code name \"" + name + "\"");
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  for (const auto& [name, f] : fixtures()) out.push_back({name, f.description});
  out.push_back({"D<k>", "pinwheel family on k+1 neurons, k >= 5; open-convex, not closed-convex"});
  out.push_back({"S<k>", "sunflower code on 2k+2 neurons, k >= 2; closed-convex, not open-convex"});
  return out;
}

}  // namespace convexa
