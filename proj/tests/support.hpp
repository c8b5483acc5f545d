#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "convexa/code.hpp"
#include "convexa/neural_ideal.hpp"

namespace testing_support {

inline convexa::NeuralCode code_of(const std::string& text) { return convexa::parse_code(text).code; }

inline std::vector<convexa::PseudoMonomial> pms_of(const std::vector<std::string>& texts) {
  std::vector<convexa::PseudoMonomial> out;
  for (const auto& t : texts) out.push_back(convexa::parse_pseudo_monomial(t));
  return out;
}

template <class T, class Less>
std::vector<T> sorted(std::vector<T> v, Less less) {
  std::sort(v.begin(), v.end(), less);
  return v;
}

inline std::vector<convexa::PseudoMonomial> as_set(std::vector<convexa::PseudoMonomial> v) {
  return sorted(std::move(v), convexa::canonical_less);
}

// Random code on n neurons; each nonempty subset kept with probability p.
inline convexa::NeuralCode random_code(std::mt19937& rng, int n, double p, bool with_empty = true) {
  std::bernoulli_distribution keep(p);
  std::vector<convexa::NeuronSet> words;
  if (with_empty) words.push_back({});
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    if (keep(rng)) words.push_back(convexa::NeuronSet::from_mask(m));
  }
  return convexa::NeuralCode(n, words);
}

inline std::vector<int> random_perm(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testing_support
