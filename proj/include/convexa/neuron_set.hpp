#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace convexa {

inline constexpr int kMaxNeurons = 64;

// A subset of {1..64}; neuron i lives in bit i-1.
class NeuronSet {
 public:
  constexpr NeuronSet() = default;
  NeuronSet(std::initializer_list<int> labels);

  static constexpr NeuronSet from_mask(std::uint64_t mask) {
    NeuronSet s;
    s.mask_ = mask;
    return s;
  }
  // {1..n}
  static constexpr NeuronSet universe(int n) {
    return from_mask(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static NeuronSet from_labels(const std::vector<int>& labels);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int label) const { return (mask_ >> (label - 1)) & 1u; }
  // Largest label present, 0 when empty.
  constexpr int max_label() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }
  constexpr int min_label() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }

  constexpr NeuronSet with(int label) const { return from_mask(mask_ | bit(label)); }
  constexpr NeuronSet without(int label) const { return from_mask(mask_ & ~bit(label)); }

  constexpr bool is_subset_of(NeuronSet o) const { return (mask_ & ~o.mask_) == 0; }
  constexpr bool is_proper_subset_of(NeuronSet o) const { return is_subset_of(o) && mask_ != o.mask_; }
  constexpr bool intersects(NeuronSet o) const { return (mask_ & o.mask_) != 0; }

  std::vector<int> labels() const;

  friend constexpr NeuronSet operator|(NeuronSet a, NeuronSet b) { return from_mask(a.mask_ | b.mask_); }
  friend constexpr NeuronSet operator&(NeuronSet a, NeuronSet b) { return from_mask(a.mask_ & b.mask_); }
  // set difference
  friend constexpr NeuronSet operator-(NeuronSet a, NeuronSet b) { return from_mask(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(NeuronSet a, NeuronSet b) = default;

 private:
  static constexpr std::uint64_t bit(int label) { return std::uint64_t{1} << (label - 1); }
  std::uint64_t mask_ = 0;
};

// Compares the increasing label sequences lexicographically, so a proper
// prefix comes first: {} < 1 < 12 < 123 < 13 < 2.
bool lex_less(NeuronSet a, NeuronSet b);

struct LexLess {
  bool operator()(NeuronSet a, NeuronSet b) const { return lex_less(a, b); }
};

// Paper-style shorthand: "134" when every label is a single digit, "{10,11}"
// otherwise, "{}" for the empty set.
std::string to_string(NeuronSet s);
// Same, but switches to braces whenever n > 9 so a whole code prints uniformly.
std::string to_string(NeuronSet s, int n);

}  // namespace convexa
