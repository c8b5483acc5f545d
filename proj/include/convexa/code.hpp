#pragma once

#include <string>
#include <vector>

#include "convexa/neuron_set.hpp"

namespace convexa {

// A set of codewords over neurons {1..n}.  Codewords are kept sorted by
// lex_less and deduplicated; the empty codeword is stored like any other.
class NeuralCode {
 public:
  NeuralCode() = default;
  // Throws InvalidArgument when n is out of range or a codeword uses a label > n.
  NeuralCode(int n, std::vector<NeuronSet> codewords);

  int n() const { return n_; }
  const std::vector<NeuronSet>& codewords() const { return codewords_; }
  std::size_t size() const { return codewords_.size(); }
  bool contains(NeuronSet s) const;
  bool has_empty() const { return contains(NeuronSet{}); }
  NeuronSet universe() const { return NeuronSet::universe(n_); }

  NeuralCode without_empty() const;
  NeuralCode with_codeword(NeuronSet s) const;

  auto begin() const { return codewords_.begin(); }
  auto end() const { return codewords_.end(); }

  friend bool operator==(const NeuralCode&, const NeuralCode&) = default;

 private:
  int n_ = 0;
  std::vector<NeuronSet> codewords_;
};

struct ParsedCode {
  NeuralCode code;
  std::vector<std::string> warnings;
};

// Text format: optional first line "n=<int>", then codeword tokens separated
// by commas or whitespace.  A token is a digit string (one neuron per digit),
// "{a,b,...}" for multi-digit labels, or "{}" / "0" for the empty codeword.
// A leading '{"' switches to the JSON form {"n": int, "codewords": [[...]]}.
ParsedCode parse_code(const std::string& text);

// Inverse of parse_code for the text form, with an explicit n= header.
std::string format_code(const NeuralCode& code);
// Codewords only, e.g. "{123, 12, 1, {}}".
std::string format_codewords(const std::vector<NeuronSet>& words, int n);

struct Restriction {
  NeuralCode code;              // over {1..|tau|}
  std::vector<int> label_map;   // label_map[k-1] = original label of new neuron k
};

// {sigma ∩ tau : sigma in code}, relabeled densely in increasing order of tau.
Restriction restrict(const NeuralCode& code, NeuronSet tau);
// {sigma ∩ tau : sigma in code}, keeping the original labels and n.
NeuralCode restrict_in_place(const NeuralCode& code, NeuronSet tau);
// Translates a dense label set back through a label map.
NeuronSet unmap_labels(NeuronSet s, const std::vector<int>& label_map);

// Codewords containing sigma gain neuron n+1.
NeuralCode add_redundant_neuron(const NeuralCode& code, NeuronSet sigma);
// Codewords meeting R gain neuron n+1.
NeuralCode adjoin_union_neuron(const NeuralCode& code, NeuronSet R);

std::vector<NeuronSet> maximal_codewords(const NeuralCode& code);

// Relabels neuron i as perm[i-1]; perm must be a permutation of 1..n.
NeuronSet permute(NeuronSet s, const std::vector<int>& perm);
NeuralCode permute(const NeuralCode& code, const std::vector<int>& perm);

}  // namespace convexa
