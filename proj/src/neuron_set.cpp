#include "convexa/neuron_set.hpp"

#include "convexa/errors.hpp"

namespace convexa {

namespace {

void check_label(int label) {
  if (label < 1 || label > kMaxNeurons) {
    throw InvalidArgument("neuron label " + std::to_string(label) + " outside 1.." +
                          std::to_string(kMaxNeurons));
  }
}

}  // namespace

NeuronSet::NeuronSet(std::initializer_list<int> labels) {
  for (int l : labels) {
    check_label(l);
    mask_ |= bit(l);
  }
}

NeuronSet NeuronSet::from_labels(const std::vector<int>& labels) {
  NeuronSet s;
  for (int l : labels) {
    check_label(l);
    s.mask_ |= bit(l);
  }
  return s;
}

std::vector<int> NeuronSet::labels() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

bool lex_less(NeuronSet a, NeuronSet b) {
  const std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  // Both sequences agree below the first differing label d.  If d belongs to
  // a, then a < b exactly when b continues past d.
  const std::uint64_t above = ~((low << 1) - 1);
  if (a.mask() & low) return (b.mask() & above) != 0;
  return (a.mask() & above) == 0;
}

std::string to_string(NeuronSet s) { return to_string(s, s.max_label()); }

std::string to_string(NeuronSet s, int n) {
  if (s.empty()) return "{}";
  std::string out;
  if (n <= 9) {
    for (int l : s.labels()) out += static_cast<char>('0' + l);
    return out;
  }
  out = "{";
  bool first = true;
  for (int l : s.labels()) {
    if (!first) out += ',';
    out += std::to_string(l);
    first = false;
  }
  return out + "}";
}

}  // namespace convexa
