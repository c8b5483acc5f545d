#include "convexa/code.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

#include "convexa/errors.hpp"

namespace convexa {

NeuralCode::NeuralCode(int n, std::vector<NeuronSet> codewords) : n_(n), codewords_(std::move(codewords)) {
  if (n < 0 || n > kMaxNeurons) {
    throw InvalidArgument("neuron count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxNeurons));
  }
  const NeuronSet all = NeuronSet::universe(n);
  for (NeuronSet s : codewords_) {
    if (!s.is_subset_of(all)) {
      throw InvalidArgument("codeword " + to_string(s) + " uses a label above n=" + std::to_string(n));
    }
  }
  std::sort(codewords_.begin(), codewords_.end(), LexLess{});
  codewords_.erase(std::unique(codewords_.begin(), codewords_.end()), codewords_.end());
}

bool NeuralCode::contains(NeuronSet s) const {
  return std::binary_search(codewords_.begin(), codewords_.end(), s, LexLess{});
}

NeuralCode NeuralCode::without_empty() const {
  std::vector<NeuronSet> words;
  for (NeuronSet s : codewords_) {
    if (!s.empty()) words.push_back(s);
  }
  return NeuralCode(n_, std::move(words));
}

NeuralCode NeuralCode::with_codeword(NeuronSet s) const {
  std::vector<NeuronSet> words = codewords_;
  words.push_back(s);
  return NeuralCode(n_, std::move(words));
}

namespace {

bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

ParsedCode parse_json_code(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON code: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("codewords")) {
    throw ParseError("JSON code needs fields \"n\" and \"codewords\"");
  }
  if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxNeurons) throw ParseError("n=" + std::to_string(n) + " outside 1..64");
  if (!j["codewords"].is_array()) throw ParseError("\"codewords\" must be an array");
  ParsedCode out;
  std::vector<NeuronSet> words;
  std::set<std::uint64_t> seen;
  for (const auto& w : j["codewords"]) {
    if (!w.is_array()) throw ParseError("each codeword must be an array of labels");
    NeuronSet s;
    for (const auto& l : w) {
      if (!l.is_number_integer()) throw ParseError("labels must be integers");
      const int label = l.get<int>();
      if (label < 1) throw ParseError("label " + std::to_string(label) + " is not positive");
      if (label > n) throw ParseError("label " + std::to_string(label) + " exceeds n=" + std::to_string(n));
      s = s.with(label);
    }
    if (!seen.insert(s.mask()).second) out.warnings.push_back("duplicate codeword " + to_string(s, n) + " ignored");
    words.push_back(s);
  }
  out.code = NeuralCode(n, std::move(words));
  return out;
}

}  // namespace

ParsedCode parse_code(const std::string& text) {
  std::size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') {
    std::size_t next = text.find_first_not_of(" \t\r\n", pos + 1);
    if (next != std::string::npos && text[next] == '"') return parse_json_code(text);
  }

  std::string body = text;
  int declared_n = 0;
  {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text.compare(first, 2, "n=") == 0) {
      std::size_t eol = text.find('\n', first);
      std::string header = text.substr(first + 2, eol == std::string::npos ? std::string::npos : eol - first - 2);
      while (!header.empty() && std::isspace(static_cast<unsigned char>(header.back()))) header.pop_back();
      if (header.empty() || !std::all_of(header.begin(), header.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("malformed header \"n=" + header + "\"");
      }
      if (header.size() > 3 || std::stoi(header) < 1 || std::stoi(header) > kMaxNeurons) {
        throw ParseError("header n=" + header + " outside 1..64");
      }
      declared_n = std::stoi(header);
      body = eol == std::string::npos ? std::string() : text.substr(eol + 1);
    }
  }

  std::vector<std::vector<int>> tokens;
  std::size_t i = 0;
  while (i < body.size()) {
    if (is_separator(body[i])) {
      ++i;
      continue;
    }
    std::vector<int> labels;
    if (body[i] == '{') {
      std::size_t close = body.find('}', i);
      if (close == std::string::npos) throw ParseError("unterminated '{' at offset " + std::to_string(i));
      std::string inner = body.substr(i + 1, close - i - 1);
      std::size_t j = 0;
      while (j < inner.size()) {
        if (is_separator(inner[j])) {
          ++j;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(inner[j]))) {
          throw ParseError("malformed token \"{" + inner + "}\"");
        }
        std::size_t k = j;
        while (k < inner.size() && std::isdigit(static_cast<unsigned char>(inner[k]))) ++k;
        if (k - j > 2) throw ParseError("label \"" + inner.substr(j, k - j) + "\" too large");
        const int label = std::stoi(inner.substr(j, k - j));
        if (label < 1) throw ParseError("label 0 inside braces in \"{" + inner + "}\"");
        labels.push_back(label);
        j = k;
      }
      i = close + 1;
      if (i < body.size() && !is_separator(body[i])) throw ParseError("malformed token after \"{" + inner + "}\"");
    } else {
      std::size_t k = i;
      while (k < body.size() && !is_separator(body[k])) ++k;
      std::string tok = body.substr(i, k - i);
      i = k;
      if (tok == "0") {
        tokens.push_back({});
        continue;
      }
      for (char c : tok) {
        if (c < '1' || c > '9') throw ParseError("malformed token \"" + tok + "\"");
        labels.push_back(c - '0');
      }
    }
    tokens.push_back(std::move(labels));
  }

  int max_label = 0;
  for (const auto& t : tokens)
    for (int l : t) max_label = std::max(max_label, l);
  ParsedCode out;
  int n = declared_n;
  if (n == 0) {
    n = std::max(max_label, 1);
  } else if (max_label > n) {
    throw ParseError("label " + std::to_string(max_label) + " exceeds declared n=" + std::to_string(n));
  }
  if (n > kMaxNeurons) throw ParseError("label " + std::to_string(n) + " exceeds the 64-neuron cap");

  std::vector<NeuronSet> words;
  std::set<std::uint64_t> seen;
  for (const auto& t : tokens) {
    NeuronSet s = NeuronSet::from_labels(t);
    if (!seen.insert(s.mask()).second) out.warnings.push_back("duplicate codeword " + to_string(s, n) + " ignored");
    words.push_back(s);
  }
  if (!seen.count(0)) out.warnings.push_back("code does not contain the empty codeword");
  out.code = NeuralCode(n, std::move(words));
  return out;
}

std::string format_codewords(const std::vector<NeuronSet>& words, int n) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ", ";
    out += to_string(words[i], n);
  }
  return out + "}";
}

std::string format_code(const NeuralCode& code) {
  std::string out = "n=" + std::to_string(code.n()) + "\n";
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) out += ", ";
    out += to_string(code.codewords()[i], code.n());
  }
  return out + "\n";
}

Restriction restrict(const NeuralCode& code, NeuronSet tau) {
  tau = tau & code.universe();
  Restriction out;
  out.label_map = tau.labels();
  std::vector<NeuronSet> words;
  words.reserve(code.size());
  for (NeuronSet s : code) {
    NeuronSet dense;
    int k = 1;
    for (int l : out.label_map) {
      if (s.contains(l)) dense = dense.with(k);
      ++k;
    }
    words.push_back(dense);
  }
  out.code = NeuralCode(static_cast<int>(out.label_map.size()), std::move(words));
  return out;
}

NeuralCode restrict_in_place(const NeuralCode& code, NeuronSet tau) {
  std::vector<NeuronSet> words;
  words.reserve(code.size());
  for (NeuronSet s : code) words.push_back(s & tau);
  return NeuralCode(code.n(), std::move(words));
}

NeuronSet unmap_labels(NeuronSet s, const std::vector<int>& label_map) {
  NeuronSet out;
  for (int l : s.labels()) {
    if (l > static_cast<int>(label_map.size())) throw InvalidArgument("label outside the label map");
    out = out.with(label_map[l - 1]);
  }
  return out;
}

NeuralCode add_redundant_neuron(const NeuralCode& code, NeuronSet sigma) {
  if (code.n() >= kMaxNeurons) throw InvalidArgument("no room for another neuron");
  if (!sigma.is_subset_of(code.universe())) throw InvalidArgument("sigma is not a subset of [n]");
  const int fresh = code.n() + 1;
  std::vector<NeuronSet> words;
  for (NeuronSet s : code) words.push_back(sigma.is_subset_of(s) ? s.with(fresh) : s);
  return NeuralCode(fresh, std::move(words));
}

NeuralCode adjoin_union_neuron(const NeuralCode& code, NeuronSet R) {
  if (R.empty()) throw InvalidArgument("adjoin_union_neuron needs a nonempty R");
  if (code.n() >= kMaxNeurons) throw InvalidArgument("no room for another neuron");
  const int fresh = code.n() + 1;
  std::vector<NeuronSet> words;
  for (NeuronSet s : code) words.push_back(s.intersects(R) ? s.with(fresh) : s);
  return NeuralCode(fresh, std::move(words));
}

std::vector<NeuronSet> maximal_codewords(const NeuralCode& code) {
  std::vector<NeuronSet> out;
  for (NeuronSet s : code) {
    bool maximal = true;
    for (NeuronSet t : code) {
      if (s.is_proper_subset_of(t)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

NeuronSet permute(NeuronSet s, const std::vector<int>& perm) {
  NeuronSet out;
  for (int l : s.labels()) out = out.with(perm.at(l - 1));
  return out;
}

NeuralCode permute(const NeuralCode& code, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != code.n()) throw InvalidArgument("permutation size differs from n");
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < code.n(); ++i) {
    if (sorted[i] != i + 1) throw InvalidArgument("not a permutation of 1..n");
  }
  std::vector<NeuronSet> words;
  for (NeuronSet s : code) words.push_back(permute(s, perm));
  return NeuralCode(code.n(), std::move(words));
}

}  // namespace convexa
