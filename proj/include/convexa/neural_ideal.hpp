#pragma once

#include <string>
#include <vector>

#include "convexa/code.hpp"

namespace convexa {

// prod_{i in sigma} x_i * prod_{j in tau} (1 + x_j), sigma and tau disjoint.
struct PseudoMonomial {
  NeuronSet sigma;
  NeuronSet tau;

  int degree() const { return sigma.size() + tau.size(); }
  friend bool operator==(const PseudoMonomial&, const PseudoMonomial&) = default;
};

// Throws InvalidArgument when sigma and tau overlap.
PseudoMonomial make_pseudo_monomial(NeuronSet sigma, NeuronSet tau);

// Degree first, then sigma by lex_less, then tau by lex_less.
bool canonical_less(const PseudoMonomial& a, const PseudoMonomial& b);

// g divides f iff g.sigma ⊆ f.sigma and g.tau ⊆ f.tau.
bool divides(const PseudoMonomial& g, const PseudoMonomial& f);

PseudoMonomial characteristic(NeuronSet v, int n);

// Value at the 0/1 point with support v.
bool evaluate(const PseudoMonomial& pm, NeuronSet v);

// pm lies in J_C iff it vanishes on every codeword.
bool ideal_contains(const NeuralCode& code, const PseudoMonomial& pm);

using CanonicalForm = std::vector<PseudoMonomial>;

struct CanonicalFormOptions {
  int max_neurons = 20;
  int threads = 1;
};

// Minimal pseudo-monomials of J_C, sorted by canonical_less.  Throws
// BudgetExceeded when n > options.max_neurons.
CanonicalForm canonical_form(const NeuralCode& code, const CanonicalFormOptions& options = {});

// "x1*x3*(1+x2)"; the constant monomial prints as "1".
std::string to_string(const PseudoMonomial& pm);
// Accepts "x1*x3*(1+x2)", "x_1x_3(x_2+1)", "(1+x2)" and similar; "1" is the
// constant.  Throws ParseError.
PseudoMonomial parse_pseudo_monomial(const std::string& text);

enum class RFKind { EmptyIntersection, Covering };

// U_sigma ⊆ ∪_{i in tau} U_i; with tau empty this reads U_sigma = ∅.
struct RFRelation {
  NeuronSet sigma;
  NeuronSet tau;
  RFKind kind;
};

std::vector<RFRelation> rf_relationships(const NeuralCode& code, const CanonicalForm& cf);
std::string to_string(const RFRelation& rel);
const char* to_string(RFKind kind);

PseudoMonomial permute(const PseudoMonomial& pm, const std::vector<int>& perm);

}  // namespace convexa
