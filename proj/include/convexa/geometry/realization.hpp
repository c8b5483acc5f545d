#pragma once

#include <optional>
#include <vector>

#include "convexa/code.hpp"
#include "convexa/geometry/lp.hpp"

namespace convexa {

enum class RealizationMode { Closed, Open };

const char* to_string(RealizationMode mode);

// A convex polyhedron {x : every constraint holds}.  Closed bodies use ≤
// rows, open bodies < rows.
struct HalfspaceBody {
  std::vector<Constraint> constraints;
};

// One body per neuron; neuron i is bodies[i-1].
struct Realization {
  std::size_t dim = 0;
  RealizationMode mode = RealizationMode::Closed;
  std::vector<HalfspaceBody> bodies;

  int neurons() const { return static_cast<int>(bodies.size()); }
};

// Rewrites ≥/> rows as ≤/< and checks dimensions and mode consistency.
// Throws InvalidArgument.
Realization normalized(Realization r);

bool body_nonempty(const HalfspaceBody& body, std::size_t dim);
// Nonempty with all rows made strict.
bool full_dimensional(const HalfspaceBody& body, std::size_t dim);
bool bounded(const HalfspaceBody& body, std::size_t dim);

// Affine dimension of the solution set, -1 when empty.  Strict rows count
// as their closures once nonemptiness is settled.
int affine_dimension(const std::vector<Constraint>& constraints, std::size_t dim);

struct AtomOptions {
  long long max_calls = 1'000'000;  // feasibility calls per top-level operation
  int max_neurons = 12;
};

std::optional<FeasibilityWitness> atom_nonempty(const Realization& r, NeuronSet sigma, const AtomOptions& options = {});

// The code of the realization with X = R^d.  Without candidates n must not
// exceed options.max_neurons; with candidates only those codewords (plus ∅)
// are tested.
NeuralCode realized_code(const Realization& r, const AtomOptions& options = {},
                         const std::vector<NeuronSet>* candidates = nullptr);

class NotFullDimensional : public std::runtime_error {
 public:
  NotFullDimensional(int neuron, const std::string& what) : std::runtime_error(what), neuron_(neuron) {}
  int neuron() const { return neuron_; }

 private:
  int neuron_;
};

// Strictifies every row.  Throws NotFullDimensional for a nonempty body with
// empty interior, and InvalidArgument for an open-mode input.
Realization interior_realization(const Realization& r);

// Weakens every row (the closure of each nonempty open body).
Realization closure_realization(const Realization& r);

enum class Nondegeneracy { Nondegenerate, Degenerate, Inapplicable };
const char* to_string(Nondegeneracy v);

struct NondegeneracyReport {
  Nondegeneracy verdict = Nondegeneracy::Inapplicable;
  NeuralCode closed_code;
  std::optional<NeuralCode> interior_code;
  std::vector<int> lower_dimensional;  // nonempty bodies with empty interior
};

NondegeneracyReport nondegeneracy_check_closed(const Realization& r, const AtomOptions& options = {});

// Image of every body under x ↦ M x + t; M must be invertible.
Realization apply_affine_map(const Realization& r, const std::vector<RationalVector>& M, const RationalVector& t);

}  // namespace convexa
