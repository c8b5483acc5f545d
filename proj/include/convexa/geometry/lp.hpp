#pragma once

#include <optional>
#include <vector>

#include "convexa/geometry/rational.hpp"

namespace convexa {

enum class Relation { Le, Lt, Ge, Gt };

// normal · x  rel  offset
struct Constraint {
  RationalVector normal;
  Rational offset;
  Relation rel = Relation::Le;
};

bool is_strict(Relation rel);
const char* to_string(Relation rel);
Relation parse_relation(const std::string& text);
// The relation describing the complement: ≤ ↔ >, < ↔ ≥.
Relation negate(Relation rel);

bool satisfies(const Constraint& c, const RationalVector& point);

struct FeasibilityWitness {
  RationalVector point;
  // One entry per strict input constraint, in input order: how far the point
  // is from the boundary (always > 0).
  std::vector<Rational> slack;
};

// Exact feasibility of a mixed weak/strict system in dimension `dim`.  Strict
// rows are tightened by a common slack t ≤ 1 which is maximized; the system is
// feasible iff the optimum t is positive.
std::optional<FeasibilityWitness> feasible(const std::vector<Constraint>& constraints, std::size_t dim);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RationalVector y;
  Rational value;
};

// maximize c·y subject to A y ≤ b with y free, by the dictionary simplex
// method under Bland's rule (two phases).
LpResult maximize(const std::vector<RationalVector>& A, const RationalVector& b, const RationalVector& c);

// Calls to feasible() made by this thread; used for budgets and statistics.
long long feasibility_calls();

}  // namespace convexa
