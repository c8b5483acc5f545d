#include "convexa/geometry/lp.hpp"

#include "convexa/errors.hpp"

namespace convexa {

bool is_strict(Relation rel) { return rel == Relation::Lt || rel == Relation::Gt; }

const char* to_string(Relation rel) {
  switch (rel) {
    case Relation::Le:
      return "<=";
    case Relation::Lt:
      return "<";
    case Relation::Ge:
      return ">=";
    case Relation::Gt:
      return ">";
  }
  return "?";
}

Relation parse_relation(const std::string& text) {
  if (text == "<=") return Relation::Le;
  if (text == "<") return Relation::Lt;
  if (text == ">=") return Relation::Ge;
  if (text == ">") return Relation::Gt;
  throw ParseError("unknown relation \"" + text + "\"");
}

Relation negate(Relation rel) {
  switch (rel) {
    case Relation::Le:
      return Relation::Gt;
    case Relation::Lt:
      return Relation::Ge;
    case Relation::Ge:
      return Relation::Lt;
    case Relation::Gt:
      return Relation::Le;
  }
  return rel;
}

bool satisfies(const Constraint& c, const RationalVector& point) {
  const Rational lhs = dot(c.normal, point);
  switch (c.rel) {
    case Relation::Le:
      return lhs <= c.offset;
    case Relation::Lt:
      return lhs < c.offset;
    case Relation::Ge:
      return lhs >= c.offset;
    case Relation::Gt:
      return lhs > c.offset;
  }
  return false;
}

namespace {

thread_local long long g_calls = 0;

// Dictionary: basic[r] = constant[r] + sum_c coef[r][c] * nonbasic[c].
// Variables 0..free_count-1 are free; all others are nonnegative.
class Dictionary {
 public:
  Dictionary(const std::vector<RationalVector>& A, const RationalVector& b, std::size_t vars)
      : free_count_(vars), rows_(A.size()) {
    for (std::size_t j = 0; j < vars; ++j) nonbasic_.push_back(j);
    for (std::size_t r = 0; r < rows_; ++r) {
      basic_.push_back(vars + r);
      constant_.push_back(b[r]);
      RationalVector row(vars);
      for (std::size_t j = 0; j < vars; ++j) row[j] = -A[r][j];
      coef_.push_back(std::move(row));
    }
    objective_.assign(vars, Rational(0));
  }

  bool is_free(std::size_t var) const { return var < free_count_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational a = coef_[r][c];
    const Rational inv = 1 / a;
    RationalVector& pr = coef_[r];
    constant_[r] = -constant_[r] * inv;
    for (std::size_t k = 0; k < pr.size(); ++k) {
      if (k == c) continue;
      if (pr[k] != 0) pr[k] = -pr[k] * inv;
    }
    pr[c] = inv;
    for (std::size_t i = 0; i < coef_.size(); ++i) {
      if (i == r) continue;
      substitute(constant_[i], coef_[i], pr, constant_[r], c);
    }
    substitute(objective_constant_, objective_, pr, constant_[r], c);
    std::swap(basic_[r], nonbasic_[c]);
  }

  // Moves every free variable into the basis where possible.
  void absorb_free_variables() {
    for (std::size_t c = 0; c < nonbasic_.size(); ++c) {
      if (!is_free(nonbasic_[c])) continue;
      for (std::size_t r = 0; r < basic_.size(); ++r) {
        if (!is_free(basic_[r]) && coef_[r][c] != 0) {
          pivot(r, c);
          break;
        }
      }
    }
  }

  // Two-phase feasibility; returns false when infeasible.
  bool make_feasible() {
    std::size_t worst = basic_.size();
    for (std::size_t r = 0; r < basic_.size(); ++r) {
      if (is_free(basic_[r]) || constant_[r] >= 0) continue;
      if (worst == basic_.size() || constant_[r] < constant_[worst]) worst = r;
    }
    if (worst == basic_.size()) return true;

    const std::size_t aux = free_count_ + rows_;
    const std::size_t aux_col = nonbasic_.size();
    nonbasic_.push_back(aux);
    for (std::size_t r = 0; r < basic_.size(); ++r) coef_[r].push_back(is_free(basic_[r]) ? Rational(0) : Rational(1));
    RationalVector saved_obj = objective_;
    Rational saved_const = objective_constant_;
    objective_.assign(nonbasic_.size(), Rational(0));
    objective_[aux_col] = -1;
    objective_constant_ = 0;
    pivot(worst, aux_col);
    run(aux);
    bool ok = objective_constant_ == 0;
    if (ok) {
      // Drive the auxiliary variable out of the basis if it is still there.
      for (std::size_t r = 0; r < basic_.size(); ++r) {
        if (basic_[r] != aux) continue;
        std::size_t col = nonbasic_.size();
        for (std::size_t c = 0; c < nonbasic_.size(); ++c) {
          if (coef_[r][c] != 0) {
            col = c;
            break;
          }
        }
        if (col == nonbasic_.size()) {
          erase_row(r);
        } else {
          pivot(r, col);
        }
        break;
      }
      std::size_t c = 0;
      while (nonbasic_[c] != aux) ++c;
      erase_column(c);
    }
    objective_ = std::move(saved_obj);
    objective_constant_ = saved_const;
    return ok;
  }

  // Sets the objective sum_j w_j y_j in terms of the current nonbasics.
  // Returns false when a free nonbasic variable with nonzero weight makes
  // the problem unbounded.
  bool set_objective(const RationalVector& w) {
    objective_.assign(nonbasic_.size(), Rational(0));
    objective_constant_ = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] == 0) continue;
      bool placed = false;
      for (std::size_t r = 0; r < basic_.size() && !placed; ++r) {
        if (basic_[r] == j) {
          objective_constant_ += w[j] * constant_[r];
          for (std::size_t c = 0; c < nonbasic_.size(); ++c) {
            if (coef_[r][c] != 0) objective_[c] += w[j] * coef_[r][c];
          }
          placed = true;
        }
      }
      if (!placed) return false;
    }
    return true;
  }

  // Bland's rule; returns false when unbounded.
  bool run(std::size_t prefer_leaving = static_cast<std::size_t>(-1)) {
    while (true) {
      std::size_t enter = nonbasic_.size();
      for (std::size_t c = 0; c < nonbasic_.size(); ++c) {
        if (objective_[c] == 0) continue;
        if (is_free(nonbasic_[c])) return false;
        if (objective_[c] > 0 && (enter == nonbasic_.size() || nonbasic_[c] < nonbasic_[enter])) enter = c;
      }
      if (enter == nonbasic_.size()) return true;
      std::size_t leave = basic_.size();
      Rational best;
      for (std::size_t r = 0; r < basic_.size(); ++r) {
        if (is_free(basic_[r]) || coef_[r][enter] >= 0) continue;
        Rational ratio = constant_[r] / -coef_[r][enter];
        bool better = leave == basic_.size() || ratio < best;
        if (!better && ratio == best) {
          if (basic_[r] == prefer_leaving) {
            better = true;
          } else if (basic_[leave] != prefer_leaving && basic_[r] < basic_[leave]) {
            better = true;
          }
        }
        if (better) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == basic_.size()) return false;
      pivot(leave, enter);
    }
  }

  Rational objective_value() const { return objective_constant_; }

  RationalVector solution() const {
    RationalVector y(free_count_, Rational(0));
    for (std::size_t r = 0; r < basic_.size(); ++r) {
      if (is_free(basic_[r])) y[basic_[r]] = constant_[r];
    }
    return y;
  }

 private:
  static void substitute(Rational& constant, RationalVector& row, const RationalVector& pivot_row,
                         const Rational& pivot_constant, std::size_t c) {
    const Rational f = row[c];
    if (f == 0) return;
    constant += f * pivot_constant;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k == c) continue;
      if (pivot_row[k] != 0) row[k] += f * pivot_row[k];
    }
    row[c] = f * pivot_row[c];
  }

  void erase_row(std::size_t r) {
    basic_.erase(basic_.begin() + static_cast<long>(r));
    constant_.erase(constant_.begin() + static_cast<long>(r));
    coef_.erase(coef_.begin() + static_cast<long>(r));
  }

  void erase_column(std::size_t c) {
    nonbasic_.erase(nonbasic_.begin() + static_cast<long>(c));
    for (auto& row : coef_) row.erase(row.begin() + static_cast<long>(c));
    if (c < objective_.size()) objective_.erase(objective_.begin() + static_cast<long>(c));
  }

  std::size_t free_count_;
  std::size_t rows_;
  std::vector<std::size_t> basic_, nonbasic_;
  RationalVector constant_;
  std::vector<RationalVector> coef_;
  RationalVector objective_;
  Rational objective_constant_ = 0;
};

}  // namespace

LpResult maximize(const std::vector<RationalVector>& A, const RationalVector& b, const RationalVector& c) {
  const std::size_t vars = c.size();
  for (const auto& row : A) {
    if (row.size() != vars) throw InvalidArgument("constraint row length differs from the objective length");
  }
  if (b.size() != A.size()) throw InvalidArgument("right-hand side length differs from the row count");
  Dictionary d(A, b, vars);
  d.absorb_free_variables();
  LpResult out;
  if (!d.make_feasible()) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  if (!d.set_objective(c) || !d.run()) {
    out.status = LpStatus::Unbounded;
    out.y = d.solution();
    return out;
  }
  out.status = LpStatus::Optimal;
  out.y = d.solution();
  out.value = d.objective_value();
  return out;
}

std::optional<FeasibilityWitness> feasible(const std::vector<Constraint>& constraints, std::size_t dim) {
  ++g_calls;
  bool any_strict = false;
  for (const auto& c : constraints) {
    if (c.normal.size() != dim) throw InvalidArgument("constraint dimension differs from the ambient dimension");
    any_strict = any_strict || is_strict(c.rel);
  }
  const std::size_t vars = dim + (any_strict ? 1 : 0);
  std::vector<RationalVector> A;
  RationalVector b;
  for (const auto& c : constraints) {
    const bool flip = c.rel == Relation::Ge || c.rel == Relation::Gt;
    RationalVector row(vars);
    for (std::size_t j = 0; j < dim; ++j) row[j] = flip ? Rational(-c.normal[j]) : c.normal[j];
    if (is_strict(c.rel)) row[dim] = 1;
    A.push_back(std::move(row));
    b.push_back(flip ? Rational(-c.offset) : c.offset);
  }
  RationalVector objective(vars);
  if (any_strict) {
    RationalVector upper(vars), lower(vars);
    upper[dim] = 1;
    lower[dim] = -1;
    A.push_back(upper);
    b.push_back(1);
    A.push_back(lower);
    b.push_back(0);
    objective[dim] = 1;
  }
  LpResult lp = maximize(A, b, objective);
  if (lp.status != LpStatus::Optimal) return std::nullopt;
  if (any_strict && lp.value <= 0) return std::nullopt;
  FeasibilityWitness w;
  w.point.assign(lp.y.begin(), lp.y.begin() + static_cast<long>(dim));
  for (const auto& c : constraints) {
    if (!is_strict(c.rel)) continue;
    const Rational lhs = dot(c.normal, w.point);
    w.slack.push_back(c.rel == Relation::Lt ? Rational(c.offset - lhs) : Rational(lhs - c.offset));
  }
  return w;
}

long long feasibility_calls() { return g_calls; }

}  // namespace convexa
