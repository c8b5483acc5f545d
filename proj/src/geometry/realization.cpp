#include "convexa/geometry/realization.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "convexa/errors.hpp"

namespace convexa {

const char* to_string(RealizationMode mode) { return mode == RealizationMode::Closed ? "closed" : "open"; }

const char* to_string(Nondegeneracy v) {
  switch (v) {
    case Nondegeneracy::Nondegenerate:
      return "nondegenerate";
    case Nondegeneracy::Degenerate:
      return "degenerate";
    case Nondegeneracy::Inapplicable:
      return "inapplicable";
  }
  return "?";
}

Realization normalized(Realization r) {
  if (r.bodies.size() > static_cast<std::size_t>(kMaxNeurons)) throw InvalidArgument("more than 64 bodies");
  for (std::size_t i = 0; i < r.bodies.size(); ++i) {
    for (auto& c : r.bodies[i].constraints) {
      if (c.normal.size() != r.dim) {
        throw InvalidArgument("body " + std::to_string(i + 1) + " has a constraint of dimension " +
                              std::to_string(c.normal.size()) + " in ambient dimension " + std::to_string(r.dim));
      }
      if (c.rel == Relation::Ge || c.rel == Relation::Gt) {
        for (auto& a : c.normal) a = -a;
        c.offset = -c.offset;
        c.rel = c.rel == Relation::Ge ? Relation::Le : Relation::Lt;
      }
      const bool strict = c.rel == Relation::Lt;
      if (strict != (r.mode == RealizationMode::Open)) {
        throw InvalidArgument("body " + std::to_string(i + 1) + " mixes " + (strict ? "strict" : "weak") +
                              " rows into a " + to_string(r.mode) + " realization");
      }
    }
  }
  return r;
}

bool body_nonempty(const HalfspaceBody& body, std::size_t dim) { return feasible(body.constraints, dim).has_value(); }

namespace {

std::vector<Constraint> strictified(const std::vector<Constraint>& cs) {
  std::vector<Constraint> out = cs;
  for (auto& c : out) {
    if (c.rel == Relation::Le) c.rel = Relation::Lt;
    if (c.rel == Relation::Ge) c.rel = Relation::Gt;
  }
  return out;
}

std::vector<Constraint> weakened(const std::vector<Constraint>& cs) {
  std::vector<Constraint> out = cs;
  for (auto& c : out) {
    if (c.rel == Relation::Lt) c.rel = Relation::Le;
    if (c.rel == Relation::Gt) c.rel = Relation::Ge;
  }
  return out;
}

// Basis of {v : row · v = 0 for every row}.
std::vector<RationalVector> nullspace(std::vector<RationalVector> rows, std::size_t dim) {
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Rational inv = 1 / rows[rank][col];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (std::size_t k = 0; k < dim; ++k) rows[r][k] -= f * rows[rank][k];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    RationalVector v(dim);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Extreme value of v·x over the closure, clipped to within 1 of v·p0.
std::optional<RationalVector> push_along(const std::vector<Constraint>& weak, std::size_t /*dim*/, const RationalVector& v,
                                         const Rational& bound, bool upward) {
  std::vector<RationalVector> A;
  RationalVector b;
  for (const auto& c : weak) {
    const bool flip = c.rel == Relation::Ge;
    RationalVector row = c.normal;
    if (flip)
      for (auto& x : row) x = -x;
    A.push_back(std::move(row));
    b.push_back(flip ? Rational(-c.offset) : c.offset);
  }
  RationalVector obj = v;
  if (upward) {
    A.push_back(v);
    b.push_back(bound);
  } else {
    for (auto& x : obj) x = -x;
    A.push_back(obj);
    b.push_back(-bound);
  }
  LpResult lp = maximize(A, b, obj);
  if (lp.status != LpStatus::Optimal) return std::nullopt;
  return lp.y;
}

}  // namespace

int affine_dimension(const std::vector<Constraint>& constraints, std::size_t dim) {
  auto start = feasible(constraints, dim);
  if (!start) return -1;
  const RationalVector p0 = start->point;
  const std::vector<Constraint> weak = weakened(constraints);
  std::vector<RationalVector> directions, flats;
  while (true) {
    std::vector<RationalVector> known = directions;
    known.insert(known.end(), flats.begin(), flats.end());
    auto free = nullspace(known, dim);
    if (free.empty()) break;
    const RationalVector& v = free.front();
    const Rational base = dot(v, p0);
    std::optional<RationalVector> moved;
    if (auto hi = push_along(weak, dim, v, base + 1, true); hi && dot(v, *hi) > base) moved = hi;
    if (!moved) {
      if (auto lo = push_along(weak, dim, v, base - 1, false); lo && dot(v, *lo) < base) moved = lo;
    }
    if (moved) {
      RationalVector d(dim);
      for (std::size_t k = 0; k < dim; ++k) d[k] = (*moved)[k] - p0[k];
      directions.push_back(std::move(d));
    } else {
      flats.push_back(v);
    }
  }
  return static_cast<int>(directions.size());
}

bool full_dimensional(const HalfspaceBody& body, std::size_t dim) {
  return feasible(strictified(body.constraints), dim).has_value();
}

bool bounded(const HalfspaceBody& body, std::size_t dim) {
  if (!body_nonempty(body, dim)) return true;
  std::vector<RationalVector> A;
  RationalVector b;
  for (const auto& c : weakened(body.constraints)) {
    const bool flip = c.rel == Relation::Ge;
    RationalVector row = c.normal;
    if (flip)
      for (auto& x : row) x = -x;
    A.push_back(std::move(row));
    b.push_back(flip ? Rational(-c.offset) : c.offset);
  }
  for (std::size_t k = 0; k < dim; ++k) {
    for (int sign : {1, -1}) {
      RationalVector obj(dim);
      obj[k] = sign;
      if (maximize(A, b, obj).status != LpStatus::Optimal) return false;
    }
  }
  return true;
}

namespace {

class CallBudget {
 public:
  explicit CallBudget(long long limit) : limit_(limit) {}
  std::optional<FeasibilityWitness> check(const std::vector<Constraint>& cs, std::size_t dim, NeuronSet sigma,
                                          std::size_t depth) {
    if (++used_ > limit_) {
      throw BudgetExceeded("atom search exceeded " + std::to_string(limit_) +
                           " feasibility calls (at codeword " + to_string(sigma, 10) + ", exclusion depth " +
                           std::to_string(depth) + ")");
    }
    return feasible(cs, dim);
  }

 private:
  long long limit_;
  long long used_ = 0;
};

Constraint exclusion(const Constraint& c, RealizationMode mode) {
  Constraint x = c;
  x.rel = mode == RealizationMode::Closed ? Relation::Gt : Relation::Ge;
  return x;
}

bool outside(const HalfspaceBody& body, const RationalVector& p, RealizationMode mode) {
  for (const auto& c : body.constraints) {
    if (satisfies(exclusion(c, mode), p)) return true;
  }
  return false;
}

FeasibilityWitness witness_at(const std::vector<Constraint>& cs, RationalVector point) {
  FeasibilityWitness w;
  for (const auto& c : cs) {
    if (!is_strict(c.rel)) continue;
    const Rational lhs = dot(c.normal, point);
    w.slack.push_back(c.rel == Relation::Lt || c.rel == Relation::Le ? Rational(c.offset - lhs)
                                                                     : Rational(lhs - c.offset));
  }
  w.point = std::move(point);
  return w;
}

// Searches for a point of the region `base` lying outside every listed body,
// choosing one violated facet per body.  Bodies listed first are branched on
// first.
class ExclusionSearch {
 public:
  ExclusionSearch(const Realization& r, CallBudget& budget, NeuronSet sigma)
      : r_(r), budget_(budget), sigma_(sigma) {}

  std::optional<FeasibilityWitness> run(std::vector<Constraint> base, const RationalVector& base_point,
                                        const std::vector<int>& primary, const std::vector<int>& secondary) {
    // Facets of primary bodies that can be violated inside the base region.
    std::vector<std::pair<std::size_t, int>> ranked;
    options_.clear();
    for (int j : primary) {
      std::vector<Constraint> opts;
      for (const auto& c : r_.bodies[j].constraints) {
        Constraint x = exclusion(c, r_.mode);
        if (satisfies(x, base_point)) {
          opts.push_back(x);
          continue;
        }
        base.push_back(x);
        const bool ok = budget_.check(base, r_.dim, sigma_, 0).has_value();
        base.pop_back();
        if (ok) opts.push_back(x);
      }
      if (opts.empty()) return std::nullopt;
      ranked.emplace_back(opts.size(), j);
      options_[j] = std::move(opts);
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    order_.clear();
    for (const auto& [count, j] : ranked) order_.push_back(j);
    for (int j : secondary) {
      std::vector<Constraint> opts;
      for (const auto& c : r_.bodies[j].constraints) opts.push_back(exclusion(c, r_.mode));
      options_[j] = std::move(opts);
      order_.push_back(j);
    }
    auto point = dfs(0, base, base_point);
    if (!point) return std::nullopt;
    return witness_at(chosen_, *point);
  }

 private:
  std::optional<RationalVector> dfs(std::size_t level, std::vector<Constraint>& cur, const RationalVector& p) {
    bool clear = true;
    for (std::size_t k = level; k < order_.size() && clear; ++k) {
      if (!outside(r_.bodies[order_[k]], p, r_.mode)) clear = false;
    }
    if (clear) {
      chosen_ = cur;
      return p;
    }
    const int j = order_[level];
    const auto& opts = options_[j];
    // Facets already violated at p need no new feasibility call.
    for (const auto& x : opts) {
      if (!satisfies(x, p)) continue;
      cur.push_back(x);
      auto res = dfs(level + 1, cur, p);
      cur.pop_back();
      if (res) return res;
    }
    for (const auto& x : opts) {
      if (satisfies(x, p)) continue;
      cur.push_back(x);
      auto w = budget_.check(cur, r_.dim, sigma_, level + 1);
      std::optional<RationalVector> res;
      if (w) res = dfs(level + 1, cur, w->point);
      cur.pop_back();
      if (res) return res;
    }
    return std::nullopt;
  }

  const Realization& r_;
  CallBudget& budget_;
  NeuronSet sigma_;
  std::unordered_map<int, std::vector<Constraint>> options_;
  std::vector<int> order_;
  std::vector<Constraint> chosen_;
};

std::vector<Constraint> membership(const Realization& r, NeuronSet sigma) {
  std::vector<Constraint> out;
  for (int i : sigma.labels()) {
    const auto& cs = r.bodies[i - 1].constraints;
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

// Decides the atom of sigma given the feasible membership region.  `touching`
// lists bodies (0-based) outside sigma that meet the region; `dims` holds
// their intersection dimensions with it in closed mode.
std::optional<FeasibilityWitness> decide_atom(const Realization& r, CallBudget& budget, NeuronSet sigma,
                                              const std::vector<Constraint>& region, const RationalVector& point,
                                              int region_dim, const std::vector<int>& touching,
                                              const std::vector<int>& dims) {
  std::vector<int> primary, secondary;
  for (std::size_t k = 0; k < touching.size(); ++k) {
    // In closed mode a body meeting the region in lower dimension cannot
    // cover what the others leave uncovered, so it is branched on last.
    if (r.mode == RealizationMode::Closed && dims[k] < region_dim) {
      secondary.push_back(touching[k]);
    } else {
      primary.push_back(touching[k]);
    }
  }
  ExclusionSearch search(r, budget, sigma);
  return search.run(region, point, primary, secondary);
}

void check_sigma(const Realization& r, NeuronSet sigma) {
  if (!sigma.is_subset_of(NeuronSet::universe(r.neurons()))) {
    throw InvalidArgument("codeword " + to_string(sigma, 10) + " names a neuron without a body");
  }
}

std::optional<FeasibilityWitness> atom_with_budget(const Realization& r, NeuronSet sigma, CallBudget& budget) {
  check_sigma(r, sigma);
  std::vector<Constraint> region = membership(r, sigma);
  auto base = budget.check(region, r.dim, sigma, 0);
  if (!base) return std::nullopt;
  const int region_dim = r.mode == RealizationMode::Closed ? affine_dimension(region, r.dim) : static_cast<int>(r.dim);
  std::vector<int> touching, dims;
  for (int j = 0; j < r.neurons(); ++j) {
    if (sigma.contains(j + 1)) continue;
    std::vector<Constraint> both = region;
    const auto& cs = r.bodies[j].constraints;
    both.insert(both.end(), cs.begin(), cs.end());
    if (!budget.check(both, r.dim, sigma, 0)) continue;
    touching.push_back(j);
    dims.push_back(r.mode == RealizationMode::Closed ? affine_dimension(both, r.dim) : static_cast<int>(r.dim));
  }
  return decide_atom(r, budget, sigma, region, base->point, region_dim, touching, dims);
}

}  // namespace

std::optional<FeasibilityWitness> atom_nonempty(const Realization& r, NeuronSet sigma, const AtomOptions& options) {
  const Realization nr = normalized(r);
  CallBudget budget(options.max_calls);
  return atom_with_budget(nr, sigma, budget);
}

NeuralCode realized_code(const Realization& r, const AtomOptions& options, const std::vector<NeuronSet>* candidates) {
  const Realization nr = normalized(r);
  const int n = nr.neurons();
  CallBudget budget(options.max_calls);
  std::vector<NeuronSet> words;
  if (candidates) {
    std::vector<NeuronSet> todo = *candidates;
    todo.push_back(NeuronSet{});
    for (NeuronSet s : todo) {
      if (atom_with_budget(nr, s, budget)) words.push_back(s);
    }
    return NeuralCode(n, std::move(words));
  }
  if (n > options.max_neurons) {
    throw BudgetExceeded("realized_code enumerates subsets of " + std::to_string(n) + " neurons; the cap is " +
                         std::to_string(options.max_neurons) + " unless candidate codewords are supplied");
  }

  // Nerve faces: neuron sets whose bodies share a point, found level by level.
  struct Face {
    std::vector<Constraint> region;
    RationalVector point;
    int dim;
  };
  std::unordered_map<std::uint64_t, Face> faces;
  const bool closed = nr.mode == RealizationMode::Closed;
  faces[0] = Face{{}, RationalVector(nr.dim), static_cast<int>(nr.dim)};
  std::vector<std::uint64_t> level{0};
  while (!level.empty()) {
    std::vector<std::uint64_t> next;
    std::unordered_set<std::uint64_t> queued;
    for (std::uint64_t f : level) {
      const int top = NeuronSet::from_mask(f).max_label();
      for (int j = top + 1; j <= n; ++j) {
        const std::uint64_t g = f | (std::uint64_t{1} << (j - 1));
        bool all_faces = true;
        for (std::uint64_t m = f; m && all_faces; m &= m - 1) {
          if (!faces.count(g & ~(m & (~m + 1)))) all_faces = false;
        }
        if (!all_faces || !queued.insert(g).second) continue;
        std::vector<Constraint> region = faces.at(f).region;
        const auto& cs = nr.bodies[j - 1].constraints;
        region.insert(region.end(), cs.begin(), cs.end());
        auto w = budget.check(region, nr.dim, NeuronSet::from_mask(g), 0);
        if (!w) continue;
        const int d = closed ? affine_dimension(region, nr.dim) : static_cast<int>(nr.dim);
        faces[g] = Face{std::move(region), w->point, d};
        next.push_back(g);
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }

  for (const auto& [mask, face] : faces) {
    const NeuronSet sigma = NeuronSet::from_mask(mask);
    std::vector<int> touching, dims;
    for (int j = 1; j <= n; ++j) {
      if (sigma.contains(j)) continue;
      auto it = faces.find(mask | (std::uint64_t{1} << (j - 1)));
      if (it == faces.end()) continue;
      touching.push_back(j - 1);
      dims.push_back(it->second.dim);
    }
    if (decide_atom(nr, budget, sigma, face.region, face.point, face.dim, touching, dims)) words.push_back(sigma);
  }
  return NeuralCode(n, std::move(words));
}

Realization interior_realization(const Realization& r) {
  const Realization nr = normalized(r);
  if (nr.mode != RealizationMode::Closed) throw InvalidArgument("interior_realization expects a closed realization");
  Realization out = nr;
  out.mode = RealizationMode::Open;
  for (std::size_t i = 0; i < nr.bodies.size(); ++i) {
    const auto& body = nr.bodies[i];
    if (body_nonempty(body, nr.dim) && !full_dimensional(body, nr.dim)) {
      throw NotFullDimensional(static_cast<int>(i) + 1, "body " + std::to_string(i + 1) +
                                                            " is nonempty but has empty interior");
    }
    out.bodies[i].constraints = strictified(body.constraints);
  }
  return out;
}

Realization closure_realization(const Realization& r) {
  const Realization nr = normalized(r);
  if (nr.mode != RealizationMode::Open) throw InvalidArgument("closure_realization expects an open realization");
  Realization out = nr;
  out.mode = RealizationMode::Closed;
  for (auto& body : out.bodies) body.constraints = weakened(body.constraints);
  return out;
}

NondegeneracyReport nondegeneracy_check_closed(const Realization& r, const AtomOptions& options) {
  const Realization nr = normalized(r);
  if (nr.mode != RealizationMode::Closed) throw InvalidArgument("nondegeneracy check expects a closed realization");
  NondegeneracyReport report;
  report.closed_code = realized_code(nr, options);
  for (std::size_t i = 0; i < nr.bodies.size(); ++i) {
    if (body_nonempty(nr.bodies[i], nr.dim) && !full_dimensional(nr.bodies[i], nr.dim)) {
      report.lower_dimensional.push_back(static_cast<int>(i) + 1);
    }
  }
  if (!report.lower_dimensional.empty()) {
    report.verdict = Nondegeneracy::Inapplicable;
    return report;
  }
  report.interior_code = realized_code(interior_realization(nr), options);
  report.verdict = *report.interior_code == report.closed_code ? Nondegeneracy::Nondegenerate : Nondegeneracy::Degenerate;
  return report;
}

namespace {

std::vector<RationalVector> inverse(std::vector<RationalVector> M) {
  const std::size_t d = M.size();
  std::vector<RationalVector> inv(d, RationalVector(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (M[i].size() != d) throw InvalidArgument("affine map matrix must be square");
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && M[piv][col] == 0) ++piv;
    if (piv == d) throw InvalidArgument("affine map matrix is singular");
    std::swap(M[col], M[piv]);
    std::swap(inv[col], inv[piv]);
    const Rational f = 1 / M[col][col];
    for (std::size_t k = 0; k < d; ++k) {
      M[col][k] *= f;
      inv[col][k] *= f;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || M[r][col] == 0) continue;
      const Rational g = M[r][col];
      for (std::size_t k = 0; k < d; ++k) {
        M[r][k] -= g * M[col][k];
        inv[r][k] -= g * inv[col][k];
      }
    }
  }
  return inv;
}

}  // namespace

Realization apply_affine_map(const Realization& r, const std::vector<RationalVector>& M, const RationalVector& t) {
  if (M.size() != r.dim || t.size() != r.dim) throw InvalidArgument("affine map dimension differs from the realization");
  const auto inv = inverse(M);
  Realization out = r;
  // y = Mx + t, so a·x ≤ b becomes (M^{-T} a)·y ≤ b + (M^{-T} a)·t.
  for (auto& body : out.bodies) {
    for (auto& c : body.constraints) {
      RationalVector a(r.dim);
      for (std::size_t i = 0; i < r.dim; ++i)
        for (std::size_t k = 0; k < r.dim; ++k) a[i] += inv[k][i] * c.normal[k];
      c.offset += dot(a, t);
      c.normal = std::move(a);
    }
  }
  return out;
}

}  // namespace convexa
