#pragma once

// Bi-objective problem
//
//   min (x^- A x, x^- B x)   s.t.  g <= x <= h,   x regular,
//
// solved in closed form: the Pareto front is either the single point
// (lambda (+) gamma, mu (+) delta) or the segment
// lambda (+) gamma <= alpha <= H(mu (+) delta), beta = G(alpha), and every
// Pareto-optimal x at a front point (alpha, beta) is
// x = (alpha^-1 A (+) beta^-1 B)* u with g <= u <= (h^- (alpha^-1 A (+) beta^-1 B)*)^-.

#include <cstddef>
#include <utility>
#include <vector>

#include "troprate/inequalities.hpp"
#include "troprate/semiring.hpp"

namespace troprate {

struct ProblemInstance {
  Matrix a;
  Matrix b;
  Vector g;  ///< lower bounds; zero components allowed
  Vector h;  ///< upper bounds; regular, top components mean unbounded

  std::size_t dim() const noexcept { return a.rows(); }

  /// Checks shapes, A and B nonzero, h regular and g <= h. Throws
  /// DimensionError or DomainError.
  void validate(double tol = kDefaultTolerance) const;

  /// g = 0 and h = top: the unconstrained problem.
  static ProblemInstance unconstrained(Matrix a, Matrix b);
};

/// Table of F_km for all k + m <= max_order: F_km is the sum of all words in
/// A and B with exactly k factors B and m factors A. Built by the recurrence
/// W(k, m) = A W(k, m-1) (+) B W(k-1, m), W(0, 0) = I.
class FkmTable {
 public:
  FkmTable(const Matrix& a, const Matrix& b, std::size_t max_order);

  std::size_t max_order() const noexcept { return max_order_; }
  /// Throws std::out_of_range when k + m exceeds max_order.
  const Matrix& operator()(std::size_t k, std::size_t m) const;

 private:
  std::size_t max_order_;
  std::vector<std::vector<Matrix>> table_;  // table_[k][m], k + m <= max_order
};

/// F_km for k >= 1, m >= 1.
Matrix compute_fkm(const Matrix& a, const Matrix& b, std::size_t k, std::size_t m);

struct FrontScalars {
  Scalar lambda;  ///< spectral radius of A
  Scalar mu;      ///< spectral radius of B
  Scalar gamma;   ///< (+)_{k=1..n-1} (h^- A^k g)^{1/k}
  Scalar delta;   ///< (+)_{k=1..n-1} (h^- B^k g)^{1/k}

  Scalar alpha_min() const { return lambda + gamma; }
  Scalar beta_min() const { return mu + delta; }
};

FrontScalars front_scalars(const ProblemInstance& inst);

enum class TermSource { Trace, Boundary };

/// One monomial coefficient * s^exponent of G or H. `base` is the F_km
/// quantity it comes from: tr F_km (Trace) or h^- F_km g (Boundary).
struct FrontTerm {
  Scalar coefficient;
  Rational exponent;
  std::size_t k = 0;
  std::size_t m = 0;
  TermSource source = TermSource::Trace;
  Scalar base;
};

struct FrontFunctions {
  std::vector<FrontTerm> g_terms;
  std::vector<FrontTerm> h_terms;
};

FrontFunctions front_functions(const ProblemInstance& inst);

/// Sum over `terms` of coefficient * s^exponent. Throws DomainError for s = 0.
Scalar eval_front_fn(const std::vector<FrontTerm>& terms, Scalar s);

/// Merges monomials with equal exponents, keeping the larger coefficient;
/// sorted by increasing exponent. Provenance fields of merged terms refer to
/// the dominating term.
std::vector<FrontTerm> simplify(const std::vector<FrontTerm>& terms);

enum class FrontKind { Point, Segment };

struct ParetoFront {
  FrontKind kind = FrontKind::Point;
  Scalar alpha_lo;  ///< lambda (+) gamma
  Scalar alpha_hi;  ///< equals alpha_lo for a point, H(mu (+) delta) otherwise
  FrontScalars scalars;
  FrontFunctions functions;

  /// Least beta feasible together with alpha: (mu (+) delta) (+) G(alpha).
  Scalar beta_at(Scalar alpha) const;
  Scalar beta_lo() const { return beta_at(alpha_hi); }
  Scalar beta_hi() const { return beta_at(alpha_lo); }
  /// alpha within [alpha_lo, alpha_hi] up to tolerance.
  bool covers(Scalar alpha, double tol = kDefaultTolerance) const;
};

/// Throws DomainError when the instance violates its hypotheses or the front
/// is not attained (lambda (+) gamma or mu (+) delta is zero).
ParetoFront compute_front(const ProblemInstance& inst, double tol = kDefaultTolerance);

/// Family of all x with x^- A x <= alpha, x^- B x <= beta and g <= x <= h.
/// Propagates InfeasibleError from the double-inequality solver.
ParametricBox solutions_at(const ProblemInstance& inst, Scalar alpha, Scalar beta,
                           double tol = kDefaultTolerance);

/// Point: one pair. Segment: `count` pairs with alpha log-uniform over the
/// segment, both endpoints included.
std::vector<std::pair<Scalar, Scalar>> sample_front(const ParetoFront& front,
                                                    std::size_t count = 50);

/// (x^- A x, x^- B x); throws DomainError when x is not regular.
std::pair<Scalar, Scalar> objectives(const ProblemInstance& inst, const Vector& x);

/// Representative members of a family: star * lower, star * upper and the
/// columns of the generator scaled into the box, deduplicated up to a
/// positive factor. Non-regular candidates are skipped.
std::vector<Vector> representatives(const ParametricBox& box,
                                    double tol = kDefaultTolerance);

}  // namespace troprate
