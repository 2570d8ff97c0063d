#pragma once

// Solvers for the vector inequalities
//   A x <= d                  (maximal solution by residuation)
//   A x (+) c <= x            (parametric solution x = A* u, u >= c)
//   A x (+) c <= x <= d       (parametric solution x = A* u, c <= u <= (d^- A*)^-)

#include "troprate/semiring.hpp"

namespace troprate {

/// Solution family {x = star * u : lower <= u <= upper}.
///
/// Components of `upper` equal to Scalar::top() are unbounded; an all-top
/// upper bound is the unconstrained family of A x (+) c <= x.
class ParametricBox {
 public:
  /// Throws DimensionError on shape mismatch and DomainError when
  /// lower <= upper fails (an empty family is never constructed).
  ParametricBox(Matrix star, Vector lower, Vector upper, double tol = kDefaultTolerance);

  const Matrix& star() const noexcept { return star_; }
  const Vector& lower() const noexcept { return lower_; }
  const Vector& upper() const noexcept { return upper_; }
  std::size_t dim() const noexcept { return lower_.size(); }
  bool bounded_above() const noexcept;

  /// The member generated by parameter u (u is not checked against the box).
  Vector member(const Vector& u) const { return star_ * u; }

 private:
  Matrix star_;
  Vector lower_;
  Vector upper_;
};

/// Greatest u with A u <= x: u_j = min_i x_i / a_ij over a_ij != 0, top when
/// column j is zero. Works for any x, including zero and top components.
Vector residuate(const Matrix& a, const Vector& x);

/// Maximal solution (d^- A)^- of A x <= d.
/// Requires A column-regular and d regular; throws DomainError otherwise.
Vector solve_upper(const Matrix& a, const Vector& d);

/// All regular solutions of A x (+) c <= x. Throws
/// InfeasibleError(TraceExceedsOne) when Tr(A) > 1.
ParametricBox solve_recursive(const Matrix& a, const Vector& c,
                              double tol = kDefaultTolerance);

/// All solutions of A x (+) c <= x <= d. Throws InfeasibleError with kind
/// TraceExceedsOne when Tr(A) > 1 and EmptyBox when d^- A* c > 1.
ParametricBox solve_double(const Matrix& a, const Vector& c, const Vector& d,
                           double tol = kDefaultTolerance);

/// True iff x = star * u for some u in [lower, upper], within tolerance.
bool contains(const ParametricBox& box, const Vector& x, double tol = kDefaultTolerance);

}  // namespace troprate
