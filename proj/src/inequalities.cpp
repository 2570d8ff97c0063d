#include "troprate/inequalities.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "troprate/errors.hpp"

namespace troprate {

ParametricBox::ParametricBox(Matrix star, Vector lower, Vector upper, double tol)
    : star_(std::move(star)), lower_(std::move(lower)), upper_(std::move(upper)) {
  if (!star_.is_square() || star_.cols() != lower_.size() || lower_.size() != upper_.size()) {
    throw DimensionError("parametric box: generator and bounds do not conform");
  }
  if (!leq(lower_, upper_, tol)) {
    std::ostringstream msg;
    msg << "parametric box: lower bound " << lower_ << " exceeds upper bound " << upper_;
    throw DomainError(msg.str());
  }
}

bool ParametricBox::bounded_above() const noexcept {
  return std::none_of(upper_.begin(), upper_.end(), [](Scalar s) { return s.is_top(); });
}

Vector residuate(const Matrix& a, const Vector& x) {
  if (a.rows() != x.size()) {
    throw DimensionError("residuation: matrix has " + std::to_string(a.rows()) +
                         " rows, vector has " + std::to_string(x.size()) + " components");
  }
  Vector u(a.cols(), Scalar::top());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Scalar aij = a(i, j);
      if (aij.is_zero()) continue;
      best = std::min(best, x[i].log() - aij.log());
    }
    u[j] = Scalar::from_log(best);
  }
  return u;
}

Vector solve_upper(const Matrix& a, const Vector& d) {
  if (!a.is_column_regular()) throw DomainError("solve_upper: matrix has a zero column");
  if (!d.is_regular()) throw DomainError("solve_upper: right-hand side is not regular");
  // (d^- A)^- written as a residuation; identical for regular d.
  return residuate(a, d);
}

ParametricBox solve_recursive(const Matrix& a, const Vector& c, double tol) {
  if (!a.is_square() || a.rows() != c.size()) {
    throw DimensionError("solve_recursive: matrix and vector do not conform");
  }
  Matrix star = kleene_star(a, tol);
  return ParametricBox(std::move(star), c, Vector(c.size(), Scalar::top()), tol);
}

ParametricBox solve_double(const Matrix& a, const Vector& c, const Vector& d, double tol) {
  if (!a.is_square() || a.rows() != c.size() || c.size() != d.size()) {
    throw DimensionError("solve_double: matrix and vectors do not conform");
  }
  if (!d.is_regular()) throw DomainError("solve_double: upper bound is not regular");
  Matrix star = kleene_star(a, tol);
  const Scalar condition = conjugate(d) * (star * c);
  if (!leq(condition, Scalar::one(), tol)) {
    std::ostringstream msg;
    msg << "double inequality has no solution: d^- A* c = " << condition << " > 1";
    throw InfeasibleError(Infeasibility::EmptyBox, msg.str());
  }
  Vector upper = solve_upper(star, d);
  // Clamp rounding noise at the feasibility boundary so that lower <= upper
  // holds exactly.
  for (std::size_t i = 0; i < upper.size(); ++i) upper[i] = add(upper[i], c[i]);
  return ParametricBox(std::move(star), c, std::move(upper), tol);
}

bool contains(const ParametricBox& box, const Vector& x, double tol) {
  if (x.size() != box.dim()) {
    throw DimensionError("contains: vector of size " + std::to_string(x.size()) +
                         " against a box of dimension " + std::to_string(box.dim()));
  }
  // Greatest admissible parameter: u = min(residuate(S, x), upper). Every u'
  // in the box with S u' = x satisfies u' <= u, and S is monotone, so x is a
  // member iff u >= lower and S u reproduces x.
  Vector u = residuate(box.star(), x);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::min(u[i], box.upper()[i]);
  if (!leq(box.lower(), u, tol)) return false;
  // Lift u into the box where it fell below lower only by rounding noise.
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = add(u[i], box.lower()[i]);
  return approx_equal(box.member(u), x, tol);
}

}  // namespace troprate
