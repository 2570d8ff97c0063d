#pragma once

#include <optional>
#include <string>
#include <vector>

#include "troprate/bicriteria.hpp"
#include "troprate/errors.hpp"

namespace troprate {

/// Default reciprocity tolerance, in ordinary scale: |a_ij a_ji - 1| <= tol.
inline constexpr double kReciprocityTolerance = 1e-6;

struct MatrixViolation {
  std::size_t row = 0;  ///< 0-based; meaningless when `located` is false
  std::size_t col = 0;
  bool located = true;
  std::string message;
};

/// Thrown when a comparison matrix is rejected; carries every violation found.
class ValidationError : public Error {
 public:
  ValidationError(std::string what, std::vector<MatrixViolation> violations)
      : Error(std::move(what)), violations_(std::move(violations)) {}
  const std::vector<MatrixViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<MatrixViolation> violations_;
};

/// Positive, symmetrically reciprocal matrix of pairwise comparisons.
class ComparisonMatrix {
 public:
  const Matrix& matrix() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_.rows(); }
  double value(std::size_t i, std::size_t j) const { return m_(i, j).value(); }

 private:
  friend ComparisonMatrix validate_reciprocal(const Matrix& raw, double tol);
  explicit ComparisonMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Every violation of squareness, positivity and reciprocity; empty when the
/// matrix is acceptable. Each unordered pair is reported once, at (i, j), i < j.
std::vector<MatrixViolation> reciprocity_violations(const Matrix& raw,
                                                    double tol = kReciprocityTolerance);

/// Throws ValidationError listing all violations.
ComparisonMatrix validate_reciprocal(const Matrix& raw, double tol = kReciprocityTolerance);
ComparisonMatrix validate_reciprocal(const std::vector<std::vector<double>>& raw,
                                     double tol = kReciprocityTolerance);

/// Spectral radius in ordinary scale: 1 for a consistent matrix, > 1 otherwise.
double consistency_index(const ComparisonMatrix& m);

/// max_ij |log a_ij - log(x_i / x_j)| to the given base (> 1).
double log_cheb_error(const ComparisonMatrix& m, const Vector& x, double base = 0.0);
/// max_ij |a_ij - x_i / x_j| / a_ij.
double max_relative_error(const ComparisonMatrix& m, const Vector& x);

struct Diagnostics {
  double log_cheb_a = 0.0;
  double log_cheb_b = 0.0;
  double max_rel_a = 0.0;
  double max_rel_b = 0.0;
};

struct Representative {
  Vector x;           ///< member of the family, inside the box
  Vector normalized;  ///< x scaled so that its largest component is 1
  Diagnostics diagnostics;
};

struct SolutionFamily {
  Scalar alpha;
  Scalar beta;
  ParametricBox box;
  std::vector<Representative> representatives;
};

struct RatingResult {
  ParetoFront front;
  std::vector<SolutionFamily> families;
};

struct RateOptions {
  enum class Selection {
    /// Point front: the point. Segment: both endpoints.
    Endpoints,
    /// `samples` log-uniform points along the front.
    All,
    /// The single front point with alpha = at_alpha.
    AtAlpha,
  };
  Selection selection = Selection::Endpoints;
  double at_alpha = 0.0;  ///< ordinary scale
  std::size_t samples = 50;
  double tolerance = kDefaultTolerance;
  double log_base = 0.0;  ///< 0 selects the natural logarithm
};

/// Thrown by rate() when the requested alpha is not on the front.
class OutOfFrontError : public Error {
 public:
  using Error::Error;
};

/// Bounds default to g = 0 and h = top when omitted.
RatingResult rate(const ComparisonMatrix& a, const ComparisonMatrix& b,
                  std::optional<Vector> g = std::nullopt, std::optional<Vector> h = std::nullopt,
                  const RateOptions& options = {});

/// x / max_i x_i.
Vector max_normalize(const Vector& x);

}  // namespace troprate
