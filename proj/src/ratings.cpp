#include "troprate/ratings.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "troprate/errors.hpp"

namespace troprate {

std::vector<MatrixViolation> reciprocity_violations(const Matrix& raw, double tol) {
  std::vector<MatrixViolation> out;
  if (!raw.is_square() || raw.rows() == 0) {
    out.push_back({0, 0, false,
                   "matrix must be square and non-empty, got " + std::to_string(raw.rows()) +
                       "x" + std::to_string(raw.cols())});
    return out;
  }
  const std::size_t n = raw.rows();
  bool positive = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar s = raw(i, j);
      if (!s.is_finite()) {
        positive = false;
        out.push_back({i, j, true, "entry must be positive and finite"});
      }
    }
  }
  if (!positive) return out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // a_ij a_ji - 1 evaluated from log values.
      const double deviation = std::expm1(raw(i, j).log() + raw(j, i).log());
      if (std::abs(deviation) > tol) {
        std::ostringstream msg;
        msg << "a[" << i + 1 << "][" << j + 1 << "] * a[" << j + 1 << "][" << i + 1
            << "] = " << 1.0 + deviation << ", expected 1";
        out.push_back({i, j, true, msg.str()});
      }
    }
  }
  return out;
}

ComparisonMatrix validate_reciprocal(const Matrix& raw, double tol) {
  auto violations = reciprocity_violations(raw, tol);
  if (!violations.empty()) {
    std::string what = "comparison matrix rejected: " + violations.front().message;
    if (violations.size() > 1) {
      what += " (and " + std::to_string(violations.size() - 1) + " more)";
    }
    throw ValidationError(std::move(what), std::move(violations));
  }
  return ComparisonMatrix(raw);
}

ComparisonMatrix validate_reciprocal(const std::vector<std::vector<double>>& raw, double tol) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : raw) {
    auto& out = rows.emplace_back();
    for (double v : r) {
      // Non-positive entries are reported by the validator, not rejected here.
      out.push_back(v > 0.0 ? Scalar::from_value(v) : Scalar::zero());
    }
  }
  Matrix m;
  try {
    m = Matrix::from_rows(rows);
  } catch (const DimensionError& e) {
    throw ValidationError(e.what(), {{0, 0, false, e.what()}});
  }
  return validate_reciprocal(m, tol);
}

double consistency_index(const ComparisonMatrix& m) {
  return spectral_radius(m.matrix()).value();
}

namespace {

void require_positive(const Vector& x, std::size_t n, const char* what) {
  if (x.size() != n) {
    throw DimensionError(std::string(what) + ": rating vector has " +
                         std::to_string(x.size()) + " components, expected " +
                         std::to_string(n));
  }
  for (Scalar s : x) {
    if (!s.is_finite()) throw DomainError(std::string(what) + ": ratings must be positive");
  }
}

}  // namespace

double log_cheb_error(const ComparisonMatrix& m, const Vector& x, double base) {
  const std::size_t n = m.size();
  require_positive(x, n, "log_cheb_error");
  if (base != 0.0 && !(base > 1.0)) throw DomainError("logarithm base must exceed 1");
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      worst = std::max(worst,
                       std::abs(m.matrix()(i, j).log() - (x[i].log() - x[j].log())));
  return base == 0.0 ? worst : worst / std::log(base);
}

double max_relative_error(const ComparisonMatrix& m, const Vector& x) {
  const std::size_t n = m.size();
  require_positive(x, n, "max_relative_error");
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double a = m.value(i, j);
      const double ratio = std::exp(x[i].log() - x[j].log());
      worst = std::max(worst, std::abs(a - ratio) / a);
    }
  }
  return worst;
}

Vector max_normalize(const Vector& x) {
  Scalar peak;
  for (Scalar s : x) peak += s;
  return inv(peak) * x;
}

namespace {

SolutionFamily family_at(const ProblemInstance& inst, const ComparisonMatrix& a,
                         const ComparisonMatrix& b, Scalar alpha, Scalar beta,
                         const RateOptions& options) {
  ParametricBox box = solutions_at(inst, alpha, beta, options.tolerance);
  std::vector<Representative> reps;
  for (Vector& x : representatives(box, options.tolerance)) {
    Diagnostics d{log_cheb_error(a, x, options.log_base), log_cheb_error(b, x, options.log_base),
                  max_relative_error(a, x), max_relative_error(b, x)};
    Vector norm = max_normalize(x);
    reps.push_back({std::move(x), std::move(norm), d});
  }
  return SolutionFamily{alpha, beta, std::move(box), std::move(reps)};
}

}  // namespace

RatingResult rate(const ComparisonMatrix& a, const ComparisonMatrix& b, std::optional<Vector> g,
                  std::optional<Vector> h, const RateOptions& options) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionError("rate: comparison matrices differ in size");
  ProblemInstance inst{a.matrix(), b.matrix(), g ? std::move(*g) : Vector(n, Scalar::zero()),
                       h ? std::move(*h) : Vector(n, Scalar::top())};
  RatingResult result;
  result.front = compute_front(inst, options.tolerance);
  const ParetoFront& front = result.front;

  std::vector<std::pair<Scalar, Scalar>> points;
  switch (options.selection) {
    case RateOptions::Selection::Endpoints:
      points = sample_front(front, front.kind == FrontKind::Point ? 1 : 2);
      break;
    case RateOptions::Selection::All:
      points = sample_front(front, options.samples);
      break;
    case RateOptions::Selection::AtAlpha: {
      if (!(options.at_alpha > 0.0)) throw OutOfFrontError("alpha must be positive");
      Scalar alpha = Scalar::from_value(options.at_alpha);
      if (!front.covers(alpha, options.tolerance)) {
        std::ostringstream msg;
        msg << "alpha = " << options.at_alpha << " is outside the Pareto front ["
            << front.alpha_lo << ", " << front.alpha_hi << "]";
        throw OutOfFrontError(msg.str());
      }
      // Snap onto the front so that boundary rounding cannot leave it.
      alpha = std::clamp(alpha, front.alpha_lo, front.alpha_hi);
      points.emplace_back(alpha, front.beta_at(alpha));
      break;
    }
  }
  for (const auto& [alpha, beta] : points) {
    result.families.push_back(family_at(inst, a, b, alpha, beta, options));
  }
  return result;
}

}  // namespace troprate
