#pragma once

#include <cmath>
#include <random>
#include <string>

#include "troprate/bicriteria.hpp"
#include "troprate/numeric.hpp"

namespace troprate::testing {

inline Scalar q(const char* text) { return parse_scalar(text); }

/// Exact-value match within the log-domain tolerance.
inline bool near(Scalar s, double value, double tol = 1e-9) {
  return approx_equal(s, Scalar::from_value(value), tol);
}

inline Matrix four_a() {
  return Matrix::from_values({{1, 3, 4, 2}, {1.0 / 3, 1, 0.5, 1.0 / 3}, {0.25, 2, 1, 4}, {0.5, 3, 0.25, 1}});
}
inline Matrix four_b() {
  return Matrix::from_values({{1, 2, 4, 2}, {0.5, 1, 1.0 / 3, 0.5}, {0.25, 3, 1, 4}, {0.5, 2, 0.25, 1}});
}
inline ProblemInstance four_alternatives() {
  return {four_a(), four_b(), Vector::from_values({1, 0, 0, 0}),
          Vector({q("1"), q("1/6"), q("1"), q("1")})};
}
inline ProblemInstance two_alternatives() {
  return {Matrix::from_values({{1, 2}, {0.5, 1}}), Matrix::from_values({{1, 1.0 / 3}, {3, 1}}),
          Vector({q("1/3"), q("1/3")}), Vector({q("1/2"), q("1/2")})};
}

/// Entries log-uniform in [1/spread, spread]; `zero_prob` of them set to zero.
inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                            double spread = 8.0, double zero_prob = 0.0) {
  std::uniform_real_distribution<double> logv(-std::log(spread), std::log(spread));
  std::bernoulli_distribution drop(zero_prob);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = drop(rng) ? Scalar::zero() : Scalar::from_log(logv(rng));
  return m;
}

inline Vector random_vector(std::mt19937& rng, std::size_t n, double spread = 8.0) {
  std::uniform_real_distribution<double> logv(-std::log(spread), std::log(spread));
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = Scalar::from_log(logv(rng));
  return x;
}

/// Symmetrically reciprocal matrix with entries log-uniform in [1/spread, spread].
inline Matrix random_reciprocal(std::mt19937& rng, std::size_t n, double spread = 8.0) {
  std::uniform_real_distribution<double> logv(-std::log(spread), std::log(spread));
  Matrix m(n, n, Scalar::one());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = logv(rng);
      m(i, j) = Scalar::from_log(v);
      m(j, i) = Scalar::from_log(-v);
    }
  return m;
}

}  // namespace troprate::testing
