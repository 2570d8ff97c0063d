#pragma once

// Brute-force verifiers for desk-scale instances. Independent of the closed
// form: the grid search evaluates the objectives directly and F_km is summed
// word by word.

#include <cstddef>
#include <utility>
#include <vector>

#include "troprate/bicriteria.hpp"

namespace troprate::oracle {

/// Log-domain grid over the rating vector x.
struct GridSpec {
  /// [log lo_j, log hi_j] per component; lo_j == hi_j pins the component.
  std::vector<std::pair<double, double>> log_ranges;
  std::size_t resolution = 0;  ///< points per non-pinned axis, >= 2

  /// Box taken from the instance. Zero lower bounds are replaced by
  /// h_j / floor_ratio. With no finite bound at all (g = 0, h = top) the
  /// problem is scale invariant: x_1 is pinned to 1 and the other components
  /// range over [1 / floor_ratio, floor_ratio]. Throws DomainError when some
  /// h_j is top while others are finite.
  static GridSpec for_instance(const ProblemInstance& inst, std::size_t resolution,
                               double floor_ratio = 64.0);

  /// Number of grid points.
  double size() const;
};

struct GridPoint {
  Scalar alpha;
  Scalar beta;
  Vector x;
};

inline constexpr double kDefaultGridCap = 5e7;

/// Non-dominated objective pairs over the grid, sorted by increasing alpha.
/// Throws ResourceError when the grid exceeds `max_points`.
std::vector<GridPoint> grid_pareto(const ProblemInstance& inst, const GridSpec& spec,
                                   double max_points = kDefaultGridCap);

inline constexpr std::size_t kMaxWordLength = 8;

/// F_km as the explicit sum over all C(k+m, k) words. Throws ResourceError
/// when k + m exceeds kMaxWordLength.
Matrix enum_fkm(const Matrix& a, const Matrix& b, std::size_t k, std::size_t m);

/// Agreement between a grid envelope and the analytic front, in log units.
struct FrontAgreement {
  double grid_points = 0;
  std::size_t non_dominated = 0;
  /// Largest min(log alpha - log a, log beta - log b) over grid pairs (a, b)
  /// and sampled front points (alpha, beta): how far some grid pair dominates
  /// the front. Positive values beyond the tolerance refute the front.
  double max_dominance = 0.0;
  /// Largest, over sampled front points, of the smallest inflation factor
  /// (log) under which some grid pair weakly dominates the point.
  double max_gap = 0.0;
  double log_tolerance = 0.0;
  bool agrees = false;
};

FrontAgreement compare_front(const ParetoFront& front, const std::vector<GridPoint>& envelope,
                             double log_tolerance, std::size_t front_samples = 200);

/// Minimum over the grid of x^- A x (unconstrained spectral radius check).
Scalar grid_min_objective(const Matrix& a, const GridSpec& spec,
                          double max_points = kDefaultGridCap);

}  // namespace troprate::oracle
