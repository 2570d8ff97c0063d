#include "troprate/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "troprate/errors.hpp"

namespace troprate::oracle {

GridSpec GridSpec::for_instance(const ProblemInstance& inst, std::size_t resolution,
                                double floor_ratio) {
  const std::size_t n = inst.dim();
  if (resolution < 2) throw DomainError("grid resolution must be at least 2");
  if (!(floor_ratio > 1.0)) throw DomainError("grid floor ratio must exceed 1");
  const double span = std::log(floor_ratio);
  GridSpec spec;
  spec.resolution = resolution;
  const std::size_t unbounded = static_cast<std::size_t>(
      std::count_if(inst.h.begin(), inst.h.end(), [](Scalar s) { return s.is_top(); }));
  const bool has_lower = std::any_of(inst.g.begin(), inst.g.end(),
                                     [](Scalar s) { return !s.is_zero(); });
  if (unbounded == n && !has_lower) {
    spec.log_ranges.emplace_back(0.0, 0.0);
    for (std::size_t j = 1; j < n; ++j) spec.log_ranges.emplace_back(-span, span);
    return spec;
  }
  if (unbounded != 0) {
    throw DomainError("grid search needs every upper bound finite, or none");
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double hi = inst.h[j].log();
    const double lo = inst.g[j].is_zero() ? hi - span : inst.g[j].log();
    spec.log_ranges.emplace_back(lo, hi);
  }
  return spec;
}

double GridSpec::size() const {
  double total = 1.0;
  for (const auto& [lo, hi] : log_ranges) total *= lo == hi ? 1.0 : static_cast<double>(resolution);
  return total;
}

namespace {

/// Calls visit(x_log) for every grid point; x_log holds log x_j.
void for_each_point(const GridSpec& spec, double max_points,
                    const std::function<void(const std::vector<double>&)>& visit) {
  if (spec.resolution < 2) throw DomainError("grid resolution must be at least 2");
  if (spec.size() > max_points) {
    throw ResourceError("grid of " + std::to_string(spec.size()) + " points exceeds the cap of " +
                        std::to_string(max_points));
  }
  const std::size_t n = spec.log_ranges.size();
  std::vector<std::vector<double>> axes(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto [lo, hi] = spec.log_ranges[j];
    if (lo == hi) {
      axes[j] = {lo};
      continue;
    }
    for (std::size_t r = 0; r < spec.resolution; ++r) {
      axes[j].push_back(lo + (hi - lo) * static_cast<double>(r) /
                                 static_cast<double>(spec.resolution - 1));
    }
  }
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = axes[j][0];
  while (true) {
    visit(x);
    std::size_t j = 0;
    for (; j < n; ++j) {
      if (++idx[j] < axes[j].size()) {
        x[j] = axes[j][idx[j]];
        break;
      }
      idx[j] = 0;
      x[j] = axes[j][0];
    }
    if (j == n) return;
  }
}

/// log of max_ij a_ij x_j / x_i, evaluated directly.
double log_objective(const Matrix& a, const std::vector<double>& x_log) {
  double best = -std::numeric_limits<double>::infinity();
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) best = std::max(best, a(i, j).log() + x_log[j] - x_log[i]);
  return best;
}

}  // namespace

std::vector<GridPoint> grid_pareto(const ProblemInstance& inst, const GridSpec& spec,
                                   double max_points) {
  if (spec.log_ranges.size() != inst.dim()) {
    throw DimensionError("grid dimension does not match the instance");
  }
  // Staircase archive: alpha increasing, beta strictly decreasing.
  struct Entry {
    double beta;
    std::vector<double> x;
  };
  std::map<double, Entry> archive;
  for_each_point(spec, max_points, [&](const std::vector<double>& x) {
    const double a = log_objective(inst.a, x);
    const double b = log_objective(inst.b, x);
    auto it = archive.upper_bound(a);
    if (it != archive.begin() && std::prev(it)->second.beta <= b) return;
    auto first = archive.lower_bound(a);
    auto last = first;
    while (last != archive.end() && last->second.beta >= b) ++last;
    archive.erase(first, last);
    archive.emplace(a, Entry{b, x});
  });
  std::vector<GridPoint> out;
  out.reserve(archive.size());
  for (const auto& [a, entry] : archive) {
    std::vector<Scalar> xs;
    for (double v : entry.x) xs.push_back(Scalar::from_log(v));
    out.push_back({Scalar::from_log(a), Scalar::from_log(entry.beta), Vector(std::move(xs))});
  }
  return out;
}

Matrix enum_fkm(const Matrix& a, const Matrix& b, std::size_t k, std::size_t m) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionError("enum_fkm: A and B must be square of equal size");
  }
  const std::size_t length = k + m;
  if (length > kMaxWordLength) {
    throw ResourceError("enum_fkm: words of length " + std::to_string(length) +
                        " exceed the enumeration cap of " + std::to_string(kMaxWordLength));
  }
  const std::size_t n = a.rows();
  Matrix sum(n, n);
  // Bit i of `word` set means letter i is B.
  for (unsigned word = 0; word < (1u << length); ++word) {
    if (static_cast<std::size_t>(std::popcount(word)) != k) continue;
    Matrix product = Matrix::identity(n);
    for (std::size_t i = 0; i < length; ++i) product = product * (((word >> i) & 1u) ? b : a);
    sum = sum + product;
  }
  return sum;
}

Scalar grid_min_objective(const Matrix& a, const GridSpec& spec, double max_points) {
  if (!a.is_square() || spec.log_ranges.size() != a.rows()) {
    throw DimensionError("grid dimension does not match the matrix");
  }
  double best = std::numeric_limits<double>::infinity();
  for_each_point(spec, max_points, [&](const std::vector<double>& x) {
    best = std::min(best, log_objective(a, x));
  });
  return Scalar::from_log(best);
}

FrontAgreement compare_front(const ParetoFront& front, const std::vector<GridPoint>& envelope,
                             double log_tolerance, std::size_t front_samples) {
  FrontAgreement out;
  out.non_dominated = envelope.size();
  out.log_tolerance = log_tolerance;
  out.max_dominance = -std::numeric_limits<double>::infinity();
  out.max_gap = envelope.empty() ? std::numeric_limits<double>::infinity() : 0.0;
  for (const auto& [alpha, beta] : sample_front(front, front_samples)) {
    double gap = std::numeric_limits<double>::infinity();
    for (const GridPoint& p : envelope) {
      const double da = alpha.log() - p.alpha.log();
      const double db = beta.log() - p.beta.log();
      out.max_dominance = std::max(out.max_dominance, std::min(da, db));
      gap = std::min(gap, std::max(0.0, std::max(-da, -db)));
    }
    out.max_gap = std::max(out.max_gap, gap);
  }
  out.agrees = out.max_dominance <= log_tolerance && out.max_gap <= log_tolerance;
  return out;
}

}  // namespace troprate::oracle
