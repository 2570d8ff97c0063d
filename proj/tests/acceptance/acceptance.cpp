// Acceptance checks: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support.hpp"
#include "troprate/errors.hpp"
#include "troprate/oracle.hpp"
#include "troprate/ratings.hpp"

using namespace troprate;
using troprate::testing::q;

namespace {

constexpr double kTol = 1e-9;

/// Collects failed expectations of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += !ok;
  }
  void value(Scalar got, double want, const std::string& what) {
    std::ostringstream msg;
    msg << what << " = " << got << ", expected " << want;
    expect(approx_equal(got, Scalar::from_value(want), kTol), msg.str());
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << count_ - failed_ << "/" << count_ << " checks";
    for (const auto& f : failures_) out << "; " << f;
    return out.str();
  }

 private:
  std::size_t count_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

const FrontTerm* find_term(const FrontFunctions& f, std::size_t k, std::size_t m,
                           TermSource source) {
  for (const FrontTerm& t : f.g_terms)
    if (t.k == k && t.m == m && t.source == source) return &t;
  return nullptr;
}

Matrix with_radius(const Matrix& a, double radius) {
  const Scalar r = spectral_radius(a);
  return r.is_zero() ? a : (Scalar::from_value(radius) * inv(r)) * a;
}

// ---------------------------------------------------------------------------

std::string ac1(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const ProblemInstance inst = troprate::testing::four_alternatives();
  const FrontScalars s = front_scalars(inst);
  c.value(s.lambda, 2, "lambda");
  c.value(s.mu, 2, "mu");
  c.value(s.gamma, 2, "gamma");
  c.value(s.delta, 3, "delta");
  const FrontFunctions f = front_functions(inst);
  const struct {
    std::size_t k, m;
    TermSource source;
    double value;
  } bases[] = {{1, 1, TermSource::Trace, 1.5},   {1, 2, TermSource::Trace, 8},
               {1, 3, TermSource::Trace, 24},    {2, 1, TermSource::Trace, 8},
               {2, 2, TermSource::Trace, 24},    {3, 1, TermSource::Trace, 24},
               {1, 1, TermSource::Boundary, 3},  {1, 2, TermSource::Boundary, 8},
               {2, 1, TermSource::Boundary, 8}};
  for (const auto& b : bases) {
    const FrontTerm* t = find_term(f, b.k, b.m, b.source);
    const std::string name = std::string(b.source == TermSource::Trace ? "tr F" : "h-F g ") +
                             std::to_string(b.k) + std::to_string(b.m);
    c.expect(t != nullptr, name + " missing");
    if (t) c.value(t->base, b.value, name);
  }
  c.value(eval_front_fn(f.h_terms, Scalar::from_value(3)), 2, "H(3)");

  const auto a = validate_reciprocal(inst.a);
  const auto b = validate_reciprocal(inst.b);
  const RatingResult result = rate(a, b, inst.g, inst.h);
  c.expect(result.front.kind == FrontKind::Point, "front is not a point");
  c.value(result.front.alpha_lo, 2, "alpha");
  c.value(result.front.beta_hi(), 3, "beta");
  c.expect(result.families.size() == 1 && result.families[0].representatives.size() == 1,
           "rating is not unique");
  if (!result.families.empty() && !result.families[0].representatives.empty()) {
    const Vector& x = result.families[0].representatives[0].normalized;
    const double want[] = {1, 1.0 / 6, 0.5, 0.25};
    for (std::size_t i = 0; i < 4; ++i) c.value(x[i], want[i], "x" + std::to_string(i + 1));
  }
  const double ms = elapsed_ms(start);
  c.expect(ms < 1000, "runtime " + std::to_string(ms) + " ms");
  return "four-alternative example: Point(2, 3), rating (1, 1/6, 1/2, 1/4), " +
         std::to_string(ms) + " ms";
}

std::string ac2(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const ProblemInstance inst = troprate::testing::two_alternatives();
  const FrontScalars s = front_scalars(inst);
  c.value(s.lambda, 1, "lambda");
  c.value(s.mu, 1, "mu");
  c.value(s.gamma, 4.0 / 3, "gamma");
  c.value(s.delta, 2, "delta");
  c.value(trace(inst.a * inst.b), 6, "tr(AB)");
  const RatingResult result =
      rate(validate_reciprocal(inst.a), validate_reciprocal(inst.b), inst.g, inst.h);
  const ParetoFront& front = result.front;
  c.expect(front.kind == FrontKind::Segment, "front is not a segment");
  c.value(front.alpha_lo, 4.0 / 3, "alpha_lo");
  c.value(front.alpha_hi, 3, "alpha_hi");
  for (const auto& [alpha, beta] : sample_front(front, 25)) {
    c.expect(approx_equal(beta, div(Scalar::from_value(6), alpha), kTol), "beta != 6/alpha");
  }
  const double ratios[] = {2.0 / 3, 1.5};
  c.expect(result.families.size() == 2, "expected two limiting families");
  for (std::size_t i = 0; i < result.families.size() && i < 2; ++i) {
    for (const Representative& r : result.families[i].representatives) {
      c.value(div(r.x[1], r.x[0]), ratios[i], "x2/x1 at endpoint " + std::to_string(i));
    }
  }
  const double ms = elapsed_ms(start);
  c.expect(ms < 100, "runtime " + std::to_string(ms) + " ms");
  return "two-alternative example: segment [4/3, 3], beta = 6/alpha, limits (1, 2/3), (1, 3/2), " +
         std::to_string(ms) + " ms";
}

std::string ac3(Check& c) {
  std::mt19937 rng(301);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int points = 0;
  for (int t = 0; t < 100; ++t) {
    ProblemInstance inst{troprate::testing::random_matrix(rng, 2, 2),
                         troprate::testing::random_matrix(rng, 2, 2), Vector(2), Vector(2)};
    for (std::size_t i = 0; i < 2; ++i) {
      inst.h[i] = Scalar::from_log(std::log(8.0) * (2 * unit(rng) - 1));
      inst.g[i] = unit(rng) < 0.25 ? Scalar::zero()
                                   : inst.h[i] * Scalar::from_log(-std::log(8.0) * unit(rng));
    }
    const Matrix& a = inst.a;
    const Matrix& b = inst.b;
    const Scalar half_cycle_a = pow(a(0, 1) * a(1, 0), Rational(1, 2));
    const Scalar half_cycle_b = pow(b(0, 1) * b(1, 0), Rational(1, 2));
    c.expect(approx_equal(spectral_radius(a), a(0, 0) + a(1, 1) + half_cycle_a, kTol),
             "spectral radius of A");
    c.expect(approx_equal(spectral_radius(b), b(0, 0) + b(1, 1) + half_cycle_b, kTol),
             "spectral radius of B");
    const ParetoFront front = compute_front(inst);
    const Scalar tr_ab = trace(a * b);
    for (int k = 0; k < 5; ++k) {
      const Scalar s = Scalar::from_log(3 * (2 * unit(rng) - 1));
      c.expect(approx_equal(eval_front_fn(front.functions.g_terms, s), div(tr_ab, s), kTol),
               "G(s) != tr(AB)/s");
    }
    const bool point = leq(tr_ab, front.scalars.alpha_min() * front.scalars.beta_min(), kTol);
    points += point;
    c.expect(point == (front.kind == FrontKind::Point), "point/segment threshold");
  }
  return "2x2 closed forms on 100 random instances (" + std::to_string(points) + " points, " +
         std::to_string(100 - points) + " segments)";
}

std::string ac4(Check& c) {
  std::mt19937 rng(401);
  std::uniform_real_distribution<double> shrink(std::log(1.0 / 8), 0.0);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 4;
    const Matrix a = troprate::testing::random_matrix(rng, n, n);
    const Matrix b = troprate::testing::random_matrix(rng, n, n);
    const FkmTable fkm(a, b, n);
    Scalar mixed;
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t m = 1; k + m <= n; ++m) mixed += trace(fkm(k, m));
    c.expect(approx_equal(trace_fn(a + b), trace_fn(a) + mixed + trace_fn(b), kTol),
             "trace identity, n = " + std::to_string(n));
  }
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 4;
    Matrix a = troprate::testing::random_matrix(rng, n, n);
    Matrix b = troprate::testing::random_matrix(rng, n, n);
    // Rescale so that Tr(A + B) <= 1.
    const Scalar factor = inv(spectral_radius(a + b)) * Scalar::from_log(shrink(rng));
    a = factor * a;
    b = factor * b;
    c.expect(leq(trace_fn(a + b), Scalar::one(), kTol), "rescaling failed");
    const FkmTable fkm(a, b, n);
    Matrix mixed(n, n);
    for (std::size_t k = 1; k + 1 < n; ++k)
      for (std::size_t m = 1; k + m + 1 <= n; ++m) mixed = mixed + fkm(k, m);
    c.expect(approx_equal(kleene_star(a + b), kleene_star(a) + mixed + kleene_star(b), kTol),
             "star identity, n = " + std::to_string(n));
  }
  return "binomial trace and star identities on 50 + 50 random instances, n <= 4";
}

std::string ac5(Check& c) {
  std::mt19937 rng(501);
  std::uniform_real_distribution<double> logs(-4.0, 4.0);
  int instances = 0;
  double worst = 0.0;
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + t % 3;
    ProblemInstance inst{troprate::testing::random_reciprocal(rng, n),
                         troprate::testing::random_reciprocal(rng, n),
                         troprate::testing::random_vector(rng, n, 2.0), Vector(n)};
    for (std::size_t i = 0; i < n; ++i) inst.h[i] = inst.g[i] * Scalar::from_value(4);
    const FrontFunctions f = front_functions(inst);
    if (f.g_terms.empty()) continue;
    ++instances;
    for (int k = 0; k < 100; ++k) {
      const Scalar s = Scalar::from_log(logs(rng));
      const Scalar g = eval_front_fn(f.g_terms, s);
      if (g.is_zero()) continue;
      const Scalar back = eval_front_fn(f.h_terms, g);
      worst = std::max(worst, std::abs(back.log() - s.log()));
      c.expect(approx_equal(back, s, 1e-7), "H(G(s)) != s");
    }
  }
  c.expect(instances >= 20, "too few instances");
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "H(G(s)) = s on %d instances x 100 points, worst log error %.2e", instances, worst);
  return buf;
}

std::string ac6(Check& c) {
  std::mt19937 rng(601);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Maximality of the residuated solution.
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 3;
    const Matrix a = troprate::testing::random_matrix(rng, n, n, 8.0, 0.2) + Matrix::identity(n);
    const Vector d = troprate::testing::random_vector(rng, n);
    const Vector top = solve_upper(a, d);
    c.expect(leq(a * top, d, kTol), "A x_max > d");
    for (int s = 0; s < 100; ++s) {
      Vector y = troprate::testing::random_vector(rng, n, 64.0);
      y = inv(conjugate(d) * (a * y)) * y;
      c.expect(leq(y, top, kTol), "feasible y above x_max");
    }
  }
  // Every solution of A x + c <= x is its own parameter: A* x = x.
  int solutions = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 3;
    const Matrix a = with_radius(troprate::testing::random_matrix(rng, n, n, 8.0, 0.2), 0.25);
    const Vector cvec = troprate::testing::random_vector(rng, n, 2.0);
    const ParametricBox box = solve_recursive(a, cvec);
    for (int s = 0; s < 100; ++s) {
      const Vector x = troprate::testing::random_vector(rng, n, 16.0);
      if (!leq(a * x + cvec, x, 0.0)) continue;
      ++solutions;
      c.expect(approx_equal(box.star() * x, x, kTol), "A* x != x");
    }
  }
  c.expect(solutions >= 100, "too few sampled solutions");
  // Feasibility of the double inequality against a grid search.
  int checked = 0, feasible = 0;
  const std::size_t resolution = 40;
  for (int t = 0; t < 200 && checked < 100; ++t) {
    const std::size_t n = 2 + t % 2;
    const Matrix a = with_radius(troprate::testing::random_matrix(rng, n, n), 0.5);
    const Vector cvec = troprate::testing::random_vector(rng, n, 4.0);
    const Vector d = troprate::testing::random_vector(rng, n, 4.0);
    std::vector<double> lo(n), hi(n);
    double step = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      lo[j] = cvec[j].log();
      hi[j] = std::max(lo[j], d[j].log()) + 1.0;
      step = std::max(step, (hi[j] - lo[j]) / (resolution - 1));
    }
    const Scalar condition = conjugate(d) * (kleene_star(a) * cvec);
    if (std::abs(condition.log()) < (n + 2) * step) continue;
    ++checked;
    bool grid = false;
    std::vector<std::size_t> idx(n, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t j) {
      if (grid) return;
      if (j == n) {
        Vector x(n);
        for (std::size_t i = 0; i < n; ++i)
          x[i] = Scalar::from_log(lo[i] + (hi[i] - lo[i]) * idx[i] / (resolution - 1));
        grid = leq(a * x + cvec, x, step * 1.0001) && leq(x, d, step * 1.0001);
        return;
      }
      for (idx[j] = 0; idx[j] < resolution; ++idx[j]) walk(j + 1);
    };
    walk(0);
    bool solver = true;
    try {
      solve_double(a, cvec, d);
    } catch (const InfeasibleError& e) {
      c.expect(e.kind() == Infeasibility::EmptyBox, "wrong infeasibility kind");
      solver = false;
    }
    feasible += solver;
    c.expect(solver == grid, "feasibility disagrees with the grid");
  }
  c.expect(checked == 100, "too few decisive instances");
  return "residuation maximality, star closure (" + std::to_string(solutions) +
         " solutions), double-inequality feasibility (" + std::to_string(feasible) + "/" +
         std::to_string(checked) + " feasible) on 100 instances each";
}

std::string ac7(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const ProblemInstance inst = troprate::testing::two_alternatives();
  const auto spec = oracle::GridSpec::for_instance(inst, 400);
  const auto envelope = oracle::grid_pareto(inst, spec);
  const double tol = std::log(1.02);
  auto agreement = oracle::compare_front(compute_front(inst), envelope, tol);
  c.expect(agreement.max_dominance <= tol, "grid dominates the front");
  c.expect(agreement.max_gap <= tol, "front not approached by the grid");
  const double ms = elapsed_ms(start);
  c.expect(ms < 10000, "runtime " + std::to_string(ms) + " ms");
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "grid 400x400 vs analytic front: %zu non-dominated, gap %.2e, dominance %.2e "
                "(tol %.2e), %.0f ms",
                envelope.size(), agreement.max_gap, agreement.max_dominance, tol, ms);
  return buf;
}

std::string ac8(Check& c) {
  std::mt19937 rng(801);
  int pairs = 0;
  for (int t = 0; t < 20; ++t) {
    const Matrix a = troprate::testing::random_matrix(rng, 3, 3);
    const Matrix b = troprate::testing::random_matrix(rng, 3, 3);
    const FkmTable table(a, b, 5);
    for (std::size_t k = 0; k <= 5; ++k) {
      for (std::size_t m = 0; k + m <= 5; ++m) {
        ++pairs;
        c.expect(approx_equal(table(k, m), oracle::enum_fkm(a, b, k, m), kTol),
                 "F_" + std::to_string(k) + std::to_string(m));
      }
    }
  }
  return "F_km recurrence equals word enumeration, k + m <= 5, 20 random 3x3 instances (" +
         std::to_string(pairs) + " matrices)";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<std::string(Check&)>> criteria[] = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},
      {"AC5", ac5}, {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}};
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    Check check;
    std::string detail;
    try {
      detail = run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    failed += !check.ok();
    std::printf("%s %s  %s [%s]\n", id, check.ok() ? "PASS" : "FAIL", detail.c_str(),
                check.summary().c_str());
  }
  return failed == 0 ? 0 : 1;
}
