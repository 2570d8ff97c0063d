#include "troprate/bicriteria.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "troprate/errors.hpp"

namespace troprate {

void ProblemInstance::validate(double tol) const {
  const std::size_t n = a.rows();
  if (n == 0) throw DimensionError("problem instance: empty matrices");
  if (!a.is_square() || !b.is_square() || b.rows() != n) {
    throw DimensionError("problem instance: A and B must be square of equal size");
  }
  if (g.size() != n || h.size() != n) {
    throw DimensionError("problem instance: bounds must have " + std::to_string(n) +
                         " components");
  }
  if (a.is_zero()) throw DomainError("problem instance: A is the zero matrix");
  if (b.is_zero()) throw DomainError("problem instance: B is the zero matrix");
  if (!h.is_regular()) throw DomainError("problem instance: upper bound h is not regular");
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq(g[i], h[i], tol)) {
      std::ostringstream msg;
      msg << "problem instance: g[" << i << "] = " << g[i] << " exceeds h[" << i
          << "] = " << h[i];
      throw DomainError(msg.str());
    }
  }
}

ProblemInstance ProblemInstance::unconstrained(Matrix a, Matrix b) {
  const std::size_t n = a.rows();
  return ProblemInstance{std::move(a), std::move(b), Vector(n, Scalar::zero()),
                         Vector(n, Scalar::top())};
}

// ---------------------------------------------------------------------------
// F_km

FkmTable::FkmTable(const Matrix& a, const Matrix& b, std::size_t max_order)
    : max_order_(max_order) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionError("F_km: A and B must be square of equal size");
  }
  const std::size_t n = a.rows();
  table_.resize(max_order + 1);
  for (std::size_t k = 0; k <= max_order; ++k) {
    table_[k].reserve(max_order + 1 - k);
    for (std::size_t m = 0; k + m <= max_order; ++m) {
      if (k == 0 && m == 0) {
        table_[k].push_back(Matrix::identity(n));
        continue;
      }
      // Words with first letter A, then words with first letter B.
      Matrix w(n, n);
      if (m > 0) w = w + a * table_[k][m - 1];
      if (k > 0) w = w + b * table_[k - 1][m];
      table_[k].push_back(std::move(w));
    }
  }
}

const Matrix& FkmTable::operator()(std::size_t k, std::size_t m) const {
  if (k + m > max_order_) {
    throw std::out_of_range("F_km table holds k + m <= " + std::to_string(max_order_));
  }
  return table_[k][m];
}

Matrix compute_fkm(const Matrix& a, const Matrix& b, std::size_t k, std::size_t m) {
  if (k == 0 || m == 0) throw DomainError("F_km is defined for k >= 1 and m >= 1");
  return FkmTable(a, b, k + m)(k, m);
}

// ---------------------------------------------------------------------------
// Front scalars and functions

namespace {

Rational unit_fraction(std::size_t k) { return Rational(1, static_cast<std::int64_t>(k)); }

/// (+)_{k=1..n-1} (h^- M^k g)^{1/k}
Scalar boundary_radius(const Matrix& m, const RowVector& h_conj, const Vector& g) {
  Scalar r;
  Vector mk_g = g;
  for (std::size_t k = 1; k < m.rows(); ++k) {
    mk_g = m * mk_g;
    r += pow(h_conj * mk_g, unit_fraction(k));
  }
  return r;
}

void push_terms(FrontFunctions& out, Scalar base, std::size_t k, std::size_t m,
                TermSource source) {
  if (base.is_zero()) return;
  const auto ki = static_cast<std::int64_t>(k);
  const auto mi = static_cast<std::int64_t>(m);
  out.g_terms.push_back(
      FrontTerm{pow(base, Rational(1, ki)), Rational(-mi, ki), k, m, source, base});
  out.h_terms.push_back(
      FrontTerm{pow(base, Rational(1, mi)), Rational(-ki, mi), k, m, source, base});
}

}  // namespace

FrontScalars front_scalars(const ProblemInstance& inst) {
  const RowVector h_conj = conjugate(inst.h);
  return FrontScalars{spectral_radius(inst.a), spectral_radius(inst.b),
                      boundary_radius(inst.a, h_conj, inst.g),
                      boundary_radius(inst.b, h_conj, inst.g)};
}

FrontFunctions front_functions(const ProblemInstance& inst) {
  const std::size_t n = inst.dim();
  FrontFunctions out;
  if (n < 2) return out;
  const FkmTable fkm(inst.a, inst.b, n);
  const RowVector h_conj = conjugate(inst.h);
  for (std::size_t k = 1; k + 1 <= n; ++k)
    for (std::size_t m = 1; k + m <= n; ++m)
      push_terms(out, trace(fkm(k, m)), k, m, TermSource::Trace);
  for (std::size_t k = 1; k + 2 <= n; ++k)
    for (std::size_t m = 1; k + m + 1 <= n; ++m)
      push_terms(out, h_conj * (fkm(k, m) * inst.g), k, m, TermSource::Boundary);
  return out;
}

Scalar eval_front_fn(const std::vector<FrontTerm>& terms, Scalar s) {
  if (s.is_zero()) throw DomainError("front functions are defined for s > 0 only");
  Scalar result;
  for (const FrontTerm& t : terms) result += mul(t.coefficient, pow(s, t.exponent));
  return result;
}

std::vector<FrontTerm> simplify(const std::vector<FrontTerm>& terms) {
  std::map<Rational, FrontTerm> by_exponent;
  for (const FrontTerm& t : terms) {
    auto [it, inserted] = by_exponent.try_emplace(t.exponent, t);
    if (!inserted && it->second.coefficient < t.coefficient) it->second = t;
  }
  std::vector<FrontTerm> out;
  out.reserve(by_exponent.size());
  for (auto& [exponent, term] : by_exponent) out.push_back(term);
  return out;
}

// ---------------------------------------------------------------------------
// Front

Scalar ParetoFront::beta_at(Scalar alpha) const {
  return scalars.beta_min() + eval_front_fn(functions.g_terms, alpha);
}

bool ParetoFront::covers(Scalar alpha, double tol) const {
  return leq(alpha_lo, alpha, tol) && leq(alpha, alpha_hi, tol);
}

ParetoFront compute_front(const ProblemInstance& inst, double tol) {
  inst.validate(tol);
  ParetoFront front;
  front.scalars = front_scalars(inst);
  front.functions = front_functions(inst);
  const Scalar alpha_min = front.scalars.alpha_min();
  const Scalar beta_min = front.scalars.beta_min();
  if (alpha_min.is_zero() || beta_min.is_zero()) {
    throw DomainError(
        "Pareto front is not attained: lambda (+) gamma or mu (+) delta is zero");
  }
  const Scalar h_at_beta = eval_front_fn(front.functions.h_terms, beta_min);
  front.alpha_lo = alpha_min;
  if (leq(h_at_beta, alpha_min, tol)) {
    front.kind = FrontKind::Point;
    front.alpha_hi = alpha_min;
  } else {
    front.kind = FrontKind::Segment;
    front.alpha_hi = h_at_beta;
  }
  return front;
}

ParametricBox solutions_at(const ProblemInstance& inst, Scalar alpha, Scalar beta,
                           double tol) {
  if (alpha.is_zero() || beta.is_zero()) {
    throw DomainError("solutions_at: alpha and beta must be positive");
  }
  const Matrix combined = inv(alpha) * inst.a + inv(beta) * inst.b;
  return solve_double(combined, inst.g, inst.h, tol);
}

std::vector<std::pair<Scalar, Scalar>> sample_front(const ParetoFront& front,
                                                    std::size_t count) {
  if (front.kind == FrontKind::Point || count <= 1) {
    return {{front.alpha_lo, front.beta_at(front.alpha_lo)}};
  }
  std::vector<std::pair<Scalar, Scalar>> out;
  out.reserve(count);
  const double lo = front.alpha_lo.log();
  const double hi = front.alpha_hi.log();
  for (std::size_t i = 0; i < count; ++i) {
    // Endpoints are taken verbatim so that they are reproduced exactly.
    Scalar alpha = i == 0           ? front.alpha_lo
                   : i + 1 == count ? front.alpha_hi
                                    : Scalar::from_log(lo + (hi - lo) * static_cast<double>(i) /
                                                                static_cast<double>(count - 1));
    out.emplace_back(alpha, front.beta_at(alpha));
  }
  return out;
}

std::pair<Scalar, Scalar> objectives(const ProblemInstance& inst, const Vector& x) {
  if (!x.is_regular()) throw DomainError("objectives: x must be regular");
  const RowVector xc = conjugate(x);
  return {xc * (inst.a * x), xc * (inst.b * x)};
}

namespace {

Vector normalized(const Vector& x) {
  Scalar peak;
  for (Scalar s : x) peak += s;
  return inv(peak) * x;
}

}  // namespace

std::vector<Vector> representatives(const ParametricBox& box, double tol) {
  const std::size_t n = box.dim();
  std::vector<Vector> candidates;
  candidates.push_back(box.member(box.lower()));
  if (box.bounded_above()) candidates.push_back(box.member(box.upper()));
  for (std::size_t j = 0; j < n; ++j) {
    Vector u = box.lower();
    const Scalar up = box.upper()[j];
    u[j] = up.is_top() ? add(u[j], Scalar::one()) : up;
    candidates.push_back(box.member(u));
  }
  std::vector<Vector> out;
  std::vector<Vector> seen;
  for (Vector& x : candidates) {
    if (!x.is_regular()) continue;
    bool finite = std::all_of(x.begin(), x.end(), [](Scalar s) { return s.is_finite(); });
    if (!finite) continue;
    Vector key = normalized(x);
    const bool duplicate = std::any_of(seen.begin(), seen.end(), [&](const Vector& s) {
      return approx_equal(s, key, tol);
    });
    if (duplicate) continue;
    seen.push_back(std::move(key));
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace troprate
