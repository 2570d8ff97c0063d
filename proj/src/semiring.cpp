#include "troprate/semiring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

#include "troprate/errors.hpp"

namespace troprate {

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) {
    throw DomainError("rational with zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross-multiplication keeps the order.
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::from_value(double value) {
  if (std::isnan(value) || value < 0.0) {
    throw DomainError("max-times scalars must be non-negative, got " +
                      std::to_string(value));
  }
  return from_log(std::log(value));
}

double Scalar::value() const noexcept { return std::exp(log_); }

Scalar add(Scalar a, Scalar b) noexcept { return a < b ? b : a; }

Scalar mul(Scalar a, Scalar b) noexcept {
  if (a.is_zero() || b.is_zero()) return Scalar::zero();
  return Scalar::from_log(a.log() + b.log());
}

Scalar inv(Scalar a) {
  if (a.is_zero()) throw DomainError("inverse of the semifield zero");
  return Scalar::from_log(-a.log());
}

Scalar div(Scalar a, Scalar b) { return mul(a, inv(b)); }

Scalar pow(Scalar a, Rational q) {
  if (q.num() == 0) {
    if (a.is_zero()) throw DomainError("zero raised to the power 0");
    return Scalar::one();
  }
  if (a.is_zero()) {
    if (q.num() < 0) throw DomainError("zero raised to a negative power");
    return Scalar::zero();
  }
  return Scalar::from_log(a.log() * static_cast<double>(q.num()) /
                          static_cast<double>(q.den()));
}

bool leq(Scalar a, Scalar b, double tol) noexcept {
  if (a.is_zero() || a == b) return true;
  if (b.is_zero() || a.is_top()) return false;
  if (b.is_top()) return true;
  return a.log() <= b.log() + tol;
}

bool approx_equal(Scalar a, Scalar b, double tol) noexcept {
  if (a == b) return true;
  if (!a.is_finite() || !b.is_finite()) return false;
  return std::abs(a.log() - b.log()) <= tol;
}

std::ostream& operator<<(std::ostream& os, Scalar s) {
  if (s.is_zero()) return os << "0";
  if (s.is_top()) return os << "inf";
  return os << s.value();
}

// ---------------------------------------------------------------------------
// Matrix / vectors

Matrix::Matrix(std::size_t rows, std::size_t cols, Scalar fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one();
  return m;
}

Matrix Matrix::from_values(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> copy;
  for (const auto& r : rows) copy.emplace_back(r);
  return from_values(copy);
}

Matrix Matrix::from_values(const std::vector<std::vector<double>>& rows) {
  std::vector<std::vector<Scalar>> scalars;
  scalars.reserve(rows.size());
  for (const auto& r : rows) {
    auto& out = scalars.emplace_back();
    out.reserve(r.size());
    for (double v : r) out.push_back(Scalar::from_value(v));
  }
  return from_rows(scalars);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = n_rows == 0 ? 0 : rows.front().size();
  Matrix m(n_rows, n_cols);
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (rows[i].size() != n_cols) {
      throw DimensionError("ragged matrix: row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(n_cols));
    }
    for (std::size_t j = 0; j < n_cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Scalar s) { return s.is_zero(); });
}

bool Matrix::is_column_regular() const noexcept {
  for (std::size_t j = 0; j < cols_; ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < rows_ && !nonzero; ++i) nonzero = !(*this)(i, j).is_zero();
    if (!nonzero) return false;
  }
  return true;
}

Vector Vector::from_values(std::initializer_list<double> values) {
  return from_values(std::vector<double>(values));
}

Vector Vector::from_values(const std::vector<double>& values) {
  std::vector<Scalar> s;
  s.reserve(values.size());
  for (double v : values) s.push_back(Scalar::from_value(v));
  return Vector(std::move(s));
}

bool Vector::is_regular() const noexcept {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](Scalar s) { return s.is_zero(); });
}

bool Vector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Scalar s) { return s.is_zero(); });
}

std::vector<double> Vector::values() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (Scalar s : entries_) out.push_back(s.value());
  return out;
}

namespace {

std::string shape(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) {
    throw DimensionError(std::string(what) + " requires a square matrix, got " + shape(a));
  }
}

}  // namespace

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix sum of " + shape(a) + " and " + shape(b));
  }
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = add(a(i, j), b(i, j));
  return c;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product of " + shape(a) + " and " + shape(b));
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += mul(aik, b(k, j));
    }
  }
  return c;
}

Matrix scalar_mul(Scalar c, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = mul(c, a(i, j));
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) { return mat_add(a, b); }
Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
Matrix operator*(Scalar c, const Matrix& a) { return scalar_mul(c, a); }

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) {
    throw DimensionError("matrix-vector product of " + shape(a) + " and vector of size " +
                         std::to_string(x.size()));
  }
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += mul(a(i, j), x[j]);
  return y;
}

Vector operator+(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("vector sum of sizes " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()));
  }
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = add(x[i], y[i]);
  return z;
}

Vector operator*(Scalar c, const Vector& x) {
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = mul(c, x[i]);
  return z;
}

RowVector operator*(const RowVector& y, const Matrix& a) {
  if (y.size() != a.rows()) {
    throw DimensionError("row-vector product of size " + std::to_string(y.size()) +
                         " and " + shape(a));
  }
  RowVector z(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (y[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) z[j] += mul(y[i], a(i, j));
  }
  return z;
}

Scalar operator*(const RowVector& y, const Vector& x) {
  if (y.size() != x.size()) {
    throw DimensionError("inner product of sizes " + std::to_string(y.size()) + " and " +
                         std::to_string(x.size()));
  }
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) s += mul(y[i], x[i]);
  return s;
}

Matrix power(const Matrix& a, std::size_t k) {
  require_square(a, "matrix power");
  Matrix result = Matrix::identity(a.rows());
  for (std::size_t p = 0; p < k; ++p) result = result * a;
  return result;
}

Scalar trace(const Matrix& a) {
  require_square(a, "trace");
  Scalar t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

Scalar trace_fn(const Matrix& a) {
  require_square(a, "trace function");
  Scalar t;
  Matrix p = a;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    t += trace(p);
    if (k < a.rows()) p = p * a;
  }
  return t;
}

Matrix kleene_star(const Matrix& a, double tol) {
  require_square(a, "Kleene star");
  const Scalar tr = trace_fn(a);
  if (!leq(tr, Scalar::one(), tol)) {
    std::ostringstream msg;
    msg << "Kleene star undefined: Tr(A) = " << tr << " > 1";
    throw InfeasibleError(Infeasibility::TraceExceedsOne, msg.str());
  }
  const std::size_t n = a.rows();
  Matrix star = Matrix::identity(n);
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    p = p * a;
    star = star + p;
  }
  return star;
}

Scalar spectral_radius(const Matrix& a) {
  require_square(a, "spectral radius");
  Scalar lambda;
  Matrix p = a;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    lambda += pow(trace(p), Rational(1, static_cast<std::int64_t>(k)));
    if (k < a.rows()) p = p * a;
  }
  return lambda;
}

namespace {

Scalar conjugate_entry(Scalar s) {
  return (s.is_zero() || s.is_top()) ? Scalar::zero() : inv(s);
}

}  // namespace

RowVector conjugate(const Vector& x) {
  if (x.is_zero()) throw DomainError("conjugate of the zero vector");
  RowVector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = conjugate_entry(x[i]);
  return y;
}

Vector conjugate(const RowVector& y) {
  bool all_zero = true;
  for (Scalar s : y.entries()) all_zero = all_zero && s.is_zero();
  if (all_zero) throw DomainError("conjugate of the zero vector");
  Vector x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = conjugate_entry(y[i]);
  return x;
}

bool leq(const Vector& x, const Vector& y, double tol) {
  if (x.size() != y.size()) throw DimensionError("comparison of vectors of different size");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!leq(x[i], y[i], tol)) return false;
  return true;
}

bool approx_equal(const Vector& x, const Vector& y, double tol) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!approx_equal(x[i], y[i], tol)) return false;
  return true;
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (!approx_equal(a.entries()[i], b.entries()[i], tol)) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const Matrix& a) {
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
  }
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const Vector& x) {
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  return os << ')';
}

}  // namespace troprate
