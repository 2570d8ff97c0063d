#pragma once

// Max-times semifield R_max = (R+, max, *, 0, 1) and its matrix algebra.
//
// Every scalar is stored as the natural logarithm of its max-times value, so
// that max-times arithmetic becomes max-plus arithmetic on doubles:
//   a (+) b  ->  max(log a, log b)
//   a (x) b  ->  log a + log b
//   a ^ q    ->  q * log a
// The semifield zero is -inf. The extended element "top" (+inf) is used only
// as an explicit sentinel for unbounded upper limits; zero absorbs it under
// multiplication.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace troprate {

/// Absolute tolerance on log-domain values used by all tolerant comparisons.
inline constexpr double kDefaultTolerance = 1e-9;

/// Exact rational number p/q with q > 0, kept in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

class Scalar {
 public:
  /// Default-constructed scalar is the semifield zero.
  constexpr Scalar() = default;

  static constexpr Scalar zero() { return Scalar{}; }
  static constexpr Scalar one() { return from_log(0.0); }
  static constexpr Scalar top() {
    return from_log(std::numeric_limits<double>::infinity());
  }
  static constexpr Scalar from_log(double log_value) {
    Scalar s;
    s.log_ = log_value;
    return s;
  }
  /// `value` is an ordinary non-negative real; 0 maps to zero, +inf to top.
  static Scalar from_value(double value);

  constexpr double log() const noexcept { return log_; }
  double value() const noexcept;

  constexpr bool is_zero() const noexcept {
    return log_ == -std::numeric_limits<double>::infinity();
  }
  constexpr bool is_top() const noexcept {
    return log_ == std::numeric_limits<double>::infinity();
  }
  constexpr bool is_finite() const noexcept { return !is_zero() && !is_top(); }

  // Exact order on the underlying log values.
  friend constexpr bool operator==(Scalar a, Scalar b) { return a.log_ == b.log_; }
  friend constexpr auto operator<=>(Scalar a, Scalar b) { return a.log_ <=> b.log_; }

 private:
  double log_ = -std::numeric_limits<double>::infinity();
};

/// a (+) b = max(a, b).
Scalar add(Scalar a, Scalar b) noexcept;
/// a (x) b; zero is absorbing, including against top.
Scalar mul(Scalar a, Scalar b) noexcept;
/// Multiplicative inverse. Throws DomainError for zero.
Scalar inv(Scalar a);
/// a / b for b != zero.
Scalar div(Scalar a, Scalar b);
/// a^q. Throws DomainError for zero raised to q <= 0.
Scalar pow(Scalar a, Rational q);

inline Scalar operator+(Scalar a, Scalar b) noexcept { return add(a, b); }
inline Scalar operator*(Scalar a, Scalar b) noexcept { return mul(a, b); }
inline Scalar& operator+=(Scalar& a, Scalar b) noexcept { return a = add(a, b); }
inline Scalar& operator*=(Scalar& a, Scalar b) noexcept { return a = mul(a, b); }

/// a <= b up to `tol` in log domain. zero <= everything; top <= top only.
bool leq(Scalar a, Scalar b, double tol = kDefaultTolerance) noexcept;
bool approx_equal(Scalar a, Scalar b, double tol = kDefaultTolerance) noexcept;

std::ostream& operator<<(std::ostream& os, Scalar s);

class Vector;
class RowVector;

/// Dense row-major matrix over the semifield.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Scalar fill = Scalar::zero());

  static Matrix identity(std::size_t n);
  /// Builds from ordinary (pre-log) values given row by row.
  static Matrix from_values(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix from_values(const std::vector<std::vector<double>>& rows);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Scalar> entries() const noexcept { return entries_; }

  Vector column(std::size_t j) const;
  bool is_zero() const noexcept;
  /// No column consists of zeros only.
  bool is_column_regular() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Column vector.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim, Scalar fill = Scalar::zero()) : entries_(dim, fill) {}
  explicit Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}

  static Vector from_values(std::initializer_list<double> values);
  static Vector from_values(const std::vector<double>& values);

  std::size_t size() const noexcept { return entries_.size(); }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  Scalar operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// No component equals zero.
  bool is_regular() const noexcept;
  bool is_zero() const noexcept;
  /// Ordinary values of the components.
  std::vector<double> values() const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> entries_;
};

/// Row vector; produced by conjugation and consumed on the left of products.
class RowVector {
 public:
  RowVector() = default;
  explicit RowVector(std::size_t dim, Scalar fill = Scalar::zero()) : entries_(dim, fill) {}
  explicit RowVector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  Scalar operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  friend bool operator==(const RowVector&, const RowVector&) = default;

 private:
  std::vector<Scalar> entries_;
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix scalar_mul(Scalar c, const Matrix& a);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Scalar c, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& x);
Vector operator+(const Vector& x, const Vector& y);
Vector operator*(Scalar c, const Vector& x);
RowVector operator*(const RowVector& y, const Matrix& a);
Scalar operator*(const RowVector& y, const Vector& x);

/// A^k by repeated multiplication; A^0 = I.
Matrix power(const Matrix& a, std::size_t k);

/// tr A: sum of the diagonal.
Scalar trace(const Matrix& a);
/// Tr(A) = tr A (+) ... (+) tr A^n.
Scalar trace_fn(const Matrix& a);
/// A* = I (+) A (+) ... (+) A^{n-1}.
/// Throws InfeasibleError(TraceExceedsOne) when Tr(A) > 1 beyond `tol`.
Matrix kleene_star(const Matrix& a, double tol = kDefaultTolerance);
/// lambda = (+)_{k=1..n} tr^{1/k}(A^k).
Scalar spectral_radius(const Matrix& a);

/// x^-: componentwise inverse, zero components stay zero and top maps to zero.
/// Throws DomainError for the zero vector.
RowVector conjugate(const Vector& x);
Vector conjugate(const RowVector& y);

/// Componentwise x <= y within tolerance.
bool leq(const Vector& x, const Vector& y, double tol = kDefaultTolerance);
bool approx_equal(const Vector& x, const Vector& y, double tol = kDefaultTolerance);
bool approx_equal(const Matrix& a, const Matrix& b, double tol = kDefaultTolerance);

std::ostream& operator<<(std::ostream& os, const Matrix& a);
std::ostream& operator<<(std::ostream& os, const Vector& x);

}  // namespace troprate
