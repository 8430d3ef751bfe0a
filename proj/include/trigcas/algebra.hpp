// Exact and floating-point linear algebra kernel.
//
// Scalars: Rational (GMP mpq, always canonical), Gaussian rationals a+bi,
// one-variable Laurent polynomials with rational coefficients, and
// std::complex<double>.  Matrices are dense and row-major; tensor products use
// row-major pair indexing with the leftmost factor most significant.
#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trigcas {

enum class ErrorKind {
  Precondition,
  DimensionMismatch,
  Singular,
  NotNilpotent,
  NumericalBreakdown,
  Unsupported,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

using Rational = mpq_class;
using Complex = std::complex<double>;

Rational rat(long num, long den = 1);
// Always "p/q" with q > 0, e.g. "0/1", "-3/2".
std::string to_string(const Rational& q);
Rational abs(const Rational& q);

struct Gaussian {
  Rational re{0};
  Rational im{0};

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT: implicit embedding
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Gaussian i_unit() { return {Rational(0), Rational(1)}; }
  Gaussian conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
  Gaussian inverse() const;
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) { return a * b.inverse(); }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
  Gaussian& operator+=(const Gaussian& b) { re += b.re; im += b.im; return *this; }
  Gaussian& operator-=(const Gaussian& b) { re -= b.re; im -= b.im; return *this; }
};

std::string to_string(const Gaussian& g);

// Laurent polynomial in z with rational coefficients; zero coefficients are
// never stored.
class Laurent {
 public:
  Laurent() = default;
  Laurent(Rational c);  // NOLINT: implicit embedding of constants
  Laurent(long c) : Laurent(Rational(c)) {}  // NOLINT
  static Laurent monomial(Rational c, int exponent);
  static Laurent z(int exponent = 1) { return monomial(Rational(1), exponent); }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational coefficient(int exponent) const;
  // Inverse of a monomial c z^k; throws for anything else.
  Laurent inverse() const;

  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator/(const Laurent& a, const Laurent& b) { return a * b.inverse(); }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
  Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
  Laurent& operator-=(const Laurent& b) { return *this = *this - b; }

 private:
  void add_term(int exponent, const Rational& c);
  std::map<int, Rational> terms_;
};

std::string to_string(const Laurent& p);

// Scalar traits used by the generic matrix code.
template <class T>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational inverse(const Rational& x) { return Rational(1) / x; }
};

template <>
struct ScalarOps<Gaussian> {
  static Gaussian zero() { return {}; }
  static Gaussian one() { return Gaussian(Rational(1)); }
  static bool is_zero(const Gaussian& x) { return x.is_zero(); }
  static Gaussian inverse(const Gaussian& x) { return x.inverse(); }
};

template <>
struct ScalarOps<Laurent> {
  static Laurent zero() { return {}; }
  static Laurent one() { return Laurent(Rational(1)); }
  static bool is_zero(const Laurent& x) { return x.is_zero(); }
  static Laurent inverse(const Laurent& x) { return x.inverse(); }
};

template <>
struct ScalarOps<Complex> {
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
  static Complex inverse(const Complex& x) { return 1.0 / x; }
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, ScalarOps<T>::zero()) {}
  explicit Matrix(std::size_t n) : Matrix(n, n) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw Error(ErrorKind::DimensionMismatch, "matrix data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarOps<T>::one();
    return m;
  }
  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  // Single nonzero entry 1 at (i, j).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = ScalarOps<T>::one();
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return rows_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!ScalarOps<T>::is_zero(x)) return false;
    return true;
  }
  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && !ScalarOps<T>::is_zero((*this)(i, j))) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& b) {
    check_same_shape(b);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!ScalarOps<T>::is_zero(b.data_[k])) data_[k] += b.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& b) {
    check_same_shape(b);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!ScalarOps<T>::is_zero(b.data_[k])) data_[k] -= b.data_[k];
    return *this;
  }
  // this += c * b
  Matrix& add_scaled(const T& c, const Matrix& b) {
    check_same_shape(b);
    if (ScalarOps<T>::is_zero(c)) return *this;
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!ScalarOps<T>::is_zero(b.data_[k])) data_[k] += c * b.data_[k];
    return *this;
  }
  Matrix& scale(const T& c) {
    for (auto& x : data_)
      if (!ScalarOps<T>::is_zero(x)) x = c * x;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a.scale(-ScalarOps<T>::one()); }
  friend Matrix operator*(const T& c, Matrix a) { return a.scale(c); }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (ScalarOps<T>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!ScalarOps<T>::is_zero(bkj)) out(i, j) += aik * bkj;
        }
      }
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    std::vector<T> out(rows_, ScalarOps<T>::zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!ScalarOps<T>::is_zero((*this)(i, j)) && !ScalarOps<T>::is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Principal submatrix on the given index list.
  Matrix submatrix(const std::vector<std::size_t>& idx) const {
    Matrix s(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) s(a, b) = (*this)(idx[a], idx[b]);
    return s;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using GMatrix = Matrix<Gaussian>;
using LoopMatrix = Matrix<Laurent>;
using CMatrix = Matrix<Complex>;

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const T& x = a(i1, j1);
      if (ScalarOps<T>::is_zero(x)) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          if (!ScalarOps<T>::is_zero(b(i2, j2))) out(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * b(i2, j2);
    }
  return out;
}

// x acting on tensor slot `slot` (0-based) of a product with the given factor
// dimensions, identity elsewhere.
template <class T>
Matrix<T> embed_factor(const Matrix<T>& x, std::size_t slot, const std::vector<std::size_t>& factor_dims) {
  if (slot >= factor_dims.size()) throw Error(ErrorKind::Precondition, "embed_factor: slot out of range");
  if (x.rows() != factor_dims[slot] || x.cols() != factor_dims[slot])
    throw Error(ErrorKind::DimensionMismatch, "embed_factor: factor dimension mismatch");
  std::size_t left = 1, right = 1;
  for (std::size_t p = 0; p < slot; ++p) left *= factor_dims[p];
  for (std::size_t p = slot + 1; p < factor_dims.size(); ++p) right *= factor_dims[p];
  const std::size_t d = x.rows();
  const std::size_t total = left * d * right;
  Matrix<T> out(total, total);
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const T& v = x(i, j);
        if (ScalarOps<T>::is_zero(v)) continue;
        for (std::size_t r = 0; r < right; ++r) out((l * d + i) * right + r, (l * d + j) * right + r) = v;
      }
  return out;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

Rational max_abs(const QMatrix& a);
Rational max_abs(const GMatrix& a);  // max of |re| and |im| over entries
double max_abs(const CMatrix& a);

// exp(a) for nilpotent a, summed exactly; throws NotNilpotent otherwise.
template <class T>
Matrix<T> nilpotent_exp(const Matrix<T>& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "nilpotent_exp: non-square input");
  const std::size_t n = a.rows();
  Matrix<T> result = Matrix<T>::identity(n);
  Matrix<T> power = Matrix<T>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * a;
    if (power.is_zero()) return result;
    power.scale(ScalarOps<T>::inverse(T(Rational(static_cast<long>(k)))));
    result += power;
  }
  throw Error(ErrorKind::NotNilpotent, "nilpotent_exp: input is not nilpotent");
}

// Row reduction over an exact field.  Returns the reduced row echelon form and
// the pivot columns.
template <class T>
std::pair<Matrix<T>, std::vector<std::size_t>> rref(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && ScalarOps<T>::is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const T inv = ScalarOps<T>::inverse(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!ScalarOps<T>::is_zero(m(row, j))) m(row, j) = m(row, j) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || ScalarOps<T>::is_zero(m(r, col))) continue;
      const T f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!ScalarOps<T>::is_zero(m(row, j))) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).second.size();
}

// Basis of {x : m x = 0}, as columns of the returned vectors.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), ScalarOps<T>::zero());
    v[free] = ScalarOps<T>::one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Exact inverse over a field; throws Singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse: non-square input");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = ScalarOps<T>::one();
  }
  auto [r, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorKind::Singular, "inverse: singular matrix");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

LoopMatrix loop_inverse(const LoopMatrix& m);  // via adjugate; det must be a monomial
Laurent loop_determinant(const LoopMatrix& m);

CMatrix to_complex(const QMatrix& m);
CMatrix complex_inverse(const CMatrix& m);
std::vector<Complex> complex_eigenvalues(const CMatrix& m);

// Deterministic pseudo-random rationals.
class RationalSampler {
 public:
  explicit RationalSampler(unsigned long long seed);
  // Numerator uniform in [-max_num, max_num], denominator in [1, max_den].
  Rational next(long max_num = 9, long max_den = 5);
  Rational next_nonzero(long max_num = 9, long max_den = 5);
  long next_int(long lo, long hi);
  double next_double(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace trigcas
