#include "trigcas/algebra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace trigcas {

Rational rat(long num, long den) {
  if (den == 0) throw Error(ErrorKind::Precondition, "rat: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

Gaussian Gaussian::inverse() const {
  const Rational n = norm2();
  if (sgn(n) == 0) throw Error(ErrorKind::Singular, "Gaussian inverse of zero");
  return {re / n, -im / n};
}

std::string to_string(const Gaussian& g) { return to_string(g.re) + "+" + to_string(g.im) + "i"; }

Laurent::Laurent(Rational c) {
  if (sgn(c) != 0) terms_.emplace(0, std::move(c));
}

Laurent Laurent::monomial(Rational c, int exponent) {
  Laurent p;
  if (sgn(c) != 0) p.terms_.emplace(exponent, std::move(c));
  return p;
}

Rational Laurent::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Laurent Laurent::inverse() const {
  if (!is_monomial()) throw Error(ErrorKind::Singular, "Laurent inverse of a non-monomial");
  const auto& [k, c] = *terms_.begin();
  return monomial(Rational(1) / c, -k);
}

void Laurent::add_term(int exponent, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

Laurent operator-(const Laurent& a) {
  Laurent r;
  for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
  return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  return r;
}

std::string to_string(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")z^" + std::to_string(k);
  }
  return s;
}

Rational max_abs(const QMatrix& a) {
  Rational best(0);
  for (const auto& x : a.data()) {
    Rational v = abs(x);
    if (v > best) best = v;
  }
  return best;
}

Rational max_abs(const GMatrix& a) {
  Rational best(0);
  for (const auto& x : a.data()) {
    Rational r = abs(x.re), i = abs(x.im);
    if (r > best) best = r;
    if (i > best) best = i;
  }
  return best;
}

double max_abs(const CMatrix& a) {
  double best = 0.0;
  for (const auto& x : a.data()) best = std::max(best, std::abs(x));
  return best;
}

namespace {

// Cofactor expansion along the first row; adequate for the small loop models.
Laurent det_recursive(const LoopMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  Laurent total;
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Laurent& entry = m(rows[0], cols[c]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != c) sub_cols.push_back(cols[k]);
    Laurent minor = det_recursive(m, sub_rows, sub_cols);
    if (c % 2 == 0)
      total += entry * minor;
    else
      total -= entry * minor;
  }
  return total;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

Laurent loop_determinant(const LoopMatrix& m) {
  if (!m.is_square() || m.rows() == 0) throw Error(ErrorKind::DimensionMismatch, "loop_determinant: bad shape");
  return det_recursive(m, iota(m.rows()), iota(m.cols()));
}

LoopMatrix loop_inverse(const LoopMatrix& m) {
  const std::size_t n = m.rows();
  const Laurent det = loop_determinant(m);
  if (!det.is_monomial()) throw Error(ErrorKind::Singular, "loop_inverse: determinant is not a unit");
  const Laurent det_inv = det.inverse();
  LoopMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = det_inv;
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      Laurent cof = det_recursive(m, rows, cols);
      if ((i + j) % 2 == 1) cof = -cof;
      inv(i, j) = cof * det_inv;
    }
  return inv;
}

CMatrix to_complex(const QMatrix& m) {
  CMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = Complex(m(i, j).get_d(), 0.0);
  return c;
}

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

}  // namespace

CMatrix complex_inverse(const CMatrix& m) {
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(to_eigen(m));
  if (!lu.isInvertible()) throw Error(ErrorKind::Singular, "complex_inverse: singular matrix");
  Eigen::MatrixXcd inv = lu.inverse();
  CMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = inv(i, j);
  return out;
}

std::vector<Complex> complex_eigenvalues(const CMatrix& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), false);
  std::vector<Complex> ev;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) ev.push_back(solver.eigenvalues()(k));
  std::sort(ev.begin(), ev.end(), [](const Complex& a, const Complex& b) {
    const double aa = std::arg(a), ab = std::arg(b);
    if (aa != ab) return aa < ab;
    return std::abs(a) < std::abs(b);
  });
  return ev;
}

RationalSampler::RationalSampler(unsigned long long seed) : engine_(seed) {}

long RationalSampler::next_int(long lo, long hi) {
  const unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1ULL;
  return lo + static_cast<long>(engine_() % span);
}

Rational RationalSampler::next(long max_num, long max_den) {
  return rat(next_int(-max_num, max_num), next_int(1, max_den));
}

Rational RationalSampler::next_nonzero(long max_num, long max_den) {
  for (;;) {
    Rational q = next(max_num, max_den);
    if (sgn(q) != 0) return q;
  }
}

double RationalSampler::next_double(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0);
  return lo + (hi - lo) * u;
}

}  // namespace trigcas
