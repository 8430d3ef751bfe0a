#include "trigcas/qkz.hpp"

#include <sstream>

namespace trigcas {

namespace {

QMatrix swap_factors(const GlModule& V, int k, int l) {
  if (k < 0 || l < 0 || k >= V.m() || l >= V.m() || k == l) throw Error(ErrorKind::Precondition, "R-matrix factor pair out of range");
  return V.swap(k, l);
}

}  // namespace

QMatrix yang_R(const GlModule& V, int k, int l, const Rational& u) {
  if (sgn(u) == 0) throw Error(ErrorKind::Singular, "R-matrix at zero spectral parameter");
  QMatrix r = QMatrix::identity(V.dim());
  r.add_scaled(Rational(-1) / u, swap_factors(V, k, l));
  return r;
}

Rational qybe_residual(int n, const Rational& u, const Rational& v) {
  const GlModule V(n, 3);
  const QMatrix R12 = yang_R(V, 0, 1, u), R13 = yang_R(V, 0, 2, u + v), R23 = yang_R(V, 1, 2, v);
  return max_abs(R12 * R13 * R23 - R23 * R13 * R12);
}

Rational unitarity_residual(int n, const Rational& u) {
  const GlModule V(n, 2);
  // R^{21}(-u) = P R(-u) P = R(-u) for the vector representation.
  const QMatrix P = V.swap(0, 1);
  const QMatrix R21 = P * yang_R(V, 0, 1, -u) * P;
  QMatrix res = yang_R(V, 0, 1, u) * R21;
  res.add_scaled(-(Rational(1) - Rational(1) / (u * u)), QMatrix::identity(V.dim()));
  return max_abs(res);
}

std::vector<Rational> mat_vec(const QMatrix& m, const std::vector<Rational>& v) {
  if (m.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "mat_vec: size mismatch");
  std::vector<Rational> out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0 && sgn(v[j]) != 0) out[i] += m(i, j) * v[j];
  return out;
}

QkzSystem::QkzSystem(std::shared_ptr<const GlModule> module, Rational kappa, QkzConvention convention)
    : module_(std::move(module)), kappa_(std::move(kappa)), convention_(convention) {
  if (sgn(kappa_) == 0) throw Error(ErrorKind::Precondition, "qKZ step must be nonzero");
}

QMatrix QkzSystem::R(int k, int l, const Rational& u) const {
  return convention_ == QkzConvention::Matched ? yang_R(*module_, k, l, -u) : yang_R(*module_, k, l, u);
}

QMatrix QkzSystem::d(int i, const std::vector<Rational>& z) const {
  const GlModule& V = *module_;
  if (static_cast<int>(z.size()) != V.n()) throw Error(ErrorKind::DimensionMismatch, "torus point has wrong length");
  QMatrix out(V.dim(), V.dim());
  for (std::size_t k = 0; k < V.dim(); ++k) {
    const Rational& zk = z[static_cast<std::size_t>(V.digits(k)[static_cast<std::size_t>(i)])];
    if (sgn(zk) == 0) throw Error(ErrorKind::Singular, "torus coordinate is zero");
    out(k, k) = convention_ == QkzConvention::Matched ? zk : Rational(1) / zk;
  }
  return out;
}

QMatrix QkzSystem::log_derivative_d(int i, const std::vector<Rational>& X) const {
  const GlModule& V = *module_;
  QMatrix out(V.dim(), V.dim());
  const Rational sign = convention_ == QkzConvention::Matched ? Rational(1) : Rational(-1);
  for (std::size_t k = 0; k < V.dim(); ++k) {
    const auto dig = V.digits(k);
    Rational s(0);
    for (int j = 0; j <= i; ++j) s += X[static_cast<std::size_t>(dig[static_cast<std::size_t>(j)])];
    out(k, k) = sign * s;
  }
  return out;
}

void QkzSystem::require_nonsingular(const std::vector<Rational>& a) const {
  if (static_cast<int>(a.size()) != m()) throw Error(ErrorKind::DimensionMismatch, "need one evaluation point per factor");
  auto bad = [](const Rational& u) { return sgn(u) == 0 || u == 1 || u == -1; };
  for (int k = 0; k < m(); ++k)
    for (int l = k + 1; l < m(); ++l) {
      const Rational diff = a[static_cast<std::size_t>(k)] - a[static_cast<std::size_t>(l)];
      if (bad(diff) || bad(diff - kappa_) || bad(diff + kappa_)) {
        std::ostringstream os;
        os << "R-matrix singular for factor pair (" << k + 1 << "," << l + 1 << "): a_k - a_l = " << diff << " with step " << kappa_;
        throw Error(ErrorKind::Singular, os.str());
      }
    }
}

QMatrix QkzSystem::A(int i, const std::vector<Rational>& z, const std::vector<Rational>& a) const {
  const int mm = m();
  if (i < 0 || i >= mm) throw Error(ErrorKind::Precondition, "qKZ index out of range");
  const auto ai = a[static_cast<std::size_t>(i)];
  QMatrix out = QMatrix::identity(module_->dim());
  // R^{i-1,i}(..)^{-1} ... R^{0,i}(..)^{-1}: leftmost factor has k = i-1.
  for (int k = i - 1; k >= 0; --k) {
    const Rational u = a[static_cast<std::size_t>(k)] - ai - kappa_;
    QMatrix inv;
    try {
      inv = trigcas::inverse(R(k, i, u));
    } catch (const Error&) {
      std::ostringstream os;
      os << "R-matrix not invertible for factor pair (" << k + 1 << "," << i + 1 << ") at u = " << u;
      throw Error(ErrorKind::Singular, os.str());
    }
    out = out * inv;
  }
  out = out * d(i, z);
  for (int l = mm - 1; l > i; --l) out = out * R(i, l, ai - a[static_cast<std::size_t>(l)]);
  return out;
}

QMatrix QkzSystem::A_tilde(int i, const std::vector<Rational>& z, const std::vector<Rational>& a) const {
  const int mm = m();
  if (i < 0 || i >= mm) throw Error(ErrorKind::Precondition, "qKZ index out of range");
  QMatrix out = QMatrix::identity(module_->dim());
  for (int j = 0; j <= i; ++j) out = out * d(j, z);
  for (int l = mm - 1; l > i; --l)
    for (int k = 0; k <= i; ++k)
      out = out * R(k, l, a[static_cast<std::size_t>(k)] - a[static_cast<std::size_t>(l)]);
  return out;
}

QMatrix QkzSystem::B(const std::vector<Rational>& z, const std::vector<Rational>& X, const std::vector<Rational>& a) const {
  std::vector<Rational> params = a;
  if (convention_ == QkzConvention::Literal)
    for (auto& x : params) x = -x;
  GlConnection conn(module_, params);
  return conn.coefficient(FormStyle::Delta, z, X);
}

std::vector<Rational> QkzSystem::shifted(const std::vector<Rational>& a, int i) const {
  std::vector<Rational> b = a;
  for (int j = 0; j <= i; ++j) b[static_cast<std::size_t>(j)] += kappa_;
  return b;
}

Rational QkzSystem::consistency_residual(int i, int j, const std::vector<Rational>& z, const std::vector<Rational>& a) const {
  std::vector<Rational> ai = a, aj = a;
  ai[static_cast<std::size_t>(i)] += kappa_;
  aj[static_cast<std::size_t>(j)] += kappa_;
  return max_abs(A(j, z, ai) * A(i, z, a) - A(i, z, aj) * A(j, z, a));
}

Rational QkzSystem::product_lemma_residual(int i, const std::vector<Rational>& z, const std::vector<Rational>& a) const {
  QMatrix prod = QMatrix::identity(module_->dim());
  for (int j = i; j >= 0; --j) prod = prod * A(j, z, j == 0 ? a : shifted(a, j - 1));
  return max_abs(prod - A_tilde(i, z, a));
}

Rational QkzSystem::cross_diff_residual(int i, const std::vector<Rational>& z, const std::vector<Rational>& X,
                                        const std::vector<Rational>& a) const {
  // Atilde_i = (d_0 ... d_i) * (z-independent), so (d Atilde) Atilde^{-1} is the log-derivative of the d's.
  QMatrix res = log_derivative_d(i, X);
  res.add_scaled(Rational(-1) / (2 * kappa_), B(z, X, shifted(a, i)) - B(z, X, a));
  return max_abs(res);
}

Rational QkzSystem::commutation_lemma_residual(int i, const std::vector<Rational>& z, const std::vector<Rational>& X,
                                               const std::vector<Rational>& a) const {
  return max_abs(commutator(A_tilde(i, z, a), B(z, X, a)));
}

Rational QkzSystem::bispectral_residual(int i, const std::vector<Rational>& z, const std::vector<Rational>& X,
                                        const std::vector<Rational>& a) const {
  const QMatrix At_inv = trigcas::inverse(A_tilde(i, z, a));
  const QMatrix Ba = B(z, X, a);
  // d(Atilde^{-1}) = -Atilde^{-1} (d Atilde) Atilde^{-1} = -Atilde^{-1} L, L the log-derivative.
  QMatrix res = -(At_inv * log_derivative_d(i, X));
  const Rational c = Rational(1) / (2 * kappa_);
  res.add_scaled(-c, At_inv * (Ba - B(z, X, shifted(a, i))));
  res.add_scaled(-c, commutator(Ba, At_inv));
  return max_abs(res);
}

QkzSystem::Section QkzSystem::apply_TT(int i, const std::vector<Rational>& z, Section f) const {
  return [this, i, z, f = std::move(f)](const std::vector<Rational>& a) {
    std::vector<Rational> b = a;
    b[static_cast<std::size_t>(i)] += kappa_;
    return mat_vec(trigcas::inverse(A(i, z, a)), f(b));
  };
}

}  // namespace trigcas
