#include "trigcas/glrep.hpp"

#include <sstream>

namespace trigcas {

QMatrix elementary(int n, int i, int j) {
  return QMatrix::unit(static_cast<std::size_t>(n), static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

QMatrix vector_tits_root(int n, int a, int b) {
  const QMatrix e = elementary(n, a, b), f = elementary(n, b, a);
  const QMatrix ee = nilpotent_exp(e);
  return ee * nilpotent_exp(-f) * ee;
}

namespace {

QMatrix vector_tits_root_inverse(int n, int a, int b) {
  const QMatrix e = elementary(n, a, b), f = elementary(n, b, a);
  const QMatrix ee = nilpotent_exp(-e);
  return ee * nilpotent_exp(f) * ee;
}

}  // namespace

GlModule::GlModule(int n, int m) : n_(n), m_(m) {
  if (n < 1 || m < 0) throw Error(ErrorKind::Precondition, "GlModule: need n >= 1 and m >= 0");
  for (int p = 0; p < m; ++p) dim_ *= static_cast<std::size_t>(n);
  const auto dims = factor_dims();
  E_slot_.reserve(static_cast<std::size_t>(n * n * m));
  E_.reserve(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QMatrix total(dim_, dim_);
      for (int p = 0; p < m; ++p) {
        E_slot_.push_back(embed_factor(elementary(n, i, j), static_cast<std::size_t>(p), dims));
        total += E_slot_.back();
      }
      E_.push_back(std::move(total));
    }
}

void GlModule::check_index(int i) const {
  if (i < 0 || i >= n_) throw Error(ErrorKind::Precondition, "GlModule: index out of range");
}

std::vector<int> GlModule::digits(std::size_t index) const {
  std::vector<int> d(static_cast<std::size_t>(m_));
  for (int p = m_ - 1; p >= 0; --p) {
    d[static_cast<std::size_t>(p)] = static_cast<int>(index % static_cast<std::size_t>(n_));
    index /= static_cast<std::size_t>(n_);
  }
  return d;
}

std::size_t GlModule::index_of(const std::vector<int>& d) const {
  std::size_t idx = 0;
  for (int x : d) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x);
  return idx;
}

std::vector<int> GlModule::weight(std::size_t index) const {
  std::vector<int> w(static_cast<std::size_t>(n_), 0);
  for (int x : digits(index)) ++w[static_cast<std::size_t>(x)];
  return w;
}

const QMatrix& GlModule::E(int i, int j) const {
  check_index(i);
  check_index(j);
  return E_[static_cast<std::size_t>(i * n_ + j)];
}

const QMatrix& GlModule::E_slot(int i, int j, int p) const {
  check_index(i);
  check_index(j);
  if (p < 0 || p >= m_) throw Error(ErrorKind::Precondition, "GlModule: slot out of range");
  return E_slot_[static_cast<std::size_t>((i * n_ + j) * m_ + p)];
}

QMatrix GlModule::kappa(int a, int b) const {
  if (a == b) throw Error(ErrorKind::Precondition, "kappa: a == b is not a root");
  return E(a, b) * E(b, a) + E(b, a) * E(a, b);
}

QMatrix GlModule::swap(int p, int q) const {
  QMatrix s(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    auto d = digits(k);
    std::swap(d[static_cast<std::size_t>(p)], d[static_cast<std::size_t>(q)]);
    s(index_of(d), k) = 1;
  }
  return s;
}

QMatrix GlModule::on_slot(const QMatrix& x, int p) const {
  return embed_factor(x, static_cast<std::size_t>(p), factor_dims());
}

QMatrix GlModule::diagonal_action(const QMatrix& x) const {
  QMatrix out = QMatrix::identity(1);
  for (int p = 0; p < m_; ++p) out = kron(out, x);
  return out;
}

SmallnessResult GlModule::is_small() const {
  SmallnessResult r;
  for (std::size_t k = 0; k < dim_; ++k) {
    const auto w = weight(k);
    // Centered weight w - (m/n)1 equals 2(theta_a - theta_b) iff
    // n w_a - m = 2n, n w_b - m = -2n and n w_c = m otherwise.
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (a == b) continue;
        bool match = true;
        for (int c = 0; c < n_ && match; ++c) {
          const int target = c == a ? 2 * n_ : (c == b ? -2 * n_ : 0);
          if (n_ * w[static_cast<std::size_t>(c)] - m_ != target) match = false;
        }
        if (match) {
          r.small = false;
          r.witness_weight = w;
          r.root_a = a;
          r.root_b = b;
          return r;
        }
      }
  }
  return r;
}

QMatrix GlModule::tits_root(int a, int b) const {
  check_index(a);
  check_index(b);
  return diagonal_action(vector_tits_root(n_, a, b));
}

QMatrix GlModule::tits_root_inverse(int a, int b) const {
  check_index(a);
  check_index(b);
  return diagonal_action(vector_tits_root_inverse(n_, a, b));
}

std::vector<std::size_t> GlModule::zero_weight_basis() const {
  std::vector<std::size_t> basis;
  if (m_ % n_ != 0) return basis;
  for (std::size_t k = 0; k < dim_; ++k) {
    bool zero = true;
    for (int x : weight(k))
      if (x * n_ != m_) zero = false;
    if (zero) basis.push_back(k);
  }
  return basis;
}

QMatrix GlModule::restrict_to(const QMatrix& x, const std::vector<std::size_t>& basis) {
  std::vector<int> position(x.rows(), -1);
  for (std::size_t k = 0; k < basis.size(); ++k) position[basis[k]] = static_cast<int>(k);
  QMatrix r(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col)
    for (std::size_t row = 0; row < x.rows(); ++row) {
      const Rational& v = x(row, basis[col]);
      if (sgn(v) == 0) continue;
      if (position[row] < 0) throw Error(ErrorKind::Precondition, "restrict_to: subspace is not invariant");
      r(static_cast<std::size_t>(position[row]), col) = v;
    }
  return r;
}

QMatrix GlModule::lemma_V0_residual(int a, int b, bool enforce_small) const {
  if (enforce_small) {
    const auto s = is_small();
    if (!s.small) throw Error(ErrorKind::Precondition, "lemma_V0_residual: module not small");
  }
  const auto basis = zero_weight_basis();
  if (basis.empty()) throw Error(ErrorKind::Precondition, "lemma_V0_residual: zero weight space is trivial");
  const QMatrix k = restrict_to(kappa(a, b), basis);
  const QMatrix s = restrict_to(tits_root(a, b), basis);
  const QMatrix one = QMatrix::identity(basis.size());
  return k - Rational(2) * (one - s);
}

}  // namespace trigcas
