#include "trigcas/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <sstream>

namespace trigcas {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kTwoPiI(0.0, 2.0 * kPi);

double entry_norm(const CMatrix& m) {
  double best = 0.0;
  for (const auto& x : m.data()) best = std::max(best, std::abs(x));
  return best;
}

CMatrix combine(const CMatrix& y, double h, std::initializer_list<std::pair<double, const CMatrix*>> terms) {
  CMatrix out = y;
  for (const auto& [c, k] : terms)
    if (c != 0.0) out.add_scaled(Complex(h * c, 0.0), *k);
  return out;
}

}  // namespace

PathSpec reversed(const PathSpec& p) {
  PathSpec r = p;
  r.point = [f = p.point](double t) { return f(1.0 - t); };
  r.velocity = [v = p.velocity](double t) {
    CVec d = v(1.0 - t);
    for (auto& x : d) x = -x;
    return d;
  };
  return r;
}

double wall_distance(const CVec& zeta) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < zeta.size(); ++i)
    for (std::size_t j = i + 1; j < zeta.size(); ++j) {
      const Complex a = zeta[i] - zeta[j];
      best = std::min(best, std::abs(a - std::round(a.real())));
    }
  return best;
}

double wall_distance(const PathSpec& p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s <= p.samples; ++s) best = std::min(best, wall_distance(p.point(static_cast<double>(s) / static_cast<double>(p.samples))));
  return best;
}

TransportResult integrate_linear(const std::function<CMatrix(double)>& F, std::size_t dim, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::Precondition, "transport tolerance must be positive");
  // Dormand-Prince 5(4) tableau.
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695, e4 = b4 - 393.0 / 640,
                          e5 = b5 + 92097.0 / 339200, e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;

  TransportResult res;
  CMatrix y = CMatrix::identity(dim);
  double t = 0.0, h = 1e-2, err_prev = 1e-4;
  CMatrix k1 = F(0.0) * y;  // first-same-as-last
  while (t < 1.0) {
    if (t + h > 1.0) h = 1.0 - t;
    const CMatrix k2 = F(t + c2 * h) * combine(y, h, {{a21, &k1}});
    const CMatrix k3 = F(t + c3 * h) * combine(y, h, {{a31, &k1}, {a32, &k2}});
    const CMatrix k4 = F(t + c4 * h) * combine(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
    const CMatrix k5 = F(t + c5 * h) * combine(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
    const CMatrix k6 = F(t + h) * combine(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
    const CMatrix ynew = combine(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const CMatrix k7 = F(t + h) * ynew;
    CMatrix errm(dim, dim);
    errm = combine(errm, h, {{e1, &k1}, {e3, &k3}, {e4, &k4}, {e5, &k5}, {e6, &k6}, {e7, &k7}});
    double err = 0.0;
    for (std::size_t q = 0; q < errm.data().size(); ++q) {
      const double scale = tol * (1.0 + std::max(std::abs(y.data()[q]), std::abs(ynew.data()[q])));
      err = std::max(err, std::abs(errm.data()[q]) / scale);
    }
    if (err <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;
      ++res.steps;
      res.error_estimate += entry_norm(errm);
      // PI controller.
      const double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
      h *= std::clamp(fac, 0.2, 5.0);
      err_prev = std::max(err, 1e-4);
    } else {
      ++res.rejected;
      h *= std::max(0.2, 0.9 * std::pow(err, -1.0 / 5.0));
    }
    if (h < 1e-13 && t < 1.0) {
      std::ostringstream os;
      os << "transport step underflow at t = " << t;
      throw Error(ErrorKind::NumericalBreakdown, os.str());
    }
  }
  res.matrix = std::move(y);
  return res;
}

TransportResult parallel_transport(const GlConnection& conn, const PathSpec& path, double tol) {
  const double clear = wall_distance(path);
  if (clear < path.clearance) {
    std::ostringstream os;
    os << "path comes within " << clear << " of a root hypertorus (required " << path.clearance << ")";
    throw Error(ErrorKind::NumericalBreakdown, os.str());
  }
  const std::size_t n = static_cast<std::size_t>(conn.n());
  auto F = [&](double t) {
    const CVec p = path.point(t), v = path.velocity(t);
    std::vector<Complex> z(n), X(n);
    for (std::size_t k = 0; k < n; ++k) {
      z[k] = std::exp(kTwoPiI * p[k]);
      X[k] = kTwoPiI * v[k];
    }
    try {
      return conn.coefficient_complex(z, X);
    } catch (const Error& e) {
      std::ostringstream os;
      os << e.what() << " at t = " << t;
      throw Error(ErrorKind::NumericalBreakdown, os.str());
    }
  };
  return integrate_linear(F, conn.module().dim(), tol);
}

AffineMonodromy::AffineMonodromy(std::shared_ptr<const GlModule> module, std::vector<Rational> a, MonodromyConfig config)
    : module_(module), conn_(module, std::move(a)), config_(std::move(config)) {
  if (module_->n() < 2) throw Error(ErrorKind::Precondition, "monodromy needs n >= 2");
  if (sgn(config_.lambda) <= 0) throw Error(ErrorKind::Precondition, "lambda must be positive");
  if (!(config_.tol > 0.0)) throw Error(ErrorKind::Precondition, "tolerance must be positive");
  conn_.set_scale(Rational(1) / config_.lambda);
  // Fill the lazy complex caches before any concurrent use.
  std::vector<Complex> z(static_cast<std::size_t>(n())), X(static_cast<std::size_t>(n()), Complex(0.0, 0.0));
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = Complex(static_cast<double>(k + 2), 0.0);
  (void)conn_.coefficient_complex(z, X);
}

CVec AffineMonodromy::basepoint() const {
  const int nn = n();
  CVec p(static_cast<std::size_t>(nn));
  for (int k = 0; k < nn; ++k) p[static_cast<std::size_t>(k)] = Complex(static_cast<double>(nn - 1 - k) / (2.0 * (nn - 1)), 0.0);
  return p;
}

CVec AffineMonodromy::affine_reflect(int i, const CVec& zeta) const {
  const int nn = n();
  if (i < 0 || i >= nn) throw Error(ErrorKind::Precondition, "affine node out of range");
  CVec out = zeta;
  if (i >= 1) {
    std::swap(out[static_cast<std::size_t>(i - 1)], out[static_cast<std::size_t>(i)]);
    return out;
  }
  const Complex shift = zeta.front() - zeta.back() - 1.0;  // theta(zeta) - 1
  out.front() -= shift;
  out.back() += shift;
  return out;
}

PathSpec AffineMonodromy::generator_path(int i, double offset) const {
  const CVec p = basepoint(), q = affine_reflect(i, p);
  const std::size_t nn = p.size();
  CVec normal(nn, Complex(0.0, 0.0));
  const double r = 1.0 / std::sqrt(2.0);
  if (i >= 1) {
    normal[static_cast<std::size_t>(i - 1)] = r;
    normal[static_cast<std::size_t>(i)] = -r;
  } else {
    normal.front() = -r;
    normal.back() = r;
  }
  PathSpec path;
  path.point = [p, q, normal, offset](double t) {
    CVec x(p.size());
    const double bump = offset * std::sin(kPi * t);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = p[k] + t * (q[k] - p[k]) + Complex(0.0, bump) * normal[k];
    return x;
  };
  path.velocity = [p, q, normal, offset](double t) {
    CVec v(p.size());
    const double dbump = offset * kPi * std::cos(kPi * t);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = (q[k] - p[k]) + Complex(0.0, dbump) * normal[k];
    return v;
  };
  return path;
}

CMatrix AffineMonodromy::lift(int i) const {
  if (i < 0 || i >= n()) throw Error(ErrorKind::Precondition, "affine node out of range");
  return to_complex(i >= 1 ? module_->tits_operator(i - 1) : module_->tits_root(n() - 1, 0));
}

CMatrix AffineMonodromy::lift_inverse(int i) const {
  if (i < 0 || i >= n()) throw Error(ErrorKind::Precondition, "affine node out of range");
  return to_complex(i >= 1 ? module_->tits_operator_inverse(i - 1) : module_->tits_root_inverse(n() - 1, 0));
}

TransportResult AffineMonodromy::transport(const PathSpec& path) const { return parallel_transport(conn_, path, config_.tol); }

CMatrix AffineMonodromy::generator(int i) const { return generator(i, config_.offset); }

CMatrix AffineMonodromy::generator(int i, double offset) const {
  return lift_inverse(i) * transport(generator_path(i, offset)).matrix;
}

std::vector<CMatrix> AffineMonodromy::generators() const {
  // Independent paths are transported concurrently; each integration is sequential.
  std::vector<std::future<CMatrix>> jobs;
  for (int i = 0; i < n(); ++i) jobs.push_back(std::async(std::launch::async, [this, i] { return generator(i); }));
  std::vector<CMatrix> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

int AffineMonodromy::braid_order(int i, int j) const {
  if (i == j) return 1;
  if (n() == 2) return 0;  // a_01 a_10 = 4
  const int d = ((i - j) % n() + n()) % n();
  return (d == 1 || d == n() - 1) ? 3 : 2;
}

double AffineMonodromy::braid_residual(int i, int j) const {
  if (i == j) return 0.0;
  std::vector<CMatrix> gens(static_cast<std::size_t>(n()));
  gens[static_cast<std::size_t>(i)] = generator(i);
  gens[static_cast<std::size_t>(j)] = generator(j);
  return braid_residual(i, j, gens);
}

double AffineMonodromy::braid_residual(int i, int j, const std::vector<CMatrix>& gens) const {
  if (i == j) return 0.0;
  const int m = braid_order(i, j);
  if (m == 0) throw Error(ErrorKind::Precondition, "no braid relation for m_ij = infinity");
  const std::size_t d = module_->dim();
  CMatrix a = CMatrix::identity(d), b = CMatrix::identity(d);
  for (int k = 0; k < m; ++k) {
    a = a * gens[static_cast<std::size_t>(k % 2 == 0 ? i : j)];
    b = b * gens[static_cast<std::size_t>(k % 2 == 0 ? j : i)];
  }
  return max_abs(a - b);
}

double AffineMonodromy::inverse_path_residual(int i) const {
  const PathSpec p = generator_path(i, config_.offset);
  const CMatrix m = transport(reversed(p)).matrix * transport(p).matrix;
  return max_abs(m - CMatrix::identity(module_->dim()));
}

double AffineMonodromy::contractible_loop_residual() const {
  const CVec p = basepoint();
  const std::size_t nn = p.size();
  // Circle of radius 0.05 in the complex line spanned by a generic real direction.
  CVec dir(nn);
  for (std::size_t k = 0; k < nn; ++k) dir[k] = Complex(1.0 / static_cast<double>(k + 1), 0.0);
  const double radius = 0.05;
  PathSpec loop;
  loop.point = [p, dir, radius](double t) {
    CVec x(p.size());
    const Complex w = radius * (std::exp(Complex(0.0, 2.0 * kPi * t)) - 1.0);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = p[k] + w * dir[k];
    return x;
  };
  loop.velocity = [p, dir, radius](double t) {
    CVec v(p.size());
    const Complex dw = radius * Complex(0.0, 2.0 * kPi) * std::exp(Complex(0.0, 2.0 * kPi * t));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = dw * dir[k];
    return v;
  };
  return max_abs(transport(loop).matrix - CMatrix::identity(module_->dim()));
}

double AffineMonodromy::homotopy_residual(int i) const {
  const CMatrix a = transport(generator_path(i, config_.offset)).matrix;
  const CMatrix b = transport(generator_path(i, 2.0 * config_.offset)).matrix;
  return max_abs(a - b);
}

double AffineMonodromy::scaling_residual(int i) const { return max_abs(generator(i) - lift_inverse(i)); }

double abelian_loop_residual(Complex c, double tol) {
  // theta(t) = 2 pi i t, A(theta') = c theta'.
  auto F = [c](double) {
    CMatrix m(1, 1);
    m(0, 0) = c * kTwoPiI;
    return m;
  };
  const TransportResult r = integrate_linear(F, 1, tol);
  return std::abs(r.matrix(0, 0) - std::exp(kTwoPiI * c));
}

}  // namespace trigcas
