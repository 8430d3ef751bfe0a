#include "trigcas/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace trigcas {

namespace {

std::string normalize_label(const std::string& label) {
  std::string s;
  for (char c : label)
    if (c != '_' && c != ' ') s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

// Simple-root Gram matrices, long roots of squared length 2.
std::vector<Rational> gram_for(char family, int rank) {
  std::vector<Rational> g(static_cast<std::size_t>(rank * rank), Rational(0));
  auto at = [&](int i, int j) -> Rational& { return g[static_cast<std::size_t>(i * rank + j)]; };
  switch (family) {
    case 'A':
      for (int i = 0; i < rank; ++i) at(i, i) = 2;
      for (int i = 0; i + 1 < rank; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      break;
    case 'B':
      for (int i = 0; i < rank; ++i) at(i, i) = 2;
      at(rank - 1, rank - 1) = 1;
      for (int i = 0; i + 1 < rank; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      break;
    case 'C':
      for (int i = 0; i < rank; ++i) at(i, i) = 1;
      at(rank - 1, rank - 1) = 2;
      for (int i = 0; i + 2 < rank; ++i) at(i, i + 1) = at(i + 1, i) = rat(-1, 2);
      at(rank - 2, rank - 1) = at(rank - 1, rank - 2) = -1;
      break;
    case 'D':
      for (int i = 0; i < rank; ++i) at(i, i) = 2;
      for (int i = 0; i + 2 < rank; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      at(rank - 3, rank - 1) = at(rank - 1, rank - 3) = -1;
      break;
    case 'G':
      // alpha_1 long, alpha_2 short.
      at(0, 0) = 2;
      at(1, 1) = rat(2, 3);
      at(0, 1) = at(1, 0) = -1;
      break;
    default:
      throw Error(ErrorKind::Unsupported, std::string("unsupported root system family ") + family);
  }
  return g;
}

long factorial(long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<int> mat_mul(const std::vector<int>& a, const std::vector<int>& b, int r) {
  std::vector<int> c(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      int aik = a[static_cast<std::size_t>(i * r + k)];
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j) c[static_cast<std::size_t>(i * r + j)] += aik * b[static_cast<std::size_t>(k * r + j)];
    }
  return c;
}

IntVec mat_apply(const std::vector<int>& m, const IntVec& v, int r) {
  IntVec out(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out[static_cast<std::size_t>(i)] += m[static_cast<std::size_t>(i * r + j)] * v[static_cast<std::size_t>(j)];
  return out;
}

std::vector<int> identity_matrix(int r) {
  std::vector<int> m(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i * r + i)] = 1;
  return m;
}

}  // namespace

RootSystem RootSystem::build(const std::string& raw_label) {
  const std::string label = normalize_label(raw_label);
  if (label.size() < 2) throw Error(ErrorKind::Unsupported, "unsupported root system " + raw_label);
  const char family = label[0];
  int rank = 0;
  try {
    rank = std::stoi(label.substr(1));
  } catch (...) {
    throw Error(ErrorKind::Unsupported, "unsupported root system " + raw_label);
  }
  static const std::set<std::string> supported = {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"};
  if (!supported.count(label)) throw Error(ErrorKind::Unsupported, "unsupported root system " + raw_label);

  RootSystem rs;
  rs.label_ = label;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.gram_ = gram_for(family, rank);
  rs.cartan_.assign(static_cast<std::size_t>(rank * rank), 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational a = 2 * rs.gram(i, j) / rs.gram(i, i);
      rs.cartan_[static_cast<std::size_t>(i * rank + j)] = static_cast<int>(a.get_num().get_si());
    }

  std::set<IntVec> found;
  std::deque<IntVec> queue;
  for (int i = 0; i < rank; ++i) {
    IntVec s = rs.simple_root(i);
    found.insert(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    IntVec b = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      IntVec c = rs.simple_reflect(i, b);
      if (found.insert(c).second) queue.push_back(c);
    }
  }
  rs.roots_.assign(found.begin(), found.end());
  for (const auto& r : rs.roots_)
    if (is_positive(r)) rs.positive_.push_back(r);
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const IntVec& a, const IntVec& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (std::size_t k = 0; k < rs.positive_.size(); ++k) rs.positive_lookup_[rs.positive_[k]] = static_cast<int>(k);
  rs.enumerate_weyl();
  return rs;
}

IntVec RootSystem::simple_root(int i) const {
  IntVec v(static_cast<std::size_t>(rank_), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

int RootSystem::positive_index(const IntVec& root) const {
  auto it = positive_lookup_.find(root);
  return it == positive_lookup_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const IntVec& v) const {
  if (is_positive(v)) return positive_index(v) >= 0;
  return positive_index(negate(v)) >= 0;
}

bool RootSystem::is_positive(const IntVec& v) {
  bool any = false;
  for (int x : v) {
    if (x < 0) return false;
    if (x > 0) any = true;
  }
  return any;
}

int RootSystem::height(const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

IntVec RootSystem::negate(const IntVec& v) {
  IntVec r(v);
  for (auto& x : r) x = -x;
  return r;
}

IntVec RootSystem::add(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

Rational RootSystem::inner(const IntVec& a, const IntVec& b) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (b[static_cast<std::size_t>(j)] != 0)
        s += gram(i, j) * a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  }
  return s;
}

Rational RootSystem::inner(const RatVec& a, const RatVec& b) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += gram(i, j) * a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  return s;
}

int RootSystem::pairing(const IntVec& beta, const IntVec& alpha) const {
  Rational p = 2 * inner(beta, alpha) / inner(alpha, alpha);
  if (p.get_den() != 1) throw Error(ErrorKind::Precondition, "pairing: non-integral Cartan integer");
  return static_cast<int>(p.get_num().get_si());
}

IntVec RootSystem::reflect(const IntVec& beta, const IntVec& alpha) const {
  const int c = pairing(beta, alpha);
  IntVec r(beta);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= c * alpha[k];
  return r;
}

IntVec RootSystem::simple_reflect(int i, const IntVec& beta) const {
  int c = 0;
  for (int k = 0; k < rank_; ++k) c += beta[static_cast<std::size_t>(k)] * cartan(i, k);
  IntVec r(beta);
  r[static_cast<std::size_t>(i)] -= c;
  return r;
}

bool RootSystem::is_long(const IntVec& root) const { return inner(root, root) == 2; }

Rational RootSystem::evaluate(const IntVec& weight, const RatVec& coweight) {
  Rational s(0);
  for (std::size_t k = 0; k < weight.size(); ++k)
    if (weight[k] != 0) s += weight[k] * coweight[k];
  return s;
}

Rational RootSystem::evaluate(const RatVec& weight, const RatVec& coweight) {
  Rational s(0);
  for (std::size_t k = 0; k < weight.size(); ++k) s += weight[k] * coweight[k];
  return s;
}

RatVec RootSystem::coroot(const IntVec& alpha) const {
  const Rational n = inner(alpha, alpha);
  RatVec c(static_cast<std::size_t>(rank_));
  for (int j = 0; j < rank_; ++j) c[static_cast<std::size_t>(j)] = 2 * inner(simple_root(j), alpha) / n;
  return c;
}

RatVec RootSystem::fundamental_coweight(int i) const {
  RatVec c(static_cast<std::size_t>(rank_), Rational(0));
  c[static_cast<std::size_t>(i)] = 1;
  return c;
}

RatVec RootSystem::fundamental_weight(int i) const {
  QMatrix a(static_cast<std::size_t>(rank_));
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k) a(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = cartan(j, k);
  QMatrix inv = trigcas::inverse(a);
  RatVec m(static_cast<std::size_t>(rank_));
  for (int k = 0; k < rank_; ++k) m[static_cast<std::size_t>(k)] = inv(static_cast<std::size_t>(k), static_cast<std::size_t>(i));
  return m;
}

RatVec RootSystem::simple_reflect_coweight(int i, const RatVec& v) const {
  RatVec r(v);
  for (int j = 0; j < rank_; ++j) r[static_cast<std::size_t>(j)] -= v[static_cast<std::size_t>(i)] * cartan(i, j);
  return r;
}

RatVec RootSystem::act_coweight(const WeylElement& w, const RatVec& v) const {
  RatVec r(v);
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r = simple_reflect_coweight(*it, r);
  return r;
}

std::vector<RatVec> RootSystem::kernel_basis(const IntVec& alpha) const {
  QMatrix row(1, static_cast<std::size_t>(rank_));
  for (int k = 0; k < rank_; ++k) row(0, static_cast<std::size_t>(k)) = alpha[static_cast<std::size_t>(k)];
  return nullspace(row);
}

std::size_t RootSystem::weyl_order_of(const std::string& raw) {
  const std::string label = normalize_label(raw);
  const char f = label[0];
  const int n = std::stoi(label.substr(1));
  switch (f) {
    case 'A': return static_cast<std::size_t>(factorial(n + 1));
    case 'B':
    case 'C': return static_cast<std::size_t>((1L << n) * factorial(n));
    case 'D': return static_cast<std::size_t>((1L << (n - 1)) * factorial(n));
    case 'G': return 12;
    default: throw Error(ErrorKind::Unsupported, "unsupported root system " + raw);
  }
}

std::size_t RootSystem::weyl_order() const { return weyl_order_of(label_); }

const std::vector<WeylElement>& RootSystem::weyl_group() const { return weyl_; }

WeylElement RootSystem::make_element(std::vector<int> word, std::vector<int> matrix) const {
  WeylElement w;
  w.word = std::move(word);
  w.matrix = std::move(matrix);
  for (std::size_t k = 0; k < positive_.size(); ++k)
    if (!is_positive(mat_apply(w.matrix, positive_[k], rank_))) w.inversion_set.push_back(k);
  return w;
}

void RootSystem::enumerate_weyl() {
  const std::size_t order = weyl_order();
  if (order > 1152) return;
  std::vector<std::vector<int>> simple(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    auto m = identity_matrix(rank_);
    for (int j = 0; j < rank_; ++j) m[static_cast<std::size_t>(i * rank_ + j)] -= cartan(i, j);
    simple[static_cast<std::size_t>(i)] = m;
  }
  weyl_.push_back(make_element({}, identity_matrix(rank_)));
  weyl_lookup_[weyl_.back().matrix] = 0;
  for (std::size_t head = 0; head < weyl_.size(); ++head) {
    for (int i = 0; i < rank_; ++i) {
      auto m = mat_mul(simple[static_cast<std::size_t>(i)], weyl_[head].matrix, rank_);
      if (weyl_lookup_.count(m)) continue;
      std::vector<int> word{i};
      word.insert(word.end(), weyl_[head].word.begin(), weyl_[head].word.end());
      weyl_lookup_[m] = weyl_.size();
      weyl_.push_back(make_element(std::move(word), std::move(m)));
    }
  }
  if (weyl_.size() != order) throw Error(ErrorKind::Precondition, "Weyl group enumeration size mismatch");
}

WeylElement RootSystem::identity() const { return make_element({}, identity_matrix(rank_)); }

WeylElement RootSystem::from_word(const std::vector<int>& word) const {
  auto m = identity_matrix(rank_);
  for (int i : word) {
    if (i < 0 || i >= rank_) throw Error(ErrorKind::Precondition, "from_word: index out of range");
    auto s = identity_matrix(rank_);
    for (int j = 0; j < rank_; ++j) s[static_cast<std::size_t>(i * rank_ + j)] -= cartan(i, j);
    m = mat_mul(m, s, rank_);
  }
  auto it = weyl_lookup_.find(m);
  if (it != weyl_lookup_.end()) return weyl_[it->second];
  return make_element(word, m);
}

WeylElement RootSystem::multiply(const WeylElement& a, const WeylElement& b) const {
  std::vector<int> word = a.word;
  word.insert(word.end(), b.word.begin(), b.word.end());
  return from_word(word);
}

WeylElement RootSystem::inverse(const WeylElement& w) const {
  std::vector<int> word(w.word.rbegin(), w.word.rend());
  return from_word(word);
}

WeylElement RootSystem::longest_element() const {
  const WeylElement* best = nullptr;
  for (const auto& w : weyl_)
    if (!best || w.length() > best->length()) best = &w;
  if (!best) throw Error(ErrorKind::Precondition, "Weyl group not materialized");
  return *best;
}

IntVec RootSystem::act(const WeylElement& w, const IntVec& v) const { return mat_apply(w.matrix, v, rank_); }

std::size_t RootSystem::weyl_index(const WeylElement& w) const {
  auto it = weyl_lookup_.find(w.matrix);
  if (it == weyl_lookup_.end()) throw Error(ErrorKind::Precondition, "weyl_index: element not found");
  return it->second;
}

std::string RootSystem::serialize() const {
  std::ostringstream os;
  os << label_ << "; cartan=[";
  for (int i = 0; i < rank_; ++i) {
    os << (i ? ";" : "");
    for (int j = 0; j < rank_; ++j) os << (j ? "," : "") << cartan(i, j);
  }
  os << "]; positive_roots=[";
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    os << (k ? ";" : "") << "(";
    for (std::size_t j = 0; j < positive_[k].size(); ++j) os << (j ? "," : "") << positive_[k][j];
    os << ")";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Rank-2 subsystems.

bool RankTwoSubsystem::contains(const IntVec& r) const {
  return std::find(roots.begin(), roots.end(), r) != roots.end();
}

namespace {

// Solve delta = x beta + y gamma over Q; nullopt when delta is outside the real span.
std::optional<std::pair<Rational, Rational>> span_coordinates(const IntVec& beta, const IntVec& gamma,
                                                              const IntVec& delta) {
  const std::size_t r = beta.size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const long det = static_cast<long>(beta[i]) * gamma[j] - static_cast<long>(beta[j]) * gamma[i];
      if (det == 0) continue;
      Rational x = rat(static_cast<long>(delta[i]) * gamma[j] - static_cast<long>(delta[j]) * gamma[i], det);
      Rational y = rat(static_cast<long>(beta[i]) * delta[j] - static_cast<long>(beta[j]) * delta[i], det);
      for (std::size_t k = 0; k < r; ++k)
        if (x * beta[k] + y * gamma[k] != delta[k]) return std::nullopt;
      return std::make_pair(x, y);
    }
  return std::nullopt;
}

bool proportional(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (static_cast<long>(a[i]) * b[j] != static_cast<long>(a[j]) * b[i]) return false;
  return true;
}

RankTwoSubsystem finish_subsystem(const RootSystem& phi, std::vector<IntVec> roots, const IntVec& beta,
                                  const IntVec& gamma) {
  RankTwoSubsystem s;
  std::sort(roots.begin(), roots.end());
  s.roots = roots;
  for (const auto& r : roots)
    if (RootSystem::is_positive(r)) s.positive.push_back(r);
  std::sort(s.positive.begin(), s.positive.end(), [](const IntVec& a, const IntVec& b) {
    const int ha = RootSystem::height(a), hb = RootSystem::height(b);
    return ha != hb ? ha < hb : a < b;
  });
  std::vector<IntVec> simple;
  for (const auto& r : s.positive) {
    bool decomposable = false;
    for (std::size_t a = 0; a < s.positive.size() && !decomposable; ++a)
      for (std::size_t b = a; b < s.positive.size() && !decomposable; ++b)
        if (RootSystem::add(s.positive[a], s.positive[b]) == r) decomposable = true;
    if (!decomposable) simple.push_back(r);
  }
  if (simple.size() != 2) throw Error(ErrorKind::Precondition, "rank-2 subsystem without two simple roots");
  s.simple1 = simple[0];
  s.simple2 = simple[1];
  switch (roots.size()) {
    case 4: s.type_tag = "A1xA1"; break;
    case 6: s.type_tag = "A2"; break;
    case 8: s.type_tag = "B2"; break;
    case 12: s.type_tag = "G2"; break;
    default: throw Error(ErrorKind::Precondition, "unexpected rank-2 subsystem size");
  }
  s.complete = true;
  for (const auto& d : phi.roots())
    if (span_coordinates(beta, gamma, d) && !s.contains(d)) s.complete = false;
  return s;
}

}  // namespace

std::vector<RankTwoSubsystem> enumerate_rank2_subsystems(const RootSystem& phi) {
  if (phi.rank() < 2) return {};
  std::set<std::vector<IntVec>> seen;
  std::vector<RankTwoSubsystem> out;
  const auto& pos = phi.positive_roots();
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = a + 1; b < pos.size(); ++b) {
      if (proportional(pos[a], pos[b])) continue;
      std::vector<IntVec> members;
      for (const auto& d : phi.roots()) {
        auto c = span_coordinates(pos[a], pos[b], d);
        if (c && c->first.get_den() == 1 && c->second.get_den() == 1) members.push_back(d);
      }
      std::sort(members.begin(), members.end());
      if (!seen.insert(members).second) continue;
      out.push_back(finish_subsystem(phi, members, pos[a], pos[b]));
    }
  return out;
}

ComponentGroup component_group(const RankTwoSubsystem& psi) {
  const IntVec& a = psi.simple1;
  const IntVec& b = psi.simple2;
  long d1 = 0, minors = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d1 = std::gcd(d1, static_cast<long>(a[i]));
    d1 = std::gcd(d1, static_cast<long>(b[i]));
    for (std::size_t j = i + 1; j < a.size(); ++j)
      minors = std::gcd(minors, static_cast<long>(a[i]) * b[j] - static_cast<long>(a[j]) * b[i]);
  }
  ComponentGroup g;
  g.order = minors;
  const long d2 = minors / d1;
  if (d1 > 1) g.invariant_factors.push_back(d1);
  if (d2 > 1) g.invariant_factors.push_back(d2);
  if (d1 == 1)
    for (long j = 0; j < g.order; ++j)
      if (std::gcd(j, g.order) == 1) g.faithful_characters.push_back(j);
  return g;
}

std::vector<RankTwoSubsystem> r2_of(const RootSystem& phi, const IntVec& alpha) {
  std::vector<RankTwoSubsystem> out;
  for (auto& s : enumerate_rank2_subsystems(phi))
    if (s.complete && s.contains(alpha) && alpha != s.simple1 && alpha != s.simple2) out.push_back(std::move(s));
  return out;
}

namespace {

struct PsiWeylElement {
  std::vector<int> matrix;
  std::vector<IntVec> word;
};

std::vector<int> reflection_matrix(const RootSystem& phi, const IntVec& gamma) {
  const int r = phi.rank();
  std::vector<int> m(static_cast<std::size_t>(r * r), 0);
  for (int j = 0; j < r; ++j) {
    IntVec img = phi.reflect(phi.simple_root(j), gamma);
    for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i * r + j)] = img[static_cast<std::size_t>(i)];
  }
  return m;
}

std::vector<PsiWeylElement> enumerate_psi_weyl(const RootSystem& phi, const RankTwoSubsystem& psi) {
  const int r = phi.rank();
  const std::vector<IntVec> gens{psi.simple1, psi.simple2};
  std::vector<std::vector<int>> gen_m{reflection_matrix(phi, gens[0]), reflection_matrix(phi, gens[1])};
  std::vector<PsiWeylElement> els{{identity_matrix(r), {}}};
  std::set<std::vector<int>> seen{els[0].matrix};
  for (std::size_t head = 0; head < els.size(); ++head)
    for (std::size_t g = 0; g < 2; ++g) {
      auto m = mat_mul(gen_m[g], els[head].matrix, r);
      if (!seen.insert(m).second) continue;
      PsiWeylElement e{m, {gens[g]}};
      e.word.insert(e.word.end(), els[head].word.begin(), els[head].word.end());
      els.push_back(std::move(e));
    }
  return els;
}

}  // namespace

InversionDecomposition decompose_inversion_set(const RootSystem& phi, const IntVec& alpha, const WeylElement& w) {
  const WeylElement winv = phi.inverse(w);
  const IntVec image = phi.act(winv, alpha);
  bool simple = false;
  for (int i = 0; i < phi.rank(); ++i)
    if (image == phi.simple_root(i)) simple = true;
  if (!simple) {
    std::ostringstream os;
    os << "decompose_inversion_set: w^{-1} alpha is not simple (alpha=(";
    for (std::size_t k = 0; k < alpha.size(); ++k) os << (k ? "," : "") << alpha[k];
    os << "), w=[";
    for (std::size_t k = 0; k < w.word.size(); ++k) os << (k ? "," : "") << w.word[k] + 1;
    os << "])";
    throw Error(ErrorKind::Precondition, os.str());
  }

  InversionDecomposition d;
  for (auto k : winv.inversion_set) d.inversion_set.push_back(phi.positive_roots()[k]);
  const int r = phi.rank();

  std::map<IntVec, int> hits, hits_all;
  for (const auto& b : d.inversion_set) hits[b] = hits_all[b] = 0;
  d.all_nonempty = true;
  d.witnesses_unique = true;
  for (auto& psi : enumerate_rank2_subsystems(phi)) {
    if (!psi.complete || !psi.contains(alpha)) continue;
    InversionPart part;
    part.alpha_non_simple = alpha != psi.simple1 && alpha != psi.simple2;
    for (const auto& b : psi.positive) {
      if (!hits.count(b)) continue;
      part.intersection.push_back(b);
      ++hits_all[b];
      if (part.alpha_non_simple) ++hits[b];
    }
    if (part.alpha_non_simple && part.intersection.empty()) d.all_nonempty = false;

    std::vector<IntVec> target = part.intersection;
    std::sort(target.begin(), target.end());
    int matches = 0;
    for (const auto& u : enumerate_psi_weyl(phi, psi)) {
      std::vector<IntVec> nset;
      for (const auto& g : psi.positive)
        if (!RootSystem::is_positive(mat_apply(u.matrix, g, r))) nset.push_back(g);
      std::sort(nset.begin(), nset.end());
      if (nset != target) continue;
      ++matches;
      // w_Psi = u^{-1}: reverse the reflection word.
      std::vector<int> inv = identity_matrix(r);
      part.w_psi_word.assign(u.word.rbegin(), u.word.rend());
      for (const auto& g : part.w_psi_word) inv = mat_mul(inv, reflection_matrix(phi, g), r);
      part.w_psi.clear();
      for (int i = 0; i < r; ++i) part.w_psi.emplace_back(inv.begin() + i * r, inv.begin() + (i + 1) * r);
    }
    if (matches != 1) d.witnesses_unique = false;
    part.subsystem = std::move(psi);
    d.parts.push_back(std::move(part));
  }
  d.disjoint_union = true;
  d.full_disjoint_union = true;
  for (const auto& [b, count] : hits)
    if (count != 1) d.disjoint_union = false;
  for (const auto& [b, count] : hits_all)
    if (count != 1) d.full_disjoint_union = false;
  return d;
}

std::vector<std::pair<IntVec, Rational>> chamber_shift(const RootSystem& phi, const WeylElement& w, const RatVec& v) {
  std::vector<std::pair<IntVec, Rational>> out;
  const WeylElement winv = phi.inverse(w);
  for (auto k : winv.inversion_set) {
    const IntVec& a = phi.positive_roots()[k];
    out.emplace_back(a, RootSystem::evaluate(a, v));
  }
  return out;
}

namespace {

Complex eval_c(const RatVec& a, const std::vector<Complex>& u) {
  Complex s(0.0, 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k].get_d() * u[k];
  return s;
}

RatVec sum(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

// (da ^ db)(x, y)
Rational wedge(const RatVec& a, const RatVec& b, const RatVec& x, const RatVec& y) {
  return RootSystem::evaluate(a, x) * RootSystem::evaluate(b, y) - RootSystem::evaluate(a, y) * RootSystem::evaluate(b, x);
}

void guard(const Complex& e, const char* what) {
  if (std::abs(e - 1.0) < 1e-12) throw Error(ErrorKind::Singular, std::string("eta identity: singular point at ") + what);
}

}  // namespace

Complex eta_identity_value(const RatVec& a, const RatVec& b, const std::vector<Complex>& u, const RatVec& x,
                           const RatVec& y) {
  const RatVec ab = sum(a, b);
  const Complex ea = std::exp(eval_c(a, u)), eb = std::exp(eval_c(b, u)), eab = std::exp(eval_c(ab, u));
  guard(ea, "e^a");
  guard(eb, "e^b");
  guard(eab, "e^{a+b}");
  const double w_ab = wedge(a, b, x, y).get_d();
  const double w_a_ab = wedge(a, ab, x, y).get_d();
  const double w_ab_b = wedge(ab, b, x, y).get_d();
  const Complex lhs = w_ab / ((ea - 1.0) * (eb - 1.0));
  const Complex rhs = w_a_ab / ((ea - 1.0) * (eab - 1.0)) + w_ab_b / ((eab - 1.0) * (eb - 1.0)) + w_ab / (eab - 1.0);
  return lhs - rhs;
}

Complex eta_eta_value(const RatVec& a, const RatVec& b, const std::vector<Complex>& u, const RatVec& x, const RatVec& y) {
  const RatVec ab = sum(a, b);
  const Complex eab = std::exp(eval_c(ab, u));
  guard(eab, "e^{a+b}");
  const Complex eta_ab = wedge(a, b, x, y).get_d() / (eab - 1.0);
  const Complex eta_sum_db = wedge(ab, b, x, y).get_d() / (eab - 1.0);
  return eta_ab - eta_sum_db;
}

Rational eta_identity_exact(const IntVec& a, const IntVec& b, const RatVec& q, const RatVec& x, const RatVec& y) {
  auto power = [&](const IntVec& m) {
    Rational p(1);
    for (std::size_t k = 0; k < m.size(); ++k) {
      int e = m[k];
      for (; e > 0; --e) p *= q[k];
      for (; e < 0; ++e) p /= q[k];
    }
    return p;
  };
  RatVec ar(a.begin(), a.end()), br(b.begin(), b.end());
  const RatVec abr = sum(ar, br);
  const Rational ea = power(a), eb = power(b), eab = ea * eb;
  if (ea == 1 || eb == 1 || eab == 1) throw Error(ErrorKind::Singular, "eta identity: singular rational point");
  const Rational w_ab = wedge(ar, br, x, y);
  const Rational lhs = w_ab / ((ea - 1) * (eb - 1));
  const Rational rhs = wedge(ar, abr, x, y) / ((ea - 1) * (eab - 1)) + wedge(abr, br, x, y) / ((eab - 1) * (eb - 1)) +
                       w_ab / (eab - 1);
  return lhs - rhs;
}

}  // namespace trigcas
