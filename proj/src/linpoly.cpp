#include "hermcodes/linpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hermcodes {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

void require_same_tower(const FieldTower& a, const FieldTower& b) {
  if (&a != &b && !a.same_as(b)) throw std::invalid_argument("operands live over different towers");
}

namespace {

std::size_t wrap_index(std::int64_t i, std::size_t period) {
  const auto m = static_cast<std::int64_t>(period);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  a = ((a % m) + m) % m;
  for (std::int64_t x = 1; x < m; ++x)
    if (a * x % m == 1) return x;
  if (m == 1) return 0;
  throw std::invalid_argument("no inverse modulo " + std::to_string(m));
}

}  // namespace

LinPoly::LinPoly(TowerPtr tower) : tower_(std::move(tower)), coeffs_(tower_->n(), FFElement{}) {}

LinPoly::LinPoly(TowerPtr tower, std::vector<FFElement> coeffs)
    : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != tower_->n()) throw std::invalid_argument("LinPoly: expected n coefficients");
}

LinPoly LinPoly::identity(TowerPtr tower) {
  LinPoly f(std::move(tower));
  f.coeffs_[0] = f.field().one();
  return f;
}

LinPoly LinPoly::monomial(TowerPtr tower, FFElement c, std::int64_t index) {
  LinPoly f(std::move(tower));
  f.set_coeff(index, c);
  return f;
}

LinPoly LinPoly::from_fp_vector(TowerPtr tower, std::span<const std::uint32_t> v) {
  const std::size_t N = tower->degree();
  if (v.size() != N * tower->n()) throw std::invalid_argument("LinPoly::from_fp_vector: wrong length");
  LinPoly f(tower);
  for (std::size_t i = 0; i < f.size(); ++i) f.coeffs_[i] = tower->from_coeffs(v.subspan(i * N, N));
  return f;
}

std::size_t LinPoly::wrap(std::int64_t i) const noexcept { return wrap_index(i, coeffs_.size()); }

bool LinPoly::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](FFElement c) { return c.is_zero(); });
}

FFElement LinPoly::eval(FFElement x) const noexcept {
  const FieldTower& t = *tower_;
  FFElement acc = t.zero();
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) acc = t.add(acc, t.mul(coeffs_[i], t.frobenius(x, 2 * static_cast<std::int64_t>(i))));
  return acc;
}

LinPoly LinPoly::operator+(const LinPoly& rhs) const {
  LinPoly out = *this;
  out += rhs;
  return out;
}

LinPoly& LinPoly::operator+=(const LinPoly& rhs) {
  require_same_tower(*tower_, *rhs.tower_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = tower_->add(coeffs_[i], rhs.coeffs_[i]);
  return *this;
}

LinPoly LinPoly::operator-(const LinPoly& rhs) const {
  require_same_tower(*tower_, *rhs.tower_);
  LinPoly out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = tower_->sub(coeffs_[i], rhs.coeffs_[i]);
  return out;
}

LinPoly LinPoly::scaled(FFElement c) const {
  LinPoly out = *this;
  for (auto& v : out.coeffs_) v = tower_->mul(c, v);
  return out;
}

bool LinPoly::operator==(const LinPoly& rhs) const {
  return tower_->same_as(*rhs.tower_) && coeffs_ == rhs.coeffs_;
}

std::vector<std::uint32_t> LinPoly::to_fp_vector() const {
  std::vector<std::uint32_t> out;
  out.reserve(coeffs_.size() * tower_->degree());
  for (auto c : coeffs_) {
    const auto d = tower_->coeffs(c);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

LinPoly compose(const LinPoly& f, const LinPoly& g) {
  require_same_tower(f.field(), g.field());
  const FieldTower& t = f.field();
  const std::size_t n = f.size();
  LinPoly out(f.tower());
  for (std::size_t i = 0; i < n; ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (g.coeffs()[j].is_zero()) continue;
      const std::size_t k = (i + j) % n;
      const FFElement term = t.mul(f.coeffs()[i], t.frobenius(g.coeffs()[j], 2 * static_cast<std::int64_t>(i)));
      out.set_coeff(static_cast<std::int64_t>(k), t.add(out.coeff(static_cast<std::int64_t>(k)), term));
    }
  }
  return out;
}

LinPoly adjoint(const LinPoly& f) {
  const FieldTower& t = f.field();
  const auto n = static_cast<std::int64_t>(f.size());
  LinPoly out(f.tower());
  for (std::int64_t i = 0; i < n; ++i) out.set_coeff(n - i, t.frobenius(f.coeff(i), 2 * (n - i)));
  return out;
}

FieldMatrix map_matrix(const LinPoly& f) {
  const FieldTower& t = f.field();
  const auto& basis = t.q2_basis();
  const auto& dual = t.q2_dual_basis();
  const std::size_t n = basis.size();
  FieldMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const FFElement img = f.eval(basis[j]);
    for (std::size_t l = 0; l < n; ++l) m(j, l) = t.trace_to_q2(t.mul(img, dual[l]));
  }
  return m;
}

namespace {

template <typename Poly>
FpMatrix fp_matrix_of(const Poly& f) {
  const FieldTower& t = f.field();
  const std::uint32_t N = t.degree();
  FpMatrix m(N, N, t.p());
  std::uint64_t basis_value = 1;
  for (std::uint32_t j = 0; j < N; ++j, basis_value *= t.p()) {
    const auto img = t.coeffs(f.eval(t.from_value(basis_value)));
    for (std::uint32_t c = 0; c < N; ++c) m(j, c) = img[c];
  }
  return m;
}

}  // namespace

FpMatrix fp_map_matrix(const LinPoly& f) { return fp_matrix_of(f); }
FpMatrix fp_map_matrix(const QPoly& f) { return fp_matrix_of(f); }

std::size_t rank(const LinPoly& f) { return mat_rank(f.field(), map_matrix(f)); }

std::size_t kernel_dim(const LinPoly& f) { return f.size() - rank(f); }

QPoly::QPoly(TowerPtr tower) : tower_(std::move(tower)), coeffs_(2 * tower_->n(), FFElement{}) {}

QPoly::QPoly(TowerPtr tower, std::vector<FFElement> coeffs) : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != 2 * tower_->n()) throw std::invalid_argument("QPoly: expected 2n coefficients");
}

QPoly QPoly::from_linpoly(const LinPoly& f) {
  QPoly out(f.tower());
  for (std::size_t i = 0; i < f.size(); ++i) out.coeffs_[2 * i] = f.coeffs()[i];
  return out;
}

std::size_t QPoly::wrap(std::int64_t i) const noexcept { return wrap_index(i, coeffs_.size()); }

bool QPoly::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](FFElement c) { return c.is_zero(); });
}

FFElement QPoly::eval(FFElement x) const noexcept {
  const FieldTower& t = *tower_;
  FFElement acc = t.zero();
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) acc = t.add(acc, t.mul(coeffs_[i], t.frobenius(x, static_cast<std::int64_t>(i))));
  return acc;
}

QPoly QPoly::compose_monomial(std::int64_t m) const {
  QPoly out(tower_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.set_coeff(static_cast<std::int64_t>(i) + m, coeffs_[i]);
  return out;
}

bool QPoly::operator==(const QPoly& rhs) const { return tower_->same_as(*rhs.tower_) && coeffs_ == rhs.coeffs_; }

std::size_t kernel_dim_fq(const QPoly& f) {
  const std::size_t nullity = f.field().degree() - rank(fp_map_matrix(f));
  return nullity / f.field().e();
}

std::size_t s_degree(const QPoly& f, std::int64_t s) {
  const auto period = static_cast<std::int64_t>(f.size());
  if (gcd64(s, period) != 1) throw std::invalid_argument("s_degree: gcd(s, 2n) must be 1");
  const std::int64_t s_inv = inverse_mod(s, period);
  std::size_t k = 0;
  for (std::int64_t ex = 0; ex < period; ++ex) {
    if (f.coeff(ex).is_zero()) continue;
    k = std::max(k, static_cast<std::size_t>(ex * s_inv % period));
  }
  return k;
}

GqReport gq_verify(const QPoly& f, std::int64_t s, std::size_t k) {
  const FieldTower& t = f.field();
  const auto period = static_cast<std::int64_t>(f.size());
  if (gcd64(s, period) != 1) throw std::invalid_argument("gq_verify: gcd(s, 2n) must be 1");
  if (f.is_zero()) throw std::invalid_argument("gq_verify: the zero polynomial has no kernel bound");
  if (k >= static_cast<std::size_t>(period)) throw std::invalid_argument("gq_verify: k must be below 2n");
  std::vector<bool> allowed(static_cast<std::size_t>(period), false);
  for (std::size_t j = 0; j <= k; ++j) allowed[static_cast<std::size_t>((((s * static_cast<std::int64_t>(j)) % period) + period) % period)] = true;
  for (std::int64_t ex = 0; ex < period; ++ex)
    if (!f.coeff(ex).is_zero() && !allowed[static_cast<std::size_t>(ex)])
      throw std::invalid_argument("gq_verify: coefficient at q-exponent " + std::to_string(ex) +
                                  " lies outside the s-progression window");

  GqReport report;
  report.k = k;
  report.kernel_dim = kernel_dim_fq(f);
  report.bound_holds = report.kernel_dim <= k;
  if (report.kernel_dim == k) {
    const auto deg = static_cast<std::uint32_t>(period);
    const FFElement n0 = t.rel_norm(f.coeff(0), deg, 1);
    FFElement nk = t.rel_norm(f.coeff(s * static_cast<std::int64_t>(k)), deg, 1);
    if ((static_cast<std::uint64_t>(deg) * k) % 2 == 1) nk = t.neg(nk);
    report.norm_condition = (n0 == nk);
  }
  return report;
}

QPoly reindex_to_qpoly(const LinPoly& f, std::int64_t s) {
  const QPoly g = QPoly::from_linpoly(f);
  const auto period = static_cast<std::int64_t>(g.size());
  if (gcd64(s, period) != 1) throw std::invalid_argument("reindex_to_qpoly: gcd(s, 2n) must be 1");
  if (g.is_zero()) return g;
  const std::int64_t s_inv = inverse_mod(s, period);
  std::vector<std::int64_t> js;
  for (std::int64_t ex = 0; ex < period; ++ex)
    if (!g.coeff(ex).is_zero()) js.push_back(ex * s_inv % period);

  std::int64_t best_shift = 0, best_width = period;
  for (std::int64_t shift = 0; shift < period; ++shift) {
    std::int64_t lo = period, hi = -1;
    for (auto j : js) {
      const std::int64_t jj = (j + shift) % period;
      lo = std::min(lo, jj);
      hi = std::max(hi, jj);
    }
    if (lo == 0 && hi < best_width) {
      best_width = hi;
      best_shift = shift;
    }
  }
  return g.compose_monomial(s * best_shift);
}

}  // namespace hermcodes
