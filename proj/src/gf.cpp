#include "hermcodes/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hermcodes/fp_matrix.hpp"

namespace hermcodes {

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  const std::size_t deg = f.size() - 1;  // f monic
  for (std::size_t k = prod.size(); k-- > deg;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i < deg; ++i) prod[k - deg + i] = (prod[k - deg + i] + (p - c) * f[i]) % p;
    prod[k] = 0;
  }
  Poly out(std::min(prod.size(), deg));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  trim(out);
  return out;
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& f, std::uint32_t p) {
  Poly result{1};
  while (k) {
    if (k & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    k >>= 1;
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  const Poly x{0, 1};
  // x^{p^deg} = x mod f, and gcd(x^{p^k} - x, f) = 1 for proper divisors k.
  Poly h = x;
  for (std::size_t k = 1; k <= deg; ++k) {
    h = poly_powmod(h, p, f, p);
    if (k == deg) return h == x;
    if (deg % k == 0) {
      const Poly g = poly_gcd(f, poly_sub(h, x, p), p);
      if (g.size() != 1) return false;
    }
  }
  return false;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d) continue;
    out.push_back(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t b, std::uint64_t k, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (k) {
    if (k & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    k >>= 1;
  }
  return r;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t k) {
  std::uint64_t r = 1;
  while (k--) r *= b;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
  const auto factors = prime_factors(q);
  if (factors.size() != 1) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
  std::uint32_t e = 0;
  for (std::uint64_t v = q; v > 1; v /= factors[0]) ++e;
  return {static_cast<std::uint32_t>(factors[0]), e};
}

TowerPtr FieldTower::make(std::uint32_t p, std::uint32_t e, std::uint32_t n,
                          std::optional<std::vector<std::uint32_t>> modulus, TableMode tables) {
  if (!is_prime(p)) throw std::invalid_argument("make_tower: p = " + std::to_string(p) + " is not prime");
  if (e == 0 || n == 0) throw std::invalid_argument("make_tower: e and n must be positive");

  auto t = std::shared_ptr<FieldTower>(new FieldTower());
  t->p_ = p;
  t->e_ = e;
  t->n_ = n;
  t->degree_ = 2 * n * e;
  long double approx = 1;
  for (std::uint32_t i = 0; i < t->degree_; ++i) approx *= p;
  if (approx > 4294967296.0L)
    throw std::invalid_argument("make_tower: fields with more than 2^32 elements are not supported");
  t->q_ = ipow(p, e);
  t->order_ = ipow(p, t->degree_);
  t->prime_factors_ = prime_factors(t->order_ - 1);

  const std::uint32_t N = t->degree_;
  if (modulus) {
    Poly f = *modulus;
    if (f.size() != N + 1 || f.back() % p == 0)
      throw std::invalid_argument("make_tower: modulus must have degree " + std::to_string(N));
    for (auto& c : f) c %= p;
    const std::uint64_t lead_inv = inv_mod(f.back(), p);
    for (auto& c : f) c = static_cast<std::uint32_t>(c * lead_inv % p);
    if (!is_irreducible(f, p)) throw std::invalid_argument("make_tower: supplied modulus is reducible");
    t->modulus_ = std::move(f);
  } else {
    const Poly x{0, 1};
    for (std::uint64_t k = 1; k < t->order_; ++k) {
      Poly f(N + 1, 0);
      std::uint64_t v = k;
      for (std::uint32_t i = 0; i < N; ++i, v /= p) f[i] = static_cast<std::uint32_t>(v % p);
      f[N] = 1;
      if (f[0] == 0 || !is_irreducible(f, p)) continue;
      bool primitive = true;
      for (auto r : t->prime_factors_) {
        if (poly_powmod(x, (t->order_ - 1) / r, f, p) == Poly{1}) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        t->modulus_ = std::move(f);
        break;
      }
    }
    if (t->modulus_.empty()) throw std::logic_error("make_tower: no primitive modulus found");
  }

  const std::uint64_t m = t->order_ - 1;
  for (std::uint32_t k = 0; k < 2 * n; ++k) t->frob_q_.push_back(powmod64(t->q_, k, m));
  for (std::uint32_t k = 0; k < N; ++k) t->frob_p_.push_back(powmod64(p, k, m));

  t->generator_ = t->find_generator();
  if (tables == TableMode::Auto && t->order_ <= kTableLimit) t->build_tables();
  t->build_bases();
  return t;
}

bool FieldTower::same_as(const FieldTower& other) const noexcept {
  return p_ == other.p_ && e_ == other.e_ && n_ == other.n_ && modulus_ == other.modulus_;
}

FFElement FieldTower::from_int(std::int64_t c) const noexcept {
  const std::int64_t r = ((c % static_cast<std::int64_t>(p_)) + p_) % p_;
  return {static_cast<std::uint32_t>(r)};
}

FFElement FieldTower::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > degree_) throw std::invalid_argument("from_coeffs: too many coefficients");
  std::uint64_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("from_coeffs: coefficient out of range");
    v = v * p_ + coeffs[i];
  }
  return {static_cast<std::uint32_t>(v)};
}

std::vector<std::uint32_t> FieldTower::coeffs(FFElement x) const {
  std::vector<std::uint32_t> out(degree_);
  std::uint32_t v = x.value;
  for (std::uint32_t i = 0; i < degree_; ++i, v /= p_) out[i] = v % p_;
  return out;
}

FFElement FieldTower::from_value(std::uint64_t value) const {
  if (value >= order_) throw std::invalid_argument("from_value: value out of range");
  return {static_cast<std::uint32_t>(value)};
}

std::uint32_t FieldTower::digit_add(std::uint32_t a, std::uint32_t b) const noexcept {
  std::uint64_t result = 0, place = 1;
  while (a || b) {
    result += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return static_cast<std::uint32_t>(result);
}

FFElement FieldTower::add(FFElement a, FFElement b) const noexcept {
  if (p_ == 2) return {a.value ^ b.value};
  if (!add_.empty()) return {add_[std::size_t{a.value} * order_ + b.value]};
  return {digit_add(a.value, b.value)};
}

FFElement FieldTower::neg(FFElement a) const noexcept {
  if (p_ == 2) return a;
  if (!neg_.empty()) return {neg_[a.value]};
  std::uint64_t result = 0, place = 1;
  for (std::uint32_t v = a.value; v; v /= p_, place *= p_) result += ((p_ - v % p_) % p_) * place;
  return {static_cast<std::uint32_t>(result)};
}

FFElement FieldTower::sub(FFElement a, FFElement b) const noexcept { return add(a, neg(b)); }

FFElement FieldTower::slow_mul(FFElement a, FFElement b) const noexcept {
  Poly pa = coeffs(a), pb = coeffs(b);
  trim(pa);
  trim(pb);
  const Poly r = poly_mulmod(pa, pb, modulus_, p_);
  std::uint64_t v = 0;
  for (std::size_t i = r.size(); i-- > 0;) v = v * p_ + r[i];
  return {static_cast<std::uint32_t>(v)};
}

FFElement FieldTower::slow_pow(FFElement a, std::uint64_t k) const noexcept {
  FFElement result = one();
  while (k) {
    if (k & 1) result = slow_mul(result, a);
    a = slow_mul(a, a);
    k >>= 1;
  }
  return result;
}

FFElement FieldTower::mul(FFElement a, FFElement b) const noexcept {
  if (a.is_zero() || b.is_zero()) return zero();
  if (exp_.empty()) return slow_mul(a, b);
  std::uint64_t idx = std::uint64_t{log_[a.value]} + log_[b.value];
  const std::uint64_t m = order_ - 1;
  if (idx >= m) idx -= m;
  return {exp_[idx]};
}

FFElement FieldTower::scale(FFElement a, std::uint32_t c) const noexcept { return mul(a, from_int(c)); }

FFElement FieldTower::inv(FFElement a) const {
  if (a.is_zero()) throw std::domain_error("FieldTower::inv: zero has no inverse");
  if (exp_.empty()) return slow_pow(a, order_ - 2);
  const std::uint64_t m = order_ - 1;
  return {exp_[(m - log_[a.value]) % m]};
}

FFElement FieldTower::pow(FFElement a, std::uint64_t k) const noexcept {
  if (k == 0) return one();
  if (a.is_zero()) return zero();
  const std::uint64_t m = order_ - 1;
  if (exp_.empty()) return slow_pow(a, k % m == 0 ? m : k % m);
  return {exp_[mulmod64(log_[a.value], k % m, m)]};
}

FFElement FieldTower::frobenius(FFElement x, std::int64_t k) const noexcept {
  const std::int64_t period = 2 * static_cast<std::int64_t>(n_);
  const std::size_t kk = static_cast<std::size_t>(((k % period) + period) % period);
  if (x.is_zero() || kk == 0) return x;
  return pow(x, frob_q_[kk]);
}

FFElement FieldTower::frobenius_p(FFElement x, std::int64_t k) const noexcept {
  const std::int64_t period = degree_;
  const std::size_t kk = static_cast<std::size_t>(((k % period) + period) % period);
  if (x.is_zero() || kk == 0) return x;
  return pow(x, frob_p_[kk]);
}

bool FieldTower::in_subfield(FFElement x, std::uint32_t deg) const {
  if (deg == 0 || (2 * n_) % deg != 0)
    throw std::invalid_argument("in_subfield: degree " + std::to_string(deg) + " does not divide 2n");
  return frobenius(x, deg) == x;
}

FFElement FieldTower::rel_trace(FFElement x, std::uint32_t from_deg, std::uint32_t to_deg) const {
  if (to_deg == 0 || from_deg % to_deg != 0)
    throw std::invalid_argument("rel_trace: target degree must divide source degree");
  if (!in_subfield(x, from_deg)) throw std::invalid_argument("rel_trace: element not in the source subfield");
  FFElement acc = zero();
  for (std::uint32_t i = 0; i < from_deg / to_deg; ++i) acc = add(acc, frobenius(x, std::int64_t{to_deg} * i));
  return acc;
}

FFElement FieldTower::rel_norm(FFElement x, std::uint32_t from_deg, std::uint32_t to_deg) const {
  if (to_deg == 0 || from_deg % to_deg != 0)
    throw std::invalid_argument("rel_norm: target degree must divide source degree");
  if (!in_subfield(x, from_deg)) throw std::invalid_argument("rel_norm: element not in the source subfield");
  FFElement acc = one();
  for (std::uint32_t i = 0; i < from_deg / to_deg; ++i) acc = mul(acc, frobenius(x, std::int64_t{to_deg} * i));
  return acc;
}

FFElement FieldTower::trace_to_q2(FFElement x) const noexcept {
  FFElement acc = zero();
  for (std::uint32_t i = 0; i < n_; ++i) acc = add(acc, frobenius(x, 2 * std::int64_t{i}));
  return acc;
}

std::uint32_t FieldTower::trace_q_to_p(FFElement x) const {
  if (!in_subfield(x, 1)) throw std::invalid_argument("trace_q_to_p: element not in F_q");
  FFElement acc = zero();
  for (std::uint32_t i = 0; i < e_; ++i) acc = add(acc, frobenius_p(x, i));
  return acc.value;  // F_p sits at values 0..p-1
}

bool FieldTower::is_square_in_fq(FFElement x) const {
  if (p_ == 2) throw std::invalid_argument("is_square_in_fq: q must be odd");
  if (!in_subfield(x, 1)) throw std::invalid_argument("is_square_in_fq: element not in F_q");
  if (x.is_zero()) return true;
  return pow(x, (q_ - 1) / 2) == one();
}

const std::vector<FFElement>& FieldTower::subfield_basis(std::uint32_t deg) const {
  auto it = subfield_bases_.find(deg);
  if (it == subfield_bases_.end())
    throw std::invalid_argument("subfield_basis: degree " + std::to_string(deg) + " does not divide 2n");
  return it->second;
}

std::vector<FFElement> FieldTower::subfield_elements(std::uint32_t deg) const {
  const auto& basis = subfield_basis(deg);
  std::vector<FFElement> out{zero()};
  for (const auto& b : basis) {
    const std::size_t cur = out.size();
    for (std::uint32_t c = 1; c < p_; ++c)
      for (std::size_t i = 0; i < cur; ++i) out.push_back(add(out[i], scale(b, c)));
  }
  return out;
}

std::uint32_t FieldTower::log(FFElement x) const {
  if (exp_.empty()) throw std::logic_error("FieldTower::log: tower built without tables");
  if (x.is_zero()) throw std::domain_error("FieldTower::log: log of zero");
  return log_[x.value];
}

FFElement FieldTower::find_generator() const {
  for (std::uint64_t v = 1; v < order_; ++v) {
    const FFElement a{static_cast<std::uint32_t>(v)};
    bool primitive = true;
    for (auto r : prime_factors_) {
      if (slow_pow(a, (order_ - 1) / r) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) return a;
  }
  throw std::logic_error("FieldTower: no primitive element");
}

void FieldTower::build_tables() {
  const std::uint64_t m = order_ - 1;
  exp_.assign(m, 0);
  log_.assign(order_, 0);
  FFElement cur = one();
  for (std::uint64_t i = 0; i < m; ++i) {
    exp_[i] = cur.value;
    log_[cur.value] = static_cast<std::uint32_t>(i);
    cur = slow_mul(cur, generator_);
  }
  if (p_ != 2) {
    neg_.assign(order_, 0);
    for (std::uint64_t v = 0; v < order_; ++v) {
      std::uint64_t result = 0, place = 1;
      for (std::uint64_t w = v; w; w /= p_, place *= p_) result += ((p_ - w % p_) % p_) * place;
      neg_[v] = static_cast<std::uint32_t>(result);
    }
    if (order_ <= 1024) {
      add_.assign(order_ * order_, 0);
      for (std::uint64_t a = 0; a < order_; ++a)
        for (std::uint64_t b = 0; b < order_; ++b)
          add_[a * order_ + b] = digit_add(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
  }
}

void FieldTower::build_bases() {
  const std::uint32_t N = degree_;
  for (std::uint32_t d = 1; d <= 2 * n_; ++d) {
    if ((2 * n_) % d) continue;
    FpMatrix a(N, N, p_);
    for (std::uint32_t i = 0; i < N; ++i) {
      const FFElement xi{static_cast<std::uint32_t>(ipow(p_, i))};
      const auto img = coeffs(sub(frobenius(xi, d), xi));
      for (std::uint32_t r = 0; r < N; ++r) a(r, i) = img[r];
    }
    const FpMatrix ns = nullspace(a);
    std::vector<FFElement> basis;
    for (std::size_t r = 0; r < ns.rows(); ++r) basis.push_back(from_coeffs(ns.row(r)));
    subfield_bases_[d] = std::move(basis);
  }

  q2_basis_.clear();
  FFElement g = one();
  for (std::uint32_t j = 0; j < n_; ++j) {
    q2_basis_.push_back(g);
    g = mul(g, generator_);
  }
  // Invert the trace Gram matrix T_jk = Tr(e_j e_k) over F_{q^2} by Gauss-Jordan.
  const std::size_t n = n_;
  std::vector<std::vector<FFElement>> aug(n, std::vector<FFElement>(2 * n, zero()));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) aug[j][k] = trace_to_q2(mul(q2_basis_[j], q2_basis_[k]));
    aug[j][n + j] = one();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && aug[sel][c].is_zero()) ++sel;
    if (sel == n) throw std::logic_error("FieldTower: trace form degenerate on the F_{q^2}-basis");
    std::swap(aug[sel], aug[c]);
    const FFElement piv = inv(aug[c][c]);
    for (auto& v : aug[c]) v = mul(v, piv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c].is_zero()) continue;
      const FFElement f = aug[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) aug[r][k] = sub(aug[r][k], mul(f, aug[c][k]));
    }
  }
  q2_dual_.assign(n, zero());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) q2_dual_[k] = add(q2_dual_[k], mul(aug[k][n + l], q2_basis_[l]));
}

FFElement find_gamma(const FieldTower& t) {
  if (t.p() == 2) throw std::invalid_argument("find_gamma: q must be odd");
  FFElement g = t.one();
  for (std::uint64_t k = 0; k < t.order() - 1; ++k) {
    if (!t.is_square_in_fq(t.rel_norm(g, 2 * t.n(), 1))) return g;
    g = t.mul(g, t.generator());
  }
  throw std::logic_error("find_gamma: no element with non-square norm");
}

FFElement find_alpha(const FieldTower& t) {
  if (t.p() == 2) throw std::invalid_argument("find_alpha: q must be odd");
  const FFElement minus_one = t.neg(t.one());
  FFElement g = t.one();
  for (std::uint64_t k = 0; k < t.order() - 1; ++k) {
    if (t.pow(g, t.q() - 1) == minus_one) return g;
    g = t.mul(g, t.generator());
  }
  throw std::logic_error("find_alpha: no element with alpha^{q-1} = -1");
}

}  // namespace hermcodes
