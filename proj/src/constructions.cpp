#include "hermcodes/constructions.hpp"

#include <random>
#include <stdexcept>
#include <utility>

namespace hermcodes {

std::string family_name(Family f) {
  switch (f) {
    case Family::H: return "H";
    case Family::E: return "E";
    case Family::M: return "M";
    case Family::Htilde: return "Htilde";
    case Family::HtildeDual: return "HtildeDual";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::H, Family::E, Family::M, Family::Htilde, Family::HtildeDual})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown family '" + name + "' (expected H, E, M, Htilde or HtildeDual)");
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::string describe(const ConstructionParams& p) {
  const std::string qn = "q=" + std::to_string(p.q) + ",n=" + std::to_string(p.n);
  switch (p.family) {
    case Family::H:
    case Family::E:
      return family_name(p.family) + "(" + qn + ",d=" + std::to_string(p.d) + ",s=" + std::to_string(p.s) + ")";
    case Family::M: return "M(" + qn + ")";
    case Family::Htilde:
    case Family::HtildeDual: return family_name(p.family) + "(" + qn + ",s=" + std::to_string(p.s) + ")";
  }
  return "?";
}

// Accumulates terms c x^{q^{E}} (E even) of a q^2-polynomial, shifted by t.
class TermBuilder {
 public:
  TermBuilder(const TowerPtr& tower, std::int64_t shift) : poly_(tower), shift_(shift) {}

  TermBuilder& add(std::int64_t q_exponent, FFElement c) {
    if (mod(q_exponent, 2) != 0) throw std::logic_error("odd q-exponent in a q^2-polynomial family");
    const std::int64_t idx = q_exponent / 2 + shift_;
    poly_.set_coeff(idx, poly_.field().add(poly_.coeff(idx), c));
    return *this;
  }

  LinPoly done() { return std::move(poly_); }

 private:
  LinPoly poly_;
  std::int64_t shift_;
};

FFElement random_in(const FieldTower& t, std::uint32_t deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> digit(0, t.p() - 1);
  FFElement x = t.zero();
  for (FFElement b : t.subfield_basis(deg)) x = t.add(x, t.scale(b, digit(rng)));
  return x;
}

HermCode assemble(const TowerPtr& tower, const ConstructionParams& params, int declared_d) {
  const auto slots = family_slots(tower, params);
  std::vector<LinPoly> gens;
  std::uint64_t seed = 7;
  for (const auto& slot : slots) {
    if (!slot_is_fq_linear(*tower, slot, 4, seed++))
      throw std::logic_error("construction slot is not F_q-linear");
    for (FFElement b : tower->subfield_basis(slot.domain_degree)) {
      LinPoly f = slot.map(b);
      if (!is_hermitian(f)) throw std::logic_error("construction produced a non-Hermitian generator");
      gens.push_back(std::move(f));
    }
  }
  std::string label = describe(params);
  const std::int64_t t = normalising_shift(params.s, params.n);
  if (t != 0) label += " o x^{q^" + std::to_string(2 * t) + "}";
  return HermCode(tower, std::move(gens), CodeModel::Poly, label, declared_d);
}

}  // namespace

void validate(const ConstructionParams& p) {
  const auto [prime, e] = split_prime_power(p.q);
  (void)prime;
  (void)e;
  const std::int64_t n = p.n;
  const std::int64_t d = p.d;
  const std::int64_t s = p.s;
  if (n < 1) throw std::invalid_argument("n must be positive");
  switch (p.family) {
    case Family::H:
      if (mod(s, 2) != 1) throw std::invalid_argument("H: s must be odd");
      if (gcd64(s, n) != 1) throw std::invalid_argument("H: gcd(s, n) must be 1");
      if (d < 1 || d > n - 1) throw std::invalid_argument("H: need 1 <= d <= n-1");
      if ((n + d) % 2 != 1) throw std::invalid_argument("H: n and d must have opposite parity");
      break;
    case Family::E:
      if (mod(s, 2) != 1) throw std::invalid_argument("E: s must be odd");
      if (gcd64(s, n) != 1) throw std::invalid_argument("E: gcd(s, n) must be 1");
      if (n % 2 != 1 || d % 2 != 1) throw std::invalid_argument("E: n and d must both be odd");
      if (d < 1 || d > n) throw std::invalid_argument("E: need 1 <= d <= n");
      break;
    case Family::M:
      if (n < 2) throw std::invalid_argument("M: need n >= 2");
      break;
    case Family::Htilde:
    case Family::HtildeDual:
      if (p.q % 2 == 0) throw std::invalid_argument("Htilde: q must be odd");
      if (n % 2 != 1 || n < 3) throw std::invalid_argument("Htilde: n must be odd and at least 3");
      if (gcd64(s, 2 * n) != 1) throw std::invalid_argument("Htilde: gcd(s, 2n) must be 1");
      break;
  }
}

TowerPtr tower_for(const ConstructionParams& params) {
  const auto [p, e] = split_prime_power(params.q);
  return FieldTower::make(p, e, params.n, params.modulus);
}

std::int64_t normalising_shift(std::int64_t s, std::uint32_t n) {
  return mod((1 - s) / 2, static_cast<std::int64_t>(n));
}

std::vector<Slot> family_slots(const TowerPtr& tower, const ConstructionParams& params) {
  validate(params);
  const FieldTower& t = *tower;
  if (t.q() != params.q || t.n() != params.n) throw std::invalid_argument("tower does not match q and n");
  const std::int64_t n = params.n;
  const std::int64_t s = params.s;
  const std::int64_t shift = normalising_shift(s, params.n);
  const auto full = static_cast<std::uint32_t>(2 * n);
  const auto half = static_cast<std::uint32_t>(n);
  std::vector<Slot> slots;

  switch (params.family) {
    case Family::H:
      // (b_j x)^{q^{2s(n-j+1)}} + b_j^{q^s} x^{q^{2sj}}
      for (std::int64_t j = 1; j <= (n - params.d + 1) / 2; ++j)
        slots.push_back({full, [tower, shift, n, s, j](FFElement b) {
                           const FieldTower& f = *tower;
                           return TermBuilder(tower, shift)
                               .add(2 * s * (n - j + 1), f.frobenius(b, 2 * s * (n - j + 1)))
                               .add(2 * s * j, f.frobenius(b, s))
                               .done();
                         }});
      break;
    case Family::E:
      // (b_0 x)^{q^{s(n+1)}}
      slots.push_back({half, [tower, shift, n, s](FFElement b) {
                         return TermBuilder(tower, shift).add(s * (n + 1), tower->frobenius(b, s * (n + 1))).done();
                       }});
      // (b_j x)^{q^{s(n+2j+1)}} + b_j^{q^s} x^{q^{s(n-2j+1)}}
      for (std::int64_t j = 1; j <= (n - params.d) / 2; ++j)
        slots.push_back({full, [tower, shift, n, s, j](FFElement b) {
                           const FieldTower& f = *tower;
                           return TermBuilder(tower, shift)
                               .add(s * (n + 2 * j + 1), f.frobenius(b, s * (n + 2 * j + 1)))
                               .add(s * (n - 2 * j + 1), f.frobenius(b, s))
                               .done();
                         }});
      break;
    case Family::M:
      throw std::invalid_argument("M is a matrix-model code without polynomial slots");
    case Family::Htilde: {
      const FFElement gamma = params.gamma.value_or(find_gamma(t));
      if (t.is_square_in_fq(t.rel_norm(gamma, full, 1)) || gamma.is_zero())
        throw std::invalid_argument("Htilde: N(gamma) must be a non-square in F_q");
      // b x^{q^{s(n+1)}}
      slots.push_back({half, [tower, shift, n, s](FFElement b) {
                         return TermBuilder(tower, shift).add(s * (n + 1), b).done();
                       }});
      // aγ x^{q^{s(n-1)}} + (aγ)^{q^{s(n+2)}} x^{q^{s(n+3)}}
      slots.push_back({half, [tower, shift, n, s, gamma](FFElement a) {
                         const FieldTower& f = *tower;
                         const FFElement ag = f.mul(a, gamma);
                         return TermBuilder(tower, shift)
                             .add(s * (n - 1), ag)
                             .add(s * (n + 3), f.frobenius(ag, s * (n + 2)))
                             .done();
                       }});
      // c_i x^{q^{2si}} + c_i^{q^{s(2n-2i+1)}} x^{q^{2s(n-i+1)}}
      for (std::int64_t i = 1; i <= (n - 3) / 2; ++i)
        slots.push_back({full, [tower, shift, n, s, i](FFElement c) {
                           return TermBuilder(tower, shift)
                               .add(2 * s * i, c)
                               .add(2 * s * (n - i + 1), tower->frobenius(c, s * (2 * n - 2 * i + 1)))
                               .done();
                         }});
      break;
    }
    case Family::HtildeDual: {
      const FFElement gamma = params.gamma.value_or(find_gamma(t));
      const FFElement alpha = params.alpha.value_or(find_alpha(t));
      if (gamma.is_zero()) throw std::invalid_argument("HtildeDual: gamma must be nonzero");
      if (alpha.is_zero() || t.pow(alpha, t.q() - 1) != t.neg(t.one()))
        throw std::invalid_argument("HtildeDual: alpha^{q-1} must be -1");
      const FFElement scale = t.mul(t.inv(gamma), alpha);
      // cγ^{-1}α x^{q^{s(n-1)}} + (cγ^{-1}α)^{q^{s(n+2)}} x^{q^{s(n+3)}}
      slots.push_back({half, [tower, shift, n, s, scale](FFElement c) {
                         const FieldTower& f = *tower;
                         const FFElement v = f.mul(c, scale);
                         return TermBuilder(tower, shift)
                             .add(s * (n - 1), v)
                             .add(s * (n + 3), f.frobenius(v, s * (n + 2)))
                             .done();
                       }});
      break;
    }
  }
  return slots;
}

bool slot_is_fq_linear(const FieldTower& t, const Slot& slot, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const FFElement lambda = random_in(t, 1, rng);
    const FFElement a = random_in(t, slot.domain_degree, rng);
    const FFElement b = random_in(t, slot.domain_degree, rng);
    const LinPoly lhs = slot.map(t.add(t.mul(lambda, a), b));
    const LinPoly rhs = slot.map(a).scaled(lambda) + slot.map(b);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

HermCode build_H(const TowerPtr& tower, const ConstructionParams& params) {
  ConstructionParams p = params;
  p.family = Family::H;
  return assemble(tower, p, static_cast<int>(p.d));
}

HermCode build_E(const TowerPtr& tower, const ConstructionParams& params) {
  ConstructionParams p = params;
  p.family = Family::E;
  return assemble(tower, p, static_cast<int>(p.d));
}

HermCode build_M(const TowerPtr& tower) {
  const FieldTower& t = *tower;
  const std::size_t n = t.n();
  if (n < 2) throw std::invalid_argument("M: need n >= 2");
  std::vector<HermMatrix> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (FFElement b : t.subfield_basis(2)) {
        HermMatrix m(n, n);
        m(i, j) = b;
        m(j, i) = t.frobenius(b, 1);
        gens.push_back(std::move(m));
      }
  ConstructionParams p;
  p.family = Family::M;
  p.q = t.q();
  p.n = t.n();
  return code_from_matrix_set(tower, gens, describe(p), 2);
}

HermCode build_Htilde(const TowerPtr& tower, const ConstructionParams& params) {
  ConstructionParams p = params;
  p.family = Family::Htilde;
  return assemble(tower, p, 2);
}

HermCode build_Htilde_dual(const TowerPtr& tower, const ConstructionParams& params) {
  ConstructionParams p = params;
  p.family = Family::HtildeDual;
  return assemble(tower, p, static_cast<int>(p.n));
}

HermCode build(const TowerPtr& tower, const ConstructionParams& params) {
  switch (params.family) {
    case Family::H: return build_H(tower, params);
    case Family::E: return build_E(tower, params);
    case Family::M: validate(params); return build_M(tower);
    case Family::Htilde: return build_Htilde(tower, params);
    case Family::HtildeDual: return build_Htilde_dual(tower, params);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace hermcodes
