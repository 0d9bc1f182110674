#include "hermcodes/equivalence.hpp"

#include <random>
#include <stdexcept>

#include "hermcodes/scheme.hpp"

namespace hermcodes {

namespace {

std::vector<std::uint32_t> flatten(const std::vector<FpMatrix>& blocks) {
  std::vector<std::uint32_t> v;
  for (const auto& b : blocks)
    for (std::size_t r = 0; r < b.rows(); ++r) v.insert(v.end(), b.row(r).begin(), b.row(r).end());
  return v;
}

bool in_row_space(const FpMatrix& basis_rref, const std::vector<std::size_t>& pivots, std::vector<std::uint32_t> v) {
  const std::uint32_t p = basis_rref.p();
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::uint32_t c = v[pivots[r]];
    if (c == 0) continue;
    const auto row = basis_rref.row(r);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = static_cast<std::uint32_t>((v[k] + std::uint64_t(p - c) * row[k]) % p);
  }
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

std::vector<FpMatrix> combine(const std::vector<std::vector<FpMatrix>>& basis, const std::vector<std::uint32_t>& coef,
                              std::uint32_t p) {
  std::vector<FpMatrix> out;
  for (const auto& blk : basis.front()) out.emplace_back(blk.rows(), blk.cols(), p);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coef[k] == 0) continue;
    for (std::size_t b = 0; b < out.size(); ++b)
      for (std::size_t r = 0; r < out[b].rows(); ++r)
        for (std::size_t c = 0; c < out[b].cols(); ++c)
          out[b](r, c) = static_cast<std::uint32_t>((out[b](r, c) + std::uint64_t(coef[k]) * basis[k][b](r, c)) % p);
  }
  return out;
}

bool all_blocks_invertible(const std::vector<FpMatrix>& blocks) {
  for (const auto& b : blocks)
    if (rank(b) != b.rows()) return false;
  return true;
}

// Fills in order, closure, invertibility and the field verdict.
void analyse(EndoSolution& sol, std::uint32_t p, std::uint64_t q) {
  sol.dimension = sol.basis.size();
  sol.order = big_pow(BigInt(p), static_cast<unsigned>(sol.dimension));
  if (sol.basis.empty()) {
    sol.closed = true;
    sol.invertible = true;
    sol.exhaustive = true;
    sol.is_field = false;
    return;
  }
  FpMatrix span(0, 0, p);
  for (const auto& e : sol.basis) span.append_row(flatten(e));
  FpMatrix reduced = span;
  const auto pivots = rref(reduced);

  sol.closed = true;
  for (const auto& a : sol.basis) {
    for (const auto& b : sol.basis) {
      std::vector<FpMatrix> prod;
      for (std::size_t k = 0; k < a.size(); ++k) prod.push_back(a[k] * b[k]);
      if (!in_row_space(reduced, pivots, flatten(prod))) {
        sol.closed = false;
        break;
      }
    }
    if (!sol.closed) break;
  }

  const BigInt limit = big_pow(BigInt(q), 4);
  sol.invertible = true;
  sol.exhaustive = sol.order <= limit;
  if (sol.exhaustive) {
    std::vector<std::uint32_t> coef(sol.basis.size(), 0);
    for (;;) {
      std::size_t i = 0;
      for (; i < coef.size(); ++i) {
        if (++coef[i] < p) break;
        coef[i] = 0;
      }
      if (i == coef.size()) break;
      if (!all_blocks_invertible(combine(sol.basis, coef, p))) {
        sol.invertible = false;
        break;
      }
    }
  } else {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
    for (int trial = 0; trial < 256 && sol.invertible; ++trial) {
      std::vector<std::uint32_t> coef(sol.basis.size());
      bool nonzero = false;
      for (auto& c : coef) nonzero |= (c = digit(rng)) != 0;
      if (nonzero && !all_blocks_invertible(combine(sol.basis, coef, p))) sol.invertible = false;
    }
  }
  sol.is_field = sol.closed && sol.invertible;
}

// Coordinates of an F_{q^2} element in the canonical F_p-basis of F_{q^2},
// read off at the basis pivots (the basis is in RREF).
class Fq2Coords {
 public:
  explicit Fq2Coords(const FieldTower& t) : t_(t) {
    for (FFElement b : t.subfield_basis(2)) {
      const auto d = t.coeffs(b);
      std::size_t c = 0;
      while (d[c] == 0) ++c;
      pivots_.push_back(c);
    }
  }
  std::size_t size() const { return pivots_.size(); }
  void append(FFElement x, std::vector<std::uint32_t>& out) const {
    const auto d = t_.coeffs(x);
    for (auto c : pivots_) out.push_back(d[c]);
  }

 private:
  const FieldTower& t_;
  std::vector<std::size_t> pivots_;
};

// F_p matrix of x -> xZ on F_{q^2}^n, rows indexed by β_k e_j.
FpMatrix action_matrix(const FieldTower& t, const Fq2Coords& coords, const FieldMatrix& z) {
  const std::size_t n = z.rows();
  const auto& beta = t.subfield_basis(2);
  FpMatrix m(0, n * coords.size(), t.p());
  for (std::size_t j = 0; j < n; ++j)
    for (FFElement b : beta) {
      std::vector<std::uint32_t> row;
      for (std::size_t c = 0; c < n; ++c) coords.append(t.mul(b, z(j, c)), row);
      m.append_row(row);
    }
  return m;
}

std::vector<std::uint32_t> matrix_digits(const FieldTower& t, const FieldMatrix& a) {
  std::vector<std::uint32_t> out;
  for (FFElement x : a.entries()) {
    const auto d = t.coeffs(x);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

EndoSolution idealiser(const HermCode& c, bool left) {
  const FieldTower& t = c.field();
  const std::size_t n = t.n();
  const std::uint32_t p = t.p();

  std::vector<HermMatrix> grams;
  for (const auto& g : c.generators()) grams.push_back(gram_matrix(g));
  FpMatrix gen_digits(0, n * n * t.degree(), p);
  for (const auto& g : grams) gen_digits.append_row(matrix_digits(t, g));
  // v ∈ span(C) iff h·v = 0 for every row h of the parity check.
  const FpMatrix parity = nullspace(gen_digits);

  std::vector<FieldMatrix> unknowns;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (FFElement beta : t.subfield_basis(2)) {
        FieldMatrix z(n, n);
        z(a, b) = beta;
        unknowns.push_back(std::move(z));
      }

  FpMatrix system(0, unknowns.size(), p);
  for (const auto& g : grams) {
    std::vector<std::vector<std::uint32_t>> images;
    for (const auto& z : unknowns) images.push_back(matrix_digits(t, left ? mat_mul(t, z, g) : mat_mul(t, g, z)));
    for (std::size_t h = 0; h < parity.rows(); ++h) {
      std::vector<std::uint32_t> row(unknowns.size(), 0);
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < images[u].size(); ++k) acc += std::uint64_t(parity(h, k)) * images[u][k];
        row[u] = static_cast<std::uint32_t>(acc % p);
      }
      system.append_row(row);
    }
  }
  const FpMatrix sols = system.rows() == 0 ? FpMatrix::identity(unknowns.size(), p) : nullspace(system);

  const Fq2Coords coords(t);
  EndoSolution out;
  bool scalar = true;
  for (std::size_t r = 0; r < sols.rows(); ++r) {
    FieldMatrix z(n, n);
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          z(a, b) = t.add(z(a, b), t.scale(unknowns[u](a, b), sols(r, u)));
    for (std::size_t a = 0; a < n && scalar; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const FFElement expect = a == b ? z(0, 0) : t.zero();
        if (z(a, b) != expect || !t.in_subfield(z(a, b), 1)) {
          scalar = false;
          break;
        }
      }
    out.basis.push_back({action_matrix(t, coords, z)});
  }
  out.scalar = scalar;
  analyse(out, p, t.q());
  return out;
}

}  // namespace

EndoSolution kernel_K(const HermCode& c) {
  const FieldTower& t = c.field();
  const std::size_t N = t.degree();
  const std::uint32_t p = t.p();
  FpMatrix system(0, 2 * N * N, p);
  for (const auto& g : c.generators()) {
    const FpMatrix m = fp_map_matrix(g);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        std::vector<std::uint32_t> row(2 * N * N, 0);
        // (N1 M)_ab - (M N2)_ab
        for (std::size_t k = 0; k < N; ++k) {
          row[a * N + k] = (row[a * N + k] + m(k, b)) % p;
          row[N * N + k * N + b] = (row[N * N + k * N + b] + p - m(a, k)) % p;
        }
        system.append_row(row);
      }
  }
  const FpMatrix sols = system.rows() == 0 ? FpMatrix::identity(2 * N * N, p) : nullspace(system);

  EndoSolution out;
  for (std::size_t r = 0; r < sols.rows(); ++r) {
    FpMatrix n1(N, N, p), n2(N, N, p);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        n1(a, b) = sols(r, a * N + b);
        n2(a, b) = sols(r, N * N + a * N + b);
      }
    out.basis.push_back({std::move(n1), std::move(n2)});
  }
  if (c.contains(LinPoly::identity(c.tower()))) {
    bool equal = true;
    for (const auto& e : out.basis) equal = equal && e[0] == e[1];
    out.blocks_equal = equal;
  }
  analyse(out, p, t.q());
  return out;
}

EndoSolution left_idealiser(const HermCode& c) { return idealiser(c, true); }
EndoSolution right_idealiser(const HermCode& c) { return idealiser(c, false); }

bool endo_contains(const EndoSolution& sol, const std::vector<FpMatrix>& element) {
  const auto v = flatten(element);
  if (sol.basis.empty()) {
    for (auto x : v)
      if (x != 0) return false;
    return true;
  }
  FpMatrix span(0, 0, element.front().p());
  for (const auto& e : sol.basis) span.append_row(flatten(e));
  if (span.cols() != v.size()) return false;
  const auto pivots = rref(span);
  return in_row_space(span, pivots, v);
}

std::vector<FpMatrix> scalar_endo(const TowerPtr& tower, FFElement a) {
  const FpMatrix m = fp_map_matrix(LinPoly::monomial(tower, a, 0));
  return {m, m};
}

SupportSet universal_support(const HermCode& c) {
  SupportSet s;
  for (const auto& g : c.generators())
    for (std::size_t i = 0; i < g.size(); ++i)
      if (!g.coeffs()[i].is_zero()) s.insert(i);
  return s;
}

SupportSet a_pow_b(const SupportSet& a, const SupportSet& b, std::size_t n) {
  std::vector<int> hits(n, 0);
  for (auto i : a)
    for (auto j : b) ++hits[(i + j) % n];
  SupportSet out;
  for (std::size_t k = 0; k < n; ++k)
    if (hits[k] == 1) out.insert(k);
  return out;
}

bool support_containment(const SupportSet& a, const SupportSet& b, const SupportSet& s, std::size_t n) {
  for (auto k : a_pow_b(a, b, n))
    if (!s.count(k)) return false;
  return true;
}

IndependentSupportReport check_independent_support(const HermCode& c, const SupportSet& b,
                                                   const SupportWitness& witness, std::uint32_t domain_degree) {
  const FieldTower& t = c.field();
  if ((2 * t.n()) % domain_degree != 0) throw std::invalid_argument("witness domain must be a subfield");
  if (witness.size() != b.size()) throw std::invalid_argument("witness must give one map per index of B");
  for (auto i : b) {
    if (i >= t.n()) throw std::invalid_argument("support index out of range");
    if (!witness.count(i)) throw std::invalid_argument("no witness map for index " + std::to_string(i));
  }
  if (b.empty()) return {true, ""};

  const auto domain = t.subfield_elements(domain_degree);
  for (const auto& [i, h] : witness) {
    std::set<std::uint32_t> seen;
    for (FFElement a : domain) {
      const FFElement v = h(a);
      if (!t.in_subfield(v, domain_degree))
        return {false, "h_" + std::to_string(i) + " leaves the domain"};
      if (!seen.insert(v.value).second) return {false, "h_" + std::to_string(i) + " is not injective"};
    }
  }
  for (FFElement a : domain) {
    LinPoly f(c.tower());
    for (const auto& [i, h] : witness) f.set_coeff(static_cast<std::int64_t>(i), h(a));
    if (!c.contains(f)) return {false, "witness polynomial for a = " + std::to_string(a.value) + " is not in C"};
  }
  return {true, ""};
}

Fingerprint invariant_fingerprint(const HermCode& c, std::uint64_t budget) {
  Fingerprint f;
  f.size = c.size();
  f.inner = inner_distribution(c, budget);
  f.dual_inner = dual_inner_distribution(c, DualMethod::DualCode, budget);
  f.design_strength = design_strength(f.dual_inner);
  f.kernel_order = kernel_K(c).order;
  f.left_order = left_idealiser(c).order;
  f.right_order = right_idealiser(c).order;
  f.support_size = universal_support(c).size();
  return f;
}

FingerprintComparison compare_fingerprints(const Fingerprint& a, const Fingerprint& b) {
  FingerprintComparison out;
  if (a.size != b.size) out.differences.push_back("size");
  if (a.inner != b.inner) out.differences.push_back("inner");
  if (a.dual_inner != b.dual_inner) out.differences.push_back("dual_inner");
  if (a.design_strength != b.design_strength) out.differences.push_back("design_strength");
  if (a.kernel_order != b.kernel_order) out.differences.push_back("kernel_order");
  if (a.left_order != b.left_order) out.differences.push_back("left_idealiser_order");
  if (a.right_order != b.right_order) out.differences.push_back("right_idealiser_order");
  out.verdict = out.differences.empty() ? "inconclusive" : "inequivalent";
  return out;
}

}  // namespace hermcodes
