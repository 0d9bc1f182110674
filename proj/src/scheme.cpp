#include "hermcodes/scheme.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace hermcodes {

CycloInt::CycloInt(std::uint32_t p) : p_(p), coords_(p, BigInt(0)) {}

CycloInt CycloInt::zeta_power(std::uint32_t p, std::uint32_t k) {
  CycloInt z(p);
  z.add_zeta_power(k);
  return z;
}

CycloInt& CycloInt::add_zeta_power(std::uint32_t k, const BigInt& times) {
  coords_[k % p_] += times;
  normalise();
  return *this;
}

CycloInt& CycloInt::operator+=(const CycloInt& rhs) {
  if (rhs.p_ != p_) throw std::invalid_argument("CycloInt: different p");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  normalise();
  return *this;
}

void CycloInt::normalise() {
  const BigInt top = coords_.back();
  if (top == 0) return;
  for (auto& c : coords_) c -= top;
}

bool CycloInt::is_integer() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const BigInt& c) { return c == 0; });
}

BigInt CycloInt::to_integer() const {
  if (!is_integer()) throw std::domain_error("CycloInt is not a rational integer");
  return coords_[0];
}

CycloInt char_value(const FieldTower& t, FFElement x) { return CycloInt::zeta_power(t.p(), t.trace_q_to_p(x)); }

std::uint32_t pairing_exponent(const FieldTower& t, const HermMatrix& a, const HermMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("pairing: shape mismatch");
  // tr(A* B) = Σ conj(a_xy) b_xy
  FFElement acc = t.zero();
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    acc = t.add(acc, t.mul(t.frobenius(a.entries()[k], 1), b.entries()[k]));
  return t.trace_q_to_p(acc);
}

CycloInt pairing(const FieldTower& t, const HermMatrix& a, const HermMatrix& b) {
  return CycloInt::zeta_power(t.p(), pairing_exponent(t, a, b));
}

std::vector<HermMatrix> hermitian_matrix_basis(const FieldTower& t, std::size_t size) {
  std::vector<HermMatrix> out;
  for (std::size_t i = 0; i < size; ++i)
    for (FFElement b : t.subfield_basis(1)) {
      HermMatrix m(size, size);
      m(i, i) = b;
      out.push_back(std::move(m));
    }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      for (FFElement b : t.subfield_basis(2)) {
        HermMatrix m(size, size);
        m(i, j) = b;
        m(j, i) = t.frobenius(b, 1);
        out.push_back(std::move(m));
      }
  return out;
}

namespace {

void add_in_place(const FieldTower& t, FieldMatrix& acc, const FieldMatrix& g) {
  for (std::size_t r = 0; r < acc.rows(); ++r)
    for (std::size_t c = 0; c < acc.cols(); ++c) acc(r, c) = t.add(acc(r, c), g(r, c));
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t budget, const std::string& what) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (total > budget / base) throw BudgetExceeded(what, UINT64_MAX, budget);
    total *= base;
  }
  if (total > budget) throw BudgetExceeded(what, total, budget);
  return total;
}

std::vector<BigInt> to_big(const std::vector<std::uint64_t>& v) {
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

FieldMatrix random_invertible(const FieldTower& t, std::size_t n, std::mt19937_64& rng) {
  const auto elems = t.subfield_elements(2);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (;;) {
    FieldMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = elems[pick(rng)];
    if (mat_rank(t, m) == n) return m;
  }
}

}  // namespace

Eigenvalues eigenvalues(const TowerPtr& tower, std::uint64_t budget, std::uint64_t seed) {
  const FieldTower& t = *tower;
  const std::size_t n = t.n();
  const std::uint32_t p = t.p();
  checked_power(p, n * n * t.e(), budget, "eigenvalue character sums");

  // Two rank-i representatives: diag(1,..,1,0,..,0) and P* D P.
  std::mt19937_64 rng(seed);
  std::vector<std::array<HermMatrix, 2>> reps;
  for (std::size_t i = 0; i <= n; ++i) {
    HermMatrix d(n, n);
    for (std::size_t k = 0; k < i; ++k) d(k, k) = t.one();
    const FieldMatrix pm = random_invertible(t, n, rng);
    reps.push_back({d, mat_mul(t, mat_mul(t, conj_transpose(t, pm), d), pm)});
  }

  // tally[((k * (n+1) + i) * 2 + r) * p + residue]
  const std::size_t cells = (n + 1) * (n + 1) * 2 * p;
  auto visit = [&](std::vector<std::uint64_t>& tally, const HermMatrix& a) {
    const std::size_t k = mat_rank(t, a);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t r = 0; r < 2; ++r)
        ++tally[((k * (n + 1) + i) * 2 + r) * p + pairing_exponent(t, a, reps[i][r])];
  };
  const auto tally = tally_span(
      p, hermitian_matrix_basis(t, n), HermMatrix(n, n),
      [&](HermMatrix& acc, const HermMatrix& g) { add_in_place(t, acc, g); }, std::vector<std::uint64_t>(cells, 0),
      visit, [](std::vector<std::uint64_t>& total, const std::vector<std::uint64_t>& part) {
        for (std::size_t x = 0; x < total.size(); ++x) total[x] += part[x];
      });

  Eigenvalues out;
  out.n = n;
  out.q.assign(n + 1, std::vector<BigInt>(n + 1));
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t i = 0; i <= n; ++i) {
      std::array<CycloInt, 2> sums{CycloInt(p), CycloInt(p)};
      for (std::size_t r = 0; r < 2; ++r)
        for (std::uint32_t res = 0; res < p; ++res)
          sums[r].add_zeta_power(res, BigInt(tally[((k * (n + 1) + i) * 2 + r) * p + res]));
      if (!(sums[0] == sums[1]))
        throw std::logic_error("Q_" + std::to_string(k) + "(" + std::to_string(i) +
                               ") depends on the rank representative");
      if (!sums[0].is_integer())
        throw std::logic_error("Q_" + std::to_string(k) + "(" + std::to_string(i) + ") is not an integer");
      out.q[k][i] = sums[0].to_integer();
    }
  return out;
}

std::vector<BigInt> inner_distribution(const HermCode& c, std::uint64_t budget) {
  c.enumeration_size(budget);
  const FieldTower& t = c.field();
  const std::size_t n = t.n();
  std::vector<FieldMatrix> gens;
  for (const auto& g : c.generators()) gens.push_back(map_matrix(g));
  const auto hist = tally_span(
      t.p(), gens, FieldMatrix(n, n), [&](FieldMatrix& acc, const FieldMatrix& g) { add_in_place(t, acc, g); },
      std::vector<std::uint64_t>(n + 1, 0),
      [&](std::vector<std::uint64_t>& h, const FieldMatrix& m) { ++h[mat_rank(t, m)]; },
      [](std::vector<std::uint64_t>& total, const std::vector<std::uint64_t>& part) {
        for (std::size_t x = 0; x < total.size(); ++x) total[x] += part[x];
      });
  return to_big(hist);
}

std::vector<BigRational> inner_distribution_pairwise(const FieldTower& t, const std::vector<HermMatrix>& set) {
  const std::size_t n = t.n();
  std::vector<BigInt> pairs(n + 1, 0);
  for (const auto& x : set)
    for (const auto& y : set) {
      FieldMatrix diff(x.rows(), x.cols());
      for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t col = 0; col < x.cols(); ++col) diff(r, col) = t.sub(x(r, col), y(r, col));
      ++pairs[mat_rank(t, diff)];
    }
  std::vector<BigRational> out;
  for (const auto& v : pairs) out.emplace_back(v, BigInt(std::max<std::size_t>(set.size(), 1)));
  return out;
}

std::vector<BigInt> eigen_transform(const Eigenvalues& e, const std::vector<BigInt>& inner) {
  std::vector<BigInt> out(e.n + 1, 0);
  for (std::size_t k = 0; k <= e.n; ++k)
    for (std::size_t i = 0; i <= e.n; ++i) out[k] += e.q[k][i] * inner[i];
  return out;
}

std::vector<BigInt> dual_inner_distribution(const HermCode& c, DualMethod method, std::uint64_t budget) {
  std::vector<BigInt> by_dual, by_eigen;
  if (method != DualMethod::Eigenvalues) {
    const HermCode d = dual_code(c);
    by_dual = inner_distribution(d, budget);
    const BigInt size = c.size();
    for (auto& v : by_dual) v *= size;
  }
  if (method != DualMethod::DualCode)
    by_eigen = eigen_transform(eigenvalues(c.tower(), budget), inner_distribution(c, budget));
  if (method == DualMethod::Both && by_dual != by_eigen)
    throw std::logic_error("dual inner distribution: dual-code and eigenvalue methods disagree");
  return method == DualMethod::Eigenvalues ? by_eigen : by_dual;
}

BigInt neg_q_binom(int m, int l, std::int64_t q) {
  if (l < 0 || m < 0 || l > m) return 0;
  const BigInt b = -BigInt(q);
  BigRational acc = 1;
  for (int i = 1; i <= l; ++i) {
    const BigInt num = big_pow(b, static_cast<unsigned>(m - i + 1)) - 1;
    const BigInt den = big_pow(b, static_cast<unsigned>(i)) - 1;
    acc *= make_rational(num, den);
  }
  if (denominator(acc) != 1) throw std::logic_error("negative q-binomial is not integral");
  return numerator(acc);
}

std::vector<BigInt> theorem3_distribution(int n, int d, std::int64_t q, const BigInt& size) {
  if (n < 1 || d < 1 || d > n) throw std::invalid_argument("theorem3_distribution: need 1 <= d <= n");
  const BigInt mq = -BigInt(q);
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1, 0);
  out[0] = 1;
  for (int i = 0; i < n; ++i) {
    BigRational acc = 0;
    for (int j = i; j <= n - d; ++j) {
      const int gap = j - i;
      BigRational term = BigRational(big_pow(mq, static_cast<unsigned>(gap * (gap - 1) / 2)));
      if (gap % 2 == 1) term = -term;
      term *= BigRational(neg_q_binom(j, i, q) * neg_q_binom(n, j, q));
      const BigInt qnj = big_pow(BigInt(q), static_cast<unsigned>(n * j));
      BigRational ratio = make_rational(size, qnj);
      if (((n + 1) * j) % 2 == 1) ratio = -ratio;
      term *= ratio - 1;
      acc += term;
    }
    if (denominator(acc) != 1)
      throw std::domain_error("predicted A_" + std::to_string(n - i) + " is not an integer");
    out[static_cast<std::size_t>(n - i)] = numerator(acc);
  }
  return out;
}

int min_distance(const std::vector<BigInt>& inner) {
  for (std::size_t i = 1; i < inner.size(); ++i)
    if (inner[i] != 0) return static_cast<int>(i);
  return 0;
}

int design_strength(const std::vector<BigInt>& dual_inner) {
  int t = 0;
  for (std::size_t k = 1; k < dual_inner.size() && dual_inner[k] == 0; ++k) t = static_cast<int>(k);
  return t;
}

int design_strength(const HermCode& c, std::uint64_t budget) {
  return design_strength(dual_inner_distribution(c, DualMethod::DualCode, budget));
}

bool bound_saturated(const HermCode& c, int d) {
  const int n = static_cast<int>(c.n());
  if (d < 1 || d > n) return false;
  return c.size() == big_pow(BigInt(c.field().q()), static_cast<unsigned>(n * (n - d + 1)));
}

std::vector<FieldMatrix> subspaces(const FieldTower& t, std::size_t dim, std::uint64_t budget) {
  const std::size_t n = t.n();
  if (dim > n) throw std::invalid_argument("subspaces: dimension exceeds n");
  const auto elems = t.subfield_elements(2);
  std::vector<FieldMatrix> out;
  std::vector<bool> choose(n, false);
  std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(dim), true);
  do {
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < n; ++c)
      if (choose[c]) piv.push_back(c);
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t c = piv[a] + 1; c < n; ++c)
        if (!choose[c]) slots.emplace_back(a, c);
    std::vector<std::size_t> digit(slots.size(), 0);
    for (;;) {
      if (out.size() >= budget) throw BudgetExceeded("subspace enumeration", out.size() + 1, budget);
      FieldMatrix r(dim, n);
      for (std::size_t a = 0; a < dim; ++a) r(a, piv[a]) = t.one();
      for (std::size_t s = 0; s < slots.size(); ++s) r(slots[s].first, slots[s].second) = elems[digit[s]];
      out.push_back(std::move(r));
      std::size_t s = 0;
      for (; s < slots.size(); ++s) {
        if (++digit[s] < elems.size()) break;
        digit[s] = 0;
      }
      if (s == slots.size()) break;
    }
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

HermMatrix restrict_form(const FieldTower& t, const HermMatrix& g, const FieldMatrix& r) {
  return mat_mul(t, mat_mul(t, r, g), conj_transpose(t, r));
}

namespace {

std::vector<std::uint32_t> key_of(const FieldMatrix& m) {
  std::vector<std::uint32_t> k;
  k.reserve(m.entries().size());
  for (auto x : m.entries()) k.push_back(x.value);
  return k;
}

std::vector<HermMatrix> codeword_grams(const HermCode& c, std::uint64_t budget) {
  c.enumeration_size(budget);
  const FieldTower& t = c.field();
  std::vector<HermMatrix> gens;
  for (const auto& g : c.generators()) gens.push_back(gram_matrix(g));
  std::vector<HermMatrix> all;
  enumerate_span(
      t.p(), gens, HermMatrix(t.n(), t.n()), [&](HermMatrix& acc, const HermMatrix& g) { add_in_place(t, acc, g); },
      [&](const HermMatrix& m) { all.push_back(m); });
  return all;
}

ExtensionCounts count_restrictions(const FieldTower& t, const std::vector<HermMatrix>& grams, const FieldMatrix& u) {
  ExtensionCounts counts;
  for (const auto& g : grams) ++counts[key_of(restrict_form(t, g, u))];
  return counts;
}

}  // namespace

ExtensionCounts extension_counts(const HermCode& c, const FieldMatrix& u, std::uint64_t budget) {
  if (u.cols() != c.n()) throw std::invalid_argument("extension_counts: subspace has the wrong width");
  return count_restrictions(c.field(), codeword_grams(c, budget), u);
}

ExtensionReport design_by_extension_count(const HermCode& c, std::size_t t_dim, std::uint64_t budget) {
  const FieldTower& t = c.field();
  ExtensionReport report;
  report.t = t_dim;
  const BigInt forms = big_pow(BigInt(t.q()), static_cast<unsigned>(t_dim * t_dim));
  report.expected = make_rational(c.size(), forms);

  const auto grams = codeword_grams(c, budget);
  const auto us = subspaces(t, t_dim, budget);
  if (static_cast<double>(grams.size()) * static_cast<double>(us.size()) > static_cast<double>(budget))
    throw BudgetExceeded("extension counting", grams.size() * us.size(), budget);

  // Every t×t Hermitian form, in span order.
  std::vector<HermMatrix> all_forms;
  enumerate_span(
      t.p(), hermitian_matrix_basis(t, t_dim), HermMatrix(t_dim, t_dim),
      [&](HermMatrix& acc, const HermMatrix& g) { add_in_place(t, acc, g); },
      [&](const HermMatrix& m) { all_forms.push_back(m); });

  for (const auto& u : us) {
    ++report.subspaces_checked;
    const auto counts = count_restrictions(t, grams, u);
    std::size_t hi = 0, lo = 0;
    std::vector<std::uint64_t> values;
    for (const auto& h : all_forms) {
      auto it = counts.find(key_of(h));
      values.push_back(it == counts.end() ? 0 : it->second);
    }
    for (std::size_t x = 0; x < values.size(); ++x) {
      if (values[x] > values[hi]) hi = x;
      if (values[x] < values[lo]) lo = x;
    }
    if (values[hi] != values[lo]) {
      report.uniform = false;
      report.witness_u = u;
      report.witness_h_high = all_forms[hi];
      report.witness_h_low = all_forms[lo];
      report.count_high = values[hi];
      report.count_low = values[lo];
      return report;
    }
  }
  return report;
}

}  // namespace hermcodes
