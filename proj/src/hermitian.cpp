#include "hermcodes/hermitian.hpp"

#include <stdexcept>

namespace hermcodes {

std::size_t hermitian_partner(std::size_t i, std::size_t n) { return (n - (i % n) + 1) % n; }

std::vector<std::size_t> free_indices(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (i <= hermitian_partner(i, n)) out.push_back(i);
  return out;
}

namespace {

// Exponent (over q) linking c_i to its partner coefficient.
std::int64_t partner_exponent(std::size_t i, std::size_t n) {
  return 2 * static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(i) + 1;
}

}  // namespace

bool is_hermitian(const LinPoly& f) {
  const FieldTower& t = f.field();
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::int64_t>(hermitian_partner(i, n));
    if (f.coeff(j) != t.frobenius(f.coeffs()[i], partner_exponent(i, n))) return false;
  }
  return true;
}

LinPoly from_free_coeffs(const TowerPtr& tower, const std::map<std::size_t, FFElement>& free) {
  const std::size_t n = tower->n();
  LinPoly f(tower);
  for (const auto& [i, v] : free) {
    if (i >= n) throw std::invalid_argument("from_free_coeffs: index out of range");
    const std::size_t j = hermitian_partner(i, n);
    if (j < i) throw std::invalid_argument("from_free_coeffs: index " + std::to_string(i) + " is not a representative");
    if (j == i && !tower->in_subfield(v, static_cast<std::uint32_t>(n)))
      throw std::invalid_argument("from_free_coeffs: fixed-index coefficient must lie in F_{q^n}");
    f.set_coeff(static_cast<std::int64_t>(i), v);
    f.set_coeff(static_cast<std::int64_t>(j), tower->frobenius(v, partner_exponent(i, n)));
  }
  return f;
}

std::vector<LinPoly> hermitian_fp_basis(const TowerPtr& tower) {
  const std::size_t n = tower->n();
  std::vector<LinPoly> out;
  for (std::size_t i : free_indices(n)) {
    std::vector<FFElement> slot;
    if (hermitian_partner(i, n) == i) {
      slot = tower->subfield_basis(static_cast<std::uint32_t>(n));
    } else {
      std::uint64_t v = 1;
      for (std::uint32_t k = 0; k < tower->degree(); ++k, v *= tower->p()) slot.push_back(tower->from_value(v));
    }
    for (FFElement b : slot) out.push_back(from_free_coeffs(tower, {{i, b}}));
  }
  return out;
}

FFElement bilinear_b(const LinPoly& f, const LinPoly& g) {
  require_same_tower(f.field(), g.field());
  const FieldTower& t = f.field();
  FFElement acc = t.zero();
  for (std::size_t i = 0; i < f.size(); ++i) acc = t.add(acc, t.mul(f.coeffs()[i], g.coeffs()[i]));
  return t.trace_to_q2(acc);
}

HermMatrix gram_matrix(const LinPoly& f) {
  const FieldTower& t = f.field();
  const auto& basis = t.q2_basis();
  const std::size_t n = basis.size();
  HermMatrix g(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const FFElement img = f.eval(basis[j]);
    for (std::size_t k = 0; k < n; ++k) g(j, k) = t.trace_to_q2(t.mul(t.frobenius(basis[k], 1), img));
  }
  return g;
}

bool is_hermitian_matrix(const FieldTower& t, const FieldMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (FFElement x : a.entries())
    if (!t.in_subfield(x, 2)) return false;
  return conj_transpose(t, a) == a;
}

namespace {

FpMatrix generator_rows(const TowerPtr& tower, const std::vector<LinPoly>& gens) {
  FpMatrix m(0, static_cast<std::size_t>(tower->degree()) * tower->n(), tower->p());
  for (const auto& g : gens) {
    require_same_tower(*tower, g.field());
    m.append_row(g.to_fp_vector());
  }
  return m;
}

}  // namespace

HermCode::HermCode(TowerPtr tower, std::vector<LinPoly> generators, CodeModel model, std::string label,
                   std::optional<int> declared_d)
    : tower_(std::move(tower)),
      generators_(std::move(generators)),
      model_(model),
      label_(std::move(label)),
      declared_d_(declared_d) {
  for (const auto& g : generators_)
    if (!is_hermitian(g)) throw std::invalid_argument("HermCode: generator is not Hermitian");
  rref_ = generator_rows(tower_, generators_);
  pivots_ = rref(rref_);
  if (pivots_.size() != generators_.size())
    throw std::invalid_argument("HermCode: generators are not F_p-independent");
  FpMatrix trimmed(0, rref_.cols(), rref_.p());
  for (std::size_t r = 0; r < pivots_.size(); ++r) trimmed.append_row(rref_.row(r));
  rref_ = std::move(trimmed);
}

HermCode HermCode::span_of(TowerPtr tower, const std::vector<LinPoly>& polys, CodeModel model, std::string label,
                           std::optional<int> declared_d) {
  std::vector<LinPoly> kept;
  FpMatrix rows(0, static_cast<std::size_t>(tower->degree()) * tower->n(), tower->p());
  for (const auto& f : polys) {
    if (!is_hermitian(f)) throw std::invalid_argument("span_of: polynomial is not Hermitian");
    FpMatrix trial = rows;
    trial.append_row(f.to_fp_vector());
    if (rank(trial) > kept.size()) {
      kept.push_back(f);
      rows = std::move(trial);
    }
  }
  return HermCode(std::move(tower), std::move(kept), model, std::move(label), declared_d);
}

HermCode HermCode::with_label(std::string label) const {
  HermCode c = *this;
  c.label_ = std::move(label);
  return c;
}

HermCode HermCode::with_declared_d(std::optional<int> d) const {
  HermCode c = *this;
  c.declared_d_ = d;
  return c;
}

BigInt HermCode::size() const { return big_pow(BigInt(tower_->p()), static_cast<unsigned>(dimension())); }

std::uint64_t HermCode::enumeration_size(std::uint64_t budget) const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (total > budget / tower_->p()) {
      const BigInt need = size();
      const std::uint64_t shown = need > BigInt(UINT64_MAX) ? UINT64_MAX : need.convert_to<std::uint64_t>();
      throw BudgetExceeded("enumerating " + (label_.empty() ? std::string("code") : label_), shown, budget);
    }
    total *= tower_->p();
  }
  if (total > budget) throw BudgetExceeded("enumerating " + (label_.empty() ? std::string("code") : label_), total, budget);
  return total;
}

bool HermCode::contains(const LinPoly& f) const {
  if (!f.field().same_as(*tower_)) return false;
  auto v = f.to_fp_vector();
  const std::uint32_t p = tower_->p();
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const std::uint32_t c = v[pivots_[r]];
    if (c == 0) continue;
    const auto row = rref_.row(r);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = (v[k] + (p - c) * row[k]) % p;
  }
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

bool HermCode::same_span(const HermCode& other) const {
  return tower_->same_as(*other.tower_) && rref_ == other.rref_;
}

FpMatrix HermCode::generator_matrix() const { return generator_rows(tower_, generators_); }

HermCode full_space(const TowerPtr& tower) {
  return HermCode(tower, hermitian_fp_basis(tower), CodeModel::Poly, "full");
}

HermCode zero_code(const TowerPtr& tower) { return HermCode(tower, {}, CodeModel::Poly, "zero"); }

HermCode dual_code(const HermCode& c) {
  const TowerPtr& tower = c.tower();
  const auto basis = hermitian_fp_basis(tower);
  FpMatrix pairing(c.dimension(), basis.size(), tower->p());
  for (std::size_t a = 0; a < c.dimension(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      pairing(a, b) = tower->trace_q_to_p(bilinear_b(c.generators()[a], basis[b]));
  const FpMatrix kernel = nullspace(pairing);
  std::vector<LinPoly> gens;
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    LinPoly f(tower);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::uint32_t x = kernel(r, b);
      if (x == 0) continue;
      f += basis[b].scaled(tower->from_int(x));
    }
    gens.push_back(std::move(f));
  }
  const std::string label = c.label().empty() ? std::string("dual") : "dual(" + c.label() + ")";
  return HermCode(tower, std::move(gens), c.model(), label);
}

namespace {

// F_p coordinates of a matrix over the ambient field, entry by entry.
std::vector<std::uint32_t> matrix_digits(const FieldTower& t, const FieldMatrix& a) {
  std::vector<std::uint32_t> out;
  for (FFElement x : a.entries()) {
    const auto d = t.coeffs(x);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

class GramSolver {
 public:
  explicit GramSolver(const TowerPtr& tower) : tower_(tower), basis_(hermitian_fp_basis(tower)) {
    const std::size_t n = tower->n();
    system_ = FpMatrix(n * n * tower->degree(), basis_.size(), tower->p());
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const auto digits = matrix_digits(*tower, gram_matrix(basis_[b]));
      for (std::size_t r = 0; r < digits.size(); ++r) system_(r, b) = digits[r];
    }
  }

  LinPoly solve_for(const HermMatrix& a) const {
    const FieldTower& t = *tower_;
    if (a.rows() != t.n() || !is_hermitian_matrix(t, a))
      throw std::invalid_argument("matrix is not an n x n Hermitian matrix over F_{q^2}");
    const auto x = solve(system_, matrix_digits(t, a));
    if (!x) throw std::logic_error("Hermitian matrix outside the Gram image");
    LinPoly f(tower_);
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      if ((*x)[b] == 0) continue;
      f += basis_[b].scaled(t.from_int((*x)[b]));
    }
    return f;
  }

 private:
  TowerPtr tower_;
  std::vector<LinPoly> basis_;
  FpMatrix system_;
};

}  // namespace

LinPoly matrix_to_poly(const TowerPtr& tower, const HermMatrix& a) { return GramSolver(tower).solve_for(a); }

HermCode code_from_matrix_set(const TowerPtr& tower, const std::vector<HermMatrix>& matrices, std::string label,
                              std::optional<int> declared_d) {
  const GramSolver solver(tower);
  std::vector<LinPoly> polys;
  polys.reserve(matrices.size());
  for (const auto& m : matrices) polys.push_back(solver.solve_for(m));
  return HermCode::span_of(tower, polys, CodeModel::Matrix, std::move(label), declared_d);
}

std::vector<std::uint64_t> matrix_code_rank_distribution(const FieldTower& t, const std::vector<HermMatrix>& matrices) {
  std::vector<std::uint64_t> hist(t.n() + 1, 0);
  for (const auto& m : matrices) {
    if (!is_hermitian_matrix(t, m)) throw std::invalid_argument("matrix_code_rank_distribution: non-Hermitian input");
    ++hist[mat_rank(t, m)];
  }
  return hist;
}

}  // namespace hermcodes
