#include "hermcodes/fp_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermcodes {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inv_mod: zero has no inverse");
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a, exp = p - 2;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void FpMatrix::append_row(std::span<const std::uint32_t> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("FpMatrix::append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t v) { return v == 0; });
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix t(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("FpMatrix: shape mismatch in product");
  FpMatrix out(rows_, rhs.cols_, p_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        out(r, c) = static_cast<std::uint32_t>((out(r, c) + a * rhs(k, c)) % p_);
    }
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("FpMatrix: shape mismatch");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + rhs.data_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("FpMatrix: shape mismatch");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + p_ - rhs.data_[i]) % p_;
  return out;
}

std::vector<std::size_t> rref(FpMatrix& m) {
  const std::uint32_t p = m.p();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t sel = lead;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(lead, k));
    const std::uint64_t inv = inv_mod(m(lead, c), p);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) = static_cast<std::uint32_t>(m(lead, k) * inv % p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const std::uint64_t f = p - m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        m(r, k) = static_cast<std::uint32_t>((m(r, k) + f * m(lead, k)) % p);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::size_t rank(FpMatrix m) { return rref(m).size(); }

FpMatrix nullspace(const FpMatrix& m) {
  FpMatrix r = m;
  const auto pivots = rref(r);
  const std::uint32_t p = m.p();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  FpMatrix basis(0, m.cols(), p);
  std::vector<std::uint32_t> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - r(i, free)) % p;
    basis.append_row(v);
  }
  return row_basis(basis);
}

FpMatrix row_basis(const FpMatrix& m) {
  FpMatrix r = m;
  const auto pivots = rref(r);
  FpMatrix out(0, m.cols(), m.p());
  for (std::size_t i = 0; i < pivots.size(); ++i) out.append_row(r.row(i));
  return out;
}

std::optional<std::vector<std::uint32_t>> solve(const FpMatrix& a, std::span<const std::uint32_t> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  FpMatrix aug(a.rows(), a.cols() + 1, a.p());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r] % a.p();
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<std::uint32_t> x(a.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  FpMatrix aug(n, 2 * n, m.p());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  FpMatrix inv(n, n, m.p());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

}  // namespace hermcodes
