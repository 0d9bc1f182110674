#include "hermcodes/field_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hermcodes {

FieldMatrix FieldMatrix::identity(const FieldTower& t, std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = t.one();
  return m;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](FFElement x) { return x.is_zero(); });
}

FieldMatrix mat_mul(const FieldTower& t, const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  FieldMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = t.add(out(r, c), t.mul(a(r, k), b(k, c)));
    }
  return out;
}

FieldMatrix mat_add(const FieldTower& t, const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat_add: shape mismatch");
  FieldMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = t.add(a(r, c), b(r, c));
  return out;
}

FieldMatrix conj_transpose(const FieldTower& t, const FieldMatrix& a) {
  FieldMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = t.frobenius(a(r, c), 1);
  return out;
}

std::size_t mat_rank(const FieldTower& t, FieldMatrix a) {
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t sel = lead;
    while (sel < a.rows() && a(sel, c).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != lead)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(sel, k), a(lead, k));
    const FFElement piv = t.inv(a(lead, c));
    for (std::size_t r = lead + 1; r < a.rows(); ++r) {
      if (a(r, c).is_zero()) continue;
      const FFElement f = t.mul(a(r, c), piv);
      for (std::size_t k = c; k < a.cols(); ++k) a(r, k) = t.sub(a(r, k), t.mul(f, a(lead, k)));
    }
    ++lead;
  }
  return lead;
}

std::optional<FieldMatrix> mat_inverse(const FieldTower& t, const FieldMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  FieldMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = t.one();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && aug(sel, c).is_zero()) ++sel;
    if (sel == n) return std::nullopt;
    if (sel != c)
      for (std::size_t k = 0; k < 2 * n; ++k) std::swap(aug(sel, k), aug(c, k));
    const FFElement piv = t.inv(aug(c, c));
    for (std::size_t k = 0; k < 2 * n; ++k) aug(c, k) = t.mul(aug(c, k), piv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug(r, c).is_zero()) continue;
      const FFElement f = aug(r, c);
      for (std::size_t k = 0; k < 2 * n; ++k) aug(r, k) = t.sub(aug(r, k), t.mul(f, aug(c, k)));
    }
  }
  FieldMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

}  // namespace hermcodes
