#include "valform/linalg.hpp"

#include "valform/errors.hpp"

namespace valform::linalg {

std::vector<std::size_t> row_reduce(Matrix& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix rows) { return row_reduce(rows).size(); }

std::size_t rank(const std::vector<GroupElement>& vectors) {
  Matrix m;
  m.reserve(vectors.size());
  for (const auto& v : vectors) m.emplace_back(v.coords().begin(), v.coords().end());
  return rank(std::move(m));
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<std::vector<Rational>> coordinates_in_span(const std::vector<GroupElement>& vectors,
                                                         const GroupElement& target) {
  const std::size_t k = vectors.size();
  const std::size_t d = target.dim();
  // Augmented system: columns are the vectors, last column is the target.
  Matrix aug(d, std::vector<Rational>(k + 1));
  for (std::size_t j = 0; j < k; ++j) {
    if (vectors[j].dim() != d) throw Error("linalg", ErrorCode::DimensionMismatch, "span vectors");
    for (std::size_t i = 0; i < d; ++i) aug[i][j] = vectors[j][i];
  }
  for (std::size_t i = 0; i < d; ++i) aug[i][k] = target[i];
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k) throw Error("linalg", ErrorCode::InvalidArgument, "span vectors are dependent");
  std::vector<Rational> out(k);
  for (std::size_t r = 0; r < pivots.size(); ++r) out[pivots[r]] = aug[r][k];
  return out;
}

}  // namespace valform::linalg
