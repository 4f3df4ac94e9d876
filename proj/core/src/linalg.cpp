#include "singlen/linalg.hpp"

namespace singlen {

namespace {

std::size_t leading_index(const QVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

} // namespace

QVector RowSpan::reduce(QVector v) const {
  for (const auto& [col, row] : pivots_) {
    if (v[col] == 0) continue;
    Rational factor = v[col];
    for (std::size_t i = col; i < dim_; ++i)
      if (row[i] != 0) v[i] -= factor * row[i];
  }
  return v;
}

bool RowSpan::contains(const QVector& v) const {
  QVector r = reduce(v);
  return leading_index(r) == dim_;
}

bool RowSpan::insert(QVector v) {
  v = reduce(std::move(v));
  std::size_t lead = leading_index(v);
  if (lead == dim_) return false;
  Rational inv = Rational(1) / v[lead];
  for (std::size_t i = lead; i < dim_; ++i)
    if (v[i] != 0) v[i] *= inv;
  // Back-substitute into existing pivot rows to keep full reduction.
  for (auto& [col, row] : pivots_) {
    if (row[lead] == 0) continue;
    Rational factor = row[lead];
    for (std::size_t i = lead; i < dim_; ++i)
      if (v[i] != 0) row[i] -= factor * v[i];
  }
  pivots_.emplace(lead, std::move(v));
  return true;
}

std::size_t exact_rank(const QMatrix& rows) {
  if (rows.empty()) return 0;
  RowSpan span(rows[0].size());
  for (const auto& r : rows) span.insert(r);
  return span.rank();
}

std::optional<QVector> solve_unique(QMatrix m, QVector rhs, bool* underdetermined) {
  if (underdetermined) *underdetermined = false;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    std::swap(rhs[sel], rhs[r]);
    Rational inv = Rational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
      rhs[i] -= factor * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return std::nullopt; // inconsistent
  if (r < cols) {
    if (underdetermined) *underdetermined = true;
    return std::nullopt;
  }
  QVector x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

} // namespace singlen
