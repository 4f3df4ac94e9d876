#ifndef SINGLEN_LINALG_HPP
#define SINGLEN_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "singlen/rational.hpp"

namespace singlen {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

// Incrementally maintained row-echelon span of exact rational vectors.
// Pivot rows are normalized to leading coefficient 1 and fully reduced
// against each other, so membership tests are a single reduction pass.
class RowSpan {
public:
  explicit RowSpan(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return pivots_.size(); }

  // Reduces v against the current pivots (copy returned).
  QVector reduce(QVector v) const;

  bool contains(const QVector& v) const;

  // Adds v to the span; returns true iff it enlarged the span.
  bool insert(QVector v);

private:
  std::size_t dim_;
  std::map<std::size_t, QVector> pivots_; // pivot column -> normalized row
};

// Exact rank of a dense rational matrix (rows of equal length).
std::size_t exact_rank(const QMatrix& rows);

// Solves M x = rhs exactly. Returns the solution only when it exists and
// is unique (rank == #columns); otherwise nullopt, with *underdetermined
// set when the system is consistent but rank-deficient.
std::optional<QVector> solve_unique(QMatrix m, QVector rhs, bool* underdetermined = nullptr);

} // namespace singlen

#endif
