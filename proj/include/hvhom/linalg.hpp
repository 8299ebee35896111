#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "hvhom/scalar.hpp"

namespace hvhom {

/// Sparse row over Scalar: column -> nonzero coefficient.
using SparseRow = std::map<std::size_t, Scalar>;

/// Incrementally maintained reduced row echelon form of a sparse system.
///
/// Invariant: every stored row has coefficient 1 at its pivot and contains
/// no other pivot column. Rows are added one at a time; a row that reduces
/// to zero is dropped.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t columns) : columns_(columns) {}

  /// Returns true when the row was independent of the stored rows.
  bool add_row(SparseRow row);

  std::size_t columns() const noexcept { return columns_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  bool is_pivot(std::size_t col) const { return pivots_.count(col) != 0; }
  const std::map<std::size_t, SparseRow>& rows() const noexcept { return pivots_; }

  /// Basis of {x : A x = 0}, one vector per free column, in column order.
  std::vector<SparseRow> nullspace() const;

 private:
  void subtract_multiple(SparseRow& target, std::size_t target_pivot, const Scalar& factor,
                         const SparseRow& source);

  std::size_t columns_;
  std::map<std::size_t, SparseRow> pivots_;
  // non-pivot column -> pivots whose rows mention it
  std::map<std::size_t, std::set<std::size_t>> occurrences_;
};

/// Solves A x = b where each equation is (row, rhs). Throws
/// CalibrationFailed when the system is inconsistent or does not determine
/// x uniquely.
std::vector<Scalar> solve_unique(const std::vector<std::pair<SparseRow, Scalar>>& equations,
                                 std::size_t unknowns);

/// Reduced basis of the span of `vectors` (row space), in echelon order.
std::vector<SparseRow> span_basis(const std::vector<SparseRow>& vectors, std::size_t columns);

}  // namespace hvhom
