#include "hvhom/linalg.hpp"

#include <string>

#include "hvhom/errors.hpp"

namespace hvhom {

namespace {

// target -= factor * source, dropping cancelled entries.
void axpy(SparseRow& target, const Scalar& factor, const SparseRow& source) {
  for (const auto& [col, value] : source) {
    auto it = target.find(col);
    Scalar delta = factor * value;
    if (it == target.end()) {
      target.emplace(col, -delta);
    } else {
      it->second -= delta;
      if (it->second.is_zero()) target.erase(it);
    }
  }
}

}  // namespace

void SparseEchelon::subtract_multiple(SparseRow& target, std::size_t target_pivot,
                                      const Scalar& factor, const SparseRow& source) {
  for (const auto& [col, value] : source) {
    auto it = target.find(col);
    Scalar delta = factor * value;
    if (it == target.end()) {
      target.emplace(col, -delta);
      if (col != target_pivot) occurrences_[col].insert(target_pivot);
    } else {
      it->second -= delta;
      if (it->second.is_zero()) {
        target.erase(it);
        auto occ = occurrences_.find(col);
        if (occ != occurrences_.end()) {
          occ->second.erase(target_pivot);
          if (occ->second.empty()) occurrences_.erase(occ);
        }
      }
    }
  }
}

bool SparseEchelon::add_row(SparseRow row) {
  // Stored rows hold no foreign pivot columns, so one pass clears them all.
  std::vector<std::size_t> hits;
  for (const auto& entry : row) {
    if (pivots_.count(entry.first) != 0) hits.push_back(entry.first);
  }
  for (std::size_t p : hits) {
    auto it = row.find(p);
    if (it == row.end()) continue;
    Scalar factor = it->second;
    axpy(row, factor, pivots_.at(p));
  }
  if (row.empty()) return false;

  const std::size_t pivot = row.begin()->first;
  const Scalar scale = row.begin()->second.inv();
  for (auto& entry : row) entry.second *= scale;

  // Clear the new pivot column from the stored rows.
  if (auto occ = occurrences_.find(pivot); occ != occurrences_.end()) {
    const std::set<std::size_t> owners = occ->second;
    for (std::size_t owner : owners) {
      SparseRow& target = pivots_.at(owner);
      Scalar factor = target.at(pivot);
      subtract_multiple(target, owner, factor, row);
    }
    occurrences_.erase(pivot);
  }

  for (const auto& entry : row) {
    if (entry.first != pivot) occurrences_[entry.first].insert(pivot);
  }
  pivots_.emplace(pivot, std::move(row));
  return true;
}

std::vector<SparseRow> SparseEchelon::nullspace() const {
  std::vector<SparseRow> basis;
  for (std::size_t col = 0; col < columns_; ++col) {
    if (pivots_.count(col) != 0) continue;
    SparseRow v;
    v.emplace(col, Scalar(1));
    if (auto occ = occurrences_.find(col); occ != occurrences_.end()) {
      for (std::size_t p : occ->second) v.emplace(p, -pivots_.at(p).at(col));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Scalar> solve_unique(const std::vector<std::pair<SparseRow, Scalar>>& equations,
                                 std::size_t unknowns) {
  // The right-hand side rides along as column `unknowns`.
  SparseEchelon echelon(unknowns + 1);
  for (const auto& [row, rhs] : equations) {
    SparseRow augmented = row;
    if (!rhs.is_zero()) augmented[unknowns] = rhs;
    echelon.add_row(std::move(augmented));
  }
  if (echelon.is_pivot(unknowns)) throw CalibrationFailed("inconsistent system");
  if (echelon.rank() < unknowns) {
    throw CalibrationFailed("rank " + std::to_string(echelon.rank()) + " < " +
                            std::to_string(unknowns) + " unknowns");
  }
  std::vector<Scalar> solution(unknowns);
  for (const auto& [pivot, row] : echelon.rows()) {
    auto it = row.find(unknowns);
    if (it != row.end()) solution[pivot] = it->second;
  }
  return solution;
}

std::vector<SparseRow> span_basis(const std::vector<SparseRow>& vectors, std::size_t columns) {
  SparseEchelon echelon(columns);
  for (const auto& v : vectors) echelon.add_row(v);
  std::vector<SparseRow> basis;
  basis.reserve(echelon.rank());
  for (const auto& entry : echelon.rows()) basis.push_back(entry.second);
  return basis;
}

}  // namespace hvhom
