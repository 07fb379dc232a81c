#include "affhecke/linalg.hpp"

namespace affhecke {

namespace {

// row -= c * pivot
void axpy(SparseRow& row, const mpq_class& c, const SparseRow& pivot) {
  for (const auto& [col, val] : pivot) {
    auto [it, inserted] = row.try_emplace(col, 0);
    it->second -= c * val;
    if (it->second == 0) row.erase(it);
  }
}

}  // namespace

SparseRow RankAccumulator::reduce(SparseRow row) const {
  // Pivot rows only have entries at or after their pivot column, so scanning
  // the row left to right eliminates each pivot column exactly once.
  auto it = row.begin();
  while (it != row.end()) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const mpq_class c = it->second;
    axpy(row, c, p->second);
    it = row.upper_bound(col);
  }
  return row;
}

bool RankAccumulator::add(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  // A reduced row has no entries in pivot columns; normalise on its first entry.
  const std::size_t col = row.begin()->first;
  const mpq_class inv = 1 / row.begin()->second;
  for (auto& [c, val] : row) val *= inv;
  pivots_.emplace(col, std::move(row));
  return true;
}

std::size_t exact_rank(const std::vector<SparseRow>& rows) {
  RankAccumulator acc;
  for (const auto& r : rows) acc.add(r);
  return acc.rank();
}

}  // namespace affhecke
