#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace affhecke {

/// Sparse row over Q: column -> nonzero entry.
using SparseRow = std::map<std::size_t, mpq_class>;

/// Incremental exact rank over Q.  Rows are reduced against the stored
/// pivots (row echelon form, pivot = first column, normalised to 1).
class RankAccumulator {
 public:
  /// Reduces row; stores it and returns true iff it was independent.
  bool add(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }
  /// Reduced form of row against the current pivots (empty iff dependent).
  SparseRow reduce(SparseRow row) const;

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

std::size_t exact_rank(const std::vector<SparseRow>& rows);

}  // namespace affhecke
