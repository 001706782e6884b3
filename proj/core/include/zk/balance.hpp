#pragma once

// Balancing of splitting types by elementary transformations, recorded as an
// admissible sequence j(i, l).

#include <optional>
#include <string>
#include <vector>

namespace zk {

struct AdmissibleSequence {
  int k = 1;
  /// rows[i] is the splitting type after i steps; each row is nonincreasing.
  std::vector<std::vector<int>> rows;

  int t() const { return static_cast<int>(rows.size()); }
  int rank() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
};

/// While j_1 > j_r + k - 1, replace j_r by j_r + k and re-sort. Throws
/// ValidationError for rank < 2, k < 1 or a type that is not nonincreasing.
AdmissibleSequence balance(int k, const std::vector<int>& type);

struct AdmissibleViolation {
  /// "i", "ii", "iii", "order" or "shape".
  std::string condition;
  int row = 0;
  std::string detail;
};

/// Checks (i) row 1 equals `input` when given, (ii) row sums grow by k per
/// step, (iii) the last row is balanced, and that rows are nonincreasing.
std::vector<AdmissibleViolation> validate_admissible(const AdmissibleSequence& seq, int k,
                                                     const std::optional<std::vector<int>>& input = std::nullopt);

std::string to_json(const AdmissibleSequence& seq);
std::string to_text(const AdmissibleSequence& seq);

}  // namespace zk
