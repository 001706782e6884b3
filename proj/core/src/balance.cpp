#include "zk/balance.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "zk/errors.hpp"

namespace zk {

namespace {

bool nonincreasing(const std::vector<int>& row) {
  return std::is_sorted(row.begin(), row.end(), std::greater<>());
}

long row_sum(const std::vector<int>& row) { return std::accumulate(row.begin(), row.end(), 0L); }

}  // namespace

AdmissibleSequence balance(int k, const std::vector<int>& type) {
  if (k < 1) throw ValidationError("k must be >= 1");
  if (type.size() < 2) throw ValidationError("balancing needs rank >= 2");
  if (!nonincreasing(type)) throw ValidationError("splitting type must be nonincreasing");
  AdmissibleSequence seq;
  seq.k = k;
  seq.rows.push_back(type);
  std::vector<int> row = type;
  // max never grows and min never shrinks while the sum rises by k
  while (row.front() > row.back() + k - 1) {
    row.back() += k;
    std::sort(row.begin(), row.end(), std::greater<>());
    seq.rows.push_back(row);
  }
  return seq;
}

std::vector<AdmissibleViolation> validate_admissible(const AdmissibleSequence& seq, int k,
                                                     const std::optional<std::vector<int>>& input) {
  std::vector<AdmissibleViolation> out;
  if (seq.rows.empty()) {
    out.push_back({"shape", 0, "no rows"});
    return out;
  }
  const std::size_t r = seq.rows.front().size();
  if (input && seq.rows.front() != *input) out.push_back({"i", 1, "first row differs from the input type"});
  const long base = row_sum(seq.rows.front());
  for (std::size_t i = 0; i < seq.rows.size(); ++i) {
    const auto& row = seq.rows[i];
    const int label = static_cast<int>(i) + 1;
    if (row.size() != r) {
      out.push_back({"shape", label, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(r)});
      continue;
    }
    if (!nonincreasing(row)) out.push_back({"order", label, "row is not nonincreasing"});
    const long expected = base + static_cast<long>(k) * static_cast<long>(i);
    if (i > 0 && row_sum(row) != expected) {
      out.push_back({"ii", label, "row sum " + std::to_string(row_sum(row)) + ", expected " + std::to_string(expected)});
    }
  }
  const auto& last = seq.rows.back();
  if (!last.empty() && last.front() > last.back() + k - 1) {
    out.push_back({"iii", seq.t(), "last row is not balanced"});
  }
  return out;
}

std::string to_json(const AdmissibleSequence& seq) {
  nlohmann::json out = {{"k", seq.k}, {"t", seq.t()}, {"r", seq.rank()}, {"rows", seq.rows}};
  return out.dump(2);
}

std::string to_text(const AdmissibleSequence& seq) {
  std::ostringstream os;
  for (std::size_t i = 0; i < seq.rows.size(); ++i) {
    os << (i + 1) << ":";
    for (int v : seq.rows[i]) os << " " << v;
    os << "  (sum " << row_sum(seq.rows[i]) << ")\n";
  }
  os << "t=" << seq.t() << "\n";
  return os.str();
}

}  // namespace zk
