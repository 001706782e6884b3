#include "zk/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zk {

SparseVector to_sparse(const DenseVector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  }
  return out;
}

DenseVector to_dense(const SparseVector& v, std::size_t dim) {
  DenseVector out(dim);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

namespace {

// out = a + factor * b, reusing out's storage.
void axpy_into(SparseVector& out, const SparseVector& a, const Rational& factor, const SparseVector& b) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, factor * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second + factor * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
}

}  // namespace

SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b) {
  if (factor.is_zero()) return a;
  SparseVector out;
  axpy_into(out, a, factor, b);
  return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::from_dense(const std::vector<DenseVector>& rows, std::size_t cols) {
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("sparse matrix index out of range");
  if (value.is_zero()) {
    entries_.erase({r, c});
  } else {
    entries_[{r, c}] = value;
  }
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("sparse matrix index out of range");
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational() : it->second;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
  return t;
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
  std::vector<SparseVector> out(rows_);
  for (const auto& [rc, v] : entries_) out[rc.first].emplace_back(rc.second, v);
  return out;
}

RowReducer::RowReducer(std::size_t dim) : pivot_row_(dim, -1) {}

SparseVector RowReducer::reduce(SparseVector v) const {
  SparseVector scratch;
  std::size_t pos = 0;
  while (pos < v.size()) {
    const std::size_t col = v[pos].first;
    if (col >= pivot_row_.size()) throw std::out_of_range("vector index exceeds reducer dimension");
    const long pr = pivot_row_[col];
    if (pr < 0) {
      ++pos;
      continue;
    }
    // stored rows start at their pivot, so entries before `pos` are untouched
    const Rational f = -v[pos].second;
    axpy_into(scratch, v, f, rows_[static_cast<std::size_t>(pr)]);
    v.swap(scratch);
  }
  return v;
}

bool RowReducer::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rational lead = v.front().second;
  if (!lead.is_one()) {
    for (auto& [i, x] : v) x /= lead;
  }
  pivot_row_[v.front().first] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::vector<SparseVector> RowReducer::kernel() const {
  // back-substitute to reduced row echelon form, latest pivots first
  std::vector<SparseVector> rref = rows_;
  std::vector<std::size_t> order(rref.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rref[a].front().first > rref[b].front().first; });
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const SparseVector& piv = rref[order[oi]];
    const std::size_t pc = piv.front().first;
    for (std::size_t r = 0; r < rref.size(); ++r) {
      if (r == order[oi]) continue;
      auto it = std::lower_bound(rref[r].begin(), rref[r].end(), pc,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      if (it != rref[r].end() && it->first == pc) {
        Rational f = -it->second;
        rref[r] = axpy(rref[r], f, piv);
      }
    }
  }
  std::vector<SparseVector> basis;
  for (std::size_t c = 0; c < pivot_row_.size(); ++c) {
    if (pivot_row_[c] >= 0) continue;
    SparseVector x;
    x.emplace_back(c, Rational(1));
    for (const SparseVector& row : rref) {
      auto it = std::lower_bound(row.begin(), row.end(), c,
                                 [](const auto& e, std::size_t col) { return e.first < col; });
      if (it != row.end() && it->first == c) x.emplace_back(row.front().first, -it->second);
    }
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank(const std::vector<SparseVector>& rows, std::size_t cols) {
  RowReducer rr(cols);
  for (const auto& r : rows) rr.insert(r);
  return rr.rank();
}

std::size_t rank(const SparseMatrix& m) { return rank(m.row_vectors(), m.cols()); }

std::vector<SparseVector> nullspace_basis(const std::vector<SparseVector>& rows, std::size_t cols) {
  RowReducer rr(cols);
  for (const auto& r : rows) rr.insert(r);
  return rr.kernel();
}

std::vector<DenseVector> nullspace_basis(const SparseMatrix& m) {
  std::vector<DenseVector> out;
  for (const auto& v : nullspace_basis(m.row_vectors(), m.cols())) out.push_back(to_dense(v, m.cols()));
  return out;
}

std::size_t quotient_dim(std::size_t ambient_dim, const std::vector<DenseVector>& spanning_vectors) {
  std::vector<SparseVector> rows;
  rows.reserve(spanning_vectors.size());
  for (const auto& v : spanning_vectors) {
    if (v.size() != ambient_dim) {
      throw std::invalid_argument("quotient_dim: vector of length " + std::to_string(v.size()) +
                                  " in ambient dimension " + std::to_string(ambient_dim));
    }
    rows.push_back(to_sparse(v));
  }
  return ambient_dim - rank(rows, ambient_dim);
}

}  // namespace zk
