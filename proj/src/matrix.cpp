// Copyright 2026 the pathhom authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matrix.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "error.hpp"

namespace pathhom {

namespace {

std::atomic<unsigned long long> g_elimination_ops{0};

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Sparse row: entries sorted by column, zeros never stored.
using SEntry = std::pair<std::size_t, Rational>;
struct SRow {
  std::vector<SEntry> nz;
  std::size_t lead() const { return nz.front().first; }
};

// r -= c * p.  The merge keeps entries sorted and drops exact zeros.
void axpy(SRow& r, const Rational& c, const SRow& p, unsigned long long& ops) {
  std::vector<SEntry> out;
  out.reserve(r.nz.size() + p.nz.size());
  auto ir = r.nz.begin(), er = r.nz.end();
  auto ip = p.nz.begin(), ep = p.nz.end();
  while (ir != er || ip != ep) {
    if (ip == ep || (ir != er && ir->first < ip->first)) {
      out.push_back(std::move(*ir));
      ++ir;
    } else if (ir == er || ip->first < ir->first) {
      out.emplace_back(ip->first, -(c * ip->second));
      ++ops;
      ++ip;
    } else {
      Rational v = ir->second - c * ip->second;
      ++ops;
      if (v != 0) out.emplace_back(ir->first, std::move(v));
      ++ir;
      ++ip;
    }
  }
  r.nz = std::move(out);
}

struct Echelon {
  std::size_t ncols = 0;
  std::vector<std::size_t> pivot_cols;  // ascending
  std::vector<SRow> pivot_rows;         // leading coefficient 1 at pivot_cols[k]
};

const Rational* row_entry(const SRow& r, std::size_t col) {
  auto it = std::lower_bound(r.nz.begin(), r.nz.end(), col,
                             [](const SEntry& e, std::size_t c) { return e.first < c; });
  if (it == r.nz.end() || it->first != col) return nullptr;
  return &it->second;
}

// Row reduction by columns.  The pivot row within a column is chosen by
// sparsity, which does not change the (unique) reduced form.
Echelon reduce(std::vector<SRow> rows, std::size_t ncols, bool full) {
  unsigned long long ops = 0;
  Echelon ech;
  ech.ncols = ncols;

  std::vector<std::vector<std::size_t>> bucket(ncols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].nz.empty()) bucket[rows[i].lead()].push_back(i);

  for (std::size_t c = 0; c < ncols; ++c) {
    std::vector<std::size_t> cand = std::move(bucket[c]);
    if (cand.empty()) continue;
    std::size_t best = cand[0];
    for (std::size_t id : cand)
      if (rows[id].nz.size() < rows[best].nz.size() ||
          (rows[id].nz.size() == rows[best].nz.size() && id < best))
        best = id;

    SRow pivot = std::move(rows[best]);
    Rational lead = pivot.nz.front().second;
    if (lead != 1) {
      for (auto& e : pivot.nz) {
        e.second /= lead;
        ++ops;
      }
    }
    for (std::size_t id : cand) {
      if (id == best) continue;
      Rational coef = rows[id].nz.front().second;
      axpy(rows[id], coef, pivot, ops);
      if (!rows[id].nz.empty()) bucket[rows[id].lead()].push_back(id);
    }
    ech.pivot_cols.push_back(c);
    ech.pivot_rows.push_back(std::move(pivot));
  }

  if (full && ech.pivot_rows.size() > 1) {
    for (std::size_t k = ech.pivot_rows.size(); k-- > 1;) {
      std::size_t pc = ech.pivot_cols[k];
      for (std::size_t j = 0; j < k; ++j) {
        const Rational* v = row_entry(ech.pivot_rows[j], pc);
        if (v) {
          Rational coef = *v;
          axpy(ech.pivot_rows[j], coef, ech.pivot_rows[k], ops);
        }
      }
    }
  }

  g_elimination_ops.fetch_add(ops, std::memory_order_relaxed);
  return ech;
}

std::vector<SRow> sparse_rows(const RationalMatrix& m) {
  std::vector<SRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SRow r;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) r.nz.emplace_back(j, m.at(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::size_t> resolve(const std::vector<std::string>& labels,
                                 const std::vector<std::string>& universe,
                                 const char* what) {
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) index.emplace(universe[i], i);
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const auto& l : labels) {
    auto it = index.find(l);
    if (it == index.end())
      throw Error(Code::UnknownLabel, std::string("unknown ") + what + " label '" + l + "'");
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : nrows_(rows),
      ncols_(cols),
      data_(rows * cols),
      row_labels_(numeric_labels(rows)),
      col_labels_(numeric_labels(cols)) {}

RationalMatrix::RationalMatrix(std::vector<std::string> row_labels,
                               std::vector<std::string> col_labels)
    : nrows_(row_labels.size()),
      ncols_(col_labels.size()),
      data_(row_labels.size() * col_labels.size()),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::ones_row(std::size_t n) {
  RationalMatrix m(1, n);
  for (std::size_t j = 0; j < n; ++j) m.at(0, j) = 1;
  return m;
}

void RationalMatrix::set_row_labels(std::vector<std::string> labels) {
  if (labels.size() != nrows_) throw Error(Code::Argument, "row label count mismatch");
  row_labels_ = std::move(labels);
}

void RationalMatrix::set_col_labels(std::vector<std::string> labels) {
  if (labels.size() != ncols_) throw Error(Code::Argument, "column label count mismatch");
  col_labels_ = std::move(labels);
}

RationalMatrix RationalMatrix::take_rows(const std::vector<std::size_t>& idx) const {
  std::vector<std::string> labels;
  labels.reserve(idx.size());
  for (std::size_t i : idx) labels.push_back(row_labels_[i]);
  RationalMatrix out(std::move(labels), col_labels_);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t j = 0; j < ncols_; ++j) out.at(r, j) = at(idx[r], j);
  return out;
}

RationalMatrix RationalMatrix::take_cols(const std::vector<std::size_t>& idx) const {
  std::vector<std::string> labels;
  labels.reserve(idx.size());
  for (std::size_t j : idx) labels.push_back(col_labels_[j]);
  RationalMatrix out(row_labels_, std::move(labels));
  for (std::size_t i = 0; i < nrows_; ++i)
    for (std::size_t c = 0; c < idx.size(); ++c) out.at(i, c) = at(i, idx[c]);
  return out;
}

RationalMatrix RationalMatrix::row_select(const std::vector<std::string>& labels) const {
  return take_rows(resolve(labels, row_labels_, "row"));
}

RationalMatrix RationalMatrix::row_drop(const std::vector<std::string>& labels) const {
  auto drop = resolve(labels, row_labels_, "row");
  std::vector<bool> gone(nrows_, false);
  for (std::size_t i : drop) gone[i] = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < nrows_; ++i)
    if (!gone[i]) keep.push_back(i);
  return take_rows(keep);
}

RationalMatrix RationalMatrix::column_select(const std::vector<std::string>& labels) const {
  return take_cols(resolve(labels, col_labels_, "column"));
}

RationalMatrix RationalMatrix::column_drop(const std::vector<std::string>& labels) const {
  auto drop = resolve(labels, col_labels_, "column");
  std::vector<bool> gone(ncols_, false);
  for (std::size_t j : drop) gone[j] = true;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < ncols_; ++j)
    if (!gone[j]) keep.push_back(j);
  return take_cols(keep);
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return nrows_ == o.nrows_ && ncols_ == o.ncols_ && data_ == o.data_;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << nrows_ << "x" << ncols_ << "\n";
  for (std::size_t i = 0; i < nrows_; ++i) {
    for (std::size_t j = 0; j < ncols_; ++j) os << (j ? " " : "") << render_fraction(at(i, j));
    os << "\n";
  }
  return os.str();
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Code::Argument, "matrix product shape mismatch");
  RationalMatrix c(a.row_labels(), b.col_labels());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& av = a.at(i, k);
      if (av == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bv = b.at(k, j);
        if (bv != 0) c.at(i, j) += av * bv;
      }
    }
  return c;
}

RationalMatrix hstack(const std::vector<const RationalMatrix*>& blocks) {
  if (blocks.empty()) return RationalMatrix();
  std::size_t rows = blocks[0]->rows(), cols = 0;
  for (const auto* b : blocks) {
    if (b->rows() != rows) throw Error(Code::Argument, "hstack row count mismatch");
    cols += b->cols();
  }
  RationalMatrix out(rows, cols);
  out.set_row_labels(blocks[0]->row_labels());
  std::size_t off = 0;
  for (const auto* b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b->cols(); ++j) out.at(i, off + j) = b->at(i, j);
    off += b->cols();
  }
  return out;
}

RationalMatrix vstack(const std::vector<const RationalMatrix*>& blocks) {
  if (blocks.empty()) return RationalMatrix();
  std::size_t cols = blocks[0]->cols(), rows = 0;
  for (const auto* b : blocks) {
    if (b->cols() != cols) throw Error(Code::Argument, "vstack column count mismatch");
    rows += b->rows();
  }
  RationalMatrix out(rows, cols);
  out.set_col_labels(blocks[0]->col_labels());
  std::size_t off = 0;
  for (const auto* b : blocks) {
    for (std::size_t i = 0; i < b->rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) out.at(off + i, j) = b->at(i, j);
    off += b->rows();
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  return reduce(sparse_rows(m), m.cols(), /*full=*/false).pivot_cols.size();
}

RationalMatrix null_space_basis(const RationalMatrix& m) {
  Echelon ech = reduce(sparse_rows(m), m.cols(), /*full=*/true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RationalMatrix n(m.cols(), free_cols.size());
  n.set_row_labels(m.col_labels());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t f = free_cols[j];
    n.at(f, j) = 1;
    for (std::size_t k = 0; k < ech.pivot_cols.size(); ++k) {
      const Rational* v = row_entry(ech.pivot_rows[k], f);
      if (v) n.at(ech.pivot_cols[k], j) = -*v;
    }
  }
  return n;
}

RationalMatrix solve_all(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw Error(Code::Argument, "solve_all row count mismatch");
  std::size_t acols = a.cols(), bcols = b.cols();
  std::vector<SRow> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SRow r;
    for (std::size_t j = 0; j < acols; ++j)
      if (a.at(i, j) != 0) r.nz.emplace_back(j, a.at(i, j));
    for (std::size_t j = 0; j < bcols; ++j)
      if (b.at(i, j) != 0) r.nz.emplace_back(acols + j, b.at(i, j));
    rows.push_back(std::move(r));
  }
  Echelon ech = reduce(std::move(rows), acols + bcols, /*full=*/true);

  for (std::size_t c : ech.pivot_cols)
    if (c >= acols) throw Error(Code::Inconsistent, "linear system has no solution");

  RationalMatrix x(a.col_labels(), b.col_labels());
  for (std::size_t k = 0; k < ech.pivot_cols.size(); ++k) {
    std::size_t c = ech.pivot_cols[k];
    for (const auto& e : ech.pivot_rows[k].nz)
      if (e.first >= acols) x.at(c, e.first - acols) = e.second;
  }
  return x;
}

unsigned long long elimination_ops() {
  return g_elimination_ops.load(std::memory_order_relaxed);
}

void reset_elimination_ops() { g_elimination_ops.store(0, std::memory_order_relaxed); }

}  // namespace pathhom
