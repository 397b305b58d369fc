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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rational.hpp"

namespace pathhom {

// Dense matrix over the rationals with ordered row/column label sets.
// Labels are opaque strings; positional access is always available.
// Equality compares shapes and entries, not labels.
class RationalMatrix {
public:
  RationalMatrix() : nrows_(0), ncols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

  static RationalMatrix identity(std::size_t n);
  // 1 x n row of ones.
  static RationalMatrix ones_row(std::size_t n);

  std::size_t rows() const { return nrows_; }
  std::size_t cols() const { return ncols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * ncols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * ncols_ + j]; }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  void set_row_labels(std::vector<std::string> labels);
  void set_col_labels(std::vector<std::string> labels);

  // Positional submatrix selection; indices may repeat or reorder.
  RationalMatrix take_rows(const std::vector<std::size_t>& idx) const;
  RationalMatrix take_cols(const std::vector<std::size_t>& idx) const;

  // Label-based selection.  Unknown labels raise Error{UnknownLabel}.
  RationalMatrix row_select(const std::vector<std::string>& labels) const;
  RationalMatrix row_drop(const std::vector<std::string>& labels) const;
  RationalMatrix column_select(const std::vector<std::string>& labels) const;
  RationalMatrix column_drop(const std::vector<std::string>& labels) const;

  bool is_zero() const;
  bool operator==(const RationalMatrix& o) const;
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

  std::string to_string() const;  // debugging aid

private:
  std::size_t nrows_, ncols_;
  std::vector<Rational> data_;
  std::vector<std::string> row_labels_, col_labels_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

// Concatenates blocks side by side (equal row counts); columns are
// relabelled 0..n-1, rows keep the first block's labels.
RationalMatrix hstack(const std::vector<const RationalMatrix*>& blocks);
// Concatenates blocks on top of each other (equal column counts).
RationalMatrix vstack(const std::vector<const RationalMatrix*>& blocks);

std::size_t rank(const RationalMatrix& m);

// Canonical basis of {v : m v = 0}: derived from the reduced echelon form of
// m, one basis column per free column in ascending position, with entry +1 at
// the free position and zeros at the other free positions.  Structurally
// equal inputs give identical output.  Rows inherit m's column labels.
// Edge cases: zero columns -> basis with zero columns; zero rows -> identity.
RationalMatrix null_space_basis(const RationalMatrix& m);

// Returns some X with a X = b (free coordinates zero), deterministically.
// Throws Error{Inconsistent} if no solution exists and Error{Argument} on a
// row-count mismatch.
RationalMatrix solve_all(const RationalMatrix& a, const RationalMatrix& b);

// Scalar multiply-subtract counter for the elimination routines, used by the
// complexity assertions in the tests.
unsigned long long elimination_ops();
void reset_elimination_ops();

}  // namespace pathhom
