#include "msp/gf2.hpp"

#include <algorithm>
#include <bit>

namespace msp::gf2 {

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

size_t eliminate(BitMatrix& m, std::vector<size_t>* pivot_cols) {
  size_t rank = 0;
  if (pivot_cols) pivot_cols->clear();
  for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    size_t pivot = rank;
    while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (size_t w = 0; w < m.nwords(); ++w)
        std::swap(m.row(pivot)[w], m.row(rank)[w]);
    }
    for (size_t r = 0; r < m.rows(); ++r)
      if (r != rank && m.get(r, col)) m.xor_row(r, rank);
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

namespace {

bool bit(const std::vector<Word>& v, size_t i) { return (v[i >> 6] >> (i & 63)) & 1; }

size_t leading_bit(const std::vector<Word>& v, size_t dim) {
  for (size_t w = 0; w < v.size(); ++w) {
    if (v[w]) {
      size_t b = w * 64 + size_t(std::countr_zero(v[w]));
      return b < dim ? b : dim;
    }
  }
  return dim;
}

}  // namespace

void Solver::add_column(const std::vector<Word>& bits) {
  std::vector<Word> col = bits;
  col.resize(wpr_, 0);
  std::vector<uint8_t> sel(ncols_ + 1, 0);
  sel[ncols_] = 1;
  ++ncols_;
  for (auto& p : pivots_) p.sel.resize(ncols_, 0);
  for (auto& k : kernel_) k.resize(ncols_, 0);

  for (auto& p : pivots_) {
    if (bit(col, p.pivot)) {
      active_kernel().xor_rows(col.data(), p.col.data(), wpr_);
      for (size_t i = 0; i < ncols_; ++i) sel[i] ^= p.sel[i];
    }
  }
  size_t lead = leading_bit(col, dim_);
  if (lead == dim_) {
    kernel_.push_back(std::move(sel));
    return;
  }
  // back-reduce existing pivots so pivot columns stay fully reduced
  for (auto& p : pivots_) {
    if (bit(p.col, lead)) {
      active_kernel().xor_rows(p.col.data(), col.data(), wpr_);
      for (size_t i = 0; i < ncols_; ++i) p.sel[i] ^= sel[i];
    }
  }
  pivots_.push_back({std::move(col), std::move(sel), lead});
}

std::optional<std::vector<uint8_t>> Solver::solve_lexmin(const std::vector<Word>& b) const {
  std::vector<Word> rhs = b;
  rhs.resize(wpr_, 0);
  std::vector<uint8_t> sel(ncols_, 0);
  for (auto& p : pivots_) {
    if (bit(rhs, p.pivot)) {
      active_kernel().xor_rows(rhs.data(), p.col.data(), wpr_);
      for (size_t i = 0; i < ncols_ && i < p.sel.size(); ++i) sel[i] ^= p.sel[i];
    }
  }
  for (Word w : rhs)
    if (w) return std::nullopt;  // inconsistent

  // Reduce the particular selection against the kernel to the
  // lexicographically least representative (column 0 most significant,
  // clear bits preferred): bring the kernel to reduced row echelon form
  // over the selection coordinates, then clear sel at every pivot column.
  std::vector<std::vector<uint8_t>> ker = kernel_;
  std::vector<std::pair<size_t, size_t>> kpivots;  // (column, kernel row)
  size_t r = 0;
  for (size_t c = 0; c < ncols_ && r < ker.size(); ++c) {
    size_t pr = r;
    while (pr < ker.size() && !ker[pr][c]) ++pr;
    if (pr == ker.size()) continue;
    std::swap(ker[pr], ker[r]);
    for (size_t i = 0; i < ker.size(); ++i)
      if (i != r && ker[i][c])
        for (size_t cc = c; cc < ncols_; ++cc) ker[i][cc] ^= ker[r][cc];
    kpivots.push_back({c, r});
    ++r;
  }
  for (auto [c, row] : kpivots)
    if (sel[c])
      for (size_t cc = c; cc < ncols_; ++cc) sel[cc] ^= ker[row][cc];
  return sel;
}

}  // namespace msp::gf2
