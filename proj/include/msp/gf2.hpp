#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace msp::gf2 {

using Word = uint64_t;

// Row-combination kernels. The scalar version is the reference; wider
// variants are selected at runtime and must be bit-identical to it.
using XorRowFn = void (*)(Word* dst, const Word* src, size_t nwords);

void xor_rows_scalar(Word* dst, const Word* src, size_t nwords);
#if defined(__x86_64__) || defined(_M_X64)
void xor_rows_avx2(Word* dst, const Word* src, size_t nwords);
#endif
#if defined(__aarch64__)
void xor_rows_neon(Word* dst, const Word* src, size_t nwords);
#endif

struct Kernel {
  XorRowFn xor_rows;
  const char* name;
};

// Best kernel supported by the running CPU.
const Kernel& active_kernel();
// All kernels the build knows about (for equivalence tests).
std::vector<Kernel> available_kernels();

// Dense bit matrix, one row = nwords() packed words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t nwords() const { return wpr_; }
  Word* row(size_t r) { return data_.data() + r * wpr_; }
  const Word* row(size_t r) const { return data_.data() + r * wpr_; }
  bool get(size_t r, size_t c) const {
    return (row(r)[c >> 6] >> (c & 63)) & 1;
  }
  void set(size_t r, size_t c, bool v = true) {
    Word mask = Word(1) << (c & 63);
    if (v)
      row(r)[c >> 6] |= mask;
    else
      row(r)[c >> 6] &= ~mask;
  }
  void xor_row(size_t dst, size_t src) {
    active_kernel().xor_rows(row(dst), row(src), wpr_);
  }

 private:
  size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<Word> data_;
};

// In-place row echelon form; returns rank. pivot_cols, when given, maps
// pivot row -> column.
size_t eliminate(BitMatrix& m, std::vector<size_t>* pivot_cols = nullptr);

// Solver for A x = b with A presented column-wise (column j = the j-th
// candidate combination). Columns are fed incrementally.
class Solver {
 public:
  explicit Solver(size_t dim) : dim_(dim), wpr_((dim + 63) / 64) {}
  // Add an unknown whose column is `bits` (dim_ bits packed).
  void add_column(const std::vector<Word>& bits);
  size_t num_columns() const { return ncols_; }
  // Particular solution of A x = b, or nullopt. The returned selection is
  // the lexicographically least one (earlier columns preferred clear).
  std::optional<std::vector<uint8_t>> solve_lexmin(const std::vector<Word>& b) const;
  size_t rank() const { return pivots_.size(); }

 private:
  struct PivotRow {
    std::vector<Word> col;     // reduced column
    std::vector<uint8_t> sel;  // combination of original columns it represents
    size_t pivot;              // leading bit position
  };
  size_t dim_, wpr_;
  size_t ncols_ = 0;
  std::vector<PivotRow> pivots_;              // reduced, by pivot position
  std::vector<std::vector<uint8_t>> kernel_;  // kernel vectors (selections)
};

}  // namespace msp::gf2
