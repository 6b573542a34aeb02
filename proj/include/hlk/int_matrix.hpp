#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hlk {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Either dimension may be zero. All arithmetic is exact; nothing here
/// can overflow.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Integer>& entries() const noexcept { return entries_; }

    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    // row[dst] += k * row[src]
    void add_row_multiple(std::size_t src, std::size_t dst, const Integer& k);
    // col[dst] += k * col[src]
    void add_col_multiple(std::size_t src, std::size_t dst, const Integer& k);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

IntMatrix transpose(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument for non-square input; det of 0×0 is 1.
Integer determinant(const IntMatrix& m);

enum class SlideKind { Row, Column };

/// Adds coeff times row/column `src` to row/column `dst`. This is the
/// matrix effect of sliding one bouquet-graph loop over another.
/// coeff must be +1 or -1; src must differ from dst.
IntMatrix apply_slide(const IntMatrix& m, SlideKind kind, std::size_t src, std::size_t dst, int coeff);

// Matrix text format:
//   matrix <m> <n>
//   <n integers separated by spaces>   (m such lines)
// Lines whose first non-space character is '#' and blank lines are skipped.
IntMatrix parse_matrix(std::string_view text);
void write_matrix(std::ostream& os, const IntMatrix& m);
std::string format_matrix(const IntMatrix& m);

}  // namespace hlk
