#include "hlk/int_matrix.hpp"

#include "hlk/error.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hlk {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : row)
            entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j)
        mpz_neg((*this)(i, j).get_mpz_t(), (*this)(i, j).get_mpz_t());
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i)
        mpz_neg((*this)(i, j).get_mpz_t(), (*this)(i, j).get_mpz_t());
}

void IntMatrix::add_row_multiple(std::size_t src, std::size_t dst, const Integer& k) {
    if (sgn(k) == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        mpz_addmul((*this)(dst, j).get_mpz_t(), k.get_mpz_t(), (*this)(src, j).get_mpz_t());
}

void IntMatrix::add_col_multiple(std::size_t src, std::size_t dst, const Integer& k) {
    if (sgn(k) == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        mpz_addmul((*this)(i, dst).get_mpz_t(), k.get_mpz_t(), (*this)(i, src).get_mpz_t());
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
        }
    return c;
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t(j, i) = m(i, j);
    return t;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;

    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // a[i][j] = (a[k][k] a[i][j] - a[i][k] a[k][j]) / prev, exact
                Integer t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix apply_slide(const IntMatrix& m, SlideKind kind, std::size_t src, std::size_t dst, int coeff) {
    if (coeff != 1 && coeff != -1)
        throw std::invalid_argument("apply_slide: coefficient must be +1 or -1");
    const std::size_t limit = kind == SlideKind::Row ? m.rows() : m.cols();
    if (src >= limit || dst >= limit)
        throw std::out_of_range("apply_slide: index out of range");
    if (src == dst)
        throw std::invalid_argument("apply_slide: source and destination coincide");

    IntMatrix out = m;
    if (kind == SlideKind::Row)
        out.add_row_multiple(src, dst, coeff);
    else
        out.add_col_multiple(src, dst, coeff);
    return out;
}

namespace {

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ')
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ')
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

bool is_skippable(std::string_view line) {
    auto pos = line.find_first_not_of(' ');
    return pos == std::string_view::npos || line[pos] == '#';
}

std::size_t parse_count(std::string_view tok, std::size_t lineno) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw ParseError(lineno, "expected a non-negative count, got '" + std::string(tok) + "'");
    return v;
}

Integer parse_integer(std::string_view tok, std::size_t lineno) {
    std::string_view digits = tok;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError(lineno, "expected an integer, got '" + std::string(tok) + "'");
    std::string s(tok.front() == '+' ? tok.substr(1) : tok);
    return Integer(s, 10);
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
    std::size_t lineno = 0;
    std::size_t pos = 0;
    bool have_header = false;
    std::size_t row = 0;
    IntMatrix m;

    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (is_skippable(line))
            continue;

        auto tokens = split_spaces(line);
        if (!have_header) {
            if (tokens.size() != 3 || tokens[0] != "matrix")
                throw ParseError(lineno, "expected 'matrix <rows> <cols>'");
            m = IntMatrix(parse_count(tokens[1], lineno), parse_count(tokens[2], lineno));
            have_header = true;
            continue;
        }
        if (row == m.rows())
            throw ParseError(lineno, "more rows than declared");
        if (tokens.size() != m.cols())
            throw ParseError(lineno, "expected " + std::to_string(m.cols()) + " entries, got " +
                                         std::to_string(tokens.size()));
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(row, j) = parse_integer(tokens[j], lineno);
        ++row;
    }

    if (!have_header)
        throw ParseError(0, "missing 'matrix <rows> <cols>' header");
    // Rows of a zero-column matrix would be blank lines, so none are expected.
    if (m.cols() > 0 && row != m.rows())
        throw ParseError(0, "expected " + std::to_string(m.rows()) + " rows, got " + std::to_string(row));
    return m;
}

void write_matrix(std::ostream& os, const IntMatrix& m) {
    os << "matrix " << m.rows() << ' ' << m.cols() << '\n';
    if (m.cols() == 0)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                os << ' ';
            os << m(i, j).get_str();
        }
        os << '\n';
    }
}

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream ss;
    write_matrix(ss, m);
    return ss.str();
}

}  // namespace hlk
