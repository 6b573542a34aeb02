#include "hlk/smith.hpp"

#include <algorithm>

namespace hlk {

namespace {

int cmpabs(const Integer& a, const Integer& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

// Working state: the invariant u * input * v == a holds after every step.
class Reducer {
public:
    explicit Reducer(const IntMatrix& m)
        : a_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

    // Brings the smallest nonzero entry of a[t.., t..] (restricted to
    // rows < rend, cols < cend) to (t, t) and clears the rest of row t and
    // column t inside that block. Returns false if the block is zero.
    bool eliminate(std::size_t t, std::size_t rend, std::size_t cend) {
        std::size_t pi = 0;
        std::size_t pj = 0;
        if (!find_min(t, rend, t, cend, pi, pj))
            return false;
        move_to_pivot(t, pi, pj);

        Integer q;
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rend; ++i) {
                if (sgn(a_(i, t)) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
                q = -q;
                a_.add_row_multiple(t, i, q);
                u_.add_row_multiple(t, i, q);
                dirty = dirty || sgn(a_(i, t)) != 0;
            }
            for (std::size_t j = t + 1; j < cend; ++j) {
                if (sgn(a_(t, j)) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
                q = -q;
                a_.add_col_multiple(t, j, q);
                v_.add_col_multiple(t, j, q);
                dirty = dirty || sgn(a_(t, j)) != 0;
            }
            if (!dirty)
                return true;

            // Remainders are strictly smaller than the pivot; promote the
            // smallest one and go again.
            std::size_t ri = t;
            std::size_t rj = t;
            find_min(t, rend, t, t + 1, ri, rj);
            std::size_t ci = t;
            std::size_t cj = t;
            find_min(t, t + 1, t, cend, ci, cj);
            if (cmpabs(a_(ci, cj), a_(ri, rj)) < 0) {
                ri = ci;
                rj = cj;
            }
            move_to_pivot(t, ri, rj);
        }
    }

    // Restores d[i] | d[i+1] on the leading `rank` diagonal entries by
    // replacing a failing pair with (gcd, lcm).
    void repair_chain(std::size_t rank) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + 1 < rank; ++i) {
                if (mpz_divisible_p(a_(i + 1, i + 1).get_mpz_t(), a_(i, i).get_mpz_t()))
                    continue;
                a_.add_col_multiple(i + 1, i, 1);
                v_.add_col_multiple(i + 1, i, 1);
                eliminate(i, i + 2, i + 2);
                changed = true;
            }
        }
    }

    void normalize_signs(std::size_t rank) {
        for (std::size_t i = 0; i < rank; ++i)
            if (sgn(a_(i, i)) < 0) {
                a_.negate_row(i);
                u_.negate_row(i);
            }
    }

    SNFResult finish(std::size_t rank) && {
        std::vector<Integer> divisors;
        divisors.reserve(rank);
        for (std::size_t i = 0; i < rank; ++i)
            divisors.push_back(a_(i, i));
        return SNFResult{std::move(a_), std::move(u_), std::move(v_), std::move(divisors)};
    }

private:
    // Row-major first occurrence of the smallest nonzero |entry| in the
    // block; leaves (bi, bj) untouched if the block is zero.
    bool find_min(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1, std::size_t& bi,
                  std::size_t& bj) const {
        bool found = false;
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = c0; j < c1; ++j) {
                const Integer& x = a_(i, j);
                if (sgn(x) == 0)
                    continue;
                if (!found || cmpabs(x, a_(bi, bj)) < 0) {
                    bi = i;
                    bj = j;
                    found = true;
                }
            }
        return found;
    }

    void move_to_pivot(std::size_t t, std::size_t i, std::size_t j) {
        a_.swap_rows(t, i);
        u_.swap_rows(t, i);
        a_.swap_cols(t, j);
        v_.swap_cols(t, j);
    }

    IntMatrix a_;
    IntMatrix u_;
    IntMatrix v_;
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
    Reducer r(m);
    const std::size_t steps = std::min(m.rows(), m.cols());
    std::size_t rank = 0;
    while (rank < steps && r.eliminate(rank, m.rows(), m.cols()))
        ++rank;
    r.repair_chain(rank);
    r.normalize_signs(rank);
    return std::move(r).finish(rank);
}

std::vector<Integer> elementary_divisors(const IntMatrix& m) {
    return smith_normal_form(m).divisors;
}

std::size_t rank(const IntMatrix& m) {
    return smith_normal_form(m).rank();
}

}  // namespace hlk
