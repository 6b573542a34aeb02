#pragma once

#include "hlk/int_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hlk {

/// Linking invariant of a two-component handlebody-link: the elementary
/// divisors of the linking matrix, kept as a multiset, or the marker {0}
/// when the matrix has rank zero.
class LkInvariant {
public:
    static LkInvariant zero() { return LkInvariant{}; }

    /// divisors must be non-empty, positive and form a divisibility chain.
    static LkInvariant from_divisors(std::vector<Integer> divisors);

    bool is_zero() const noexcept { return divisors_.empty(); }
    const std::vector<Integer>& divisors() const noexcept { return divisors_; }

    friend bool operator==(const LkInvariant&, const LkInvariant&) = default;

private:
    LkInvariant() = default;
    std::vector<Integer> divisors_;
};

enum class LkFormat {
    Multiset,  // "Lk = {1, 1, 3}"
    Set,       // repeats collapsed: "Lk = {1, 3}"
};

std::string format_lk(const LkInvariant& lk, LkFormat format = LkFormat::Multiset);

/// Finitely generated abelian group Z^free_rank (+) Z/t1 (+) Z/t2 ...
/// with every t >= 2 and t1 | t2 | ...
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

std::string format_group(const AbelianGroup& g);

LkInvariant handlebody_linking(const IntMatrix& m);

enum class Side {
    First,   // A1: cokernel of M, rows = loops of the first component
    Second,  // A2: cokernel of the transpose
};

AbelianGroup quotient_group(const IntMatrix& m, Side side);

/// Recovers Lk from a torsion list and the relation rank l by padding
/// with leading 1s. Throws std::invalid_argument if l < torsion size.
LkInvariant reconstruct_lk(const AbelianGroup& g, std::size_t l);

}  // namespace hlk
