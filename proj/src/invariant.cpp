#include "hlk/invariant.hpp"

#include "hlk/smith.hpp"

#include <sstream>
#include <stdexcept>

namespace hlk {

LkInvariant LkInvariant::from_divisors(std::vector<Integer> divisors) {
    if (divisors.empty())
        throw std::invalid_argument("LkInvariant: empty divisor list (use LkInvariant::zero())");
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (sgn(divisors[i]) <= 0)
            throw std::invalid_argument("LkInvariant: divisors must be positive");
        if (i > 0 && !mpz_divisible_p(divisors[i].get_mpz_t(), divisors[i - 1].get_mpz_t()))
            throw std::invalid_argument("LkInvariant: divisors must form a divisibility chain");
    }
    LkInvariant lk;
    lk.divisors_ = std::move(divisors);
    return lk;
}

std::string format_lk(const LkInvariant& lk, LkFormat format) {
    if (lk.is_zero())
        return "Lk = {0}";
    std::ostringstream ss;
    ss << "Lk = {";
    const auto& ds = lk.divisors();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (format == LkFormat::Set && i > 0 && ds[i] == ds[i - 1])
            continue;
        if (i > 0)
            ss << ", ";
        ss << ds[i].get_str();
    }
    ss << '}';
    return ss.str();
}

std::string format_group(const AbelianGroup& g) {
    if (g.free_rank == 0 && g.torsion.empty())
        return "0";
    std::ostringstream ss;
    bool first = true;
    if (g.free_rank > 0) {
        ss << "Z^" << g.free_rank;
        first = false;
    }
    for (const auto& t : g.torsion) {
        if (!first)
            ss << " (+) ";
        ss << "Z/" << t.get_str();
        first = false;
    }
    return ss.str();
}

LkInvariant handlebody_linking(const IntMatrix& m) {
    auto divisors = elementary_divisors(m);
    if (divisors.empty())
        return LkInvariant::zero();
    return LkInvariant::from_divisors(std::move(divisors));
}

AbelianGroup quotient_group(const IntMatrix& m, Side side) {
    // Presentation Z^n -> Z^m for A1 is M itself; A2 is presented by its transpose.
    const IntMatrix presentation = side == Side::First ? m : transpose(m);
    const auto divisors = elementary_divisors(presentation);

    AbelianGroup g;
    g.free_rank = presentation.rows() - divisors.size();
    for (const auto& d : divisors)
        if (d != 1)
            g.torsion.push_back(d);
    return g;
}

LkInvariant reconstruct_lk(const AbelianGroup& g, std::size_t l) {
    if (l < g.torsion.size())
        throw std::invalid_argument("reconstruct_lk: rank " + std::to_string(l) + " is smaller than the torsion length " +
                                    std::to_string(g.torsion.size()));
    if (l == 0)
        return LkInvariant::zero();
    std::vector<Integer> divisors(l - g.torsion.size(), Integer(1));
    divisors.insert(divisors.end(), g.torsion.begin(), g.torsion.end());
    return LkInvariant::from_divisors(std::move(divisors));
}

}  // namespace hlk
