#pragma once

#include "hlk/int_matrix.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace hlk {

/// One loop edge of a bouquet graph, i.e. one basis circle of the
/// component's first homology.
struct Loop {
    std::string id;
    int component = 0;  // 0 or 1
};

/// A signed crossing between two loops in the projection.
struct Crossing {
    std::string over;
    std::string under;
    int sign = 1;  // +1 or -1
};

/// Two-component spatial bouquet graph given by signed crossing data.
///
/// Loops are kept in declaration order; that order fixes the row order
/// (component 0) and column order (component 1) of the linking matrix.
struct Diagram {
    std::array<std::string, 2> component_names;
    std::vector<Loop> loops;
    std::vector<Crossing> crossings;

    const Loop* find_loop(std::string_view id) const;
    std::vector<const Loop*> loops_of(int component) const;
    std::size_t genus(int component) const;
};

/// Parses the line-oriented diagram format:
///
///     # comment
///     component <name>
///     loop <id>
///     crossing <over-id> <under-id> <+|->
///
/// Exactly two components, each with at least one loop. A crossing may
/// only mention loops declared above it. Throws ParseError.
Diagram parse_diagram(std::string_view text);

/// Half the signed count of crossings between loops a and b, in either
/// over/under order. Throws DiagramError if a and b are unknown, lie in
/// the same component, or the signed count is odd.
long linking_number(const Diagram& d, std::string_view a, std::string_view b);

/// m×n matrix of linking numbers: rows are component 0 loops, columns
/// are component 1 loops, both in declaration order.
IntMatrix linking_matrix(const Diagram& d);

}  // namespace hlk
