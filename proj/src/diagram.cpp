#include "hlk/diagram.hpp"

#include "hlk/error.hpp"

#include <algorithm>

namespace hlk {

const Loop* Diagram::find_loop(std::string_view id) const {
    auto it = std::find_if(loops.begin(), loops.end(), [&](const Loop& l) { return l.id == id; });
    return it == loops.end() ? nullptr : &*it;
}

std::vector<const Loop*> Diagram::loops_of(int component) const {
    std::vector<const Loop*> out;
    for (const auto& l : loops)
        if (l.component == component)
            out.push_back(&l);
    return out;
}

std::size_t Diagram::genus(int component) const {
    return static_cast<std::size_t>(
        std::count_if(loops.begin(), loops.end(), [&](const Loop& l) { return l.component == component; }));
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
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

void expect_arity(const std::vector<std::string_view>& tokens, std::size_t n, std::size_t lineno) {
    if (tokens.size() != n)
        throw ParseError(lineno, "'" + std::string(tokens[0]) + "' takes " + std::to_string(n - 1) +
                                     " argument(s), got " + std::to_string(tokens.size() - 1));
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
    Diagram d;
    int components = 0;
    std::size_t lineno = 0;
    std::size_t pos = 0;

    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0].front() == '#')
            continue;

        const std::string_view keyword = tokens[0];
        if (keyword == "component") {
            expect_arity(tokens, 2, lineno);
            if (components == 2)
                throw ParseError(lineno, "a diagram has exactly two components");
            if (components == 1 && d.genus(0) == 0)
                throw ParseError(lineno, "component '" + d.component_names[0] + "' has no loops");
            d.component_names[components++] = std::string(tokens[1]);
        } else if (keyword == "loop") {
            expect_arity(tokens, 2, lineno);
            if (components == 0)
                throw ParseError(lineno, "loop declared before any component");
            if (d.find_loop(tokens[1]))
                throw ParseError(lineno, "duplicate loop id '" + std::string(tokens[1]) + "'");
            d.loops.push_back(Loop{std::string(tokens[1]), components - 1});
        } else if (keyword == "crossing") {
            expect_arity(tokens, 4, lineno);
            for (std::size_t k = 1; k <= 2; ++k)
                if (!d.find_loop(tokens[k]))
                    throw ParseError(lineno, "crossing references unknown loop '" + std::string(tokens[k]) + "'");
            int sign = 0;
            if (tokens[3] == "+")
                sign = 1;
            else if (tokens[3] == "-")
                sign = -1;
            else
                throw ParseError(lineno, "crossing sign must be '+' or '-', got '" + std::string(tokens[3]) + "'");
            d.crossings.push_back(Crossing{std::string(tokens[1]), std::string(tokens[2]), sign});
        } else {
            throw ParseError(lineno, "unknown keyword '" + std::string(keyword) + "'");
        }
    }

    if (components != 2)
        throw ParseError(0, "expected 2 components, found " + std::to_string(components));
    for (int c = 0; c < 2; ++c)
        if (d.genus(c) == 0)
            throw ParseError(0, "component '" + d.component_names[c] + "' has no loops");
    return d;
}

long linking_number(const Diagram& d, std::string_view a, std::string_view b) {
    const Loop* la = d.find_loop(a);
    const Loop* lb = d.find_loop(b);
    if (!la || !lb)
        throw DiagramError("unknown loop '" + std::string(la ? b : a) + "'");
    if (la->component == lb->component)
        throw DiagramError("loops '" + la->id + "' and '" + lb->id + "' lie in the same component");

    long sum = 0;
    for (const auto& c : d.crossings)
        if ((c.over == a && c.under == b) || (c.over == b && c.under == a))
            sum += c.sign;
    if (sum % 2 != 0)
        throw DiagramError("odd signed crossing count " + std::to_string(sum) + " between '" + la->id + "' and '" +
                           lb->id + "'");
    return sum / 2;
}

IntMatrix linking_matrix(const Diagram& d) {
    const auto rows = d.loops_of(0);
    const auto cols = d.loops_of(1);
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            try {
                m(i, j) = linking_number(d, rows[i]->id, cols[j]->id);
            } catch (const DiagramError& e) {
                throw DiagramError("(" + rows[i]->id + ", " + cols[j]->id + "): " + e.what());
            }
        }
    return m;
}

}  // namespace hlk
