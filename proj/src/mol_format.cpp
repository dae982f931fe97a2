#include <mcs/io.hpp>

#include <cctype>
#include <charconv>

namespace mcs {

namespace {
    auto split_lines(std::string_view text) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> lines;
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            auto line = text.substr(pos, end - pos);
            if (! line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            lines.push_back(line);
            pos = end + 1;
        }
        return lines;
    }

    auto trim(std::string_view s) -> std::string_view
    {
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }

    auto field(std::string_view line, std::size_t start, std::size_t width) -> std::string_view
    {
        if (start >= line.size())
            return {};
        return trim(line.substr(start, width));
    }

    auto tokens_of(std::string_view line) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> out;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
            auto start = pos;
            while (pos < line.size() && ! std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
            if (pos > start)
                out.push_back(line.substr(start, pos - start));
        }
        return out;
    }

    auto integer(std::string_view token, std::size_t line, const char * what) -> long
    {
        long value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
            throw ParseError(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
        return value;
    }

    // Fixed V2000 columns, falling back to whitespace tokens for short lines.
    auto column_or_token(std::string_view line, std::size_t start, std::size_t width, std::size_t token)
        -> std::string_view
    {
        if (line.size() >= start + width) {
            auto f = field(line, start, width);
            if (! f.empty())
                return f;
        }
        auto tokens = tokens_of(line);
        return token < tokens.size() ? tokens[token] : std::string_view{};
    }

    auto parse_block(const std::vector<std::string_view> & lines, std::size_t first, bool strip_hydrogens)
        -> LabeledGraph
    {
        auto at = [&](std::size_t i) -> std::string_view {
            if (first + i >= lines.size())
                throw ParseError(first + i + 1, "unexpected end of connection table");
            return lines[first + i];
        };
        std::string name(trim(at(0)));
        for (auto & c : name)
            if (std::isspace(static_cast<unsigned char>(c)))
                c = '_';
        LabeledGraph g(name);
        const auto counts_line = first + 4;
        auto counts = at(3);
        if (counts.find("V3000") != std::string_view::npos)
            throw ParseError(counts_line, "V3000 connection tables are not supported");
        auto atom_field = counts.size() >= 6 ? field(counts, 0, 3) : std::string_view{};
        auto bond_field = counts.size() >= 6 ? field(counts, 3, 3) : std::string_view{};
        if (atom_field.empty() || bond_field.empty()) {
            auto tokens = tokens_of(counts);
            if (tokens.size() < 2)
                throw ParseError(counts_line, "malformed counts line");
            atom_field = tokens[0];
            bond_field = tokens[1];
        }
        auto atoms = integer(atom_field, counts_line, "atom count");
        auto bonds = integer(bond_field, counts_line, "bond count");
        if (atoms < 0 || bonds < 0)
            throw ParseError(counts_line, "malformed counts line");

        std::vector<long> keep(static_cast<std::size_t>(atoms), -1);
        for (long a = 0; a < atoms; ++a) {
            auto line = at(4 + static_cast<std::size_t>(a));
            auto symbol = column_or_token(line, 31, 3, 3);
            if (symbol.empty())
                throw ParseError(first + 5 + static_cast<std::size_t>(a), "atom line without element symbol");
            if (strip_hydrogens && symbol == "H")
                continue;
            keep[static_cast<std::size_t>(a)] = static_cast<long>(g.add_vertex(std::string(symbol)));
        }
        for (long b = 0; b < bonds; ++b) {
            const auto number = first + 5 + static_cast<std::size_t>(atoms + b);
            auto line = at(4 + static_cast<std::size_t>(atoms + b));
            auto x = integer(column_or_token(line, 0, 3, 0), number, "bond atom index");
            auto y = integer(column_or_token(line, 3, 3, 1), number, "bond atom index");
            auto order = integer(column_or_token(line, 6, 3, 2), number, "bond order");
            if (x < 1 || x > atoms || y < 1 || y > atoms)
                throw ParseError(number, "bond references atom outside 1.." + std::to_string(atoms));
            if (order < 1)
                throw ParseError(number, "bond order must be positive");
            auto u = keep[static_cast<std::size_t>(x - 1)], v = keep[static_cast<std::size_t>(y - 1)];
            if (u < 0 || v < 0)
                continue;
            try {
                g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), std::to_string(order));
            }
            catch (const GraphError & e) {
                throw ParseError(number, e.what());
            }
        }
        return g;
    }
}

auto parse_mol(std::string_view text, bool strip_hydrogens) -> LabeledGraph
{
    return parse_block(split_lines(text), 0, strip_hydrogens);
}

auto parse_sdf(std::string_view text, bool strip_hydrogens) -> std::vector<LabeledGraph>
{
    auto lines = split_lines(text);
    std::vector<LabeledGraph> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= lines.size(); ++i) {
        if (i < lines.size() && trim(lines[i]) != "$$$$")
            continue;
        bool blank = true;
        for (auto j = start; j < i; ++j)
            if (! trim(lines[j]).empty())
                blank = false;
        if (! blank)
            out.push_back(parse_block(lines, start, strip_hydrogens));
        start = i + 1;
    }
    return out;
}

} // namespace mcs
