#include <mcs/io.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace mcs {

ParseError::ParseError(std::size_t line, const std::string & message) :
    std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
    line_(line)
{
}

namespace {
    auto tokenize(std::string_view line) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            if (i >= line.size() || line[i] == '#')
                break;
            auto start = i;
            while (i < line.size() && ! std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            tokens.push_back(line.substr(start, i - start));
        }
        return tokens;
    }

    auto to_index(std::string_view token, std::size_t line, const char * what) -> std::size_t
    {
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || end != token.data() + token.size())
            throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
        return value;
    }

    struct Pending
    {
        LabeledGraph graph;
        std::size_t declared = 0;
        std::size_t header_line = 0;
    };

    void close(std::optional<Pending> & pending, std::vector<LabeledGraph> & out)
    {
        if (! pending)
            return;
        if (pending->graph.vertex_count() != pending->declared)
            throw ParseError(pending->header_line, "graph declares " + std::to_string(pending->declared) +
                    " vertices but defines " + std::to_string(pending->graph.vertex_count()));
        out.push_back(std::move(pending->graph));
        pending.reset();
    }
}

auto parse_native(std::string_view text) -> std::vector<LabeledGraph>
{
    std::vector<LabeledGraph> out;
    std::optional<Pending> pending;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;

        auto trimmed = line;
        while (! trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.remove_suffix(1);
        if (trimmed.empty()) {
            close(pending, out);
            continue;
        }
        auto tokens = tokenize(line);
        if (tokens.empty())
            continue;
        const auto kind = tokens[0];
        if (kind == "graph") {
            close(pending, out);
            if (tokens.size() != 2 && tokens.size() != 3)
                throw ParseError(number, "expected 'graph [name] <vertex count>'");
            pending.emplace();
            pending->header_line = number;
            pending->declared = to_index(tokens.back(), number, "vertex count");
            if (tokens.size() == 3)
                pending->graph.set_name(std::string(tokens[1]));
        }
        else if (kind == "v") {
            if (! pending)
                throw ParseError(number, "vertex outside a graph block");
            if (tokens.size() != 2 && tokens.size() != 3)
                throw ParseError(number, "expected 'v <id> <label>'");
            auto id = to_index(tokens[1], number, "vertex id");
            if (id != pending->graph.vertex_count())
                throw ParseError(number, "vertex ids must be dense and increasing; expected " +
                        std::to_string(pending->graph.vertex_count()));
            if (id >= pending->declared)
                throw ParseError(number, "vertex id " + std::to_string(id) + " exceeds declared count");
            pending->graph.add_vertex(tokens.size() == 3 ? std::string(tokens[2]) : kUnlabeled);
        }
        else if (kind == "e") {
            if (! pending)
                throw ParseError(number, "edge outside a graph block");
            if (tokens.size() != 3 && tokens.size() != 4)
                throw ParseError(number, "expected 'e <u> <v> <label>'");
            auto u = to_index(tokens[1], number, "vertex id");
            auto v = to_index(tokens[2], number, "vertex id");
            try {
                pending->graph.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v),
                    tokens.size() == 4 ? std::string(tokens[3]) : kUnlabeled);
            }
            catch (const GraphError & e) {
                throw ParseError(number, e.what());
            }
        }
        else
            throw ParseError(number, "unknown record '" + std::string(kind) + "'");
    }
    close(pending, out);
    return out;
}

auto serialize_native(const LabeledGraph & g) -> std::string
{
    std::ostringstream out;
    out << "graph ";
    if (! g.name().empty())
        out << g.name() << ' ';
    out << g.vertex_count() << '\n';
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << "v " << v << ' ' << g.vertex_label(v) << '\n';
    for (const auto & e : g.edges())
        out << "e " << e.u << ' ' << e.v << ' ' << e.label << '\n';
    return out.str();
}

auto serialize_native(std::span<const LabeledGraph> graphs) -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (i > 0)
            out += '\n';
        out += serialize_native(graphs[i]);
    }
    return out;
}

auto read_graphs(const std::filesystem::path & path, bool strip_hydrogens) -> std::vector<LabeledGraph>
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ParseError(0, "cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto text = buffer.str();
    auto ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".mol")
        return {parse_mol(text, strip_hydrogens)};
    if (ext == ".sdf" || ext == ".sd")
        return parse_sdf(text, strip_hydrogens);
    return parse_native(text);
}

} // namespace mcs
