#pragma once

#include <mcs/common.hpp>
#include <mcs/graph.hpp>
#include <mcs/solver.hpp>

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcs {

/// Malformed input text. line() is 1-based, 0 when no single line is to blame.
class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, const std::string & message);

    [[nodiscard]] auto line() const noexcept -> std::size_t { return line_; }

private:
    std::size_t line_;
};

// Native format:
//   graph [name] <n>
//   v <id> <label>
//   e <u> <v> <label>
// '#' starts a comment; graphs are separated by blank lines.
auto parse_native(std::string_view text) -> std::vector<LabeledGraph>;
auto serialize_native(const LabeledGraph & g) -> std::string;
auto serialize_native(std::span<const LabeledGraph> graphs) -> std::string;

/// One MOL V2000 connection table. Vertex labels are element symbols, edge
/// labels bond orders.
auto parse_mol(std::string_view text, bool strip_hydrogens = true) -> LabeledGraph;

/// Records of an SD file, separated by "$$$$" lines.
auto parse_sdf(std::string_view text, bool strip_hydrogens = true) -> std::vector<LabeledGraph>;

/// Reads a native, .mol or .sdf file, chosen by extension.
auto read_graphs(const std::filesystem::path & path, bool strip_hydrogens = true) -> std::vector<LabeledGraph>;

enum class ResultFormat { Json, Text };

struct ResultDocument
{
    Mode mode = Mode::MVCS;
    bool connected = true;
    bool labeled = true;
    std::size_t size = 0;
    std::vector<std::string> inputs;
    std::vector<EmbeddingResult> classes;
};

auto emit_results(const ResultDocument & doc, ResultFormat format) -> std::string;

/// Inverse of emit_results for the JSON format.
auto parse_results_json(std::string_view text) -> ResultDocument;

} // namespace mcs
