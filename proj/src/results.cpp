#include <mcs/io.hpp>

#include <json.hpp>

#include <sstream>

namespace mcs {

using nlohmann::ordered_json;

auto emit_results(const ResultDocument & doc, ResultFormat format) -> std::string
{
    if (format == ResultFormat::Json) {
        ordered_json out;
        out["mode"] = to_string(doc.mode);
        out["connected"] = doc.connected;
        out["labeled"] = doc.labeled;
        out["size"] = doc.size;
        out["inputs"] = doc.inputs;
        out["classes"] = ordered_json::array();
        for (const auto & r : doc.classes) {
            ordered_json cls;
            cls["size"] = r.size;
            cls["vertices"] = r.subgraph.vertex_count();
            cls["edges"] = r.subgraph.edge_count();
            cls["graph"] = serialize_native(r.subgraph);
            cls["witnesses"] = ordered_json::array();
            for (std::size_t i = 0; i < r.per_input.size(); ++i) {
                ordered_json w;
                w["input"] = i;
                w["vertex_map"] = r.per_input[i].vertex_map;
                if (doc.mode == Mode::MECS)
                    w["edge_map"] = r.per_input[i].edge_map;
                cls["witnesses"].push_back(std::move(w));
            }
            out["classes"].push_back(std::move(cls));
        }
        return out.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "mode " << to_string(doc.mode) << (doc.connected ? " connected" : " any")
        << (doc.labeled ? " labeled" : " unlabeled") << '\n';
    out << "size " << doc.size << ", " << doc.classes.size() << (doc.classes.size() == 1 ? " class" : " classes")
        << '\n';
    for (std::size_t c = 0; c < doc.classes.size(); ++c) {
        const auto & r = doc.classes[c];
        out << "\nclass " << c + 1 << ": " << r.subgraph.vertex_count() << " vertices, " << r.subgraph.edge_count()
            << " edges\n";
        out << serialize_native(r.subgraph);
        for (std::size_t i = 0; i < r.per_input.size(); ++i) {
            out << "in " << (i < doc.inputs.size() && ! doc.inputs[i].empty() ? doc.inputs[i] : std::to_string(i))
                << ':';
            const auto & w = r.per_input[i];
            for (std::size_t v = 0; v < w.vertex_map.size(); ++v)
                out << ' ' << v << "->" << w.vertex_map[v];
            if (doc.mode == Mode::MECS) {
                out << " |";
                for (std::size_t e = 0; e < w.edge_map.size(); ++e)
                    out << " e" << e << "->e" << w.edge_map[e];
            }
            out << '\n';
        }
    }
    return out.str();
}

auto parse_results_json(std::string_view text) -> ResultDocument
{
    ordered_json in;
    try {
        in = ordered_json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        throw ParseError(0, e.what());
    }
    ResultDocument doc;
    try {
        doc.mode = parse_mode(in.at("mode").get<std::string>());
        doc.connected = in.at("connected").get<bool>();
        doc.labeled = in.at("labeled").get<bool>();
        doc.size = in.at("size").get<std::size_t>();
        doc.inputs = in.at("inputs").get<std::vector<std::string>>();
        for (const auto & cls : in.at("classes")) {
            EmbeddingResult r;
            r.size = cls.at("size").get<std::size_t>();
            auto graphs = parse_native(cls.at("graph").get<std::string>());
            if (graphs.size() != 1)
                throw ParseError(0, "class graph must hold exactly one graph");
            r.subgraph = std::move(graphs.front());
            r.form = canonical(r.subgraph);
            for (const auto & w : cls.at("witnesses")) {
                Witness witness;
                witness.vertex_map = w.at("vertex_map").get<std::vector<VertexId>>();
                if (w.contains("edge_map"))
                    witness.edge_map = w.at("edge_map").get<std::vector<EdgeId>>();
                r.per_input.push_back(std::move(witness));
            }
            doc.classes.push_back(std::move(r));
        }
    }
    catch (const nlohmann::json::exception & e) {
        throw ParseError(0, e.what());
    }
    return doc;
}

} // namespace mcs
