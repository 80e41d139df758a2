#include "clutterlab/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace clutterlab {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::optional<QpqMeta> parse_meta_comment(const std::string& line) {
    // "# @qpq p=1 q=1 f=caseI:all"
    auto toks = split_ws(line);
    if (toks.size() < 2 || toks[0] != "#" || toks[1] != "@qpq") return std::nullopt;
    QpqMeta meta;
    for (std::size_t i = 2; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        if (t.rfind("p=", 0) == 0)
            meta.p = std::stoi(t.substr(2));
        else if (t.rfind("q=", 0) == 0)
            meta.q = std::stoi(t.substr(2));
        else if (t.rfind("f=", 0) == 0)
            meta.fspec = t.substr(2);
    }
    if (meta.p < 1 || meta.q < 1 || meta.fspec.empty())
        throw ParseError("malformed @qpq metadata line: " + line);
    return meta;
}

LoadedClutter assemble(VertexUniverse u, std::vector<VSet> edges, std::optional<QpqMeta> meta,
                       const LoadOptions& opts) {
    LoadedClutter out;
    out.qpq = std::move(meta);
    if (opts.hypergraph_mode) {
        Clutter c = Clutter::minimal_of(u, edges);
        out.minimalized = c.edge_count() != static_cast<int>(edges.size());
        out.clutter = std::move(c);
    } else {
        try {
            out.clutter = Clutter::from_edges(std::move(u), std::move(edges));
        } catch (const InclusionConflictError& e) {
            throw ParseError(std::string("edge family is not a clutter (") + e.what() +
                             "); rerun with --hypergraph to minimalize on load");
        }
    }
    return out;
}

}  // namespace

LoadedClutter parse_clutter_text(const std::string& text, const LoadOptions& opts) {
    std::istringstream is(text);
    std::string line;
    std::optional<VertexUniverse> universe;
    std::optional<QpqMeta> meta;
    std::vector<VSet> edges;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto m = parse_meta_comment(line)) meta = m;
        std::string stripped = line.substr(0, line.find('#'));
        auto toks = split_ws(stripped);
        if (toks.empty()) continue;
        if (toks[0] == "vertices:") {
            if (universe) throw ParseError("duplicate vertices: line (line " + std::to_string(lineno) + ")");
            universe = VertexUniverse(std::vector<std::string>(toks.begin() + 1, toks.end()));
        } else if (toks[0] == "edge:") {
            if (!universe) throw ParseError("edge: before vertices: (line " + std::to_string(lineno) + ")");
            VSet e;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                auto idx = universe->index_of(toks[i]);
                if (!idx) throw ParseError("unknown vertex label '" + toks[i] + "' (line " +
                                           std::to_string(lineno) + ")");
                e.add(*idx);
            }
            edges.push_back(e);
        } else {
            throw ParseError("unrecognized line " + std::to_string(lineno) + ": " + line);
        }
    }
    if (!universe) throw ParseError("missing vertices: line");
    return assemble(std::move(*universe), std::move(edges), std::move(meta), opts);
}

LoadedClutter parse_clutter_json_text(const std::string& text, const LoadOptions& opts) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("edges"))
        throw ParseError("JSON clutter needs \"vertices\" and \"edges\"");
    std::vector<std::string> names = j["vertices"].get<std::vector<std::string>>();
    VertexUniverse u(std::move(names));
    std::vector<VSet> edges;
    for (const auto& je : j["edges"]) {
        VSet e;
        for (const auto& label : je) {
            auto idx = u.index_of(label.get<std::string>());
            if (!idx) throw ParseError("unknown vertex label '" + label.get<std::string>() + "'");
            e.add(*idx);
        }
        edges.push_back(e);
    }
    std::optional<QpqMeta> meta;
    if (j.contains("qpq")) {
        QpqMeta m;
        m.p = j["qpq"].at("p").get<int>();
        m.q = j["qpq"].at("q").get<int>();
        m.fspec = j["qpq"].at("f").get<std::string>();
        meta = m;
    }
    return assemble(std::move(u), std::move(edges), std::move(meta), opts);
}

LoadedClutter load_clutter_file(const std::string& path, const LoadOptions& opts) {
    std::string contents = read_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return parse_clutter_json_text(contents, opts);
    return parse_clutter_text(contents, opts);
}

std::string clutter_to_text(const Clutter& c, const std::optional<QpqMeta>& meta) {
    std::ostringstream os;
    if (meta) os << "# @qpq p=" << meta->p << " q=" << meta->q << " f=" << meta->fspec << "\n";
    os << "vertices:";
    for (const auto& name : c.universe().names()) os << ' ' << name;
    os << '\n';
    for (const VSet& e : c.edges()) {
        os << "edge:";
        for (int v : e.indices()) os << ' ' << c.universe().name(v);
        os << '\n';
    }
    return os.str();
}

std::string clutter_to_json_text(const Clutter& c, const std::optional<QpqMeta>& meta) {
    nlohmann::json j;
    j["vertices"] = c.universe().names();
    auto edges = nlohmann::json::array();
    for (const VSet& e : c.edges()) {
        auto je = nlohmann::json::array();
        for (int v : e.indices()) je.push_back(c.universe().name(v));
        edges.push_back(je);
    }
    j["edges"] = edges;
    if (meta) j["qpq"] = {{"p", meta->p}, {"q", meta->q}, {"f", meta->fspec}};
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open " + path + " for writing");
    os << contents;
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

QpqMeta meta_of(const QpqDescriptor& desc) {
    return QpqMeta{desc.p, desc.q, desc.fspec.to_string()};
}

QpqDescriptor descriptor_from_meta(const QpqMeta& meta, const Clutter& loaded) {
    QpqDescriptor desc = generate_qpq_f(meta.p, meta.q, FSpec::parse(meta.fspec));
    if (!(desc.universe == loaded.universe()) || !(desc.clutter() == loaded))
        throw ParseError("file does not match its @qpq metadata");
    return desc;
}

}  // namespace clutterlab
