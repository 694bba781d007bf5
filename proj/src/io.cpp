#include "propb/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace propb {

using ordered_json = nlohmann::ordered_json;

std::string to_json_string(const UniformHypergraph& h) {
    ordered_json j;
    j["n"] = h.uniformity();
    j["vertex_count"] = h.vertex_count();
    ordered_json labels = ordered_json::array();
    for (const VertexLabel& label : h.labels()) {
        labels.push_back({{"role", role_name(label.role)}, {"index", label.index}});
    }
    j["labels"] = std::move(labels);
    ordered_json edges = ordered_json::array();
    for (const Hyperedge& e : h.edges()) {
        edges.push_back(e.vertices());
    }
    j["edges"] = std::move(edges);
    return j.dump();
}

void write_json(const UniformHypergraph& h, std::ostream& out) {
    out << to_json_string(h) << '\n';
}

UniformHypergraph from_json_string(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed hypergraph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("vertex_count") ||
        !j.contains("labels") || !j.contains("edges")) {
        throw std::invalid_argument("hypergraph JSON missing required keys");
    }
    const int n = j.at("n").get<int>();
    const std::size_t vertex_count = j.at("vertex_count").get<std::size_t>();

    std::vector<VertexLabel> labels;
    for (const auto& jl : j.at("labels")) {
        auto role = role_from_name(jl.at("role").get<std::string>());
        if (!role) throw std::invalid_argument("unknown vertex role in JSON");
        labels.push_back({*role, jl.at("index").get<int>()});
    }

    UniformHypergraph h(n, vertex_count, std::move(labels));
    for (const auto& je : j.at("edges")) {
        if (!h.add_edge(Hyperedge(je.get<std::vector<VertexId>>()))) {
            throw std::invalid_argument("duplicate edge in hypergraph JSON");
        }
    }
    return h;
}

UniformHypergraph read_json(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_string(buf.str());
}

void write_edge_list(const UniformHypergraph& h, std::ostream& out) {
    out << h.uniformity() << ' ' << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (const Hyperedge& e : h.edges()) {
        bool first = true;
        for (VertexId v : e.vertices()) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
}

UniformHypergraph read_edge_list(std::istream& in) {
    int n = 0;
    std::size_t vertex_count = 0, edge_count = 0;
    if (!(in >> n >> vertex_count >> edge_count)) {
        throw std::invalid_argument("edge-list header must be 'n vertex_count edge_count'");
    }
    UniformHypergraph h(n, vertex_count);
    for (std::size_t i = 0; i < edge_count; ++i) {
        std::vector<VertexId> ids(static_cast<std::size_t>(n));
        for (VertexId& v : ids) {
            long long raw = 0;
            if (!(in >> raw) || raw < 0) {
                throw std::invalid_argument("edge-list body truncated or contains a bad id");
            }
            v = static_cast<VertexId>(raw);
        }
        if (!h.add_edge(Hyperedge(std::move(ids)))) {
            throw std::invalid_argument("duplicate edge in edge-list input");
        }
    }
    return h;
}

UniformHypergraph read_hypergraph(std::istream& in) {
    int c = in.peek();
    while (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
        in.get();
        c = in.peek();
    }
    if (c == '{') return read_json(in);
    return read_edge_list(in);
}

UniformHypergraph load_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open hypergraph file: " + path);
    return read_hypergraph(in);
}

}  // namespace propb
