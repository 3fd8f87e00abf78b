#include "hgs/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hgs {

namespace {

using nlohmann::json;

int require_int(const json& j, const std::string& field) {
    if (!j.is_number_integer())
        throw std::invalid_argument("hypergraph file: field '" + field +
                                    "' must be an integer");
    return j.get<int>();
}

std::map<std::string, int> read_role_map(const json& j, const std::string& field) {
    if (!j.is_object())
        throw std::invalid_argument("hypergraph file: field '" + field +
                                    "' must be a string -> integer map");
    std::map<std::string, int> roles;
    for (const auto& [name, value] : j.items()) roles[name] = require_int(value, field);
    return roles;
}

}  // namespace

LabeledHypergraph read_hypergraph(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument(std::string("hypergraph file: ") + err.what());
    }
    if (!j.is_object()) throw std::invalid_argument("hypergraph file: expected a JSON object");

    static const std::set<std::string> allowed{"k", "n", "edges", "vertex_roles", "edge_roles"};
    for (const auto& [key, _] : j.items())
        if (!allowed.count(key))
            throw std::invalid_argument("hypergraph file: unknown field '" + key + "'");
    for (const char* field : {"k", "n", "edges"})
        if (!j.contains(field))
            throw std::invalid_argument("hypergraph file: missing field '" +
                                        std::string(field) + "'");

    const int k = require_int(j["k"], "k");
    const int n = require_int(j["n"], "n");
    if (!j["edges"].is_array())
        throw std::invalid_argument("hypergraph file: field 'edges' must be a list of lists");
    std::vector<Edge> edges;
    for (const auto& row : j["edges"]) {
        if (!row.is_array())
            throw std::invalid_argument("hypergraph file: each edge must be an integer list");
        Edge e;
        for (const auto& v : row) e.push_back(require_int(v, "edges"));
        edges.push_back(std::move(e));
    }

    LabeledHypergraph labeled{Hypergraph(k, n, std::move(edges)), {}, {}};
    if (j.contains("vertex_roles"))
        labeled.vertex_roles = read_role_map(j["vertex_roles"], "vertex_roles");
    if (j.contains("edge_roles"))
        labeled.edge_roles = read_role_map(j["edge_roles"], "edge_roles");
    validate_roles(labeled);
    return labeled;
}

LabeledHypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open hypergraph file '" + path + "'");
    return read_hypergraph(in);
}

std::string hypergraph_to_json(const LabeledHypergraph& labeled) {
    // hand-formatted so each edge sits on one line; still plain JSON
    std::ostringstream out;
    out << "{\n";
    out << "  \"k\": " << labeled.graph.k() << ",\n";
    out << "  \"n\": " << labeled.graph.num_vertices() << ",\n";
    out << "  \"edges\": [";
    const auto& edges = labeled.graph.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        out << (e ? ",\n            " : "\n            ") << json(edges[e]).dump();
    }
    out << "\n  ]";
    auto emit_roles = [&out](const char* name, const std::map<std::string, int>& roles) {
        if (roles.empty()) return;
        out << ",\n  \"" << name << "\": " << json(roles).dump();
    };
    emit_roles("vertex_roles", labeled.vertex_roles);
    emit_roles("edge_roles", labeled.edge_roles);
    out << "\n}\n";
    return out.str();
}

void write_hypergraph(std::ostream& out, const LabeledHypergraph& labeled) {
    out << hypergraph_to_json(labeled);
}

void write_hypergraph_file(const std::string& path, const LabeledHypergraph& labeled) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_hypergraph(out, labeled);
}

WeightedIncidence read_weight_triples(std::istream& in, const Hypergraph& h) {
    WeightedIncidence b = WeightedIncidence::zeros(h);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        int v, e;
        Real w;
        if (!(row >> v)) continue;  // blank line
        if (!(row >> e >> w))
            throw std::invalid_argument("weights file line " + std::to_string(lineno) +
                                        ": expected 'vertex edge weight'");
        std::string extra;
        if (row >> extra)
            throw std::invalid_argument("weights file line " + std::to_string(lineno) +
                                        ": trailing content '" + extra + "'");
        if (v < 0 || v >= h.num_vertices() || e < 0 || e >= h.num_edges())
            throw std::invalid_argument("weights file line " + std::to_string(lineno) +
                                        ": pair (" + std::to_string(v) + "," +
                                        std::to_string(e) + ") out of range");
        if (!std::binary_search(h.edge(e).begin(), h.edge(e).end(), v))
            throw std::invalid_argument("weights file line " + std::to_string(lineno) +
                                        ": vertex " + std::to_string(v) +
                                        " is not in edge " + std::to_string(e));
        if (!(w > 0))
            throw std::invalid_argument("weights file line " + std::to_string(lineno) +
                                        ": weight must be positive");
        if (b(v, e) != 0)
            throw std::invalid_argument("weights file line " + std::to_string(lineno) +
                                        ": duplicate pair (" + std::to_string(v) + "," +
                                        std::to_string(e) + ")");
        b.set(v, e, w);
    }
    for (int e = 0; e < h.num_edges(); ++e)
        for (int v : h.edge(e))
            if (b(v, e) == 0)
                throw std::invalid_argument("weights file: missing weight for incident pair (" +
                                            std::to_string(v) + "," + std::to_string(e) + ")");
    return b;
}

WeightedIncidence read_weight_triples_file(const std::string& path, const Hypergraph& h) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open weights file '" + path + "'");
    return read_weight_triples(in, h);
}

}  // namespace hgs
