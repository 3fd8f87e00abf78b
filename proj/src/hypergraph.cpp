#include "hgs/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace hgs {

namespace {

std::string format_edge(const Edge& e) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ",";
        os << e[i];
    }
    os << "}";
    return os.str();
}

}  // namespace

Edge canonical_edge(Edge e) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
}

Hypergraph::Hypergraph(int k, int n, std::vector<Edge> edges) : k_(k), n_(n) {
    if (k < 2)
        throw std::invalid_argument("hypergraph: uniformity k must be at least 2, got " +
                                    std::to_string(k));
    if (n < k)
        throw std::invalid_argument("hypergraph: vertex count " + std::to_string(n) +
                                    " is smaller than uniformity " + std::to_string(k));
    incidence_.assign(n, {});
    edges_.reserve(edges.size());
    std::map<Edge, int> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Edge e = canonical_edge(std::move(edges[i]));
        if (static_cast<int>(e.size()) != k)
            throw std::invalid_argument("hypergraph: edge " + std::to_string(i) + " " +
                                        format_edge(e) + " has cardinality " +
                                        std::to_string(e.size()) + ", expected " +
                                        std::to_string(k));
        for (int v : e)
            if (v < 0 || v >= n)
                throw std::invalid_argument("hypergraph: edge " + std::to_string(i) +
                                            " contains vertex " + std::to_string(v) +
                                            " outside [0," + std::to_string(n) + ")");
        auto [it, fresh] = seen.emplace(e, static_cast<int>(i));
        if (!fresh)
            throw std::invalid_argument("hypergraph: edge " + std::to_string(i) + " " +
                                        format_edge(e) + " duplicates edge " +
                                        std::to_string(it->second));
        for (int v : e) incidence_[v].push_back(static_cast<int>(i));
        edges_.push_back(std::move(e));
    }
}

const Edge& Hypergraph::edge(int e) const {
    if (e < 0 || e >= num_edges())
        throw std::out_of_range("hypergraph: edge index " + std::to_string(e) +
                                " outside [0," + std::to_string(num_edges()) + ")");
    return edges_[e];
}

const std::vector<int>& Hypergraph::incident_edges(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("hypergraph: vertex " + std::to_string(v) + " outside [0," +
                                std::to_string(n_) + ")");
    return incidence_[v];
}

bool Hypergraph::has_edge(const Edge& vertices) const {
    Edge e = canonical_edge(vertices);
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

int LabeledHypergraph::vertex(const std::string& role) const {
    auto it = vertex_roles.find(role);
    if (it == vertex_roles.end())
        throw std::invalid_argument("labeled hypergraph: no vertex role '" + role + "'");
    return it->second;
}

int LabeledHypergraph::edge(const std::string& role) const {
    auto it = edge_roles.find(role);
    if (it == edge_roles.end())
        throw std::invalid_argument("labeled hypergraph: no edge role '" + role + "'");
    return it->second;
}

void validate_roles(const LabeledHypergraph& labeled) {
    for (const auto& [name, v] : labeled.vertex_roles)
        if (v < 0 || v >= labeled.graph.num_vertices())
            throw std::invalid_argument("labeled hypergraph: vertex role '" + name +
                                        "' maps to invalid index " + std::to_string(v));
    for (const auto& [name, e] : labeled.edge_roles)
        if (e < 0 || e >= labeled.graph.num_edges())
            throw std::invalid_argument("labeled hypergraph: edge role '" + name +
                                        "' maps to invalid index " + std::to_string(e));
}

int degree(const Hypergraph& h, int v) {
    return static_cast<int>(h.incident_edges(v).size());
}

bool is_connected(const Hypergraph& h) {
    const int n = h.num_vertices();
    if (n == 0) return true;
    std::vector<char> seen_v(n, 0), seen_e(h.num_edges(), 0);
    std::queue<int> q;
    q.push(0);
    seen_v[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : h.incident_edges(v)) {
            if (seen_e[e]) continue;
            seen_e[e] = 1;
            for (int u : h.edge(e)) {
                if (!seen_v[u]) {
                    seen_v[u] = 1;
                    ++reached;
                    q.push(u);
                }
            }
        }
    }
    return reached == n;
}

bool is_linear(const Hypergraph& h) {
    const auto& edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            // sorted edges: count the intersection with two pointers
            std::size_t a = 0, b = 0, common = 0;
            while (a < edges[i].size() && b < edges[j].size()) {
                if (edges[i][a] < edges[j][b])
                    ++a;
                else if (edges[i][a] > edges[j][b])
                    ++b;
                else {
                    if (++common > 1) return false;
                    ++a;
                    ++b;
                }
            }
        }
    }
    return true;
}

bool is_bicyclic(const Hypergraph& h) {
    return is_connected(h) &&
           h.num_edges() * (h.k() - 1) - h.num_vertices() == 1;
}

Hypergraph edge_swap(const Hypergraph& h, const EdgeSwap& swap) {
    std::vector<Edge> edges = h.edges();
    for (const Edge& r : swap.remove) {
        Edge e = canonical_edge(r);
        auto it = std::find(edges.begin(), edges.end(), e);
        if (it == edges.end())
            throw std::invalid_argument("edge_swap: cannot remove " + format_edge(e) +
                                        ", not an edge of the hypergraph");
        edges.erase(it);
    }
    for (const Edge& a : swap.add) {
        Edge e = canonical_edge(a);
        if (static_cast<int>(e.size()) != h.k())
            throw std::invalid_argument("edge_swap: added edge " + format_edge(e) +
                                        " has cardinality " + std::to_string(e.size()) +
                                        ", expected " + std::to_string(h.k()));
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw std::invalid_argument("edge_swap: added edge " + format_edge(e) +
                                        " already present");
        edges.push_back(std::move(e));
    }
    return Hypergraph(h.k(), h.num_vertices(), std::move(edges));
}

namespace {

// Per-vertex refinement signature: degree plus the sorted degree lists of
// the co-vertices of each incident edge. Isomorphic images must agree.
std::vector<std::vector<int>> vertex_signature(const Hypergraph& h, int v) {
    std::vector<std::vector<int>> sig;
    sig.push_back({degree(h, v)});
    std::vector<std::vector<int>> per_edge;
    for (int e : h.incident_edges(v)) {
        std::vector<int> ds;
        for (int u : h.edge(e))
            if (u != v) ds.push_back(degree(h, u));
        std::sort(ds.begin(), ds.end());
        per_edge.push_back(std::move(ds));
    }
    std::sort(per_edge.begin(), per_edge.end());
    for (auto& p : per_edge) sig.push_back(std::move(p));
    return sig;
}

}  // namespace

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b, std::size_t max_vertices) {
    if (static_cast<std::size_t>(a.num_vertices()) > max_vertices ||
        static_cast<std::size_t>(b.num_vertices()) > max_vertices)
        throw std::invalid_argument(
            "are_isomorphic: instance exceeds the vertex cap of " +
            std::to_string(max_vertices));
    if (a.k() != b.k() || a.num_vertices() != b.num_vertices() ||
        a.num_edges() != b.num_edges())
        return false;

    const int n = a.num_vertices();
    std::vector<std::vector<std::vector<int>>> sig_a(n), sig_b(n);
    for (int v = 0; v < n; ++v) {
        sig_a[v] = vertex_signature(a, v);
        sig_b[v] = vertex_signature(b, v);
    }
    {
        auto sa = sig_a, sb = sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    // candidate targets per source vertex, by matching signature
    std::vector<std::vector<int>> cand(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (sig_a[v] == sig_b[w]) cand[v].push_back(w);

    // co-incidence matrices for early pruning
    auto covertex = [](const Hypergraph& h) {
        std::vector<std::vector<char>> c(h.num_vertices(),
                                         std::vector<char>(h.num_vertices(), 0));
        for (const Edge& e : h.edges())
            for (int u : e)
                for (int v : e)
                    if (u != v) c[u][v] = 1;
        return c;
    };
    const auto co_a = covertex(a), co_b = covertex(b);

    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);

    // pick the unassigned vertex touching the most assigned ones, so the
    // frontier grows along edges and the pruning below bites early
    auto select_next = [&]() {
        int best = -1, best_touch = -1;
        std::size_t best_cands = 0;
        for (int v = 0; v < n; ++v) {
            if (image[v] >= 0) continue;
            int touch = 0;
            for (int u = 0; u < n; ++u)
                if (image[u] >= 0 && co_a[v][u]) ++touch;
            if (best < 0 || touch > best_touch ||
                (touch == best_touch && cand[v].size() < best_cands)) {
                best = v;
                best_touch = touch;
                best_cands = cand[v].size();
            }
        }
        return best;
    };

    auto extend = [&](auto&& self, int assigned) -> bool {
        if (assigned == n) return true;
        const int v = select_next();
        for (int w : cand[v]) {
            if (used[w]) continue;
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                if (image[u] >= 0 && co_a[v][u] && !co_b[w][image[u]]) ok = false;
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            // any edge of `a` that just became fully mapped must land on an edge of `b`
            for (int e : a.incident_edges(v)) {
                Edge mapped;
                mapped.reserve(a.k());
                bool complete = true;
                for (int u : a.edge(e)) {
                    if (image[u] < 0) {
                        complete = false;
                        break;
                    }
                    mapped.push_back(image[u]);
                }
                if (complete && !b.has_edge(mapped)) {
                    ok = false;
                    break;
                }
            }
            if (ok && self(self, assigned + 1)) return true;
            image[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    return extend(extend, 0);
}

}  // namespace hgs
