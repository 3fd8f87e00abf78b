#include "hgs/families.hpp"

#include <stdexcept>

namespace hgs {

namespace {

void check_family_params(const char* name, int k, int m) {
    if (k < 3)
        throw std::invalid_argument(std::string(name) + ": uniformity k must be at least 3, got " +
                                    std::to_string(k));
    if (m < 5)
        throw std::invalid_argument(std::string(name) + ": edge count m must be at least 5, got " +
                                    std::to_string(m));
}

}  // namespace

LabeledHypergraph gen_b_p(int k, int m) {
    check_family_params("gen_b_p", k, m);
    const int n = m * (k - 1) - 1;

    std::map<std::string, int> vroles{{"v", 0}, {"a", 1}, {"b", 2}, {"w", 3}};
    int next = 4;
    std::vector<int> a_side, b_side;
    for (int i = 1; i <= k - 2; ++i) {
        vroles["a" + std::to_string(i)] = next;
        a_side.push_back(next++);
    }
    for (int i = 1; i <= k - 2; ++i) {
        vroles["b" + std::to_string(i)] = next;
        b_side.push_back(next++);
    }

    auto fresh = [&next](int count) {
        std::vector<int> vs;
        for (int i = 0; i < count; ++i) vs.push_back(next++);
        return vs;
    };
    auto with = [](std::vector<int> base, const std::vector<int>& extra) {
        base.insert(base.end(), extra.begin(), extra.end());
        return base;
    };

    std::vector<Edge> edges;
    std::map<std::string, int> eroles;
    auto push = [&](const std::string& role, Edge e) {
        eroles[role] = static_cast<int>(edges.size());
        edges.push_back(std::move(e));
    };

    push("e1", with({0, 1}, a_side));             // {v, a, a1..a(k-2)}
    push("e2", with({0, 2}, b_side));             // {v, b, b1..b(k-2)}
    push("f1", with({1, 3}, fresh(k - 2)));       // {a, w, ...}
    push("f2", with({2, 3}, fresh(k - 2)));       // {b, w, ...}
    push("g", with({0, 3}, fresh(k - 2)));        // {v, w, ...}
    for (int i = 1; i <= m - 5; ++i)
        push("p" + std::to_string(i), with({0}, fresh(k - 1)));

    LabeledHypergraph out{Hypergraph(k, n, std::move(edges)), std::move(vroles),
                          std::move(eroles)};
    validate_roles(out);
    return out;
}

LabeledHypergraph gen_b_l1(int k, int m) {
    check_family_params("gen_b_l1", k, m);
    const int n = m * (k - 1) - 1;

    std::map<std::string, int> vroles{{"u1", 0}, {"u2", 1}, {"u3", 2}, {"u4", 3}};
    int next = 4;
    auto fresh = [&next](int count) {
        std::vector<int> vs;
        for (int i = 0; i < count; ++i) vs.push_back(next++);
        return vs;
    };
    auto with = [](std::vector<int> base, const std::vector<int>& extra) {
        base.insert(base.end(), extra.begin(), extra.end());
        return base;
    };

    std::vector<Edge> edges;
    std::map<std::string, int> eroles;
    auto push = [&](int index1, Edge e) {
        eroles["e" + std::to_string(index1)] = static_cast<int>(edges.size());
        edges.push_back(std::move(e));
    };

    for (int i = 1; i <= m - 4; ++i) push(i, with({0}, fresh(k - 1)));
    push(m - 3, with({0, 1}, fresh(k - 2)));  // {u1, u2, ...}
    push(m - 2, with({0, 2}, fresh(k - 2)));  // {u1, u3, ...}
    push(m - 1, with({0, 3}, fresh(k - 2)));  // {u1, u4, ...}
    push(m, with({1, 2, 3}, fresh(k - 3)));   // {u2, u3, u4, ...}

    LabeledHypergraph out{Hypergraph(k, n, std::move(edges)), std::move(vroles),
                          std::move(eroles)};
    validate_roles(out);
    return out;
}

LabeledHypergraph gen_b_l2(int k, int m) {
    check_family_params("gen_b_l2", k, m);
    const int n = m * (k - 1) - 1;

    std::map<std::string, int> vroles{{"v1", 0}, {"v2", 1}, {"v3", 2}, {"v4", 3}};
    int next = 4;
    auto fresh = [&next](int count) {
        std::vector<int> vs;
        for (int i = 0; i < count; ++i) vs.push_back(next++);
        return vs;
    };
    auto with = [](std::vector<int> base, const std::vector<int>& extra) {
        base.insert(base.end(), extra.begin(), extra.end());
        return base;
    };

    std::vector<Edge> edges;
    std::map<std::string, int> eroles;
    auto push = [&](int index1, Edge e) {
        eroles["e" + std::to_string(index1)] = static_cast<int>(edges.size());
        edges.push_back(std::move(e));
    };

    for (int i = 1; i <= m - 4; ++i) push(i, with({0}, fresh(k - 1)));
    push(m - 3, with({0, 3}, fresh(k - 2)));  // {v1, v4, ...}
    push(m - 2, with({1, 3}, fresh(k - 2)));  // {v2, v4, ...}
    push(m - 1, with({2, 3}, fresh(k - 2)));  // {v3, v4, ...}
    push(m, with({0, 1, 2}, fresh(k - 3)));   // {v1, v2, v3, ...}

    LabeledHypergraph out{Hypergraph(k, n, std::move(edges)), std::move(vroles),
                          std::move(eroles)};
    validate_roles(out);
    return out;
}

EdgeSwap bp_to_bl2_swap(const LabeledHypergraph& bp) {
    const int k = bp.graph.k();
    const int v = bp.vertex("v"), a = bp.vertex("a"), b = bp.vertex("b");

    EdgeSwap swap;
    swap.remove.push_back(bp.graph.edge(bp.edge("e1")));
    swap.remove.push_back(bp.graph.edge(bp.edge("e2")));

    Edge e1p{v, a, b};
    for (int i = 2; i <= k - 2; ++i) e1p.push_back(bp.vertex("a" + std::to_string(i)));
    Edge e2p{v, bp.vertex("a1")};
    for (int i = 1; i <= k - 2; ++i) e2p.push_back(bp.vertex("b" + std::to_string(i)));
    swap.add.push_back(std::move(e1p));
    swap.add.push_back(std::move(e2p));
    return swap;
}

}  // namespace hgs
