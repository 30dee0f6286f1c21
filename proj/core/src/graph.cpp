#include "twocon/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace twocon {

SimpleGraph SimpleGraph::complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

SimpleGraph SimpleGraph::path(int n) {
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::m_graph() {
    SimpleGraph g(8);
    const int blockA[5] = {0, 1, 2, 3, 4};
    const int blockB[5] = {0, 1, 5, 6, 7};
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            g.add_edge(blockA[i], blockA[j]);
            g.add_edge(blockB[i], blockB[j]);
        }
    return g;
}

SimpleGraph SimpleGraph::m_star_graph() {
    SimpleGraph g = m_graph();
    g.remove_edge(0, 1);
    return g;
}

void SimpleGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("add_edge: loop");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("add_edge: vertex out of range");
    adj[static_cast<size_t>(u)] |= 1u << v;
    adj[static_cast<size_t>(v)] |= 1u << u;
}

void SimpleGraph::remove_edge(int u, int v) {
    adj[static_cast<size_t>(u)] &= ~(1u << v);
    adj[static_cast<size_t>(v)] &= ~(1u << u);
}

int SimpleGraph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) e.emplace_back(u, v);
    return e;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& verts) const {
    SimpleGraph g(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

bool SimpleGraph::is_connected_excluding(uint32_t removed) const {
    uint32_t all = (n >= 32 ? ~0u : (1u << n) - 1u) & ~removed;
    if (all == 0) return false;
    uint32_t start = all & static_cast<uint32_t>(-static_cast<int32_t>(all));  // lowest set bit
    uint32_t seen = start;
    uint32_t frontier = start;
    while (frontier) {
        uint32_t next = 0;
        uint32_t f = frontier;
        while (f) {
            int v = __builtin_ctz(f);
            f &= f - 1;
            next |= adj[static_cast<size_t>(v)] & all;
        }
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == all;
}

std::string SimpleGraph::str() const {
    std::string s = std::to_string(n) + ":";
    for (auto [u, v] : edges()) s += " " + std::to_string(u) + "-" + std::to_string(v);
    return s;
}

namespace {

void search_automorphisms(const SimpleGraph& g, std::vector<int>& image, uint32_t used, int v,
                          std::vector<Perm>& out) {
    const int n = g.n;
    if (v == n) {
        Perm p(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = static_cast<uint8_t>(image[static_cast<size_t>(i)]);
        out.push_back(std::move(p));
        return;
    }
    if (image[static_cast<size_t>(v)] >= 0) {
        search_automorphisms(g, image, used, v + 1, out);
        return;
    }
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1u) continue;
        if (g.degree(w) != g.degree(v)) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            int iu = image[static_cast<size_t>(u)];
            if (iu < 0 || u == v) continue;
            if (g.has_edge(u, v) != g.has_edge(iu, w)) ok = false;
        }
        if (!ok) continue;
        image[static_cast<size_t>(v)] = w;
        search_automorphisms(g, image, used | (1u << w), v + 1, out);
        image[static_cast<size_t>(v)] = -1;
    }
}

}  // namespace

std::vector<Perm> automorphisms(const SimpleGraph& g, const std::vector<std::pair<int, int>>& forced) {
    std::vector<int> image(static_cast<size_t>(g.n), -1);
    uint32_t used = 0;
    for (auto [v, w] : forced) {
        // forced pairs must themselves be degree-consistent, otherwise no maps
        if (g.degree(v) != g.degree(w)) return {};
        image[static_cast<size_t>(v)] = w;
        used |= 1u << w;
    }
    // adjacency consistency among the forced assignments
    for (auto [v, w] : forced)
        for (auto [v2, w2] : forced)
            if (v != v2 && g.has_edge(v, v2) != g.has_edge(w, w2)) return {};
    std::vector<Perm> out;
    search_automorphisms(g, image, used, 0, out);
    return out;
}

SimpleGraph Network::closure() const {
    SimpleGraph c = g;
    if (!c.has_edge(pole0, pole1)) c.add_edge(pole0, pole1);
    return c;
}

bool Network::is_valid() const {
    if (g.n < 2 || pole0 == pole1) return false;
    SimpleGraph c = closure();
    if (c.n == 2) return true;  // the one-edge closure is K2, 2-connected by convention
    if (!c.is_connected()) return false;
    for (int v = 0; v < c.n; ++v)
        if (!c.is_connected_excluding(1u << v)) return false;
    return true;
}

Network Network::make(int internal_count, const std::vector<std::pair<int, int>>& edges) {
    Network net;
    net.g = SimpleGraph::from_edges(internal_count + 2, edges);
    net.pole0 = 0;
    net.pole1 = 1;
    return net;
}

}  // namespace twocon
