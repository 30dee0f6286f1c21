#include "twocon/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "twocon/species.hpp"

namespace twocon::oracle {

namespace {

// ---- orderly generation ----------------------------------------------------
// Adjacency word in colex order: bit (i,j), i<j, grouped by j, earlier pairs
// more significant. A graph is canonical iff no relabelling yields a larger
// word; the induced subgraph on the first k vertices of a canonical graph is
// itself canonical, so level-by-level extension is exhaustive.

uint32_t column_of(const SimpleGraph& g, int j) {
    uint32_t c = 0;
    for (int i = 0; i < j; ++i) c = (c << 1) | (g.has_edge(i, j) ? 1u : 0u);
    return c;
}

bool bigger_word_exists(const SimpleGraph& g, const std::vector<uint32_t>& tcol, std::vector<int>& p,
                        uint32_t used, int depth) {
    const int n = g.n;
    if (depth == n) return false;
    for (int cand = 0; cand < n; ++cand) {
        if ((used >> cand) & 1u) continue;
        uint32_t col = 0;
        for (int i = 0; i < depth; ++i) col = (col << 1) | (g.has_edge(p[static_cast<size_t>(i)], cand) ? 1u : 0u);
        if (col > tcol[static_cast<size_t>(depth)]) return true;
        if (col < tcol[static_cast<size_t>(depth)]) continue;
        p[static_cast<size_t>(depth)] = cand;
        if (bigger_word_exists(g, tcol, p, used | (1u << cand), depth + 1)) return true;
    }
    return false;
}

bool is_canonical(const SimpleGraph& g) {
    std::vector<uint32_t> tcol(static_cast<size_t>(g.n));
    for (int j = 0; j < g.n; ++j) tcol[static_cast<size_t>(j)] = column_of(g, j);
    std::vector<int> p(static_cast<size_t>(g.n));
    return !bigger_word_exists(g, tcol, p, 0, 0);
}

uint64_t word_of(const SimpleGraph& g) {
    uint64_t w = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) w = (w << 1) | (g.has_edge(i, j) ? 1u : 0u);
    return w;
}

}  // namespace

std::vector<GraphClass> enumerate_graphs(int n, const std::function<bool(const SimpleGraph&)>& filter) {
    if (n < 1 || n > kMaxVertices) throw std::out_of_range("enumerate_graphs: n out of range");
    std::vector<SimpleGraph> level = {SimpleGraph(1)};
    for (int k = 1; k < n; ++k) {
        std::vector<SimpleGraph> next;
        for (const SimpleGraph& g : level) {
            SimpleGraph h(k + 1);
            for (int v = 0; v < k; ++v) h.adj[static_cast<size_t>(v)] = g.adj[static_cast<size_t>(v)];
            for (uint32_t mask = 0; mask < (1u << k); ++mask) {
                for (int v = 0; v < k; ++v) {
                    if ((mask >> v) & 1u)
                        h.adj[static_cast<size_t>(v)] |= 1u << k;
                    else
                        h.adj[static_cast<size_t>(v)] &= ~(1u << k);
                }
                h.adj[static_cast<size_t>(k)] = mask;
                if (is_canonical(h)) next.push_back(h);
            }
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end(),
              [](const SimpleGraph& a, const SimpleGraph& b) { return word_of(a) < word_of(b); });
    std::vector<GraphClass> out;
    for (SimpleGraph& g : level) {
        if (filter && !filter(g)) continue;
        GraphClass c;
        c.autos = automorphisms(g);
        c.graph = std::move(g);
        out.push_back(std::move(c));
    }
    return out;
}

bool is_k_connected(const SimpleGraph& g, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("is_k_connected: k must be 1, 2 or 3");
    if (g.n == 0) return false;
    if (k == 1) return g.is_connected();
    if (k == 2) {
        if (g.n == 2) return g.has_edge(0, 1);  // K2 counts as 2-connected
        if (g.n < 3 || !g.is_connected()) return false;
        for (int v = 0; v < g.n; ++v)
            if (!g.is_connected_excluding(1u << v)) return false;
        return true;
    }
    if (g.n < 4 || !g.is_connected()) return false;
    for (int v = 0; v < g.n; ++v)
        if (!g.is_connected_excluding(1u << v)) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.is_connected_excluding((1u << u) | (1u << v))) return false;
    return true;
}

// ---- Kuratowski subdivisions ------------------------------------------------

namespace {

struct SubdivisionSearch {
    const SimpleGraph& g;
    const std::vector<int>& branch;
    const std::vector<std::pair<int, int>>& pairs;
    uint32_t branch_mask;

    bool route(size_t idx, uint32_t used) const {
        if (idx == pairs.size()) return true;
        int a = branch[static_cast<size_t>(pairs[idx].first)];
        int b = branch[static_cast<size_t>(pairs[idx].second)];
        // a direct edge never conflicts with other paths, take it when present
        if (g.has_edge(a, b)) return route(idx + 1, used);
        return path_dfs(a, b, idx, used);
    }

    bool path_dfs(int cur, int target, size_t idx, uint32_t used) const {
        uint32_t free = g.adj[static_cast<size_t>(cur)] & ~(used | branch_mask);
        while (free) {
            int w = __builtin_ctz(free);
            free &= free - 1;
            uint32_t used2 = used | (1u << w);
            if (g.has_edge(w, target) && route(idx + 1, used2)) return true;
            if (path_dfs(w, target, idx, used2)) return true;
        }
        return false;
    }
};

bool has_subdivision_complete(const SimpleGraph& g, int r) {
    if (g.n < r) return false;
    std::vector<int> cand;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= r - 1) cand.push_back(v);
    if (static_cast<int>(cand.size()) < r) return false;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) pairs.emplace_back(i, j);
    std::vector<int> pick(static_cast<size_t>(r));
    std::function<bool(int, int)> choose = [&](int at, int from) -> bool {
        if (at == r) {
            uint32_t bm = 0;
            for (int v : pick) bm |= 1u << v;
            SubdivisionSearch s{g, pick, pairs, bm};
            return s.route(0, 0);
        }
        for (int i = from; i < static_cast<int>(cand.size()); ++i) {
            pick[static_cast<size_t>(at)] = cand[static_cast<size_t>(i)];
            if (choose(at + 1, i + 1)) return true;
        }
        return false;
    };
    return choose(0, 0);
}

bool has_subdivision_k33(const SimpleGraph& g) {
    if (g.n < 6) return false;
    std::vector<int> cand;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= 3) cand.push_back(v);
    if (cand.size() < 6) return false;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) pairs.emplace_back(i, j);
    const int c = static_cast<int>(cand.size());
    std::vector<int> six(6);
    // choose 6 of the candidates, then a 3+3 split with the first vertex on
    // the left side (kills the side swap symmetry)
    std::function<bool(int, int, std::vector<int>&)> choose = [&](int at, int from, std::vector<int>& sel) -> bool {
        if (at == 6) {
            for (uint32_t split = 0; split < 32; ++split) {
                int left = 1;
                six[0] = sel[0];
                int li = 1, ri = 3;
                bool ok = true;
                for (int i = 1; i < 6; ++i) {
                    if ((split >> (i - 1)) & 1u) {
                        if (li == 3) { ok = false; break; }
                        six[static_cast<size_t>(li++)] = sel[static_cast<size_t>(i)];
                        ++left;
                    } else {
                        if (ri == 6) { ok = false; break; }
                        six[static_cast<size_t>(ri++)] = sel[static_cast<size_t>(i)];
                    }
                }
                if (!ok || left != 3) continue;
                uint32_t bm = 0;
                for (int v : six) bm |= 1u << v;
                SubdivisionSearch s{g, six, pairs, bm};
                if (s.route(0, 0)) return true;
            }
            return false;
        }
        for (int i = from; i < c; ++i) {
            sel[static_cast<size_t>(at)] = cand[static_cast<size_t>(i)];
            if (choose(at + 1, i + 1, sel)) return true;
        }
        return false;
    };
    std::vector<int> sel(6);
    return choose(0, 0, sel);
}

}  // namespace

bool kuratowski_planar(const SimpleGraph& g) {
    return !has_subdivision_complete(g, 5) && !has_subdivision_k33(g);
}

bool has_k4_subdivision(const SimpleGraph& g) { return has_subdivision_complete(g, 4); }

// ---- 3-decomposition ---------------------------------------------------------

namespace {

using HostEdge = std::pair<int, int>;

HostEdge norm_edge(int u, int v) { return u < v ? HostEdge{u, v} : HostEdge{v, u}; }

struct Piece {
    std::vector<int> verts;              // host ids, sorted
    std::vector<HostEdge> real_edges;    // edges of the host graph
    std::vector<HostEdge> virtual_edges; // one per bond this piece attaches to

    SimpleGraph local(std::vector<int>& host_of) const {
        host_of = verts;
        SimpleGraph l(static_cast<int>(verts.size()));
        auto local_id = [&](int h) {
            return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), h) - verts.begin());
        };
        for (auto [u, v] : real_edges) l.add_edge(local_id(u), local_id(v));
        for (auto [u, v] : virtual_edges) l.add_edge(local_id(u), local_id(v));
        return l;
    }
};

bool is_cycle_graph(const SimpleGraph& g) {
    if (g.n < 3 || !g.is_connected()) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

}  // namespace

TcTree tc_decompose(const SimpleGraph& g, uint64_t split_seed) {
    if (g.n < 3 || !is_k_connected(g, 2))
        throw std::invalid_argument("tc_decompose: need a 2-connected graph on >= 3 vertices");

    uint64_t rng = split_seed;
    auto next_rand = [&rng]() {
        rng = rng * 6364136223846793005ull + 1442695040888963407ull;
        return rng >> 33;
    };

    struct BondInfo {
        bool edge_present;
    };
    std::map<HostEdge, BondInfo> bonds;

    Piece whole;
    whole.verts.resize(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) whole.verts[static_cast<size_t>(v)] = v;
    whole.real_edges = g.edges();

    std::vector<Piece> finals;
    std::vector<Piece> work{whole};
    while (!work.empty()) {
        Piece p = std::move(work.back());
        work.pop_back();
        std::vector<int> host_of;
        SimpleGraph l = p.local(host_of);
        if (l.n <= 3 || is_cycle_graph(l) || is_k_connected(l, 3)) {
            finals.push_back(std::move(p));
            continue;
        }
        std::vector<std::pair<int, int>> seps;
        for (int u = 0; u < l.n; ++u)
            for (int v = u + 1; v < l.n; ++v)
                if (!l.is_connected_excluding((1u << u) | (1u << v))) seps.emplace_back(u, v);
        // a 2-connected graph that is neither a cycle nor 3-connected has one
        const auto [lx, ly] = seps[split_seed ? next_rand() % seps.size() : 0];
        const int hx = host_of[static_cast<size_t>(lx)], hy = host_of[static_cast<size_t>(ly)];
        const HostEdge bond_pair = norm_edge(hx, hy);
        bonds.try_emplace(bond_pair, BondInfo{g.has_edge(hx, hy)});

        // connected components of the piece minus the separating pair
        const uint32_t removed = (1u << lx) | (1u << ly);
        std::vector<int> comp_of(static_cast<size_t>(l.n), -1);
        int comp_count = 0;
        for (int s = 0; s < l.n; ++s) {
            if (((removed >> s) & 1u) || comp_of[static_cast<size_t>(s)] >= 0) continue;
            std::vector<int> stack{s};
            comp_of[static_cast<size_t>(s)] = comp_count;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                uint32_t nb = l.adj[static_cast<size_t>(v)] & ~removed;
                while (nb) {
                    int w = __builtin_ctz(nb);
                    nb &= nb - 1;
                    if (comp_of[static_cast<size_t>(w)] < 0) {
                        comp_of[static_cast<size_t>(w)] = comp_count;
                        stack.push_back(w);
                    }
                }
            }
            ++comp_count;
        }
        for (int ci = 0; ci < comp_count; ++ci) {
            Piece child;
            std::set<int> vs{hx, hy};
            for (int v = 0; v < l.n; ++v)
                if (comp_of[static_cast<size_t>(v)] == ci) vs.insert(host_of[static_cast<size_t>(v)]);
            child.verts.assign(vs.begin(), vs.end());
            auto inside = [&](const HostEdge& e) { return vs.count(e.first) && vs.count(e.second); };
            for (const auto& e : p.real_edges)
                if (e != bond_pair && inside(e)) child.real_edges.push_back(e);
            for (const auto& e : p.virtual_edges)
                if (e != bond_pair && inside(e)) child.virtual_edges.push_back(e);
            child.virtual_edges.push_back(bond_pair);
            work.push_back(std::move(child));
        }
    }

    // merge polygons at bonds joining exactly two polygons without the edge
    for (;;) {
        std::map<HostEdge, std::vector<size_t>> attach;
        for (size_t i = 0; i < finals.size(); ++i)
            for (const auto& e : finals[i].virtual_edges) attach[e].push_back(i);
        bool merged = false;
        for (auto& [pair, pieces] : attach) {
            if (bonds.at(pair).edge_present || pieces.size() != 2) continue;
            std::vector<int> dummy;
            if (!is_cycle_graph(finals[pieces[0]].local(dummy)) || !is_cycle_graph(finals[pieces[1]].local(dummy)))
                continue;
            Piece m;
            const Piece& a = finals[pieces[0]];
            const Piece& b = finals[pieces[1]];
            std::set<int> vs(a.verts.begin(), a.verts.end());
            vs.insert(b.verts.begin(), b.verts.end());
            m.verts.assign(vs.begin(), vs.end());
            for (const Piece* src : {&a, &b}) {
                for (const auto& e : src->real_edges) m.real_edges.push_back(e);
                for (const auto& e : src->virtual_edges)
                    if (e != pair) m.virtual_edges.push_back(e);
            }
            bonds.erase(pair);
            size_t hi = std::max(pieces[0], pieces[1]), lo = std::min(pieces[0], pieces[1]);
            finals.erase(finals.begin() + static_cast<long>(hi));
            finals.erase(finals.begin() + static_cast<long>(lo));
            finals.push_back(std::move(m));
            merged = true;
            break;
        }
        if (!merged) break;
    }

    TcTree t;
    std::map<HostEdge, int> bond_index;
    for (const auto& [pair, info] : bonds) {
        bond_index[pair] = static_cast<int>(t.bonds.size());
        t.bonds.push_back({pair.first, pair.second, info.edge_present});
    }
    std::sort(finals.begin(), finals.end(), [](const Piece& a, const Piece& b) { return a.verts < b.verts; });
    for (const Piece& p : finals) {
        TcTree::Component c;
        c.vertices = p.verts;
        c.edges = p.real_edges;
        for (const auto& e : p.virtual_edges) c.edges.push_back(e);
        std::sort(c.edges.begin(), c.edges.end());
        std::vector<int> dummy;
        c.is_polygon = is_cycle_graph(p.local(dummy));
        int ci = static_cast<int>(t.components.size());
        for (const auto& e : p.virtual_edges) t.incidences.emplace_back(ci, bond_index.at(e));
        t.components.push_back(std::move(c));
    }
    std::sort(t.incidences.begin(), t.incidences.end());
    return t;
}

bool TcTree::same_decomposition(const TcTree& o) const {
    auto key = [](const TcTree& t) {
        std::vector<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>> comps;
        for (const auto& c : t.components) comps.push_back({c.vertices, c.edges});
        std::sort(comps.begin(), comps.end());
        std::vector<std::tuple<int, int, bool>> bs;
        for (const auto& b : t.bonds) bs.push_back({b.x, b.y, b.edge_present});
        std::sort(bs.begin(), bs.end());
        std::set<std::pair<std::vector<int>, std::pair<int, int>>> inc;
        for (auto [ci, bi] : t.incidences)
            inc.insert({t.components[static_cast<size_t>(ci)].vertices,
                        {t.bonds[static_cast<size_t>(bi)].x, t.bonds[static_cast<size_t>(bi)].y}});
        return std::make_tuple(comps, bs, inc);
    };
    return key(*this) == key(o);
}

bool TcTree::well_formed() const {
    const size_t w = components.size(), b = bonds.size();
    if (w == 0) return false;
    if (incidences.size() + 1 != w + b) return false;
    // connectivity of the bipartite incidence graph
    std::vector<std::vector<size_t>> adj(w + b);
    for (auto [ci, bi] : incidences) {
        adj[static_cast<size_t>(ci)].push_back(w + static_cast<size_t>(bi));
        adj[w + static_cast<size_t>(bi)].push_back(static_cast<size_t>(ci));
    }
    std::vector<bool> seen(w + b, false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    size_t cnt = 0;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        ++cnt;
        for (size_t u : adj[v])
            if (!seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
    }
    if (cnt != w + b) return false;
    // every leaf is white: a bond always joins at least two components
    for (size_t i = w; i < w + b; ++i)
        if (adj[i].size() < 2) return false;
    // no bond joins exactly two polygons without the original edge
    for (size_t bi = 0; bi < b; ++bi) {
        if (bonds[bi].edge_present) continue;
        if (adj[w + bi].size() != 2) continue;
        bool both_poly = true;
        for (size_t c : adj[w + bi])
            if (!components[c].is_polygon) both_poly = false;
        if (both_poly) return false;
    }
    for (const auto& c : components)
        if (c.is_polygon && c.vertices.size() < 3) return false;
    return true;
}

// ---- classification ----------------------------------------------------------

bool classify(const SimpleGraph& g, GraphFamily family) {
    if (!is_k_connected(g, 2)) throw std::invalid_argument("classify: graph is not 2-connected");
    if (family == GraphFamily::All) return true;
    if (g.n == 2) return true;  // K2 belongs to every family by convention
    TcTree t = tc_decompose(g);
    for (const auto& c : t.components) {
        if (c.is_polygon) continue;
        if (family == GraphFamily::SeriesParallel) return false;
        SimpleGraph comp(static_cast<int>(c.vertices.size()));
        auto local_id = [&](int h) {
            return static_cast<int>(std::lower_bound(c.vertices.begin(), c.vertices.end(), h) - c.vertices.begin());
        };
        for (auto [u, v] : c.edges) comp.add_edge(local_id(u), local_id(v));
        bool planar = kuratowski_planar(comp);
        if (family == GraphFamily::Planar && !planar) return false;
        if (family == GraphFamily::K33Free && !planar) {
            bool is_k5 = comp.n == 5 && comp.edge_count() == 10;
            if (!is_k5) return false;
        }
    }
    return true;
}

namespace {

bool family_filter(const SimpleGraph& g, OracleFamily family) {
    switch (family) {
        case OracleFamily::TwoConnectedSeriesParallel:
            return is_k_connected(g, 2) && classify(g, GraphFamily::SeriesParallel);
        case OracleFamily::TwoConnectedPlanar:
            return is_k_connected(g, 2) && classify(g, GraphFamily::Planar);
        case OracleFamily::TwoConnectedK33Free:
            return is_k_connected(g, 2) && classify(g, GraphFamily::K33Free);
        case OracleFamily::TwoConnectedAll:
            return is_k_connected(g, 2);
        case OracleFamily::ThreeConnectedAll:
            return is_k_connected(g, 3);
        case OracleFamily::ThreeConnectedPlanar:
            return is_k_connected(g, 3) && kuratowski_planar(g);
    }
    return false;
}

int family_min_n(OracleFamily family) {
    return (family == OracleFamily::ThreeConnectedAll || family == OracleFamily::ThreeConnectedPlanar) ? 4 : 2;
}

}  // namespace

IndexSeries oracle_index_series(OracleFamily family, int n_hi, Truncation t) {
    IndexSeries r(t);
    for (int n = family_min_n(family); n <= n_hi; ++n) {
        auto classes = enumerate_graphs(n, [&](const SimpleGraph& g) { return family_filter(g, family); });
        for (const auto& c : classes) {
            Rational inv(1, static_cast<unsigned long>(c.autos.size()));
            for (const auto& sigma : c.autos) r.add_term(automorphism_weight(c.graph, sigma), inv);
        }
    }
    return r;
}

std::vector<std::pair<int, Integer>> class_counts(OracleFamily family, int n) {
    std::map<int, Integer> by_m;
    if (n >= family_min_n(family)) {
        auto classes = enumerate_graphs(n, [&](const SimpleGraph& g) { return family_filter(g, family); });
        for (const auto& c : classes) by_m[c.graph.edge_count()] += 1;
    }
    return {by_m.begin(), by_m.end()};
}

Integer labelled_count(OracleFamily family, int n) {
    Integer total = 0;
    if (n >= family_min_n(family)) {
        Integer nf = factorial(static_cast<unsigned>(n));
        auto classes = enumerate_graphs(n, [&](const SimpleGraph& g) { return family_filter(g, family); });
        for (const auto& c : classes) total += nf / Integer(static_cast<unsigned long>(c.autos.size()));
    }
    return total;
}

Integer labelled_count_direct(GraphFamily family, int n) {
    const int pairs = n * (n - 1) / 2;
    if (pairs > 20) throw std::out_of_range("labelled_count_direct: n too large for direct scan");
    std::vector<std::pair<int, int>> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    Integer total = 0;
    for (uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        SimpleGraph g(n);
        for (int i = 0; i < pairs; ++i)
            if ((mask >> i) & 1u) g.add_edge(all_pairs[static_cast<size_t>(i)].first, all_pairs[static_cast<size_t>(i)].second);
        if (!is_k_connected(g, 2)) continue;
        if (classify(g, family)) total += 1;
    }
    return total;
}

DissymmetryReport dissymmetry_check(int n) {
    DissymmetryReport rep;
    for (int k = 3; k <= n; ++k) {
        auto classes = enumerate_graphs(k, [&](const SimpleGraph& g) { return is_k_connected(g, 2); });
        for (const auto& c : classes) {
            TcTree t = tc_decompose(c.graph);
            ++rep.graphs_checked;
            bool ok = t.well_formed() &&
                      t.components.size() + t.bonds.size() == 1 + t.incidences.size();
            if (!ok) ++rep.failures;
        }
    }
    return rep;
}

std::vector<NetworkClass> enumerate_networks(int internal_count,
                                             const std::function<bool(const SimpleGraph&)>& closure_filter) {
    const int n = internal_count + 2;
    const int pairs = n * (n - 1) / 2;
    if (pairs > 21) throw std::out_of_range("enumerate_networks: too many internal vertices");
    std::vector<std::pair<int, int>> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);

    // internal permutations (poles 0 and 1 fixed)
    std::vector<Perm> perms;
    {
        Perm base(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
        std::vector<uint8_t> internals(base.begin() + 2, base.end());
        std::sort(internals.begin(), internals.end());
        do {
            Perm p = base;
            std::copy(internals.begin(), internals.end(), p.begin() + 2);
            perms.push_back(p);
        } while (std::next_permutation(internals.begin(), internals.end()));
    }
    auto signature = [&](const SimpleGraph& g, const Perm& p) {
        uint64_t w = 0;
        for (const auto& [u, v] : all_pairs)
            w = (w << 1) | (g.has_edge(p[static_cast<size_t>(u)], p[static_cast<size_t>(v)]) ? 1u : 0u);
        return w;
    };

    std::set<uint64_t> seen;
    std::vector<NetworkClass> out;
    for (uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
        if (internal_count == 0 && mask == 0) continue;  // the trivial network
        SimpleGraph g(n);
        for (int i = 0; i < pairs; ++i)
            if ((mask >> i) & 1u) g.add_edge(all_pairs[static_cast<size_t>(i)].first, all_pairs[static_cast<size_t>(i)].second);
        Network net{g, 0, 1};
        if (!net.is_valid()) continue;
        SimpleGraph closure = net.closure();
        if (closure_filter && !closure_filter(closure)) continue;
        uint64_t canon = ~0ull;
        for (const auto& p : perms) canon = std::min(canon, signature(g, p));
        if (!seen.insert(canon).second) continue;
        NetworkClass c;
        c.net = net;
        c.edge_count = g.edge_count();
        c.tau_symmetric = !automorphisms(g, {{0, 1}, {1, 0}}).empty();
        c.aut_plus = static_cast<long>(automorphisms(g, {{0, 0}, {1, 1}}).size());
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace twocon::oracle
