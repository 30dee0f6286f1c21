#pragma once

#include <algorithm>
#include <stdexcept>

namespace twocon {

/// Truncation bounds for graded series: terms of vertex degree > n_max or
/// edge degree > m_max are dropped. A simple graph on n vertices has at most
/// C(n,2) edges, a two-pole network on n internal vertices at most C(n+2,2),
/// which gives the two default edge bounds.
struct Truncation {
    int n_max = 0;
    int m_max = 0;

    Truncation() = default;
    Truncation(int n, int m) : n_max(n), m_max(m) {
        if (n < 0 || m < 0) throw std::invalid_argument("Truncation: negative bound");
    }

    static Truncation for_graphs(int n) { return Truncation(n, n * (n - 1) / 2); }
    static Truncation for_networks(int n) { return Truncation(n, (n + 2) * (n + 1) / 2); }

    Truncation meet(const Truncation& o) const {
        return Truncation(std::min(n_max, o.n_max), std::min(m_max, o.m_max));
    }

    bool admits(int vdeg, int edeg) const { return vdeg <= n_max && edeg <= m_max; }

    bool operator==(const Truncation& o) const = default;
};

}  // namespace twocon
