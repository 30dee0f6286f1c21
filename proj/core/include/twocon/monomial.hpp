#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace twocon {

/// The three variable families of an edge index series: vertex-cycle
/// variables a_k, cylindrical edge-cycle variables b_k, Moebius edge-cycle
/// variables c_k.
enum class Var : uint32_t { A = 0, B = 1, C = 2 };

/// A sparse cycle-index monomial a_1^e1 a_2^e2 ... b_1^f1 ... c_1^g1 ...
///
/// Parts are packed words (family:2 | index:14 | exponent:16), kept sorted by
/// (family, index) with strictly positive exponents. vertex_degree is
/// sum k*aExp[k], edge_degree is sum k*(bExp[k]+cExp[k]).
class CycleMonomial {
public:
    CycleMonomial() = default;

    static CycleMonomial one() { return {}; }
    static CycleMonomial var(Var f, int index, int exp = 1);

    /// Multiplies this monomial by v_index^exp in place.
    CycleMonomial& mul_var(Var f, int index, int exp);
    /// Divides by v_index^exp; throws std::domain_error when the exponent of
    /// that variable is too small.
    CycleMonomial& div_var(Var f, int index, int exp);
    CycleMonomial times(const CycleMonomial& o) const;

    /// Plethystic index scaling: every variable index multiplied by k.
    CycleMonomial scale_indices(int k) const;

    int vertex_degree() const;
    int edge_degree() const;
    int exponent(Var f, int index) const;
    bool is_one() const { return parts_.empty(); }
    /// True when the monomial involves no a-variable of index >= 2.
    bool a_vars_linear_only() const;

    template <class Fn>  // Fn(Var, int index, int exp)
    void for_each(Fn&& fn) const {
        for (uint32_t w : parts_) fn(static_cast<Var>(w >> 30), static_cast<int>((w >> 16) & 0x3fffu), static_cast<int>(w & 0xffffu));
    }

    bool operator==(const CycleMonomial& o) const { return parts_ == o.parts_; }
    size_t hash() const;

    /// Canonical total order: (vertex degree, edge degree, parts lexicographic
    /// with family A before B before C and indices ascending).
    static bool canonical_less(const CycleMonomial& x, const CycleMonomial& y);

    std::string str() const;  // debugging aid, e.g. "a1^2 b1"

private:
    static uint32_t pack(Var f, int index, int exp);
    std::vector<uint32_t> parts_;
};

struct MonomialHash {
    size_t operator()(const CycleMonomial& m) const { return m.hash(); }
};

}  // namespace twocon
