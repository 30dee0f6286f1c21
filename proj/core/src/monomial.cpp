#include "twocon/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace twocon {

uint32_t CycleMonomial::pack(Var f, int index, int exp) {
    if (index < 1 || index > 0x3fff) throw std::invalid_argument("CycleMonomial: index out of range");
    if (exp < 1 || exp > 0xffff) throw std::invalid_argument("CycleMonomial: exponent out of range");
    return (static_cast<uint32_t>(f) << 30) | (static_cast<uint32_t>(index) << 16) | static_cast<uint32_t>(exp);
}

CycleMonomial CycleMonomial::var(Var f, int index, int exp) {
    CycleMonomial m;
    if (exp != 0) m.parts_.push_back(pack(f, index, exp));
    return m;
}

CycleMonomial& CycleMonomial::mul_var(Var f, int index, int exp) {
    if (exp == 0) return *this;
    const uint32_t key = pack(f, index, 1) & 0xffff0000u;
    auto it = std::lower_bound(parts_.begin(), parts_.end(), key);
    if (it != parts_.end() && (*it & 0xffff0000u) == key) {
        int merged = static_cast<int>(*it & 0xffffu) + exp;
        if (merged > 0xffff) throw std::overflow_error("CycleMonomial: exponent overflow");
        *it = key | static_cast<uint32_t>(merged);
    } else {
        parts_.insert(it, pack(f, index, exp));
    }
    return *this;
}

CycleMonomial& CycleMonomial::div_var(Var f, int index, int exp) {
    if (exp == 0) return *this;
    const uint32_t key = pack(f, index, 1) & 0xffff0000u;
    auto it = std::lower_bound(parts_.begin(), parts_.end(), key);
    if (it == parts_.end() || (*it & 0xffff0000u) != key || static_cast<int>(*it & 0xffffu) < exp)
        throw std::domain_error("CycleMonomial::div_var: factor absent");
    int rest = static_cast<int>(*it & 0xffffu) - exp;
    if (rest == 0)
        parts_.erase(it);
    else
        *it = key | static_cast<uint32_t>(rest);
    return *this;
}

CycleMonomial CycleMonomial::times(const CycleMonomial& o) const {
    CycleMonomial r;
    r.parts_.reserve(parts_.size() + o.parts_.size());
    auto a = parts_.begin(), b = o.parts_.begin();
    while (a != parts_.end() && b != o.parts_.end()) {
        uint32_t ka = *a & 0xffff0000u, kb = *b & 0xffff0000u;
        if (ka < kb) {
            r.parts_.push_back(*a++);
        } else if (kb < ka) {
            r.parts_.push_back(*b++);
        } else {
            uint32_t sum = (*a & 0xffffu) + (*b & 0xffffu);
            if (sum > 0xffff) throw std::overflow_error("CycleMonomial: exponent overflow");
            r.parts_.push_back(ka | sum);
            ++a, ++b;
        }
    }
    r.parts_.insert(r.parts_.end(), a, parts_.end());
    r.parts_.insert(r.parts_.end(), b, o.parts_.end());
    return r;
}

CycleMonomial CycleMonomial::scale_indices(int k) const {
    if (k == 1) return *this;
    CycleMonomial r;
    r.parts_.reserve(parts_.size());
    for (uint32_t w : parts_) {
        int idx = static_cast<int>((w >> 16) & 0x3fffu);
        r.parts_.push_back(pack(static_cast<Var>(w >> 30), idx * k, static_cast<int>(w & 0xffffu)));
    }
    return r;  // index scaling preserves (family, index) sort order
}

int CycleMonomial::vertex_degree() const {
    int d = 0;
    for (uint32_t w : parts_)
        if ((w >> 30) == 0) d += static_cast<int>((w >> 16) & 0x3fffu) * static_cast<int>(w & 0xffffu);
    return d;
}

int CycleMonomial::edge_degree() const {
    int d = 0;
    for (uint32_t w : parts_)
        if ((w >> 30) != 0) d += static_cast<int>((w >> 16) & 0x3fffu) * static_cast<int>(w & 0xffffu);
    return d;
}

int CycleMonomial::exponent(Var f, int index) const {
    const uint32_t key = (static_cast<uint32_t>(f) << 30) | (static_cast<uint32_t>(index) << 16);
    auto it = std::lower_bound(parts_.begin(), parts_.end(), key);
    if (it != parts_.end() && (*it & 0xffff0000u) == key) return static_cast<int>(*it & 0xffffu);
    return 0;
}

bool CycleMonomial::a_vars_linear_only() const {
    for (uint32_t w : parts_) {
        if ((w >> 30) != 0) break;  // a-parts come first
        if (((w >> 16) & 0x3fffu) >= 2) return false;
    }
    return true;
}

size_t CycleMonomial::hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint32_t w : parts_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<size_t>(h ^ (h >> 33));
}

bool CycleMonomial::canonical_less(const CycleMonomial& x, const CycleMonomial& y) {
    int xv = x.vertex_degree(), yv = y.vertex_degree();
    if (xv != yv) return xv < yv;
    int xe = x.edge_degree(), ye = y.edge_degree();
    if (xe != ye) return xe < ye;
    return std::lexicographical_compare(x.parts_.begin(), x.parts_.end(), y.parts_.begin(), y.parts_.end());
}

std::string CycleMonomial::str() const {
    if (is_one()) return "1";
    std::string s;
    static const char* names[] = {"a", "b", "c"};
    for_each([&](Var f, int idx, int exp) {
        if (!s.empty()) s += " ";
        s += names[static_cast<int>(f)] + std::to_string(idx);
        if (exp > 1) s += "^" + std::to_string(exp);
    });
    return s;
}

}  // namespace twocon
