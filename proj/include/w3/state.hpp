#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "w3/rational.hpp"

namespace w3 {

// Basis word L(-m_1)...L(-m_p)J(-n_1)...J(-n_q)|0> with m_1 >= ... >= m_p >= 2
// and n_1 >= ... >= n_q >= 3. Empty parts give the vacuum.
struct NormalMonomial {
    std::vector<int> l;  // descending, each >= 2
    std::vector<int> j;  // descending, each >= 3

    int weight() const {
        return std::accumulate(l.begin(), l.end(), 0) + std::accumulate(j.begin(), j.end(), 0);
    }

    bool is_vacuum() const { return l.empty() && j.empty(); }

    bool well_formed() const {
        if (!std::is_sorted(l.rbegin(), l.rend())) return false;
        if (!std::is_sorted(j.rbegin(), j.rend())) return false;
        if (!l.empty() && l.back() < 2) return false;
        if (!j.empty() && j.back() < 3) return false;
        return true;
    }

    friend auto operator<=>(const NormalMonomial&, const NormalMonomial&) = default;

    std::string str() const {
        if (is_vacuum()) return "|0>";
        std::string s;
        auto run = [&s](char gen, const std::vector<int>& parts) {
            for (std::size_t i = 0; i < parts.size();) {
                std::size_t k = i;
                while (k < parts.size() && parts[k] == parts[i]) ++k;
                s += gen;
                s += "(-" + std::to_string(parts[i]) + ")";
                if (k - i > 1) s += "^" + std::to_string(k - i);
                i = k;
            }
        };
        run('L', l);
        run('J', j);
        return s + "|0>";
    }
};

inline NormalMonomial vacuum() { return {}; }

inline std::size_t hash_value(const NormalMonomial& m) {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
    for (int x : m.l) mix(static_cast<std::size_t>(x));
    mix(0xffffu);
    for (int x : m.j) mix(static_cast<std::size_t>(x));
    return h;
}

struct MonomialHash {
    std::size_t operator()(const NormalMonomial& m) const { return hash_value(m); }
};

// Sparse exact linear combination of normal monomials. Zero coefficients are
// never stored, so equality is map equality.
class StateVector {
public:
    using Terms = std::map<NormalMonomial, Rat>;

    StateVector() = default;
    explicit StateVector(const NormalMonomial& m, Rat c = Rat(1)) {
        if (c != 0) terms_[m] = std::move(c);
    }

    static StateVector zero() { return {}; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    Rat coefficient(const NormalMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const NormalMonomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    StateVector& add(const StateVector& o, const Rat& scale = Rat(1)) {
        if (scale == 0) return *this;
        for (const auto& [m, c] : o.terms_) add_term(m, c * scale);
        return *this;
    }

    StateVector& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    StateVector operator+(const StateVector& o) const {
        StateVector r = *this;
        r.add(o);
        return r;
    }
    StateVector operator-(const StateVector& o) const {
        StateVector r = *this;
        r.add(o, Rat(-1));
        return r;
    }

    bool operator==(const StateVector& o) const { return terms_ == o.terms_; }

    // Common weight of all stored monomials; empty when the vector mixes
    // weights. The zero vector reports weight 0.
    std::optional<int> weight() const {
        if (terms_.empty()) return 0;
        int w = terms_.begin()->first.weight();
        for (const auto& [m, c] : terms_)
            if (m.weight() != w) return std::nullopt;
        return w;
    }

    // Splits into homogeneous components keyed by weight.
    std::map<int, StateVector> homogeneous_parts() const {
        std::map<int, StateVector> parts;
        for (const auto& [m, c] : terms_) parts[m.weight()].add_term(m, c);
        return parts;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + rat_str(c) + ")" + m.str();
        }
        return s;
    }

private:
    Terms terms_;
};

namespace detail {
inline void gen_partitions(int total, int minpart, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    int hi = cur.empty() ? total : std::min(total, cur.back());
    for (int first = hi; first >= minpart; --first) {
        cur.push_back(first);
        gen_partitions(total - first, minpart, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

// All descending partitions of `total` with parts >= minpart.
inline std::vector<std::vector<int>> partitions_min(int total, int minpart) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    detail::gen_partitions(total, minpart, cur, out);
    return out;
}

// The normal monomials of weight h in the fixed basis order: graded, then
// lexicographic on (l, j). Every matrix in the project indexes against this.
inline std::vector<NormalMonomial> enumerate_basis(int h) {
    std::vector<NormalMonomial> out;
    for (int a = 0; a <= h; ++a) {
        auto ls = partitions_min(a, 2);
        auto js = partitions_min(h - a, 3);
        for (const auto& lp : ls)
            for (const auto& jp : js) out.push_back(NormalMonomial{lp, jp});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace w3
