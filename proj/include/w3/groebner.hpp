#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "w3/bipoly.hpp"

namespace w3 {

// Graded reverse lexicographic order with y > x (fixed for the project):
// compare total degree first, then the higher y-degree wins.
struct GrevlexYX {
    static bool less(const BiPoly::Key& a, const BiPoly::Key& b) {
        const int ta = a.first + a.second, tb = b.first + b.second;
        if (ta != tb) return ta < tb;
        return a.first > b.first;  // smaller x-exponent is larger in grevlex
    }
};

inline BiPoly::Key leading_monomial(const BiPoly& p) {
    if (p.is_zero()) throw std::domain_error("leading_monomial: zero polynomial");
    auto it = p.terms().begin();
    BiPoly::Key best = it->first;
    for (++it; it != p.terms().end(); ++it)
        if (GrevlexYX::less(best, it->first)) best = it->first;
    return best;
}

inline Rat leading_coefficient(const BiPoly& p) {
    auto lm = leading_monomial(p);
    return p.coefficient(lm.first, lm.second);
}

inline bool divides(const BiPoly::Key& a, const BiPoly::Key& b) {
    return a.first <= b.first && a.second <= b.second;
}

inline BiPoly::Key key_lcm(const BiPoly::Key& a, const BiPoly::Key& b) {
    return {std::max(a.first, b.first), std::max(a.second, b.second)};
}

// Full normal form of p modulo the set gens (every term reduced).
inline BiPoly reduce(BiPoly p, const std::vector<BiPoly>& gens) {
    bool changed = true;
    while (changed && !p.is_zero()) {
        changed = false;
        // largest reducible term
        BiPoly::Key best{-1, -1};
        const BiPoly* red = nullptr;
        for (const auto& [k, c] : p.terms()) {
            for (const auto& g : gens) {
                if (g.is_zero()) continue;
                if (divides(leading_monomial(g), k)) {
                    if (!red || GrevlexYX::less(best, k)) {
                        best = k;
                        red = &g;
                    }
                    break;
                }
            }
        }
        if (red) {
            auto lm = leading_monomial(*red);
            Rat f = p.coefficient(best.first, best.second) / leading_coefficient(*red);
            p.add(red->shifted(best.first - lm.first, best.second - lm.second), -f);
            changed = true;
        }
    }
    return p;
}

inline BiPoly s_polynomial(const BiPoly& f, const BiPoly& g) {
    auto lf = leading_monomial(f), lg = leading_monomial(g);
    auto l = key_lcm(lf, lg);
    BiPoly a = f.shifted(l.first - lf.first, l.second - lf.second);
    a *= Rat(1) / leading_coefficient(f);
    BiPoly b = g.shifted(l.first - lg.first, l.second - lg.second);
    b *= Rat(1) / leading_coefficient(g);
    return a - b;
}

// Reduced Groebner basis under GrevlexYX, via Buchberger with the coprime
// and chain pair-elimination criteria; leading coefficients normalized to 1.
inline std::vector<BiPoly> buchberger(const std::vector<BiPoly>& gens) {
    std::vector<BiPoly> G;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        BiPoly m = g;
        m *= Rat(1) / leading_coefficient(g);
        G.push_back(std::move(m));
    }
    if (G.empty()) throw std::invalid_argument("buchberger: no nonzero generators");

    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add_pairs = [&](std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i) pending.insert({i, upto});
    };
    for (std::size_t i = 1; i < G.size(); ++i) add_pairs(i);

    while (!pending.empty()) {
        auto [i, j] = *pending.begin();
        pending.erase(pending.begin());
        auto li = leading_monomial(G[i]), lj = leading_monomial(G[j]);
        auto l = key_lcm(li, lj);
        // coprime criterion
        if (l.first == li.first + lj.first && l.second == li.second + lj.second) continue;
        // chain criterion: some k with LT(k) | lcm and both pairs already done
        bool chained = false;
        for (std::size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!divides(leading_monomial(G[k]), l)) continue;
            auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
            if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
                chained = true;
        }
        if (chained) continue;
        BiPoly r = reduce(s_polynomial(G[i], G[j]), G);
        if (r.is_zero()) continue;
        r *= Rat(1) / leading_coefficient(r);
        G.push_back(std::move(r));
        add_pairs(G.size() - 1);
    }

    // minimalize: drop elements whose leading monomial another one divides
    std::vector<BiPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        auto li = leading_monomial(G[i]);
        bool keep = true;
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (k == i) continue;
            auto lk = leading_monomial(G[k]);
            if (divides(lk, li) && (lk != li || k < i)) {
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(G[i]);
    }
    // inter-reduce
    std::vector<BiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<BiPoly> others;
        for (std::size_t k = 0; k < minimal.size(); ++k)
            if (k != i) others.push_back(minimal[k]);
        BiPoly r = reduce(minimal[i], others);
        if (!r.is_zero()) {
            r *= Rat(1) / leading_coefficient(r);
            reduced.push_back(std::move(r));
        }
    }
    // deterministic output order: by leading monomial
    std::sort(reduced.begin(), reduced.end(), [](const BiPoly& a, const BiPoly& b) {
        return GrevlexYX::less(leading_monomial(a), leading_monomial(b));
    });
    return reduced;
}

// Count of standard monomials of a reduced basis; empty when the staircase
// is unbounded.
inline std::optional<int> quotient_dimension(const std::vector<BiPoly>& gb) {
    std::vector<BiPoly::Key> lts;
    int max_x = -1, max_y = -1;
    for (const auto& g : gb) {
        auto lt = leading_monomial(g);
        lts.push_back(lt);
        if (lt.second == 0) max_x = max_x < 0 ? lt.first : std::min(max_x, lt.first);
        if (lt.first == 0) max_y = max_y < 0 ? lt.second : std::min(max_y, lt.second);
    }
    if (max_x < 0 || max_y < 0) return std::nullopt;
    int count = 0;
    for (int dx = 0; dx < max_x; ++dx)
        for (int dy = 0; dy < max_y; ++dy) {
            bool dominated = false;
            for (const auto& lt : lts)
                if (divides(lt, {dx, dy})) {
                    dominated = true;
                    break;
                }
            if (!dominated) ++count;
        }
    return count;
}

// Standard monomials themselves, in grevlex order.
inline std::vector<BiPoly::Key> standard_monomials(const std::vector<BiPoly>& gb) {
    std::vector<BiPoly::Key> lts;
    int max_x = -1, max_y = -1;
    for (const auto& g : gb) {
        auto lt = leading_monomial(g);
        lts.push_back(lt);
        if (lt.second == 0) max_x = max_x < 0 ? lt.first : std::min(max_x, lt.first);
        if (lt.first == 0) max_y = max_y < 0 ? lt.second : std::min(max_y, lt.second);
    }
    std::vector<BiPoly::Key> out;
    if (max_x < 0 || max_y < 0) return out;
    for (int dx = 0; dx < max_x; ++dx)
        for (int dy = 0; dy < max_y; ++dy) {
            bool dominated = false;
            for (const auto& lt : lts)
                if (divides(lt, {dx, dy})) {
                    dominated = true;
                    break;
                }
            if (!dominated) out.push_back({dx, dy});
        }
    std::sort(out.begin(), out.end(), GrevlexYX::less);
    return out;
}

inline bool ideal_membership(const BiPoly& p, const std::vector<BiPoly>& gens) {
    return reduce(p, buchberger(gens)).is_zero();
}

}  // namespace w3
