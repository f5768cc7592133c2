#pragma once

#include <mutex>
#include <unordered_map>

#include "w3/bipoly.hpp"
#include "w3/engine.hpp"

namespace w3 {

namespace detail {

BiPoly zhu_mono_uncached(const NormalMonomial& mono);

class ZhuMemo {
public:
    const BiPoly* find(const NormalMonomial& m) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(m);
        return it == map_.end() ? nullptr : &it->second;
    }
    const BiPoly* store(const NormalMonomial& m, BiPoly p) {
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, fresh] = map_.emplace(m, std::move(p));
        return &it->second;
    }

private:
    mutable std::mutex mu_;
    std::unordered_map<NormalMonomial, BiPoly, MonomialHash> map_;
};

inline ZhuMemo& zhu_memo() {
    static ZhuMemo memo;
    return memo;
}

inline const BiPoly& zhu_mono(const NormalMonomial& m) {
    if (auto hit = zhu_memo().find(m)) return *hit;
    return *zhu_memo().store(m, zhu_mono_uncached(m));
}

BiPoly zhu_vec(const StateVector& v);

// Image of one normal monomial in the Zhu algebra, as a polynomial in
// x = [omega], y = [J]. Recursion on the leading generator:
//   [L(-m)u]  = (-1)^m ( (m-1) x*[u] + wt(u)[u] )            (m >= 1)
//   [J(-n)u]  = -3[J(-n+1)u] - 3[J(-n+2)u] - [J(-n+3)u]      (n >= 4)
//   [J(-3)u]  = y*[u] - 2[J(-2)u] - [J(-1)u]
// with J(-k)u rewritten to normal form by the engine. All recursive
// arguments have strictly smaller weight, so the recursion terminates.
inline BiPoly zhu_mono_uncached(const NormalMonomial& mono) {
    if (mono.is_vacuum()) return BiPoly(Rat(1));
    if (!mono.l.empty()) {
        const int m = mono.l.front();
        NormalMonomial u{{mono.l.begin() + 1, mono.l.end()}, mono.j};
        const BiPoly& zu = zhu_mono(u);
        const Rat sgn = (m % 2 == 0) ? Rat(1) : Rat(-1);
        BiPoly out = zu.shifted(1, 0);
        out *= sgn * Rat(m - 1);
        out.add(zu, sgn * Rat(u.weight()));
        return out;
    }
    const int n1 = mono.j.front();
    NormalMonomial u{{}, {mono.j.begin() + 1, mono.j.end()}};
    BiPoly out;
    if (n1 >= 4) {
        out.add(zhu_vec(apply_mode(J(-n1 + 1), u)), Rat(-3));
        out.add(zhu_vec(apply_mode(J(-n1 + 2), u)), Rat(-3));
        out.add(zhu_vec(apply_mode(J(-n1 + 3), u)), Rat(-1));
        return out;
    }
    out = zhu_mono(u).shifted(0, 1);
    out.add(zhu_vec(apply_mode(J(-2), u)), Rat(-2));
    out.add(zhu_vec(apply_mode(J(-1), u)), Rat(-1));
    return out;
}

inline BiPoly zhu_vec(const StateVector& v) {
    BiPoly out;
    for (const auto& [m, c] : v.terms()) out.add(zhu_mono(m), c);
    return out;
}

}  // namespace detail

// Image of v in the Zhu algebra A(W), written in the x, y basis.
inline BiPoly zhu_image(const StateVector& v) { return detail::zhu_vec(v); }

inline BiPoly zhu_image(const NormalMonomial& m) { return detail::zhu_mono(m); }

// Projection onto the C2 quotient: L(-2)^p J(-3)^q |0> -> x^p y^q; every
// other normal monomial lies in C2(W) and maps to 0.
inline BiPoly c2_image(const StateVector& v) {
    BiPoly out;
    for (const auto& [m, c] : v.terms()) {
        bool flat = true;
        for (int part : m.l)
            if (part != 2) flat = false;
        for (int part : m.j)
            if (part != 3) flat = false;
        if (flat) out.add_term(static_cast<int>(m.l.size()), static_cast<int>(m.j.size()), c);
    }
    return out;
}

}  // namespace w3
