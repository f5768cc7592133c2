#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "w3/rational.hpp"
#include "w3/state.hpp"

namespace w3 {

// Structure constants of the W3 algebra at central charge 6/5.
//
//   [L(m), L(n)] = (m-n) L(m+n) + c/12 (m^3-m) delta_{m+n,0}
//   [L(m), J(n)] = (2m-n) J(m+n)
//   [J(m), J(n)] = (m-n) jj_linear(m,n) L(m+n)
//                  - 120 (m-n) Lambda(m+n)
//                  - 7/10 m(m^2-1)(m^2-4) delta_{m+n,0}
//
// with Lambda(N) = sum_{k<=-2} L(k)L(N-k) + sum_{k>=-1} L(N-k)L(k).
struct AlgebraConstants {
    static Rat central_charge() { return rat(6, 5); }
    static Rat jj_linear(long m, long n) {
        return Rat(22 * (m + n + 2) * (m + n + 3) + 35 * (m + 2) * (n + 2));
    }
    static Rat jj_bilinear_coeff() { return Rat(-120); }
    static Rat jj_central_coeff() { return rat(-7, 10); }
};

enum class Gen : char { L = 'L', J = 'J' };

// Component operator L(n) or J(n); both have weight -n.
struct Mode {
    Gen gen;
    int index;

    friend bool operator==(const Mode&, const Mode&) = default;
    std::string str() const {
        return std::string(1, static_cast<char>(gen)) + "(" + std::to_string(index) + ")";
    }
};

inline Mode L(int n) { return {Gen::L, n}; }
inline Mode J(int n) { return {Gen::J, n}; }

class Engine;
StateVector apply_lambda(int N, const StateVector& v);

namespace detail {

struct ModeKey {
    Gen gen;
    int index;
    NormalMonomial mono;
    bool operator==(const ModeKey&) const = default;
};

struct ModeKeyHash {
    std::size_t operator()(const ModeKey& k) const {
        std::size_t h = hash_value(k.mono);
        h ^= std::hash<int>{}(k.index) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= static_cast<std::size_t>(k.gen);
        return h;
    }
};

// Shared memo for mode applications; behaves as a single logical map and
// tolerates concurrent insertion of identical values.
class ModeMemo {
public:
    std::shared_ptr<const StateVector> find(const ModeKey& k) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(k);
        return it == map_.end() ? nullptr : it->second;
    }
    std::shared_ptr<const StateVector> store(const ModeKey& k, StateVector v) {
        auto sp = std::make_shared<const StateVector>(std::move(v));
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, fresh] = map_.emplace(k, sp);
        return it->second;  // keep the first stored value
    }

private:
    mutable std::mutex mu_;
    std::unordered_map<ModeKey, std::shared_ptr<const StateVector>, ModeKeyHash> map_;
};

inline ModeMemo& mode_memo() {
    static ModeMemo memo;
    return memo;
}

StateVector apply_mode_mono_uncached(Gen gen, int n, const NormalMonomial& mono);

inline std::shared_ptr<const StateVector> apply_mode_mono(Gen gen, int n,
                                                          const NormalMonomial& mono) {
    ModeKey key{gen, n, mono};
    if (auto hit = mode_memo().find(key)) return hit;
    return mode_memo().store(key, apply_mode_mono_uncached(gen, n, mono));
}

inline void accumulate_mode(StateVector& out, Gen gen, int n, const StateVector& v,
                            const Rat& scale) {
    if (scale == 0) return;
    for (const auto& [m, c] : v.terms()) out.add(*apply_mode_mono(gen, n, m), c * scale);
}

inline StateVector lambda_mono(int N, const NormalMonomial& mono);

// Normal-form expansion of G(n) applied to one normal monomial. Commutators
// move annihilating modes rightward; recursion follows the induction on
// (J-length, weight, L-length) that makes the rewrite terminate.
inline StateVector apply_mode_mono_uncached(Gen gen, int n, const NormalMonomial& mono) {
    StateVector out;
    if (mono.is_vacuum()) {
        if (gen == Gen::L) {
            if (n <= -2) out.add_term(NormalMonomial{{-n}, {}}, Rat(1));
        } else {
            if (n <= -3) out.add_term(NormalMonomial{{}, {-n}}, Rat(1));
        }
        return out;
    }
    if (!mono.l.empty()) {
        const int m1 = mono.l.front();
        NormalMonomial rest{{mono.l.begin() + 1, mono.l.end()}, mono.j};
        if (gen == Gen::L && n <= -m1) {
            NormalMonomial r{{}, mono.j};
            r.l.reserve(mono.l.size() + 1);
            r.l.push_back(-n);
            r.l.insert(r.l.end(), mono.l.begin(), mono.l.end());
            out.add_term(r, Rat(1));
            return out;
        }
        if (gen == Gen::L) {
            // L(n)L(-m1) = L(-m1)L(n) + (n+m1) L(n-m1) + central
            const StateVector& x = *apply_mode_mono(Gen::L, n, rest);
            accumulate_mode(out, Gen::L, -m1, x, Rat(1));
            out.add(*apply_mode_mono(Gen::L, n - m1, rest), Rat(n + m1));
            if (n == m1) {
                Rat cc = rat(static_cast<long>(n) * n * n - n, 12) * AlgebraConstants::central_charge();
                out.add_term(rest, cc);
            }
        } else {
            // J(n)L(-m1) = L(-m1)J(n) + (2m1+n) J(n-m1)
            const StateVector& x = *apply_mode_mono(Gen::J, n, rest);
            accumulate_mode(out, Gen::L, -m1, x, Rat(1));
            out.add(*apply_mode_mono(Gen::J, n - m1, rest), Rat(2 * m1 + n));
        }
        return out;
    }
    // no L part: leading J(-n1)
    const int n1 = mono.j.front();
    NormalMonomial rest{{}, {mono.j.begin() + 1, mono.j.end()}};
    if (gen == Gen::J && n <= -n1) {
        NormalMonomial r;
        r.j.reserve(mono.j.size() + 1);
        r.j.push_back(-n);
        r.j.insert(r.j.end(), mono.j.begin(), mono.j.end());
        out.add_term(r, Rat(1));
        return out;
    }
    if (gen == Gen::L) {
        if (n <= -2) {
            out.add_term(NormalMonomial{{-n}, mono.j}, Rat(1));
            return out;
        }
        // n >= -1: L(n)J(-n1) = J(-n1)L(n) + (2n+n1) J(n-n1)
        const StateVector& x = *apply_mode_mono(Gen::L, n, rest);
        accumulate_mode(out, Gen::J, -n1, x, Rat(1));
        out.add(*apply_mode_mono(Gen::J, n - n1, rest), Rat(2 * n + n1));
        return out;
    }
    // J(n)J(-n1) = J(-n1)J(n) + [J(n), J(-n1)]
    const StateVector& x = *apply_mode_mono(Gen::J, n, rest);
    accumulate_mode(out, Gen::J, -n1, x, Rat(1));
    const long m_ = n, nn_ = -n1;
    const Rat lin = AlgebraConstants::jj_linear(m_, nn_);
    out.add(*apply_mode_mono(Gen::L, n - n1, rest), Rat(m_ - nn_) * lin);
    out.add(lambda_mono(n - n1, rest), AlgebraConstants::jj_bilinear_coeff() * Rat(m_ - nn_));
    if (m_ + nn_ == 0) {
        Rat cc = AlgebraConstants::jj_central_coeff() * Rat(m_ * (m_ * m_ - 1) * (m_ * m_ - 4));
        out.add_term(rest, cc);
    }
    return out;
}

// Lambda(N) on one monomial; both sums truncate against the weight.
inline StateVector lambda_mono(int N, const NormalMonomial& mono) {
    const int w = mono.weight();
    StateVector out;
    for (int k = N - w; k <= -2; ++k) {
        const StateVector& inner = *apply_mode_mono(Gen::L, N - k, mono);
        accumulate_mode(out, Gen::L, k, inner, Rat(1));
    }
    for (int k = -1; k <= w; ++k) {
        const StateVector& inner = *apply_mode_mono(Gen::L, k, mono);
        accumulate_mode(out, Gen::L, N - k, inner, Rat(1));
    }
    return out;
}

}  // namespace detail

// Exact normal-form expansion of op.v in the vacuum module; extends
// additively to inhomogeneous inputs.
inline StateVector apply_mode(Mode op, const StateVector& v) {
    StateVector out;
    detail::accumulate_mode(out, op.gen, op.index, v, Rat(1));
    return out;
}

inline StateVector apply_mode(Mode op, const NormalMonomial& m) {
    return *detail::apply_mode_mono(op.gen, op.index, m);
}

// Lambda(N) v = (sum_{k<=-2} L(k)L(N-k) + sum_{k>=-1} L(N-k)L(k)) v.
inline StateVector apply_lambda(int N, const StateVector& v) {
    StateVector out;
    for (const auto& [m, c] : v.terms()) out.add(detail::lambda_mono(N, m), c);
    return out;
}

// lambda(m) from the normally ordered rewriting of Lambda:
// lambda(2i) = i^2, lambda(2i+1) = i(i+1).
inline Rat lambda_scalar(int m) {
    // floor division toward -infinity
    int i = (m >= 0) ? m / 2 : -((-m + 1) / 2);
    if (m % 2 == 0) return Rat(static_cast<long>(i) * i);
    return Rat(static_cast<long>(i) * (i + 1));
}

// sum_k :L(k)L(n-k): v with the larger index applied first; the sum
// truncates to n-w <= k <= w on a homogeneous v of weight w.
inline StateVector normally_ordered_ll(int n, const StateVector& v) {
    StateVector out;
    for (const auto& [mono, c] : v.terms()) {
        const int w = mono.weight();
        for (int k = n - w; k <= w; ++k) {
            int lo = std::min(k, n - k), hi = std::max(k, n - k);
            const StateVector& inner = *detail::apply_mode_mono(Gen::L, hi, mono);
            for (const auto& [mu, cc] : inner.terms())
                out.add(*detail::apply_mode_mono(Gen::L, lo, mu), cc * c);
        }
    }
    return out;
}

}  // namespace w3
