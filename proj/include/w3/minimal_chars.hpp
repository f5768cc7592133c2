#pragma once

#include <stdexcept>

#include "w3/qseries.hpp"

namespace w3 {

// Label (m; r, s) of the irreducible highest-weight module
// L(c_m, h^{(m)}_{r,s}) of the unitary minimal-model series
//   c_m = 1 - 6/((m+2)(m+3)),
//   h^{(m)}_{r,s} = (((m+3)r - (m+2)s)^2 - 1) / (4(m+2)(m+3)).
struct VirasoroLabel {
    int m;
    int r;
    int s;

    bool valid() const { return m >= 1 && 1 <= s && s <= r && r <= m + 1; }

    Rat central_charge() const { return Rat(1) - rat(6, static_cast<long>(m + 2) * (m + 3)); }

    Rat highest_weight() const {
        long d = static_cast<long>(m + 3) * r - static_cast<long>(m + 2) * s;
        return rat(d * d - 1, 4l * (m + 2) * (m + 3));
    }
};

// prod_{n>=1, n = step*k} (1 - q^n) truncated; step in lattice units.
inline QSeries euler_product(long step, long trunc) {
    QSeries p = QSeries::one(trunc);
    for (long e = step; e < trunc; e += step) {
        QSeries f = QSeries::one(trunc);
        f.add_term(e, Rat(-1));
        p = p * f;
    }
    return p;
}

// Alternating-sum character of L(c_m, h^{(m)}_{r,s}):
//   ch = sum_{k in Z} (q^{b(k)} - q^{a(k)}) / prod_{i>=1} (1 - q^i)
// with a(k), b(k) the quadratic exponents attached to the label. The k-sum
// stops once both exponents pass the truncation in both directions.
inline QSeries virasoro_min_char(const VirasoroLabel& lab, long trunc) {
    if (!lab.valid()) throw std::invalid_argument("virasoro_min_char: bad label");
    const long N = static_cast<long>(lab.m + 2) * (lab.m + 3);
    QSeries num(trunc);
    auto exps = [&](long k, long& a, long& b) {
        long base = 2 * N * k;
        long pa = base + (lab.m + 3) * lab.r + (lab.m + 2) * lab.s;
        long pb = base + (lab.m + 3) * lab.r - (lab.m + 2) * lab.s;
        a = lattice_exponent(rat(pa * pa - 1, 4 * N));
        b = lattice_exponent(rat(pb * pb - 1, 4 * N));
    };
    for (long k = 0;; ++k) {
        bool any = false;
        for (long kk : (k == 0 ? std::vector<long>{0} : std::vector<long>{k, -k})) {
            long a, b;
            exps(kk, a, b);
            if (b < trunc) {
                num.add_term(b, Rat(1));
                any = true;
            }
            if (a < trunc) {
                num.add_term(a, Rat(-1));
                any = true;
            }
        }
        if (k > 0 && !any) break;
    }
    return num * euler_product(kQDen, trunc).inverse();
}

// Xi^{(m)}_{r,s} = q^{-c_m/24} ch L(c_m, h^{(m)}_{r,s}).
inline QSeries xi(const VirasoroLabel& lab, long trunc) {
    long shift = lattice_exponent(-lab.central_charge() / 24);
    return virasoro_min_char(lab, trunc - shift).shifted(shift);
}

// eta(k z) = q^{k/24} prod_{n>=1} (1 - q^{kn}) for scales keeping all
// exponents on the lattice.
inline QSeries eta(const Rat& scale, long trunc) {
    Rat lead_q = scale / 24;
    Rat step_q = scale;
    if ((lead_q * kQDen).get_den() != 1 || (step_q * kQDen).get_den() != 1)
        throw std::domain_error("eta: scale " + rat_str(scale) + " leaves the exponent lattice");
    long lead = lattice_exponent(lead_q);
    long step = lattice_exponent(step_q);
    return euler_product(step, trunc - lead).shifted(lead);
}

// Character of the twisted Fock space:
//   q^{1/9} prod(1 - q^n) / prod(1 - q^{n/3}).
inline QSeries s_tau_char(long trunc) {
    long lead = lattice_exponent(rat(1, 9));
    QSeries body = euler_product(kQDen, trunc - lead) *
                   euler_product(kQDen / 3, trunc - lead).inverse();
    return body.shifted(lead);
}

// Character of the generic highest-weight module at c = 6/5:
//   h = 0:  (1 - q) / prod(1 - q^n)
//   h > 0:  q^h / prod(1 - q^n)
inline QSeries generic_char_c65(const Rat& h, long trunc) {
    if (h < 0) throw std::invalid_argument("generic_char_c65: negative weight");
    if (h == 0) {
        QSeries num = QSeries::one(trunc);
        num.add_term(kQDen, Rat(-1));
        return num * euler_product(kQDen, trunc).inverse();
    }
    long lead = lattice_exponent(h);
    return euler_product(kQDen, trunc - lead).inverse().shifted(lead);
}

}  // namespace w3
