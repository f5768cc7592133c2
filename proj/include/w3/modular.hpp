#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "w3/minimal_chars.hpp"

namespace w3 {

using Complex = std::complex<double>;

// Numeric sum of a truncated series at a point z in the upper half plane,
// q = exp(2 pi i z).
inline Complex evaluate_series(const QSeries& s, Complex z) {
    const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
    Complex acc(0.0, 0.0);
    for (const auto& [e, c] : s.terms())
        acc += rat_double(c) * std::exp(two_pi_i * z * (static_cast<double>(e) / kQDen));
    return acc;
}

// Crude tail proxy: the largest coefficient magnitude in the last q-unit of
// the trusted window, carried to the truncation exponent and summed as a
// geometric tail in |q|^(1/3).
inline double tail_estimate(const QSeries& s, Complex z) {
    const double absq = std::exp(-2.0 * std::numbers::pi * z.imag());
    double maxc = 1.0;
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
        if (it->first < s.trunc() - kQDen) break;
        maxc = std::max(maxc, std::abs(rat_double(it->second)));
    }
    const double head = std::pow(absq, static_cast<double>(s.trunc()) / kQDen);
    const double ratio = std::pow(absq, 1.0 / 3.0);
    return maxc * head / (1.0 - ratio);
}

struct ModularCheckReport {
    bool pass = false;
    double max_deviation = 0.0;
    double tail_bound = 0.0;
    double tolerance = 0.0;
    std::vector<std::string> lines;
};

struct TailError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checks eta(-1/z) = sqrt(-iz) eta(z) numerically; principal square root
// (positive on the positive reals).
inline double eta_transform_deviation(Complex z, long trunc) {
    QSeries e = eta(Rat(1), trunc);
    Complex lhs = evaluate_series(e, -1.0 / z);
    Complex rhs = std::sqrt(Complex(0.0, -1.0) * z) * evaluate_series(e, z);
    return std::abs(lhs - rhs);
}

// Checks the S-transformation of every Xi^{(m)}_{r,s}:
//   Xi_{r,s}(-1/z) = sqrt(8/((m+2)(m+3)))
//       sum_{1<=j<=i<=m+1} (-1)^{(r+s)(i+j)} sin(pi r i/(m+2)) sin(pi s j/(m+3)) Xi_{i,j}(z)
// together with the eta transformation, at the given tolerance. Signals
// TailError when the truncation cannot support the tolerance at this z.
inline ModularCheckReport numeric_modular_check(int m, Complex z, long trunc, double tol) {
    if (z.imag() <= 0) throw std::invalid_argument("numeric_modular_check: Im z must be > 0");
    ModularCheckReport rep;
    rep.tolerance = tol;

    std::vector<VirasoroLabel> labels;
    for (int r = 1; r <= m + 1; ++r)
        for (int s = 1; s <= r; ++s) labels.push_back({m, r, s});

    std::vector<QSeries> series;
    series.reserve(labels.size());
    for (const auto& lab : labels) series.push_back(xi(lab, trunc));

    const Complex zs = -1.0 / z;
    for (const auto& s : series) {
        rep.tail_bound = std::max(rep.tail_bound, tail_estimate(s, z));
        rep.tail_bound = std::max(rep.tail_bound, tail_estimate(s, zs));
    }
    {
        QSeries e = eta(Rat(1), trunc);
        rep.tail_bound = std::max(rep.tail_bound, tail_estimate(e, z));
        rep.tail_bound = std::max(rep.tail_bound, tail_estimate(e, zs));
    }
    if (rep.tail_bound > tol)
        throw TailError("truncation too small for tolerance: tail ~" +
                        std::to_string(rep.tail_bound) + " exceeds " + std::to_string(tol) +
                        "; raise the truncation or Im z");

    const double pi = std::numbers::pi;
    const double pref = std::sqrt(8.0 / ((m + 2.0) * (m + 3.0)));
    for (std::size_t a = 0; a < labels.size(); ++a) {
        Complex lhs = evaluate_series(series[a], zs);
        Complex rhs(0.0, 0.0);
        for (std::size_t b = 0; b < labels.size(); ++b) {
            const auto& lab = labels[b];
            double sign = ((labels[a].r + labels[a].s) * (lab.r + lab.s)) % 2 == 0 ? 1.0 : -1.0;
            double w = sign * std::sin(pi * labels[a].r * lab.r / (m + 2.0)) *
                       std::sin(pi * labels[a].s * lab.s / (m + 3.0));
            rhs += w * evaluate_series(series[b], z);
        }
        rhs *= pref;
        double dev = std::abs(lhs - rhs);
        rep.max_deviation = std::max(rep.max_deviation, dev);
        rep.lines.push_back("Xi(" + std::to_string(m) + ";" + std::to_string(labels[a].r) + "," +
                            std::to_string(labels[a].s) + ") S-transform deviation " +
                            std::to_string(dev));
    }
    {
        double dev = eta_transform_deviation(z, trunc);
        rep.max_deviation = std::max(rep.max_deviation, dev);
        rep.lines.push_back("eta S-transform deviation " + std::to_string(dev));
    }
    rep.pass = rep.max_deviation <= tol;
    return rep;
}

}  // namespace w3
