#pragma once

#include <string>
#include <vector>

#include "w3/groebner.hpp"
#include "w3/rational.hpp"

namespace w3 {

// Top-level (L(0), J(0)) eigenvalue pair of one irreducible module. All 20
// built-in points have y a pure rational multiple of sqrt(-3).
struct SpectrumPoint {
    std::string module_name;
    Rat x;
    QuadRat y;
};

// The 20 built-in points, in a fixed order: untwisted modules first, then
// the two twisted families.
inline const std::vector<SpectrumPoint>& builtin_spectrum_points() {
    static const std::vector<SpectrumPoint> pts = [] {
        auto s3 = [](long num, long den) { return QuadRat{Rat(0), rat(num, den)}; };
        std::vector<SpectrumPoint> v{
            {"M0", rat(0), s3(0, 1)},
            {"M1", rat(2), s3(-12, 1)},
            {"M2", rat(2), s3(12, 1)},
            {"W0", rat(8, 5), s3(0, 1)},
            {"W1", rat(3, 5), s3(2, 1)},
            {"W2", rat(3, 5), s3(-2, 1)},
            {"Mkc", rat(1, 2), s3(0, 1)},
            {"Wkc", rat(1, 10), s3(0, 1)},
            {"MT1_0", rat(1, 9), s3(14, 81)},
            {"MT1_1", rat(7, 9), s3(-238, 81)},
            {"MT1_2", rat(13, 9), s3(374, 81)},
            {"WT1_0", rat(2, 45), s3(-4, 81)},
            {"WT1_1", rat(17, 45), s3(-22, 81)},
            {"WT1_2", rat(32, 45), s3(176, 81)},
            {"MT2_0", rat(1, 9), s3(-14, 81)},
            {"MT2_1", rat(7, 9), s3(238, 81)},
            {"MT2_2", rat(13, 9), s3(-374, 81)},
            {"WT2_0", rat(2, 45), s3(4, 81)},
            {"WT2_1", rat(17, 45), s3(22, 81)},
            {"WT2_2", rat(32, 45), s3(-176, 81)},
        };
        return v;
    }();
    return pts;
}

// Exact evaluation of a polynomial at a spectrum point.
inline QuadRat evaluate(const BiPoly& p, const SpectrumPoint& pt) {
    return p.evaluate(pt.x, pt.y);
}

struct SpectrumReport {
    bool pass = false;
    bool points_distinct = false;
    bool all_vanish = false;
    std::optional<int> quotient_dim;
    std::string detail;  // first failure, if any
};

// Certifies that the ideal generated by gens is the intersection of the 20
// maximal ideals at the given points: (a) points distinct, (b) every
// generator vanishes at every point, (c) quotient dimension equals the
// number of points. For a radical zero-dimensional ideal this pins the
// ideal exactly.
inline SpectrumReport verify_spectrum(const std::vector<BiPoly>& gb,
                                      const std::vector<SpectrumPoint>& points,
                                      const std::vector<BiPoly>& gens) {
    SpectrumReport rep;
    rep.points_distinct = true;
    for (std::size_t i = 0; i < points.size() && rep.points_distinct; ++i)
        for (std::size_t k = i + 1; k < points.size(); ++k)
            if (points[i].x == points[k].x && points[i].y == points[k].y) {
                rep.points_distinct = false;
                rep.detail = "duplicate point: " + points[i].module_name + " vs " +
                             points[k].module_name;
                break;
            }
    rep.all_vanish = true;
    for (std::size_t gi = 0; gi < gens.size() && rep.all_vanish; ++gi)
        for (const auto& pt : points) {
            QuadRat val = evaluate(gens[gi], pt);
            if (!val.is_zero()) {
                rep.all_vanish = false;
                rep.detail = "generator " + std::to_string(gi + 1) + " does not vanish at " +
                             pt.module_name + ": " + quad_str(val);
                break;
            }
        }
    rep.quotient_dim = quotient_dimension(gb);
    bool dim_ok = rep.quotient_dim.has_value() &&
                  *rep.quotient_dim == static_cast<int>(points.size());
    if (!dim_ok && rep.detail.empty())
        rep.detail = "quotient dimension is " +
                     (rep.quotient_dim ? std::to_string(*rep.quotient_dim) : std::string("infinite")) +
                     ", expected " + std::to_string(points.size());
    rep.pass = rep.points_distinct && rep.all_vanish && dim_ok;
    return rep;
}

}  // namespace w3
