#pragma once

#include <string>
#include <vector>

#include "w3/minimal_chars.hpp"
#include "w3/rational.hpp"

namespace w3 {

// Tagged character recipe for one of the 20 irreducible modules.
//   UntwistedCombo: q^{1/20} (1/3)(Xi(1)Xi(2)-pair + eta_weight * (eta(z)/eta(3z)) Xi(3))
//   XiProduct:      q^{1/20} Xi^{(1)} Xi^{(2)}
//   TwistedResidue: q^{1/20} * residue class of a twisted base series
struct ModuleDescriptor {
    enum class Kind { UntwistedCombo, XiProduct, TwistedResidue };
    enum class TwistedBase { MT, WT };

    std::string name;     // CLI identifier
    std::string display;  // pretty form
    Rat top_weight;
    QuadRat j0;
    Kind kind;

    // UntwistedCombo / XiProduct
    VirasoroLabel first1{1, 1, 1}, first2{2, 1, 1};   // Xi^{(1)}..Xi^{(2)} pair 1
    VirasoroLabel second1{1, 2, 1}, second2{2, 3, 1}; // pair 2 (UntwistedCombo only)
    VirasoroLabel eta_xi{3, 3, 3};
    int eta_weight = 0;  // coefficient of the eta-quotient term, times 1/3

    // TwistedResidue
    TwistedBase base = TwistedBase::MT;
    int epsilon = 0;
};

// The two twisted base series:
//   T_MT = eta(z)/eta(z/3) (-Xi(3;2,1) - Xi(3;3,1) + Xi(3;3,3))
//   T_WT = eta(z)/eta(z/3) ( Xi(3;1,1) + Xi(3;4,1) - Xi(3;4,3))
inline std::pair<QSeries, QSeries> twisted_base_chars(long trunc) {
    QSeries ratio = eta(Rat(1), trunc) * eta(rat(1, 3), trunc).inverse();
    QSeries mt = xi({3, 3, 3}, trunc) - xi({3, 2, 1}, trunc) - xi({3, 3, 1}, trunc);
    QSeries wt = xi({3, 1, 1}, trunc) + xi({3, 4, 1}, trunc) - xi({3, 4, 3}, trunc);
    return {ratio * mt, ratio * wt};
}

// Sub-series of s with exponents congruent to class_num/360 modulo 1.
inline QSeries residue_extract(const QSeries& s, long class_num_360) {
    const long cls = ((2 * class_num_360) % kQDen + kQDen) % kQDen;
    QSeries out(s.trunc());
    for (const auto& [e, c] : s.terms())
        if (((e % kQDen) + kQDen) % kQDen == cls) out.add_term(e, c);
    return out;
}

inline const std::vector<ModuleDescriptor>& module_descriptors() {
    static const std::vector<ModuleDescriptor> ds = [] {
        std::vector<ModuleDescriptor> v;
        auto s3 = [](long num, long den) { return QuadRat{Rat(0), rat(num, den)}; };
        auto combo = [&](std::string name, std::string disp, Rat top, QuadRat j0, bool m_family,
                         int eta_w) {
            ModuleDescriptor d;
            d.name = std::move(name);
            d.display = std::move(disp);
            d.top_weight = std::move(top);
            d.j0 = std::move(j0);
            d.kind = ModuleDescriptor::Kind::UntwistedCombo;
            if (m_family) {
                d.first1 = {1, 1, 1};
                d.first2 = {2, 1, 1};
                d.second1 = {1, 2, 1};
                d.second2 = {2, 3, 1};
                d.eta_xi = {3, 3, 3};
            } else {
                d.first1 = {1, 1, 1};
                d.first2 = {2, 3, 2};
                d.second1 = {1, 2, 1};
                d.second2 = {2, 3, 3};
                d.eta_xi = {3, 4, 3};
            }
            d.eta_weight = eta_w;
            return d;
        };
        v.push_back(combo("M0", "M(0)", rat(0), s3(0, 1), true, 2));
        v.push_back(combo("M1", "M(1)", rat(2), s3(-12, 1), true, -1));
        v.push_back(combo("M2", "M(2)", rat(2), s3(12, 1), true, -1));
        v.push_back(combo("W0", "W(0)", rat(8, 5), s3(0, 1), false, -2));
        v.push_back(combo("W1", "W(1)", rat(3, 5), s3(2, 1), false, 1));
        v.push_back(combo("W2", "W(2)", rat(3, 5), s3(-2, 1), false, 1));
        {
            ModuleDescriptor d;
            d.name = "Mkc";
            d.display = "M_k^c";
            d.top_weight = rat(1, 2);
            d.j0 = s3(0, 1);
            d.kind = ModuleDescriptor::Kind::XiProduct;
            d.first1 = {1, 2, 2};
            d.first2 = {2, 2, 1};
            v.push_back(d);
            d.name = "Wkc";
            d.display = "W_k^c";
            d.top_weight = rat(1, 10);
            d.first2 = {2, 2, 2};
            v.push_back(d);
        }
        auto twisted = [&](std::string name, std::string disp, Rat top, QuadRat j0,
                           ModuleDescriptor::TwistedBase base, int eps) {
            ModuleDescriptor d;
            d.name = std::move(name);
            d.display = std::move(disp);
            d.top_weight = std::move(top);
            d.j0 = std::move(j0);
            d.kind = ModuleDescriptor::Kind::TwistedResidue;
            d.base = base;
            d.epsilon = eps;
            return d;
        };
        using TB = ModuleDescriptor::TwistedBase;
        v.push_back(twisted("MT1_0", "M_T(tau)(0)", rat(1, 9), s3(14, 81), TB::MT, 0));
        v.push_back(twisted("MT1_1", "M_T(tau)(1)", rat(7, 9), s3(-238, 81), TB::MT, 1));
        v.push_back(twisted("MT1_2", "M_T(tau)(2)", rat(13, 9), s3(374, 81), TB::MT, 2));
        v.push_back(twisted("WT1_0", "W_T(tau)(0)", rat(2, 45), s3(-4, 81), TB::WT, 0));
        v.push_back(twisted("WT1_1", "W_T(tau)(1)", rat(17, 45), s3(-22, 81), TB::WT, 1));
        v.push_back(twisted("WT1_2", "W_T(tau)(2)", rat(32, 45), s3(176, 81), TB::WT, 2));
        v.push_back(twisted("MT2_0", "M_T(tau^2)(0)", rat(1, 9), s3(-14, 81), TB::MT, 0));
        v.push_back(twisted("MT2_1", "M_T(tau^2)(1)", rat(7, 9), s3(238, 81), TB::MT, 1));
        v.push_back(twisted("MT2_2", "M_T(tau^2)(2)", rat(13, 9), s3(-374, 81), TB::MT, 2));
        v.push_back(twisted("WT2_0", "W_T(tau^2)(0)", rat(2, 45), s3(4, 81), TB::WT, 0));
        v.push_back(twisted("WT2_1", "W_T(tau^2)(1)", rat(17, 45), s3(22, 81), TB::WT, 1));
        v.push_back(twisted("WT2_2", "W_T(tau^2)(2)", rat(32, 45), s3(-176, 81), TB::WT, 2));
        return v;
    }();
    return ds;
}

inline const ModuleDescriptor& descriptor_by_name(const std::string& name) {
    for (const auto& d : module_descriptors())
        if (d.name == name) return d;
    throw std::invalid_argument("unknown module '" + name + "'");
}

// Character of the module (graded dimension series, without the q^{-1/20}
// prefactor of the trace functions). Internal pieces carry enough slack for
// the result to be trusted through `trunc`.
inline QSeries module_character(const ModuleDescriptor& d, long trunc) {
    const long slack = 2 * kQDen;
    const long t = trunc + slack;
    const long shift = lattice_exponent(rat(1, 20));
    QSeries out;
    switch (d.kind) {
        case ModuleDescriptor::Kind::UntwistedCombo: {
            QSeries sum = xi(d.first1, t) * xi(d.first2, t) + xi(d.second1, t) * xi(d.second2, t);
            QSeries etaq = eta(Rat(1), t) * eta(Rat(3), t).inverse();
            sum.add(etaq * xi(d.eta_xi, t), Rat(d.eta_weight));
            sum *= rat(1, 3);
            out = sum.shifted(shift);
            break;
        }
        case ModuleDescriptor::Kind::XiProduct:
            out = (xi(d.first1, t) * xi(d.first2, t)).shifted(shift);
            break;
        case ModuleDescriptor::Kind::TwistedResidue: {
            auto [mt, wt] = twisted_base_chars(t);
            // exponent classes: 11/180 + 2*eps/3 for the MT family,
            // -1/180 + eps/3 for the WT family (as numerators over 360)
            long cls = d.base == ModuleDescriptor::TwistedBase::MT ? 22 + 240l * d.epsilon
                                                                   : -2 + 120l * d.epsilon;
            const QSeries& base = d.base == ModuleDescriptor::TwistedBase::MT ? mt : wt;
            out = residue_extract(base, cls).shifted(shift);
            break;
        }
    }
    out.retrunc(trunc);
    return out;
}

inline QSeries module_character(const std::string& name, long trunc) {
    return module_character(descriptor_by_name(name), trunc);
}

}  // namespace w3
