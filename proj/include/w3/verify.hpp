#pragma once

#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "w3/characters.hpp"
#include "w3/groebner.hpp"
#include "w3/json_io.hpp"
#include "w3/modular.hpp"
#include "w3/singular.hpp"
#include "w3/spectrum.hpp"
#include "w3/zhu.hpp"

#ifndef W3_DATA_DIR
#define W3_DATA_DIR "data"
#endif

namespace w3 {

inline std::string data_dir() {
    if (const char* env = std::getenv("W3_DATA_DIR")) return env;
    return W3_DATA_DIR;
}

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
};

namespace verify_detail {

// The four singular-family vectors and their Zhu images; computed once per
// process.
struct Family {
    V12Family vec;
    BiPoly f1, f2, f3, f4;
};

inline const Family& family() {
    static const Family fam = [] {
        Family f;
        f.vec = descendants_of_v12();
        f.f1 = zhu_image(f.vec.v12);
        f.f2 = zhu_image(f.vec.j1_v12);
        f.f3 = zhu_image(f.vec.j2_v12);
        f.f4 = zhu_image(f.vec.j1j1_v12);
        return f;
    }();
    return fam;
}

// Partition count with parts >= k, by a recursion independent of the
// generator used in enumerate_basis.
inline long count_partitions_min(int n, int k) {
    if (n == 0) return 1;
    if (n < k) return 0;
    return count_partitions_min(n - k, k) + count_partitions_min(n, k + 1);
}

inline bool proportional(const BiPoly& p, const BiPoly& q, std::string& why) {
    if (p.is_zero() || q.is_zero()) {
        why = "zero polynomial";
        return false;
    }
    const auto& [k0, c0] = *p.terms().begin();
    Rat cq = q.coefficient(k0.first, k0.second);
    if (cq == 0) {
        why = "support mismatch";
        return false;
    }
    BiPoly scaled = q;
    scaled *= c0 / cq;
    if (!(scaled == p)) {
        why = "not proportional";
        return false;
    }
    return true;
}

inline QSeries untwisted_parent_m(long t) {
    return (xi({1, 1, 1}, t) * xi({2, 1, 1}, t) + xi({1, 2, 1}, t) * xi({2, 3, 1}, t))
        .shifted(lattice_exponent(rat(1, 20)));
}

inline QSeries untwisted_parent_w(long t) {
    return (xi({1, 1, 1}, t) * xi({2, 3, 2}, t) + xi({1, 2, 1}, t) * xi({2, 3, 3}, t))
        .shifted(lattice_exponent(rat(1, 20)));
}

}  // namespace verify_detail

// --- criterion 1 ---------------------------------------------------------
inline CheckResult check_basis_count() {
    CheckResult r{"basis-count"};
    std::ostringstream why;
    bool ok = enumerate_basis(12).size() == 76;
    if (!ok) why << "|basis(12)| = " << enumerate_basis(12).size() << ", expected 76. ";
    for (int h = 0; h <= 16 && ok; ++h) {
        long expect = 0;
        for (int a = 0; a <= h; ++a)
            expect += verify_detail::count_partitions_min(a, 2) *
                      verify_detail::count_partitions_min(h - a, 3);
        if (static_cast<long>(enumerate_basis(h).size()) != expect) {
            ok = false;
            why << "|basis(" << h << ")| = " << enumerate_basis(h).size() << ", brute force says "
                << expect;
        }
    }
    r.pass = ok;
    r.detail = ok ? "|basis(12)| = 76; counts match brute force for h <= 16" : why.str();
    return r;
}

// --- criterion 2 ---------------------------------------------------------
inline CheckResult check_singular_scan() {
    CheckResult r{"singular-scan"};
    std::ostringstream why;
    bool ok = true;
    for (int h = 1; h <= 11 && ok; ++h) {
        auto rep = find_singular(h);
        if (rep.kernel_dimension != 0) {
            ok = false;
            why << "kernel at weight " << h << " has dimension " << rep.kernel_dimension;
        }
    }
    if (ok) {
        auto rep = find_singular(12);
        if (rep.kernel_dimension != 1) {
            ok = false;
            why << "kernel at weight 12 has dimension " << rep.kernel_dimension;
        }
    }
    r.pass = ok;
    r.detail = ok ? "kernel dimension 0 for weights 1..11, 1 at weight 12" : why.str();
    return r;
}

// --- criterion 3 ---------------------------------------------------------
inline CheckResult check_singular_vector_golden() {
    CheckResult r{"singular-vector-golden"};
    const auto& fam = verify_detail::family();
    std::ostringstream why;
    bool ok = true;
    auto compare = [&](const StateVector& got, const std::string& file, const std::string& name) {
        StateVector want = load_golden_vector(data_dir() + "/golden/" + file);
        if (!(got == want)) {
            ok = false;
            why << name << " differs from golden file (" << got.size() << " vs " << want.size()
                << " terms). ";
        }
    };
    compare(fam.vec.v12, "singular_v12.json", "v12");
    if (!apply_mode(J(0), fam.vec.v12).is_zero()) {
        ok = false;
        why << "J(0) v12 != 0. ";
    }
    compare(fam.vec.j1_v12, "singular_v12_j1.json", "J(-1)v12");
    compare(fam.vec.j2_v12, "singular_v12_j2.json", "J(-2)v12");
    compare(fam.vec.j1j1_v12, "singular_v12_j1j1.json", "J(-1)^2 v12");
    r.pass = ok;
    r.detail = ok ? "v12 (41 terms), J(0)v12 = 0, and all three descendants match term-for-term"
                  : why.str();
    return r;
}

// --- criterion 4 ---------------------------------------------------------
inline CheckResult check_zhu_images_golden() {
    CheckResult r{"zhu-images-golden"};
    const auto& fam = verify_detail::family();
    std::ostringstream why;
    bool ok = true;
    auto compare = [&](const BiPoly& got, const std::string& file, const std::string& name) {
        BiPoly want = load_golden_bipoly(data_dir() + "/golden/" + file);
        if (!(got == want)) {
            ok = false;
            why << name << " differs from golden file. ";
        }
    };
    compare(fam.f1, "zhu_v12.json", "[v12]");
    compare(fam.f2, "zhu_v12_j1.json", "[J(-1)v12]");
    compare(fam.f3, "zhu_v12_j2.json", "[J(-2)v12]");
    compare(fam.f4, "zhu_v12_j1j1.json", "[J(-1)^2 v12]");
    r.pass = ok;
    r.detail = ok ? "all four Zhu images match the golden polynomials exactly" : why.str();
    return r;
}

// --- criterion 5 ---------------------------------------------------------
inline CheckResult check_zhu_identities() {
    CheckResult r{"zhu-identities"};
    std::ostringstream why;
    bool ok = true;
    long tested = 0;
    for (int h = 0; h <= 9 && ok; ++h) {
        for (const auto& u : enumerate_basis(h)) {
            StateVector uv(u);
            BiPoly zu = zhu_image(uv);
            // [omega]*[u] = [(L(-2)+L(-1))u]
            BiPoly lhs = zhu_image(apply_mode(L(-2), uv) + apply_mode(L(-1), uv));
            if (!(lhs == zu.shifted(1, 0))) {
                ok = false;
                why << "omega-star identity fails on " << u.str();
                break;
            }
            // [J]*[u] = [J(-3)u + 3J(-2)u + 3J(-1)u + J(0)u]
            StateVector jstar = apply_mode(J(-3), uv);
            jstar.add(apply_mode(J(-2), uv), Rat(3));
            jstar.add(apply_mode(J(-1), uv), Rat(3));
            jstar.add(apply_mode(J(0), uv));
            if (!(zhu_image(jstar) == zu.shifted(0, 1))) {
                ok = false;
                why << "J-star identity fails on " << u.str();
                break;
            }
            // circle products land in the kernel
            StateVector jcirc = apply_mode(J(-4), uv);
            jcirc.add(apply_mode(J(-3), uv), Rat(3));
            jcirc.add(apply_mode(J(-2), uv), Rat(3));
            jcirc.add(apply_mode(J(-1), uv));
            StateVector lcirc = apply_mode(L(-3), uv);
            lcirc.add(apply_mode(L(-2), uv), Rat(2));
            lcirc.add(apply_mode(L(-1), uv));
            if (!zhu_image(jcirc).is_zero() || !zhu_image(lcirc).is_zero()) {
                ok = false;
                why << "circle-product image nonzero on " << u.str();
                break;
            }
            // [L(-n)u] = (-1)^n ((n-1) x [u] + wt(u) [u]), engine route
            for (int n = 1; n <= 6 && ok; ++n) {
                BiPoly got = zhu_image(apply_mode(L(-n), uv));
                BiPoly want = zu.shifted(1, 0);
                want *= Rat(n - 1);
                want.add(zu, Rat(h));
                if (n % 2) want *= Rat(-1);
                if (!(got == want)) {
                    ok = false;
                    why << "L(-" << n << ") reduction fails on " << u.str();
                }
            }
            ++tested;
        }
    }
    r.pass = ok;
    r.detail = ok ? "star/circle/L(-n) identities hold on all " + std::to_string(tested) +
                        " basis monomials of weight <= 9"
                  : why.str();
    return r;
}

// --- criterion 6 ---------------------------------------------------------
inline CheckResult check_spectrum_certification() {
    CheckResult r{"spectrum-certification"};
    const auto& fam = verify_detail::family();
    std::vector<BiPoly> gens{fam.f1, fam.f2, fam.f3, fam.f4};
    auto gb = buchberger(gens);
    auto rep = verify_spectrum(gb, builtin_spectrum_points(), gens);
    bool ok = rep.pass;
    std::ostringstream why;
    if (!ok) why << rep.detail;
    // bijection with the module descriptors' (top weight, J(0)) pairs
    if (ok) {
        const auto& pts = builtin_spectrum_points();
        for (const auto& d : module_descriptors()) {
            bool found = false;
            for (const auto& p : pts)
                if (p.module_name == d.name && p.x == d.top_weight && p.y == d.j0) found = true;
            if (!found) {
                ok = false;
                why << "descriptor " << d.name << " has no matching spectrum point";
                break;
            }
        }
    }
    r.pass = ok;
    r.detail = ok ? "quotient dimension 20; all generators vanish at the 20 distinct points; "
                    "points biject with module data"
                  : why.str();
    return r;
}

// --- criterion 7 ---------------------------------------------------------
inline CheckResult check_c2_consequences() {
    CheckResult r{"c2-consequences"};
    const auto& fam = verify_detail::family();
    std::ostringstream why;
    bool ok = true;

    BiPoly r1 = c2_image(fam.vec.v12);
    BiPoly r2 = c2_image(fam.vec.j1_v12);
    BiPoly r3 = c2_image(fam.vec.j1j1_v12);

    BiPoly R1, R2, R3;
    R1.add_term(6, 0, rat(-59680000, 3501));
    R1.add_term(3, 2, rat(-184400, 1167));
    R1.add_term(0, 4, Rat(1));
    R2.add_term(2, 3, Rat(-926640));
    R2.add_term(5, 1, Rat(-89856000));
    R3.add_term(7, 0, Rat(21565440000));
    R3.add_term(4, 2, Rat(-680659200));
    R3.add_term(1, 4, Rat(-5559840));

    std::string reason;
    if (!verify_detail::proportional(r1, R1, reason)) {
        ok = false;
        why << "c2(v12) vs first relation: " << reason << ". ";
    }
    if (!verify_detail::proportional(r2, R2, reason)) {
        ok = false;
        why << "c2(J(-1)v12) vs second relation: " << reason << ". ";
    }
    if (!verify_detail::proportional(r3, R3, reason)) {
        ok = false;
        why << "c2(J(-1)^2 v12) vs third relation: " << reason << ". ";
    }
    std::vector<BiPoly> gens{r1, r2, r3};
    for (auto [dx, dy] : std::vector<std::pair<int, int>>{{8, 0}, {2, 4}, {5, 2}, {0, 8}}) {
        if (!ideal_membership(BiPoly::monomial(dx, dy), gens)) {
            ok = false;
            why << "x^" << dx << " y^" << dy << " not in the C2 relation ideal. ";
        }
    }
    r.pass = ok;
    r.detail = ok ? "C2 images proportional to the three quotient relations; x^8, x^2y^4, "
                    "x^5y^2, y^8 all reduce to 0"
                  : why.str();
    return r;
}

// --- criterion 8 ---------------------------------------------------------
inline CheckResult check_character_expansions() {
    CheckResult r{"character-expansions"};
    std::ostringstream why;
    bool ok = true;
    const long t = qunits(24);

    QSeries chM = virasoro_min_char({1, 1, 1}, t) * virasoro_min_char({2, 1, 1}, t) +
                  virasoro_min_char({1, 2, 1}, t) * virasoro_min_char({2, 3, 1}, t);
    const long expected_m[] = {1, 0, 3, 4, 9, 12, 22};
    for (int i = 0; i <= 6; ++i)
        if (chM.coefficient(qunits(i)) != expected_m[i]) {
            ok = false;
            why << "ch M coefficient at q^" << i << " is " << rat_str(chM.coefficient(qunits(i)))
                << ". ";
        }

    QSeries stau = s_tau_char(t);
    const long expected_s[] = {1, 1, 2, 2, 4};
    const long base19 = lattice_exponent(rat(1, 9));
    for (int k = 0; k <= 4; ++k)
        if (stau.coefficient(base19 + k * kQDen / 3) != expected_s[k]) {
            ok = false;
            why << "ch S[tau] coefficient " << k << " thirds up is wrong. ";
        }

    auto [mt, wt] = twisted_base_chars(t);
    QSeries chMT = mt.shifted(lattice_exponent(rat(1, 20)));
    QSeries chWT = wt.shifted(lattice_exponent(rat(1, 20)));
    const long expected_mt[] = {1, 0, 1, 1, 1};
    for (int k = 0; k <= 4; ++k)
        if (chMT.coefficient(base19 + k * kQDen / 3) != expected_mt[k]) {
            ok = false;
            why << "ch M_T coefficient " << k << " thirds up is wrong. ";
        }
    const long base245 = lattice_exponent(rat(2, 45));
    const long expected_wt[] = {1, 1, 1, 1, 2};
    for (int k = 0; k <= 4; ++k)
        if (chWT.coefficient(base245 + k * kQDen / 3) != expected_wt[k]) {
            ok = false;
            why << "ch W_T coefficient " << k << " thirds up is wrong. ";
        }

    // decomposition of ch M into generic c=6/5 characters, exact through q^6
    QSeries dec = generic_char_c65(Rat(0), t);
    for (long h : {2, 2, 3, 4, 4, 6}) dec.add(generic_char_c65(Rat(h), t));
    QSeries diff = chM - dec;
    for (const auto& [e, c] : diff.terms())
        if (e <= qunits(6)) {
            ok = false;
            why << "ch M decomposition into generic characters fails at exponent "
                << rat_str(exponent_value(e)) << ". ";
            break;
        }
    // ch M(1) agrees with L(6/5,2) + L(6/5,4) through q^6
    QSeries m1 = module_character("M1", t);
    QSeries m1dec = generic_char_c65(Rat(2), t) + generic_char_c65(Rat(4), t);
    QSeries m1diff = m1 - m1dec;
    for (const auto& [e, c] : m1diff.terms())
        if (e <= qunits(6)) {
            ok = false;
            why << "ch M(1) generic decomposition fails at "
                << rat_str(exponent_value(e)) << ". ";
            break;
        }
    r.pass = ok;
    r.detail = ok ? "ch M = 1+3q^2+4q^3+9q^4+12q^5+22q^6+...; twisted leading terms and the "
                    "generic c=6/5 decompositions agree through q^6"
                  : why.str();
    return r;
}

// --- criterion 9 ---------------------------------------------------------
inline CheckResult check_character_identities() {
    CheckResult r{"character-identities"};
    std::ostringstream why;
    bool ok = true;
    const long t = qunits(20);
    const long slack = qunits(2);

    // determinant identity
    QSeries det = (xi({3, 1, 1}, t + slack) + xi({3, 4, 1}, t + slack)) * xi({3, 3, 3}, t + slack) -
                  (xi({3, 2, 1}, t + slack) + xi({3, 3, 1}, t + slack)) * xi({3, 4, 3}, t + slack);
    det.retrunc(t);
    if (!(det == QSeries::one(t))) {
        ok = false;
        why << "determinant identity fails. ";
    }

    // the two eta-quotient decompositions
    auto [mt, wt] = twisted_base_chars(t + slack);
    QSeries target = eta(Rat(1), t + slack) * eta(rat(1, 3), t + slack).inverse();
    QSeries lhs0 = mt * (xi({3, 1, 1}, t + slack) + xi({3, 4, 1}, t + slack)) +
                   wt * (xi({3, 2, 1}, t + slack) + xi({3, 3, 1}, t + slack));
    QSeries lhs1 = mt * xi({3, 4, 3}, t + slack) + wt * xi({3, 3, 3}, t + slack);
    lhs0.retrunc(t);
    lhs1.retrunc(t);
    QSeries tgt = target;
    tgt.retrunc(t);
    if (!agree(lhs0, tgt)) {
        ok = false;
        why << "first eta-quotient identity fails. ";
    }
    if (!agree(lhs1, tgt)) {
        ok = false;
        why << "second eta-quotient identity fails. ";
    }

    // the 20 characters: nonnegative integer coefficients, leading exponents
    std::map<std::string, QSeries> chars;
    for (const auto& d : module_descriptors()) {
        QSeries ch = module_character(d, t);
        for (const auto& [e, c] : ch.terms()) {
            if (c.get_den() != 1 || c < 0) {
                ok = false;
                why << d.name << " has a non-graded-dimension coefficient " << rat_str(c)
                    << " at q^" << rat_str(exponent_value(e)) << ". ";
                break;
            }
        }
        if (ch.leading_exponent() != lattice_exponent(d.top_weight)) {
            ok = false;
            why << d.name << " leading exponent " << rat_str(exponent_value(ch.leading_exponent()))
                << " != top weight " << rat_str(d.top_weight) << ". ";
        }
        chars.emplace(d.name, std::move(ch));
    }

    // eigenspace sums reassemble the parent characters
    if (ok) {
        QSeries msum = chars.at("M0") + chars.at("M1") + chars.at("M2");
        QSeries mparent = verify_detail::untwisted_parent_m(t + slack);
        mparent.retrunc(msum.trunc());
        if (!agree(msum, mparent)) {
            ok = false;
            why << "M(0)+M(1)+M(2) does not reassemble ch M. ";
        }
        QSeries wsum = chars.at("W0") + chars.at("W1") + chars.at("W2");
        QSeries wparent = verify_detail::untwisted_parent_w(t + slack);
        wparent.retrunc(wsum.trunc());
        if (!agree(wsum, wparent)) {
            ok = false;
            why << "W(0)+W(1)+W(2) does not reassemble ch W_k^0. ";
        }
        QSeries mtsum = chars.at("MT1_0") + chars.at("MT1_1") + chars.at("MT1_2");
        QSeries mtparent = mt.shifted(lattice_exponent(rat(1, 20)));
        mtparent.retrunc(mtsum.trunc());
        if (!agree(mtsum, mtparent)) {
            ok = false;
            why << "M_T eigenspace sum does not reassemble ch M_T(tau). ";
        }
        QSeries wtsum = chars.at("WT1_0") + chars.at("WT1_1") + chars.at("WT1_2");
        QSeries wtparent = wt.shifted(lattice_exponent(rat(1, 20)));
        wtparent.retrunc(wtsum.trunc());
        if (!agree(wtsum, wtparent)) {
            ok = false;
            why << "W_T eigenspace sum does not reassemble ch W_T(tau). ";
        }
    }
    r.pass = ok;
    r.detail = ok ? "determinant identity, both eta-quotient identities, integrality, top "
                    "weights, and eigenspace sums all hold at truncation 20"
                  : why.str();
    return r;
}

// --- criterion 10 --------------------------------------------------------
inline CheckResult check_modular_numeric() {
    CheckResult r{"modular-numeric"};
    std::ostringstream why;
    bool ok = true;
    double worst = 0.0;
    for (int m = 1; m <= 3 && ok; ++m)
        for (Complex z : {Complex(0, 1), Complex(0, 2)}) {
            auto rep = numeric_modular_check(m, z, qunits(60), 1e-6);
            worst = std::max(worst, rep.max_deviation);
            if (!rep.pass) {
                ok = false;
                why << "S-matrix check fails for m=" << m << " at z=" << z.real() << "+"
                    << z.imag() << "i (deviation " << rep.max_deviation << "). ";
            }
        }
    r.pass = ok;
    std::ostringstream det;
    det << "eta and Xi S-transformations hold for m=1,2,3 at z=i and z=2i (max deviation "
        << worst << ")";
    r.detail = ok ? det.str() : why.str();
    return r;
}

inline VerificationReport verify_all() {
    VerificationReport rep;
    const std::vector<std::pair<std::string, std::function<CheckResult()>>> checks = {
        {"basis-count", check_basis_count},
        {"singular-scan", check_singular_scan},
        {"singular-vector-golden", check_singular_vector_golden},
        {"zhu-images-golden", check_zhu_images_golden},
        {"zhu-identities", check_zhu_identities},
        {"spectrum-certification", check_spectrum_certification},
        {"c2-consequences", check_c2_consequences},
        {"character-expansions", check_character_expansions},
        {"character-identities", check_character_identities},
        {"modular-numeric", check_modular_numeric},
    };
    for (const auto& [id, fn] : checks) {
        auto start = std::chrono::steady_clock::now();
        CheckResult res;
        try {
            res = fn();
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.id = id;
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rep.checks.push_back(std::move(res));
    }
    return rep;
}

}  // namespace w3
