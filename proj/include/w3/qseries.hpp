#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "w3/rational.hpp"

namespace w3 {

// Exponent lattice for every series in the project: all exponents are
// integer multiples of 1/720. 720 is the lcm of the denominators that
// occur: the eta and minimal-model prefactors (24, 48, 240, 72, 30) and the
// twisted-sector weights (9, 45, 20, 180).
inline constexpr long kQDen = 720;

inline long lattice_exponent(const Rat& e) {
    Rat scaled = e * kQDen;
    if (scaled.get_den() != 1)
        throw std::domain_error("exponent " + rat_str(e) + " is off the 1/720 lattice");
    if (!scaled.get_num().fits_slong_p())
        throw std::domain_error("exponent out of range");
    return scaled.get_num().get_si();
}

inline Rat exponent_value(long num) { return rat(num, kQDen); }

inline long qunits(long n) { return n * kQDen; }

// Truncated series in q^(1/720) with exact rational coefficients.
// Coefficients at exponents < trunc/720 are trusted; nothing at or beyond
// the bound is ever stored or reported.
class QSeries {
public:
    using Terms = std::map<long, Rat>;

    QSeries() = default;
    explicit QSeries(long trunc) : trunc_(trunc) {}

    static QSeries zero(long trunc) { return QSeries(trunc); }
    static QSeries one(long trunc) { return q_power(0, trunc); }
    static QSeries q_power(long e, long trunc) {
        QSeries s(trunc);
        s.add_term(e, Rat(1));
        return s;
    }
    static QSeries constant(const Rat& c, long trunc) {
        QSeries s(trunc);
        s.add_term(0, c);
        return s;
    }

    long trunc() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    // Leading exponent; for the zero series the truncation bound (the series
    // is 0 at least up to there).
    long leading_exponent() const { return terms_.empty() ? trunc_ : terms_.begin()->first; }

    Rat coefficient(long e) const {
        if (e >= trunc_)
            throw std::out_of_range("coefficient at exponent " + std::to_string(e) +
                                    " beyond truncation " + std::to_string(trunc_));
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Rat coefficient_q(const Rat& e) const { return coefficient(lattice_exponent(e)); }

    void add_term(long e, const Rat& c) {
        if (e >= trunc_ || c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    QSeries& add(const QSeries& o, const Rat& scale = Rat(1)) {
        retrunc(std::min(trunc_, o.trunc_));
        if (scale != 0)
            for (const auto& [e, c] : o.terms_) add_term(e, c * scale);
        return *this;
    }

    QSeries operator+(const QSeries& o) const { return QSeries(*this).add(o); }
    QSeries operator-(const QSeries& o) const { return QSeries(*this).add(o, Rat(-1)); }

    QSeries& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    // Truncation of a product: min(T1 + lead2, T2 + lead1).
    QSeries operator*(const QSeries& o) const {
        QSeries r(std::min(trunc_ + o.leading_exponent(), o.trunc_ + leading_exponent()));
        for (const auto& [ea, ca] : terms_) {
            if (ea + o.leading_exponent() >= r.trunc_) break;
            for (const auto& [eb, cb] : o.terms_) {
                if (ea + eb >= r.trunc_) break;
                r.add_term(ea + eb, ca * cb);
            }
        }
        return r;
    }

    // Multiply by q^e.
    QSeries shifted(long e) const {
        QSeries r(trunc_ + e);
        for (const auto& [ee, c] : terms_) r.terms_[ee + e] = c;
        return r;
    }

    // Multiplicative inverse; requires a nonzero series. The inverse of a
    // series trusted on [lead, T) is trusted on [-lead, T - 2*lead).
    QSeries inverse() const {
        if (terms_.empty()) throw std::domain_error("inverse of a zero series");
        const long lead = leading_exponent();
        const Rat c0 = terms_.begin()->second;
        const long out_trunc = trunc_ - 2 * lead;
        QSeries b(out_trunc);
        b.add_term(-lead, Rat(1) / c0);
        // residual 1 - a*b, maintained below trunc_ - lead
        QSeries r(trunc_ - lead);
        r.add_term(0, Rat(1));
        {
            QSeries ab = (*this) * b;
            r.add(ab, Rat(-1));
            r.retrunc(trunc_ - lead);
        }
        while (!r.terms_.empty()) {
            const auto [e, re] = *r.terms_.begin();
            const Rat f = re / c0;
            b.add_term(e - lead, f);
            for (const auto& [ea, ca] : terms_) {
                long ee = ea + e - lead;
                if (ee >= r.trunc_) break;
                r.add_term(ee, -f * ca);
            }
        }
        return b;
    }

    // Tighten the truncation bound (dropping now-untrusted terms).
    void retrunc(long t) {
        if (t >= trunc_) return;
        trunc_ = t;
        terms_.erase(terms_.lower_bound(t), terms_.end());
    }

    bool operator==(const QSeries& o) const { return trunc_ == o.trunc_ && terms_ == o.terms_; }

    // Equality of coefficients on the common trusted window.
    friend bool agree(const QSeries& a, const QSeries& b) {
        long t = std::min(a.trunc_, b.trunc_);
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (true) {
            bool done_a = (ia == a.terms_.end() || ia->first >= t);
            bool done_b = (ib == b.terms_.end() || ib->first >= t);
            if (done_a && done_b) return true;
            if (done_a != done_b) return false;
            if (ia->first != ib->first || ia->second != ib->second) return false;
            ++ia;
            ++ib;
        }
    }

    std::string str(std::size_t max_terms = 12) const {
        if (terms_.empty()) return "0 + O(q^" + rat_str(exponent_value(trunc_)) + ")";
        std::string s;
        std::size_t n = 0;
        for (const auto& [e, c] : terms_) {
            if (n++ >= max_terms) {
                s += " + ...";
                break;
            }
            if (!s.empty()) s += " + ";
            s += "(" + rat_str(c) + ")q^(" + rat_str(exponent_value(e)) + ")";
        }
        return s + " + O(q^" + rat_str(exponent_value(trunc_)) + ")";
    }

private:
    Terms terms_;
    long trunc_ = 0;
};

}  // namespace w3
