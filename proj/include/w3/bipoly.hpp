#pragma once

#include <map>
#include <string>
#include <utility>

#include "w3/rational.hpp"

namespace w3 {

// Exact bivariate polynomial in x and y; zero coefficients never stored.
class BiPoly {
public:
    using Key = std::pair<int, int>;  // (deg_x, deg_y)
    using Terms = std::map<Key, Rat>;

    BiPoly() = default;
    explicit BiPoly(Rat c) {
        if (c != 0) terms_[{0, 0}] = std::move(c);
    }

    static BiPoly monomial(int dx, int dy, Rat c = Rat(1)) {
        BiPoly p;
        if (c != 0) p.terms_[{dx, dy}] = std::move(c);
        return p;
    }
    static BiPoly x() { return monomial(1, 0); }
    static BiPoly y() { return monomial(0, 1); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    Rat coefficient(int dx, int dy) const {
        auto it = terms_.find({dx, dy});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(int dx, int dy, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(Key{dx, dy}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BiPoly& add(const BiPoly& o, const Rat& scale = Rat(1)) {
        if (scale == 0) return *this;
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c * scale);
        return *this;
    }

    BiPoly operator+(const BiPoly& o) const { return BiPoly(*this).add(o); }
    BiPoly operator-(const BiPoly& o) const { return BiPoly(*this).add(o, Rat(-1)); }

    BiPoly operator*(const BiPoly& o) const {
        BiPoly r;
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : o.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

    BiPoly& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    // Multiply by x^dx y^dy.
    BiPoly shifted(int dx, int dy) const {
        BiPoly r;
        for (const auto& [k, c] : terms_) r.terms_[{k.first + dx, k.second + dy}] = c;
        return r;
    }

    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

    int total_degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
        return d;
    }

    // Exact evaluation at x in Q, y in Q(sqrt(-3)).
    QuadRat evaluate(const Rat& xv, const QuadRat& yv) const {
        QuadRat acc;
        for (const auto& [k, c] : terms_) {
            QuadRat t{c, Rat(0)};
            Rat xp(1);
            for (int i = 0; i < k.first; ++i) xp *= xv;
            t = t * QuadRat{xp, Rat(0)};
            for (int i = 0; i < k.second; ++i) t = t * yv;
            acc = acc + t;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            if (!s.empty()) s += " + ";
            s += "(" + rat_str(c) + ")";
            if (k.first) s += "*x" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
            if (k.second) s += "*y" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
        }
        return s;
    }

private:
    Terms terms_;
};

}  // namespace w3
