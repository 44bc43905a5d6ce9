#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spinkostka/rational.hpp"

namespace spinkostka {

namespace detail {

// Shared term formatting.  `var` is the printed monomial ("", "t", "t^3",
// "q*t^2", ...).  `sep_ascii` selects "2*t" vs latex-style "2t".
inline void append_term(std::string& out, const Rational& coeff,
                        const std::string& var, bool ascii) {
    const bool neg = coeff.sign() < 0;
    const Rational mag = coeff.abs();
    if (out.empty()) {
        if (neg) out += '-';
    } else {
        out += neg ? '-' : '+';
    }
    if (var.empty()) {
        out += mag.str();
    } else if (mag.is_one()) {
        out += var;
    } else {
        out += mag.str();
        if (ascii) out += '*';
        out += var;
    }
}

inline std::string power_str(const std::string& var, int e, bool ascii) {
    if (e == 0) return "";
    if (e == 1) return var;
    if (ascii || (e >= 0 && e <= 9)) return var + "^" + std::to_string(e);
    return var + "^{" + std::to_string(e) + "}";
}

} // namespace detail

/// Sparse univariate polynomial in t with exact rational coefficients.
/// Zero coefficients are never stored.
class PolyT {
public:
    PolyT() = default;
    PolyT(long n) { if (n != 0) c_[0] = Rational(n); }
    PolyT(const Rational& r) { if (!r.is_zero()) c_[0] = r; }

    /// c * t^e
    static PolyT term(const Rational& c, int e) {
        if (e < 0) throw std::domain_error("PolyT: negative exponent");
        PolyT p;
        if (!c.is_zero()) p.c_[e] = c;
        return p;
    }
    static PolyT t(int e = 1) { return term(Rational(1), e); }

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1 by convention.
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    int low_degree() const { return c_.empty() ? -1 : c_.begin()->first; }
    Rational coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rational() : it->second;
    }
    Rational leading_coeff() const { return c_.empty() ? Rational() : c_.rbegin()->second; }
    const std::map<int, Rational>& terms() const { return c_; }

    void set_coeff(int e, const Rational& v) {
        if (e < 0) throw std::domain_error("PolyT: negative exponent");
        if (v.is_zero()) c_.erase(e); else c_[e] = v;
    }
    void add_to_coeff(int e, const Rational& v) {
        if (v.is_zero()) return;
        if (e < 0) throw std::domain_error("PolyT: negative exponent");
        auto [it, fresh] = c_.emplace(e, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    PolyT& operator+=(const PolyT& o) {
        for (auto& [e, v] : o.c_) add_to_coeff(e, v);
        return *this;
    }
    PolyT& operator-=(const PolyT& o) {
        for (auto& [e, v] : o.c_) add_to_coeff(e, -v);
        return *this;
    }
    friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
    friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
    PolyT operator-() const {
        PolyT r;
        for (auto& [e, v] : c_) r.c_[e] = -v;
        return r;
    }

    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        PolyT r;
        for (auto& [ea, va] : a.c_)
            for (auto& [eb, vb] : b.c_) r.add_to_coeff(ea + eb, va * vb);
        return r;
    }
    PolyT& operator*=(const PolyT& o) { return *this = *this * o; }
    PolyT& operator*=(const Rational& s) {
        if (s.is_zero()) { c_.clear(); return *this; }
        for (auto& [e, v] : c_) v *= s;
        return *this;
    }
    friend PolyT operator*(PolyT a, const Rational& s) { return a *= s; }
    friend PolyT operator*(const Rational& s, PolyT a) { return a *= s; }

    PolyT pow(unsigned e) const {
        PolyT r(1), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    friend bool operator==(const PolyT& a, const PolyT& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

    Rational evaluate(const Rational& x) const {
        // Horner over the sparse support, exponentiating across gaps
        Rational acc;
        int prev = -1;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (prev >= 0) acc *= x.pow(unsigned(prev - it->first));
            acc += it->second;
            prev = it->first;
        }
        if (prev > 0) acc *= x.pow(unsigned(prev));
        return acc;
    }

    /// Exact quotient; throws when the division leaves a remainder.
    PolyT exact_divide(const PolyT& d) const {
        if (d.is_zero()) throw std::domain_error("PolyT: division by zero");
        PolyT rem = *this, q;
        const int dd = d.degree();
        const Rational dl = d.leading_coeff();
        while (!rem.is_zero()) {
            int rd = rem.degree();
            if (rd < dd) throw std::domain_error("PolyT: not divisible");
            Rational c = rem.leading_coeff() / dl;
            q.add_to_coeff(rd - dd, c);
            for (auto& [e, v] : d.c_) rem.add_to_coeff(e + rd - dd, -(c * v));
        }
        return q;
    }

    /// t -> 1/t followed by multiplication with t^shift.  Requires
    /// shift >= degree so that the result is again a polynomial.
    PolyT reverse_with_shift(int shift) const {
        PolyT r;
        for (auto& [e, v] : c_) {
            if (shift - e < 0)
                throw std::domain_error("PolyT: shift too small to clear t^{-" +
                                        std::to_string(e) + "}");
            r.c_[shift - e] = v;
        }
        return r;
    }

    bool is_integral() const {
        return std::all_of(c_.begin(), c_.end(),
                           [](auto& kv) { return kv.second.is_integer(); });
    }
    bool is_nonneg_integral() const {
        return std::all_of(c_.begin(), c_.end(), [](auto& kv) {
            return kv.second.is_integer() && kv.second.sign() > 0;
        });
    }

    /// True iff coefficients read the same from both ends of the support,
    /// i.e. t^(low+deg) * p(1/t) == p(t).
    bool is_palindromic() const {
        if (is_zero()) return true;
        return reverse_with_shift(degree() + low_degree()) == *this;
    }

    std::string str() const { return render(true); }
    std::string latex() const { return render(false); }

private:
    std::string render(bool ascii) const {
        if (c_.empty()) return "0";
        std::string out;
        for (auto& [e, v] : c_)
            detail::append_term(out, v, detail::power_str("t", e, ascii), ascii);
        return out;
    }

    std::map<int, Rational> c_;
};

/// Exponent pair of a q^a t^b monomial.
struct QTExp {
    int q = 0, t = 0;
    auto operator<=>(const QTExp&) const = default;
    int total() const { return q + t; }
};

/// Sparse bivariate polynomial in q and t over the rationals.
class PolyQT {
public:
    PolyQT() = default;
    PolyQT(long n) { if (n != 0) c_[{0, 0}] = Rational(n); }
    PolyQT(const Rational& r) { if (!r.is_zero()) c_[{0, 0}] = r; }
    explicit PolyQT(const PolyT& p) {
        for (auto& [e, v] : p.terms()) c_[{0, e}] = v;
    }

    static PolyQT term(const Rational& c, int qe, int te) {
        if (qe < 0 || te < 0) throw std::domain_error("PolyQT: negative exponent");
        PolyQT p;
        if (!c.is_zero()) p.c_[{qe, te}] = c;
        return p;
    }
    static PolyQT q(int e = 1) { return term(Rational(1), e, 0); }
    static PolyQT t(int e = 1) { return term(Rational(1), 0, e); }

    bool is_zero() const { return c_.empty(); }
    const std::map<QTExp, Rational>& terms() const { return c_; }
    Rational coeff(int qe, int te) const {
        auto it = c_.find({qe, te});
        return it == c_.end() ? Rational() : it->second;
    }
    int degree_q() const {
        int d = -1;
        for (auto& [e, v] : c_) d = std::max(d, e.q);
        return d;
    }
    int degree_t() const {
        int d = -1;
        for (auto& [e, v] : c_) d = std::max(d, e.t);
        return d;
    }

    void add_to_coeff(QTExp e, const Rational& v) {
        if (v.is_zero()) return;
        if (e.q < 0 || e.t < 0) throw std::domain_error("PolyQT: negative exponent");
        auto [it, fresh] = c_.emplace(e, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    PolyQT& operator+=(const PolyQT& o) {
        for (auto& [e, v] : o.c_) add_to_coeff(e, v);
        return *this;
    }
    PolyQT& operator-=(const PolyQT& o) {
        for (auto& [e, v] : o.c_) add_to_coeff(e, -v);
        return *this;
    }
    friend PolyQT operator+(PolyQT a, const PolyQT& b) { return a += b; }
    friend PolyQT operator-(PolyQT a, const PolyQT& b) { return a -= b; }
    PolyQT operator-() const {
        PolyQT r;
        for (auto& [e, v] : c_) r.c_[e] = -v;
        return r;
    }

    friend PolyQT operator*(const PolyQT& a, const PolyQT& b) {
        PolyQT r;
        for (auto& [ea, va] : a.c_)
            for (auto& [eb, vb] : b.c_)
                r.add_to_coeff({ea.q + eb.q, ea.t + eb.t}, va * vb);
        return r;
    }
    PolyQT& operator*=(const PolyQT& o) { return *this = *this * o; }
    PolyQT& operator*=(const Rational& s) {
        if (s.is_zero()) { c_.clear(); return *this; }
        for (auto& [e, v] : c_) v *= s;
        return *this;
    }
    friend PolyQT operator*(PolyQT a, const Rational& s) { return a *= s; }
    friend PolyQT operator*(const Rational& s, PolyQT a) { return a *= s; }

    PolyQT pow(unsigned e) const {
        PolyQT r(1), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    friend bool operator==(const PolyQT& a, const PolyQT& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyQT& a, const PolyQT& b) { return !(a == b); }

    Rational evaluate(const Rational& qv, const Rational& tv) const {
        Rational acc;
        for (auto& [e, v] : c_) acc += v * qv.pow(unsigned(e.q)) * tv.pow(unsigned(e.t));
        return acc;
    }

    /// q := value, leaving a polynomial in t alone.
    PolyT specialize_q(const Rational& qv) const {
        PolyT r;
        for (auto& [e, v] : c_) r.add_to_coeff(e.t, v * qv.pow(unsigned(e.q)));
        return r;
    }

    /// q := t (used for collapsing the two-parameter family).
    PolyT substitute_q_to_t() const {
        PolyT r;
        for (auto& [e, v] : c_) r.add_to_coeff(e.q + e.t, v);
        return r;
    }

    /// True when no q appears.
    bool is_t_only() const {
        return std::all_of(c_.begin(), c_.end(), [](auto& kv) { return kv.first.q == 0; });
    }
    /// Exact view as a polynomial in t; throws if q occurs.
    PolyT to_poly_t() const {
        PolyT r;
        for (auto& [e, v] : c_) {
            if (e.q != 0) throw std::domain_error("PolyQT: q present, not a t-polynomial");
            r.add_to_coeff(e.t, v);
        }
        return r;
    }

    /// t -> 1/t followed by multiplication with t^shift (q untouched).
    PolyQT t_reverse_with_shift(int shift) const {
        PolyQT r;
        for (auto& [e, v] : c_) {
            if (shift - e.t < 0)
                throw std::domain_error("PolyQT: shift too small to clear t^{-" +
                                        std::to_string(e.t) + "}");
            r.c_[{e.q, shift - e.t}] = v;
        }
        return r;
    }

    bool is_integral() const {
        return std::all_of(c_.begin(), c_.end(),
                           [](auto& kv) { return kv.second.is_integer(); });
    }
    bool is_nonneg_integral() const {
        return std::all_of(c_.begin(), c_.end(), [](auto& kv) {
            return kv.second.is_integer() && kv.second.sign() > 0;
        });
    }

    std::string str() const { return render(true); }
    std::string latex() const { return render(false); }

private:
    // Print order: ascending total degree, then descending q-exponent,
    // so q-heavy monomials come before t-heavy ones of the same degree.
    std::string render(bool ascii) const {
        if (c_.empty()) return "0";
        std::vector<std::pair<QTExp, Rational>> v(c_.begin(), c_.end());
        std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
            if (a.first.total() != b.first.total()) return a.first.total() < b.first.total();
            return a.first.q > b.first.q;
        });
        std::string out;
        for (auto& [e, c] : v) {
            std::string var = detail::power_str("q", e.q, ascii);
            std::string tp = detail::power_str("t", e.t, ascii);
            if (!var.empty() && !tp.empty() && ascii) var += '*';
            var += tp;
            detail::append_term(out, c, var, ascii);
        }
        return out;
    }

    std::map<QTExp, Rational> c_;
};

} // namespace spinkostka
