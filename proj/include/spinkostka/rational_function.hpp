#pragma once

#include <climits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spinkostka/polynomial.hpp"
#include "spinkostka/rational.hpp"

namespace spinkostka {

namespace gcd_detail {

// Univariate polynomials in q (QP) and polynomials in t with QP
// coefficients (TP).  Zero polynomials are empty maps.
using QP = std::map<int, Rational>;
using TP = std::map<int, QP>;

inline int qp_deg(const QP& p) { return p.empty() ? -1 : p.rbegin()->first; }

inline void qp_add_to(QP& p, int e, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = p.emplace(e, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) p.erase(it);
    }
}

inline QP qp_mul(const QP& a, const QP& b) {
    QP r;
    for (auto& [ea, va] : a)
        for (auto& [eb, vb] : b) qp_add_to(r, ea + eb, va * vb);
    return r;
}

inline QP qp_sub(QP a, const QP& b) {
    for (auto& [e, v] : b) qp_add_to(a, e, -v);
    return a;
}

inline QP qp_scale(QP a, const Rational& s) {
    if (s.is_zero()) return {};
    for (auto& [e, v] : a) v *= s;
    return a;
}

// Pseudo-remainder in Q[q] (a is rescaled by powers of b's leading
// coefficient, which the primitive reduction removes again).
inline QP qp_prem(QP a, const QP& b) {
    if (b.empty()) throw std::domain_error("qp_prem: division by zero");
    const int db = qp_deg(b);
    const Rational lb = b.rbegin()->second;
    while (qp_deg(a) >= db) {
        const int da = qp_deg(a);
        const Rational la = a.rbegin()->second;
        a = qp_scale(std::move(a), lb);
        for (auto& [e, v] : b) qp_add_to(a, e + da - db, -(la * v));
    }
    return a;
}

inline QP qp_divexact(QP a, const QP& b) {
    if (b.empty()) throw std::domain_error("qp_divexact: division by zero");
    const int db = qp_deg(b);
    const Rational lb = b.rbegin()->second;
    QP q;
    while (!a.empty()) {
        const int da = qp_deg(a);
        if (da < db) throw std::domain_error("qp_divexact: not divisible");
        const Rational c = a.rbegin()->second / lb;
        qp_add_to(q, da - db, c);
        for (auto& [e, v] : b) qp_add_to(a, e + da - db, -(c * v));
    }
    return q;
}

// Scales to integer coefficients with content 1 and positive leading
// coefficient.
inline QP qp_primitive(QP a) {
    if (a.empty()) return a;
    mpz_class l = 1;
    for (auto& [e, v] : a) l = lcm(l, v.denominator());
    mpz_class g = 0;
    for (auto& [e, v] : a) g = gcd(g, mpz_class(v.numerator() * (l / v.denominator())));
    Rational scale(l, g);
    if (a.rbegin()->second.sign() < 0) scale = -scale;
    return qp_scale(std::move(a), scale);
}

// Primitive polynomial remainder sequence; avoids the coefficient
// explosion of naive Euclid over Q.
inline QP qp_gcd(QP a, QP b) {
    a = qp_primitive(std::move(a));
    b = qp_primitive(std::move(b));
    if (qp_deg(a) < qp_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        QP r = qp_prem(std::move(a), b);
        a = std::move(b);
        b = qp_primitive(std::move(r));
    }
    return a;
}

inline int tp_deg(const TP& p) { return p.empty() ? -1 : p.rbegin()->first; }

inline void tp_add_to(TP& p, int e, const QP& v) {
    if (v.empty()) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, v);
    } else {
        for (auto& [qe, qv] : v) qp_add_to(it->second, qe, qv);
        if (it->second.empty()) p.erase(it);
    }
}

inline TP tp_mul_qp(const TP& a, const QP& s) {
    TP r;
    for (auto& [e, v] : a) {
        QP prod = qp_mul(v, s);
        if (!prod.empty()) r.emplace(e, std::move(prod));
    }
    return r;
}

// Content of p as a polynomial in t over Q[q].
inline QP tp_content(const TP& p) {
    QP c;
    for (auto& [e, v] : p) c = qp_gcd(std::move(c), v);
    return c;
}

inline TP tp_divide_content(const TP& p, const QP& c) {
    TP r;
    for (auto& [e, v] : p) r.emplace(e, qp_divexact(v, c));
    return r;
}

// Full primitive part: divides out the Q[q]-content and then the overall
// rational scalar, leaving integer coefficients of content 1.  Without
// the scalar step pseudo-remainder sequences blow up exponentially.
inline TP tp_primitive(TP p) {
    if (p.empty()) return p;
    const QP g = tp_content(p);
    p = tp_divide_content(p, g);
    mpz_class l = 1;
    for (auto& [e, v] : p)
        for (auto& [qe, qv] : v) l = lcm(l, qv.denominator());
    mpz_class gg = 0;
    for (auto& [e, v] : p)
        for (auto& [qe, qv] : v)
            gg = gcd(gg, mpz_class(qv.numerator() * (l / qv.denominator())));
    const Rational scale(l, gg);
    for (auto& [e, v] : p)
        for (auto& [qe, qv] : v) qv *= scale;
    return p;
}

// Pseudo-remainder of a by b with respect to t (a gets multiplied by a
// power of b's leading coefficient along the way; the PRS divides
// contents out afterwards so the extra factor is harmless).
inline TP tp_prem(TP a, const TP& b) {
    const int db = tp_deg(b);
    const QP& lb = b.rbegin()->second;
    while (!a.empty() && tp_deg(a) >= db) {
        const int da = tp_deg(a);
        const QP la = a.rbegin()->second;
        TP next = tp_mul_qp(a, lb);
        for (auto& [e, v] : b) {
            QP prod = qp_mul(v, la);
            for (auto& [qe, qv] : prod) qv = -qv;
            tp_add_to(next, e + da - db, prod);
        }
        a = std::move(next);
    }
    return a;
}

inline TP to_nested(const PolyQT& p) {
    TP r;
    for (auto& [e, v] : p.terms()) r[e.t][e.q] = v;
    return r;
}

inline PolyQT from_nested(const TP& p) {
    PolyQT r;
    for (auto& [te, qp] : p)
        for (auto& [qe, v] : qp) r.add_to_coeff({qe, te}, v);
    return r;
}

} // namespace gcd_detail

/// Leading monomial in graded lexicographic order with q ranked above t
/// (the order used throughout for normalization and printing).
inline std::pair<QTExp, Rational> polyqt_lead(const PolyQT& p) {
    if (p.is_zero()) throw std::domain_error("polyqt_lead: zero polynomial");
    const std::pair<const QTExp, Rational>* best = nullptr;
    for (auto& kv : p.terms()) {
        if (!best) { best = &kv; continue; }
        const QTExp &a = kv.first, &b = best->first;
        if (a.total() != b.total() ? a.total() > b.total() : a.q > b.q) best = &kv;
    }
    return {best->first, best->second};
}

/// Scales p in place so its coefficients are integers with overall
/// content 1 and positive leading coefficient; returns the factor c
/// such that p_old = c * p_new.
inline Rational polyqt_make_primitive(PolyQT& p) {
    if (p.is_zero()) return Rational(1);
    mpz_class l = 1;
    for (auto& [e, v] : p.terms()) l = lcm(l, v.denominator());
    mpz_class g = 0;
    for (auto& [e, v] : p.terms()) g = gcd(g, mpz_class(v.numerator() * (l / v.denominator())));
    Rational content(g, l);
    if (polyqt_lead(p).second.sign() < 0) content = -content;
    p *= Rational(1) / content;
    return content;
}

/// Exact quotient in Q[q,t]; throws when b does not divide a.
inline PolyQT polyqt_divide_exact(const PolyQT& a, const PolyQT& b) {
    if (b.is_zero()) throw std::domain_error("polyqt_divide_exact: division by zero");
    PolyQT rem = a, q;
    auto [lbExp, lbC] = polyqt_lead(b);
    while (!rem.is_zero()) {
        auto [le, lc] = polyqt_lead(rem);
        if (le.q < lbExp.q || le.t < lbExp.t)
            throw std::domain_error("polyqt_divide_exact: not divisible");
        QTExp qe{le.q - lbExp.q, le.t - lbExp.t};
        Rational qc = lc / lbC;
        q.add_to_coeff(qe, qc);
        for (auto& [e, v] : b.terms())
            rem.add_to_coeff({e.q + qe.q, e.t + qe.t}, -(qc * v));
    }
    return q;
}

/// Gcd in Q[q,t] via a primitive polynomial remainder sequence in t over
/// Q[q].  Correct for all inputs but slow at larger degrees; used as the
/// fallback behind the evaluation-based gcd below.
inline PolyQT polyqt_gcd_prs(const PolyQT& A, const PolyQT& B) {
    using namespace gcd_detail;
    if (A.is_zero()) { PolyQT g = B; polyqt_make_primitive(g); return g; }
    if (B.is_zero()) { PolyQT g = A; polyqt_make_primitive(g); return g; }
    TP a = to_nested(A), b = to_nested(B);
    const QP ca = tp_content(a), cb = tp_content(b);
    a = tp_primitive(std::move(a));
    b = tp_primitive(std::move(b));
    const QP cg = qp_gcd(ca, cb);
    if (tp_deg(a) < tp_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        TP r = tp_prem(std::move(a), b);
        a = std::move(b);
        b = tp_primitive(std::move(r));
    }
    PolyQT g = from_nested(tp_mul_qp(tp_primitive(std::move(a)), cg));
    polyqt_make_primitive(g);
    return g;
}

/// Exact division attempt; returns false (and leaves q empty) when b
/// does not divide a.
inline bool polyqt_try_divide(const PolyQT& a, const PolyQT& b, PolyQT& q) {
    q = PolyQT();
    if (b.is_zero()) return false;
    if (a.is_zero()) return true;
    PolyQT rem = a;
    auto [lbExp, lbC] = polyqt_lead(b);
    PolyQT quot;
    while (!rem.is_zero()) {
        auto [le, lc] = polyqt_lead(rem);
        if (le.q < lbExp.q || le.t < lbExp.t) return false;
        QTExp qe{le.q - lbExp.q, le.t - lbExp.t};
        Rational qc = lc / lbC;
        quot.add_to_coeff(qe, qc);
        for (auto& [e, v] : b.terms())
            rem.add_to_coeff({e.q + qe.q, e.t + qe.t}, -(qc * v));
    }
    q = std::move(quot);
    return true;
}

namespace gcd_detail {

// Evaluation of the nested representation at q = a.
inline QP tp_eval_q(const TP& p, const Rational& a) {
    QP out;
    for (auto& [te, qp] : p) {
        Rational acc;
        int prev = -1;
        for (auto it = qp.rbegin(); it != qp.rend(); ++it) {
            if (prev >= 0) acc *= a.pow(unsigned(prev - it->first));
            acc += it->second;
            prev = it->first;
        }
        if (prev > 0) acc *= a.pow(unsigned(prev));
        if (!acc.is_zero()) out.emplace(te, acc);
    }
    return out;
}

inline Rational qp_eval(const QP& p, const Rational& a) {
    Rational acc;
    int prev = -1;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        if (prev >= 0) acc *= a.pow(unsigned(prev - it->first));
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0) acc *= a.pow(unsigned(prev));
    return acc;
}

} // namespace gcd_detail

/// Gcd in Q[q,t] by evaluation and interpolation in q: univariate gcds
/// on slices q = a, Newton interpolation of the slice gcds scaled by the
/// gcd of leading coefficients, and a trial-division certificate.  Falls
/// back to the remainder-sequence gcd in degenerate cases.  Result is
/// integer, content 1, positive leading coefficient; gcd(0,0) = 0.
inline PolyQT polyqt_gcd(const PolyQT& A, const PolyQT& B) {
    using namespace gcd_detail;
    if (A.is_zero()) { PolyQT g = B; polyqt_make_primitive(g); return g; }
    if (B.is_zero()) { PolyQT g = A; polyqt_make_primitive(g); return g; }
    if (A == B) { PolyQT g = A; polyqt_make_primitive(g); return g; }

    TP a = to_nested(A), b = to_nested(B);
    const QP ca = tp_content(a), cb = tp_content(b);
    a = tp_primitive(std::move(a));
    b = tp_primitive(std::move(b));
    QP cg = qp_gcd(ca, cb);
    PolyQT content_part = from_nested(TP{{0, cg}});

    if (tp_deg(a) == 0 || tp_deg(b) == 0) {
        // a t-primitive polynomial of t-degree 0 is a unit up to q-content
        polyqt_make_primitive(content_part);
        return content_part;
    }

    const QP gl = qp_gcd(a.rbegin()->second, b.rbegin()->second);
    int max_qdeg_a = 0, max_qdeg_b = 0;
    for (auto& [te, qp] : a) max_qdeg_a = std::max(max_qdeg_a, qp_deg(qp));
    for (auto& [te, qp] : b) max_qdeg_b = std::max(max_qdeg_b, qp_deg(qp));
    const int points_needed = qp_deg(gl) + std::min(max_qdeg_a, max_qdeg_b) + 1;

    std::vector<Rational> xs;
    std::vector<QP> ys;  // slice gcds in t, scaled to leading coeff gl(x)
    int best_deg = INT_MAX;
    long next_point = 0;
    int tried = 0;
    const int hard_cap = 8 * points_needed + 64;
    while (tried < hard_cap) {
        const Rational x(next_point);
        // alternate 0, 1, -1, 2, -2, ...
        next_point = next_point <= 0 ? -next_point + 1 : -next_point;
        ++tried;
        if (qp_eval(a.rbegin()->second, x).is_zero()) continue;
        if (qp_eval(b.rbegin()->second, x).is_zero()) continue;
        QP ga = qp_gcd(tp_eval_q(a, x), tp_eval_q(b, x));
        const int d = qp_deg(ga);
        if (d > best_deg) continue;  // unlucky point
        if (d < best_deg) {
            best_deg = d;
            xs.clear();
            ys.clear();
        }
        if (d == 0) {
            // coprime primitive parts
            polyqt_make_primitive(content_part);
            return content_part;
        }
        // scale the slice so its leading coefficient equals gl(x)
        ga = qp_scale(std::move(ga), qp_eval(gl, x) / ga.rbegin()->second);
        xs.push_back(x);
        ys.push_back(std::move(ga));
        if (int(xs.size()) < points_needed) continue;

        // Newton interpolation, coefficient-wise over the t-exponents
        std::vector<QP> dd = ys;  // divided differences
        for (size_t lvl = 1; lvl < dd.size(); ++lvl)
            for (size_t i = dd.size() - 1; i >= lvl; --i) {
                QP diff = qp_sub(dd[i], dd[i - 1]);
                const Rational span = xs[i] - xs[i - lvl];
                dd[i] = qp_scale(std::move(diff), Rational(1) / span);
                if (i == lvl) break;
            }
        // assemble sum_i dd[i](t) * prod_{j<i} (q - x_j)
        TP acc;        // nested: t -> q-poly
        QP basis_one;  // running product in q
        basis_one.emplace(0, Rational(1));
        QP running = basis_one;
        for (size_t i = 0; i < dd.size(); ++i) {
            if (i > 0) {
                QP factor;
                factor.emplace(1, Rational(1));
                qp_add_to(factor, 0, -xs[i - 1]);
                running = qp_mul(running, factor);
            }
            for (auto& [te, coeff] : dd[i]) {
                QP scaled = qp_scale(running, coeff);
                // swap roles: here "te" is a t-exponent, scaled is in q
                for (auto& [qe, v] : scaled) {
                    auto& dest = acc[te];
                    qp_add_to(dest, qe, v);
                    if (dest.empty()) acc.erase(te);
                }
            }
        }
        // candidate = t-primitive part of the interpolated polynomial
        for (auto it2 = acc.begin(); it2 != acc.end();) {
            if (it2->second.empty()) it2 = acc.erase(it2); else ++it2;
        }
        if (acc.empty()) continue;
        PolyQT cand = from_nested(tp_primitive(std::move(acc)));
        polyqt_make_primitive(cand);
        PolyQT qa, qb;
        if (polyqt_try_divide(from_nested(a), cand, qa) &&
            polyqt_try_divide(from_nested(b), cand, qb)) {
            PolyQT g = cand * content_part;
            polyqt_make_primitive(g);
            return g;
        }
        // interpolation failed (degree bound too small in practice);
        // drop the oldest point and keep sampling
        xs.erase(xs.begin());
        ys.erase(ys.begin());
    }
    return polyqt_gcd_prs(A, B);
}

/// Rational function in q and t, kept in a unique normal form: numerator
/// and denominator coprime, denominator an integer polynomial with
/// content 1 and positive leading coefficient (graded lex, q above t).
/// Equality is therefore structural.
class RatQT {
public:
    RatQT() : num_(), den_(1) {}
    RatQT(long n) : num_(n), den_(1) {}
    RatQT(const Rational& r) : num_(r), den_(1) {}
    RatQT(const PolyT& p) : num_(p), den_(1) {}
    RatQT(const PolyQT& p) : num_(p), den_(1) {}
    RatQT(PolyQT num, PolyQT den) : num_(std::move(num)), den_(std::move(den)) {
        normalize(false);
    }

    const PolyQT& num() const { return num_; }
    const PolyQT& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == PolyQT(1); }

    PolyQT to_polyqt() const {
        if (!is_polynomial())
            throw std::domain_error("RatQT: denominator did not clear: " + str());
        return num_;
    }
    PolyT to_poly_t() const { return to_polyqt().to_poly_t(); }

    RatQT invert() const {
        if (is_zero()) throw std::domain_error("RatQT: division by zero");
        RatQT r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize(true);
        return r;
    }

    friend RatQT operator+(const RatQT& a, const RatQT& b) {
        RatQT r;
        if (a.den_ == b.den_) {
            r.num_ = a.num_ + b.num_;
            r.den_ = a.den_;
            r.normalize(false);
        } else if (a.is_polynomial() || b.is_polynomial()) {
            // num = a.num*b.den + b.num*a.den is congruent to the
            // non-polynomial side's numerator modulo the denominator, so
            // the fraction is already reduced
            r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            r.den_ = a.den_ * b.den_;
            r.normalize(true);
        } else {
            r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            r.den_ = a.den_ * b.den_;
            r.normalize(false);
        }
        return r;
    }
    friend RatQT operator-(const RatQT& a, const RatQT& b) { return a + (-b); }
    RatQT operator-() const {
        RatQT r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatQT operator*(const RatQT& a, const RatQT& b) {
        // cross-reduction keeps intermediate gcds small and the result
        // is already reduced when the inputs are
        RatQT r;
        PolyQT g1 = polyqt_gcd(a.num_, b.den_);
        PolyQT g2 = polyqt_gcd(b.num_, a.den_);
        r.num_ = polyqt_divide_exact(a.num_, g1) * polyqt_divide_exact(b.num_, g2);
        r.den_ = polyqt_divide_exact(a.den_, g2) * polyqt_divide_exact(b.den_, g1);
        r.normalize(true);
        return r;
    }
    friend RatQT operator/(const RatQT& a, const RatQT& b) { return a * b.invert(); }

    RatQT& operator+=(const RatQT& o) { return *this = *this + o; }
    RatQT& operator-=(const RatQT& o) { return *this = *this - o; }
    RatQT& operator*=(const RatQT& o) { return *this = *this * o; }
    RatQT& operator/=(const RatQT& o) { return *this = *this / o; }

    RatQT& operator*=(const Rational& s) {
        if (s.is_zero()) { num_ = PolyQT(); den_ = PolyQT(1); return *this; }
        num_ *= s;
        return *this;
    }
    friend RatQT operator*(RatQT a, const Rational& s) { return a *= s; }
    friend RatQT operator*(const Rational& s, RatQT a) { return a *= s; }

    friend bool operator==(const RatQT& a, const RatQT& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatQT& a, const RatQT& b) { return !(a == b); }

    /// q := value; denominator must stay nonzero.
    RatQT specialize_q(const Rational& qv) const {
        PolyQT d(den_.specialize_q(qv));
        if (d.is_zero()) throw std::domain_error("RatQT: pole at q=" + qv.str());
        return RatQT(PolyQT(num_.specialize_q(qv)), d);
    }

    Rational evaluate(const Rational& qv, const Rational& tv) const {
        Rational d = den_.evaluate(qv, tv);
        if (d.is_zero()) throw std::domain_error("RatQT: pole at evaluation point");
        return num_.evaluate(qv, tv) / d;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void normalize(bool assume_reduced) {
        if (den_.is_zero()) throw std::domain_error("RatQT: zero denominator");
        if (num_.is_zero()) { den_ = PolyQT(1); return; }
        if (!assume_reduced && polyqt_lead(den_).first != QTExp{0, 0}) {
            PolyQT g = polyqt_gcd(num_, den_);
            num_ = polyqt_divide_exact(num_, g);
            den_ = polyqt_divide_exact(den_, g);
        }
        Rational c = polyqt_make_primitive(den_);
        num_ *= Rational(1) / c;
    }

    PolyQT num_, den_;
};

} // namespace spinkostka
