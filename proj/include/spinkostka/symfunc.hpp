#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spinkostka/partition.hpp"
#include "spinkostka/polynomial.hpp"
#include "spinkostka/rational.hpp"
#include "spinkostka/rational_function.hpp"
#include "spinkostka/tableaux.hpp"

namespace spinkostka {

enum class Basis { Monomial, Elementary, Complete, PowerSum, Schur };

inline char basis_letter(Basis b) {
    switch (b) {
        case Basis::Monomial: return 'm';
        case Basis::Elementary: return 'e';
        case Basis::Complete: return 'h';
        case Basis::PowerSum: return 'p';
        case Basis::Schur: return 's';
    }
    throw std::invalid_argument("basis_letter: unknown basis");
}

inline Basis basis_from_letter(char c) {
    switch (c) {
        case 'm': return Basis::Monomial;
        case 'e': return Basis::Elementary;
        case 'h': return Basis::Complete;
        case 'p': return Basis::PowerSum;
        case 's': return Basis::Schur;
    }
    throw std::invalid_argument(std::string("basis_from_letter: '") + c + "'");
}

/// Irreducible symmetric group character chi^lambda evaluated on the
/// class of cycle type rho, by border-strip removal on beta-numbers.
inline long long symmetric_group_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw std::invalid_argument("character: size mismatch");
    std::function<long long(std::vector<int>, const std::vector<int>&, size_t)> rec =
        [&](std::vector<int> beta, const std::vector<int>& cycles, size_t ci) -> long long {
        if (ci == cycles.size()) return 1;
        const int r = cycles[ci];
        long long total = 0;
        for (size_t i = 0; i < beta.size(); ++i) {
            const int b = beta[i];
            if (b < r) continue;
            const int nb = b - r;
            bool occupied = false;
            int crossings = 0;
            for (size_t j = 0; j < beta.size(); ++j) {
                if (beta[j] == nb) { occupied = true; break; }
                if (beta[j] > nb && beta[j] < b) ++crossings;
            }
            if (occupied) continue;
            std::vector<int> nbeta = beta;
            nbeta[i] = nb;
            const long long sub = rec(std::move(nbeta), cycles, ci + 1);
            total += (crossings % 2 == 0) ? sub : -sub;
        }
        return total;
    };
    const int m = std::max(lambda.length(), 1);
    std::vector<int> beta;
    for (int i = 1; i <= m; ++i) beta.push_back(lambda.part(i) + m - i);
    return rec(std::move(beta), rho.parts(), 0);
}

using Mat = std::vector<std::vector<Rational>>;

inline Mat mat_identity(size_t k) {
    Mat m(k, std::vector<Rational>(k));
    for (size_t i = 0; i < k; ++i) m[i][i] = Rational(1);
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    const size_t n = a.size(), k = b.empty() ? 0 : b[0].size();
    Mat r(n, std::vector<Rational>(k));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < a[i].size(); ++j) {
            if (a[i][j].is_zero()) continue;
            for (size_t l = 0; l < k; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

inline Mat mat_inverse(Mat a) {
    const size_t n = a.size();
    Mat inv = mat_identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("mat_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rational d = a[col][col];
        for (size_t j = 0; j < n; ++j) { a[col][j] /= d; inv[col][j] /= d; }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            const Rational f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

/// Transition matrix T with  from_alpha = sum_beta T[alpha][beta] to_beta,
/// rows and columns in canonical partition order for the degree.
/// Memoized; safe for concurrent use.
inline const Mat& transition(int degree, Basis from, Basis to) {
    static std::map<std::tuple<int, Basis, Basis>, Mat> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    std::function<const Mat&(int, Basis, Basis)> get = [&](int n, Basis f, Basis t) -> const Mat& {
        auto key = std::make_tuple(n, f, t);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;

        const auto& parts = partitions_of(n);
        const size_t k = parts.size();
        Mat m;
        if (f == t) {
            m = mat_identity(k);
        } else if (f == Basis::Schur && t == Basis::Monomial) {
            m.assign(k, std::vector<Rational>(k));
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j)
                    m[i][j] = Rational(long(count_ssyt(parts[i], parts[j])));
        } else if (f == Basis::PowerSum && t == Basis::Schur) {
            m.assign(k, std::vector<Rational>(k));
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j)
                    m[i][j] = Rational(symmetric_group_character(parts[j], parts[i]));
        } else if (f == Basis::Complete && t == Basis::Schur) {
            m.assign(k, std::vector<Rational>(k));
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j)
                    m[i][j] = Rational(long(count_ssyt(parts[j], parts[i])));
        } else if (f == Basis::Elementary && t == Basis::Schur) {
            m.assign(k, std::vector<Rational>(k));
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j)
                    m[i][j] = Rational(long(count_ssyt(parts[j].conjugate(), parts[i])));
        } else if (t == Basis::Schur) {
            m = mat_inverse(get(n, Basis::Schur, f));
        } else if (f == Basis::Schur) {
            m = mat_inverse(get(n, t, Basis::Schur));
        } else {
            m = mat_mul(get(n, f, Basis::Schur), get(n, Basis::Schur, t));
        }
        return cache.emplace(std::move(key), std::move(m)).first->second;
    };
    return get(degree, from, to);
}

/// Homogeneous symmetric function of fixed degree: a basis tag plus a
/// sparse coefficient map over partitions of the degree.  C is the
/// coefficient ring (Rational, PolyT, PolyQT or RatQT).
template <class C>
struct SymFunc {
    int degree = 0;
    Basis basis = Basis::Monomial;
    std::map<Partition, C> coeffs;

    SymFunc() = default;
    SymFunc(int deg, Basis b) : degree(deg), basis(b) {}

    static SymFunc generator(Basis b, const Partition& index) {
        SymFunc f(index.size(), b);
        f.coeffs.emplace(index, C(1));
        return f;
    }

    bool is_zero() const { return coeffs.empty(); }

    C coeff(const Partition& p) const {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? C() : it->second;
    }

    void add_to(const Partition& p, const C& v) {
        if (v.is_zero()) return;
        if (p.size() != degree)
            throw std::invalid_argument("SymFunc: partition of wrong degree");
        auto [it, fresh] = coeffs.emplace(p, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }

    SymFunc& operator+=(const SymFunc& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) { *this = o; return *this; }
        if (degree != o.degree || basis != o.basis)
            throw std::invalid_argument("SymFunc: degree/basis mismatch in sum");
        for (auto& [p, v] : o.coeffs) add_to(p, v);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& o) { return *this += -o; }
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    SymFunc operator-() const {
        SymFunc r(degree, basis);
        for (auto& [p, v] : coeffs) r.coeffs.emplace(p, C() - v);
        return r;
    }

    template <class S>
    SymFunc& scale(const S& s) {
        std::map<Partition, C> next;
        for (auto& [p, v] : coeffs) {
            C w = v * s;
            if (!w.is_zero()) next.emplace(p, std::move(w));
        }
        coeffs = std::move(next);
        return *this;
    }

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.degree == b.degree && a.basis == b.basis && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    /// "c1*b[..] + c2*b[..]" in canonical partition order; coefficients
    /// containing + or - are parenthesized.
    std::string str() const {
        if (coeffs.empty()) return "0";
        std::string out;
        for (auto& p : partitions_of(degree)) {
            auto it = coeffs.find(p);
            if (it == coeffs.end()) continue;
            std::string cs = it->second.str();
            // the empty partition indexes the unit of every basis
            const std::string elem =
                p.empty() ? "" : basis_letter(basis) + p.str();
            bool negated = false;
            if (cs.size() > 1 && cs[0] == '-' &&
                cs.find('+', 1) == std::string::npos &&
                cs.find('-', 1) == std::string::npos) {
                negated = true;
                cs = cs.substr(1);
            }
            if (!out.empty()) out += negated ? " - " : " + ";
            else if (negated) out += "-";
            if (elem.empty()) {
                out += cs;
            } else if (cs == "1") {
                out += elem;
            } else if (cs.find('+') != std::string::npos ||
                       cs.find('-') != std::string::npos) {
                out += "(" + cs + ")*" + elem;
            } else {
                out += cs + "*" + elem;
            }
        }
        return out;
    }
};

template <class C>
SymFunc<C> to_basis(const SymFunc<C>& f, Basis target) {
    if (f.basis == target) return f;
    SymFunc<C> r(f.degree, target);
    const Mat& T = transition(f.degree, f.basis, target);
    const auto& parts = partitions_of(f.degree);
    for (auto& [p, v] : f.coeffs) {
        const auto& row = T[size_t(canonical_index(p))];
        for (size_t j = 0; j < parts.size(); ++j)
            if (!row[j].is_zero()) r.add_to(parts[j], v * row[j]);
    }
    return r;
}

/// Coefficient-type conversion, e.g. Rational -> PolyT.
template <class To, class From, class F>
SymFunc<To> map_coeffs(const SymFunc<From>& f, F&& fn) {
    SymFunc<To> r(f.degree, f.basis);
    for (auto& [p, v] : f.coeffs) {
        To w = fn(v);
        if (!w.is_zero()) r.coeffs.emplace(p, std::move(w));
    }
    return r;
}

/// Product computed through the power-sum basis (p_a p_b = p_{a u b});
/// result is returned in the p basis.
template <class C>
SymFunc<C> mul(const SymFunc<C>& a, const SymFunc<C>& b) {
    SymFunc<C> ap = to_basis(a, Basis::PowerSum);
    SymFunc<C> bp = to_basis(b, Basis::PowerSum);
    SymFunc<C> r(a.degree + b.degree, Basis::PowerSum);
    for (auto& [pa, va] : ap.coeffs)
        for (auto& [pb, vb] : bp.coeffs) r.add_to(union_parts(pa, pb), va * vb);
    return r;
}

/// Bilinear form with diagonal power-sum weights: <p_a, p_b> =
/// delta_ab * weight(a).  The standard inner product has weight z_a.
template <class C>
C inner_product_weighted(const SymFunc<C>& f, const SymFunc<C>& g,
                         const std::function<C(const Partition&)>& weight) {
    if (f.degree != g.degree)
        throw std::invalid_argument("inner_product: degree mismatch");
    SymFunc<C> fp = to_basis(f, Basis::PowerSum);
    SymFunc<C> gp = to_basis(g, Basis::PowerSum);
    C acc;
    for (auto& [p, v] : fp.coeffs) {
        auto it = gp.coeffs.find(p);
        if (it != gp.coeffs.end()) acc += v * it->second * weight(p);
    }
    return acc;
}

/// Standard inner product: Schur functions orthonormal, <p_a,p_b> = z_a delta.
template <class C>
C inner_product(const SymFunc<C>& f, const SymFunc<C>& g) {
    return inner_product_weighted<C>(f, g, [](const Partition& p) {
        return C(Rational(z_of(p)));
    });
}

/// Multiplies the p_r-coefficient by prod_i factor(r_i); this is the
/// lambda-ring substitution x -> x*phi for diagonal phi, e.g. factor
/// r -> (1 - t^r) realizes f(x(1-t)).
template <class C>
SymFunc<C> plethysm_scale(const SymFunc<C>& f, const std::function<C(int)>& factor) {
    SymFunc<C> fp = to_basis(f, Basis::PowerSum);
    SymFunc<C> r(f.degree, Basis::PowerSum);
    for (auto& [p, v] : fp.coeffs) {
        C w = v;
        for (int part : p.parts()) w = w * factor(part);
        r.add_to(p, w);
    }
    return r;
}

/// Ring homomorphism doubling odd power sums and killing even ones:
/// phi(p_r) = 2 p_r for odd r, 0 otherwise.  Lands in the subring
/// generated by the q_r.
template <class C>
SymFunc<C> phi(const SymFunc<C>& f) {
    SymFunc<C> fp = to_basis(f, Basis::PowerSum);
    SymFunc<C> r(f.degree, Basis::PowerSum);
    for (auto& [p, v] : fp.coeffs) {
        bool all_odd = true;
        for (int part : p.parts())
            if (part % 2 == 0) { all_odd = false; break; }
        if (!all_odd) continue;
        r.add_to(p, v * rational_pow2(p.length()));
    }
    return r;
}

/// q_r: degree-r coefficient of prod_i (1+x_i u)/(1-x_i u)
///    = exp(2 sum_{k odd} p_k u^k / k),
/// computed in the p basis via r q_r = sum_{k odd <= r} 2 p_k q_{r-k}.
inline const SymFunc<Rational>& q_fun(int r) {
    if (r < 0) throw std::invalid_argument("q_fun: negative index");
    static std::map<int, SymFunc<Rational>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
        SymFunc<Rational> one(0, Basis::PowerSum);
        one.coeffs.emplace(Partition(), Rational(1));
        cache.emplace(0, std::move(one));
    }
    for (int m = int(cache.size()); m <= r; ++m) {
        SymFunc<Rational> qm(m, Basis::PowerSum);
        for (int k = 1; k <= m; k += 2) {
            for (auto& [p, v] : cache.at(m - k).coeffs) {
                std::vector<int> parts = p.parts();
                parts.insert(std::upper_bound(parts.begin(), parts.end(), k,
                                              std::greater<int>()),
                             k);
                qm.add_to(Partition(std::move(parts)), v * Rational(2, m));
            }
        }
        cache.emplace(m, std::move(qm));
    }
    return cache.at(r);
}

/// q_lambda = q_{lambda_1} q_{lambda_2} ... in the p basis.
inline SymFunc<Rational> q_fun(const Partition& lambda) {
    SymFunc<Rational> r = q_fun(0);
    for (int part : lambda.parts()) r = mul(r, q_fun(part));
    return r;
}

/// Schur Q-function in the monomial basis: the m_mu coefficient is the
/// number of marked shifted tableaux of shape xi and weight mu.
inline SymFunc<Rational> schur_Q(const StrictPartition& xi) {
    SymFunc<Rational> r(xi.size(), Basis::Monomial);
    for (auto& mu : partitions_of(xi.size()))
        r.add_to(mu, Rational(count_marked_shifted(xi, mu)));
    return r;
}

/// S_lambda = det(q_{lambda_i - i + j}), expanded in the p basis with a
/// memoized minor expansion.  Equals phi(s_lambda).
inline SymFunc<Rational> S_det(const Partition& lambda) {
    const int l = lambda.length();
    if (l == 0) return q_fun(0);
    if (l > 30) throw std::invalid_argument("S_det: partition too long");
    std::map<std::pair<int, unsigned>, SymFunc<Rational>> memo;
    std::function<SymFunc<Rational>(int, unsigned)> minor = [&](int row, unsigned colmask) {
        if (row == l) return q_fun(0);
        auto key = std::make_pair(row, colmask);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        SymFunc<Rational> acc;
        int pos = 0;
        for (int j = 0; j < l; ++j) {
            if (!(colmask & (1u << j))) continue;
            const int e = lambda.part(row + 1) - (row + 1) + (j + 1);
            if (e >= 0) {
                SymFunc<Rational> term = mul(q_fun(e), minor(row + 1, colmask & ~(1u << j)));
                if (pos % 2 == 1) term = -term;
                if (acc.is_zero()) acc = std::move(term); else acc += term;
            }
            ++pos;
        }
        if (acc.is_zero()) acc = SymFunc<Rational>(0, Basis::PowerSum);
        memo.emplace(key, acc);
        return acc;
    };
    SymFunc<Rational> d = minor(0, (1u << l) - 1);
    if (d.is_zero()) return SymFunc<Rational>(lambda.size(), Basis::PowerSum);
    return d;
}

} // namespace spinkostka
