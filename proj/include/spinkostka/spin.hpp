#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "spinkostka/hall_littlewood.hpp"
#include "spinkostka/partition.hpp"
#include "spinkostka/polynomial.hpp"
#include "spinkostka/rational_function.hpp"
#include "spinkostka/symfunc.hpp"

namespace spinkostka {

/// Schur expansion data of a Schur Q-function: Q_xi = sum_lambda
/// b_{xi lambda} s_lambda, with g = b / 2^{l(xi)} a nonnegative integer,
/// supported on lambda <= xi and with g_{xi xi} = 1.
struct SpinBranching {
    StrictPartition xi;
    std::map<Partition, long long> b;
    std::map<Partition, long long> g;
};

inline SpinBranching compute_branching(const StrictPartition& xi) {
    SpinBranching out;
    out.xi = xi;
    const SymFunc<Rational> Q = to_basis(schur_Q(xi), Basis::Schur);
    const Rational half_power = rational_pow2(-xi.length());
    for (auto& [lambda, c] : Q.coeffs) {
        const Rational gr = c * half_power;
        if (!c.is_integer() || !gr.is_integer() || gr.sign() < 0)
            throw std::logic_error("branching: coefficient " + c.str() + " at " +
                                   lambda.str() + " violates 2-power integrality");
        if (!dominates(xi.as_partition(), lambda))
            throw std::logic_error("branching: support above " + xi.str());
        out.b[lambda] = long(c.to_integer().get_si());
        out.g[lambda] = long(gr.to_integer().get_si());
    }
    auto diag = out.g.find(xi.as_partition());
    if (diag == out.g.end() || diag->second != 1)
        throw std::logic_error("branching: diagonal g is not 1 at " + xi.str());
    return out;
}

/// Per-degree spin data: the branching matrix b and the full (unhalved)
/// spin Kostka matrix via the b-route.
struct SpinKostkaTable {
    int n = 0;
    std::vector<SpinBranching> rows;          // indexed like strict_partitions_of(n)
    std::vector<std::vector<PolyT>> kminus;   // [xi idx][mu idx]
};

inline const SpinKostkaTable& spin_kostka_table(int n) {
    static std::map<int, SpinKostkaTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    SpinKostkaTable tab;
    tab.n = n;
    const auto& strict = strict_partitions_of(n);
    const auto& parts = partitions_of(n);
    const auto& hl = hall_littlewood_table(n);
    for (auto& xi : strict) {
        SpinBranching br = compute_branching(xi);
        std::vector<PolyT> row(parts.size());
        for (auto& [lambda, bval] : br.b) {
            const size_t li = size_t(canonical_index(lambda));
            for (size_t mi = 0; mi < parts.size(); ++mi) {
                if (hl.kostka[li][mi].is_zero()) continue;
                row[mi] += hl.kostka[li][mi] * Rational(bval);
            }
        }
        tab.rows.push_back(std::move(br));
        tab.kminus.push_back(std::move(row));
    }
    return cache.emplace(n, std::move(tab)).first->second;
}

inline const SpinBranching& branching(const StrictPartition& xi) {
    const auto& tab = spin_kostka_table(xi.size());
    return tab.rows[size_t(canonical_index(xi))];
}

enum class SpinRoute { ViaB, Direct };

/// Spin Kostka polynomial K^-_{xi mu}(t): the coefficient of
/// P_mu(x;t) in Q_xi.  ViaB evaluates sum_lambda b_{xi lambda}
/// K_{lambda mu}(t); Direct expands Q_xi over the P basis by
/// back-substitution.
inline PolyT spin_kostka(const StrictPartition& xi, const Partition& mu,
                         SpinRoute route = SpinRoute::ViaB) {
    if (xi.size() != mu.size())
        throw std::invalid_argument("spin_kostka: size mismatch");
    const int n = xi.size();
    if (route == SpinRoute::ViaB) {
        const auto& tab = spin_kostka_table(n);
        return tab.kminus[size_t(canonical_index(xi))][size_t(canonical_index(mu))];
    }
    const auto& hl = hall_littlewood_table(n);
    const auto& parts = partitions_of(n);
    std::vector<PolyT> residual(parts.size());
    for (size_t j = 0; j < parts.size(); ++j)
        residual[j] = PolyT(Rational(count_marked_shifted(xi, parts[j])));
    std::vector<PolyT> row(parts.size());
    for (size_t mi = 0; mi < parts.size(); ++mi) {
        if (residual[mi].is_zero()) continue;
        row[mi] = residual[mi];
        for (size_t j = mi; j < parts.size(); ++j)
            if (!hl.P_in_m[mi][j].is_zero()) residual[j] -= row[mi] * hl.P_in_m[mi][j];
    }
    for (auto& r : residual)
        if (!r.is_zero()) throw std::logic_error("spin_kostka: direct expansion failed");
    return row[size_t(canonical_index(mu))];
}

/// Closed form for the first row: K^-_{(n) mu}(t) =
/// t^{n(mu)} prod_{i=1}^{l(mu)} (1 + t^{1-i}), with the negative powers
/// cleared against t^{n(mu)}.
inline PolyT spin_kostka_row_closed(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("spin_kostka_row_closed: empty mu");
    const int l = mu.length();
    const int shift = mu.n_stat() - l * (l - 1) / 2;
    if (shift < 0) throw std::logic_error("spin_kostka_row_closed: shift failed to clear");
    PolyT r = PolyT::t(shift);
    for (int i = 1; i <= l; ++i) r *= PolyT(1) + PolyT::t(i - 1);
    return r;
}

/// Closed form for the last column: K^-_{xi (1^n)}(t) as the hook-content
/// quotient over the shifted diagram; the division must be exact.
inline PolyT spin_kostka_col_closed(const StrictPartition& xi) {
    const int n = xi.size();
    const ShiftedDiagram sd(xi);
    PolyT num = PolyT::t(xi.n_stat());
    for (int k = 1; k <= n; ++k) num *= PolyT(1) - PolyT::t(k);
    for (auto& c : sd.cells()) num *= PolyT(1) + PolyT::t(c.content);
    PolyT den(1);
    for (auto& c : sd.cells()) den *= PolyT(1) - PolyT::t(c.hook);
    return num.exact_divide(den);
}

/// Graded multiplicity C^-_{xi mu}(t) = 2^{-(l-d)/2} t^{n(mu)}
/// K^-_{xi mu}(1/t); must have nonnegative integer coefficients.
inline PolyT graded_multiplicity_C(const StrictPartition& xi, const Partition& mu) {
    PolyT k = spin_kostka(xi, mu);
    if (k.is_zero()) return k;
    PolyT c = k.reverse_with_shift(mu.n_stat());
    c *= rational_pow2(-(xi.length() - xi.delta_stat()) / 2);
    if (!c.is_nonneg_integral())
        throw std::logic_error("graded_multiplicity_C: non-integral result at " +
                               xi.str() + "," + mu.str());
    return c;
}

/// q-weight multiplicity route: 2^{l(xi)} sum_lambda g_{xi lambda} times
/// the Kostant q-analog for lambda; equals spin_kostka(xi, mu).
inline PolyT spin_qweight(const StrictPartition& xi, const Partition& mu, int nvars = 0) {
    if (xi.size() != mu.size())
        throw std::invalid_argument("spin_qweight: size mismatch");
    if (nvars == 0) nvars = std::max(xi.length(), mu.length());
    if (nvars < xi.length() || nvars < mu.length())
        throw std::invalid_argument("spin_qweight: insufficient nvars");
    const SpinBranching& br = branching(xi);
    PolyT total;
    for (auto& [lambda, g] : br.g) {
        if (g == 0 || lambda.length() > nvars) continue;
        total += kostant_q_analog(lambda, mu, nvars) * Rational(g);
    }
    total *= rational_pow2(xi.length());
    return total;
}

/// Spin Hall-Littlewood function H^-_mu = sum_xi 2^{-l(xi)}
/// K^-_{xi mu}(t) Q_xi, expanded in the Schur basis.
inline SymFunc<PolyT> spin_hl_H(const Partition& mu) {
    const int n = mu.size();
    const auto& tab = spin_kostka_table(n);
    const auto& strict = strict_partitions_of(n);
    const size_t mi = size_t(canonical_index(mu));
    SymFunc<PolyT> f(n, Basis::Schur);
    for (size_t xi = 0; xi < strict.size(); ++xi) {
        PolyT halved = tab.kminus[xi][mi] * rational_pow2(-strict[xi].length());
        if (halved.is_zero()) continue;
        for (auto& [lambda, bval] : tab.rows[xi].b)
            f.add_to(lambda, halved * Rational(bval));
    }
    return f;
}

/// Expands an element of the subring spanned by Schur Q-functions in the
/// Q basis; throws when the input does not lie in that span.
template <class C>
std::map<StrictPartition, C> expand_in_Q(const SymFunc<C>& f) {
    const int n = f.degree;
    SymFunc<C> s = to_basis(f, Basis::Schur);
    const auto& tab = spin_kostka_table(n);
    const auto& strict = strict_partitions_of(n);
    std::map<StrictPartition, C> out;
    for (size_t xi = 0; xi < strict.size(); ++xi) {
        C c = s.coeff(strict[xi].as_partition());
        if (c.is_zero()) continue;
        c = c * rational_pow2(-strict[xi].length());
        for (auto& [lambda, bval] : tab.rows[xi].b)
            s.add_to(lambda, C() - c * Rational(bval));
        out.emplace(strict[xi], std::move(c));
    }
    if (!s.is_zero())
        throw std::domain_error("expand_in_Q: element is not in the Q-span");
    return out;
}

/// Q-inner product on the subring: <Q_xi, Q_zeta> = 2^{l(xi)} delta.
template <class C>
C q_inner_product(const SymFunc<C>& f, const SymFunc<C>& g) {
    auto fq = expand_in_Q(f);
    auto gq = expand_in_Q(g);
    C acc;
    for (auto& [xi, cf] : fq) {
        auto it = gq.find(xi);
        if (it != gq.end()) acc += cf * it->second * rational_pow2(xi.length());
    }
    return acc;
}

/// Dual basis of {H^-_xi} under the Q-inner product, i.e. the matrix X
/// with sum_eta X[zeta][eta] K^-_{eta xi}(t) = delta_{zeta xi}; row zeta
/// gives hat-H_zeta = sum_eta X[zeta][eta] Q_eta.
inline std::vector<std::vector<RatQT>> dual_spin_hl_matrix(int n) {
    const auto& tab = spin_kostka_table(n);
    const auto& strict = strict_partitions_of(n);
    const size_t k = strict.size();
    // A[xi][eta] = K^-_{eta xi}; solve X A^T = I by Gauss-Jordan over RatQT
    std::vector<std::vector<RatQT>> at(k, std::vector<RatQT>(k)), x(k, std::vector<RatQT>(k));
    for (size_t xi = 0; xi < k; ++xi)
        for (size_t eta = 0; eta < k; ++eta)
            at[eta][xi] = RatQT(
                tab.kminus[eta][size_t(canonical_index(strict[xi].as_partition()))]);
    for (size_t i = 0; i < k; ++i) x[i][i] = RatQT(Rational(1));
    for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        while (piv < k && at[piv][col].is_zero()) ++piv;
        if (piv == k) throw std::logic_error("dual_spin_hl: singular duality matrix");
        std::swap(at[piv], at[col]);
        std::swap(x[piv], x[col]);
        const RatQT d = at[col][col].invert();
        for (size_t j = 0; j < k; ++j) {
            if (!at[col][j].is_zero()) at[col][j] *= d;
            if (!x[col][j].is_zero()) x[col][j] *= d;
        }
        for (size_t i = 0; i < k; ++i) {
            if (i == col || at[i][col].is_zero()) continue;
            const RatQT f = at[i][col];
            for (size_t j = 0; j < k; ++j) {
                if (!at[col][j].is_zero()) at[i][j] -= f * at[col][j];
                if (!x[col][j].is_zero()) x[i][j] -= f * x[col][j];
            }
        }
    }
    // x = (A^T)^{-1}, whose row zeta satisfies
    // sum_eta x[zeta][eta] K^-_{eta xi} = delta_{zeta xi}
    return x;
}

/// hat-H_xi(x;t): the basis dual to {H^-_xi} under <Q,Q> = 2^l delta,
/// returned in the Schur basis over RatQT.
inline SymFunc<RatQT> dual_spin_hl(const StrictPartition& xi) {
    const int n = xi.size();
    const auto x = dual_spin_hl_matrix(n);
    const auto& tab = spin_kostka_table(n);
    const auto& strict = strict_partitions_of(n);
    const size_t zi = size_t(canonical_index(xi));
    SymFunc<RatQT> f(n, Basis::Schur);
    for (size_t eta = 0; eta < strict.size(); ++eta) {
        if (x[zi][eta].is_zero()) continue;
        for (auto& [lambda, bval] : tab.rows[eta].b)
            f.add_to(lambda, x[zi][eta] * Rational(bval));
    }
    return f;
}

/// g_r(x;t): coefficient of u^r in
/// prod_i (1-u x_i)(1+t u x_i) / ((1+u x_i)(1-t u x_i))
///       = exp( sum_{k odd} 2 (t^k - 1) p_k u^k / k ),
/// in the p basis over Q[t].
inline SymFunc<PolyT> g_series(int r) {
    if (r < 0) throw std::invalid_argument("g_series: negative index");
    std::vector<SymFunc<PolyT>> g;
    SymFunc<PolyT> one(0, Basis::PowerSum);
    one.coeffs.emplace(Partition(), PolyT(1));
    g.push_back(std::move(one));
    for (int m = 1; m <= r; ++m) {
        SymFunc<PolyT> gm(m, Basis::PowerSum);
        for (int k = 1; k <= m; k += 2) {
            const PolyT factor = (PolyT::t(k) - PolyT(1)) * Rational(2, m);
            for (auto& [p, v] : g[size_t(m - k)].coeffs) {
                std::vector<int> parts = p.parts();
                parts.insert(std::upper_bound(parts.begin(), parts.end(), k,
                                              std::greater<int>()),
                             k);
                gm.add_to(Partition(std::move(parts)), v * factor);
            }
        }
        g.push_back(std::move(gm));
    }
    return g[size_t(r)];
}

/// One row of the symmetry scan: is K^-_{xi mu}(t) equal to
/// t^m K^-_{xi mu}(1/t) for some integer m?
struct SymmetryScanEntry {
    StrictPartition xi;
    Partition mu;
    bool zero = false;
    bool symmetric = false;
    int offset = 0;  // the witnessing m when symmetric and nonzero
};

inline std::vector<SymmetryScanEntry> kminus_symmetry_scan(int n) {
    const auto& tab = spin_kostka_table(n);
    const auto& strict = strict_partitions_of(n);
    const auto& parts = partitions_of(n);
    std::vector<SymmetryScanEntry> out;
    for (size_t xi = 0; xi < strict.size(); ++xi)
        for (size_t mi = 0; mi < parts.size(); ++mi) {
            SymmetryScanEntry e;
            e.xi = strict[xi];
            e.mu = parts[mi];
            const PolyT& k = tab.kminus[xi][mi];
            e.zero = k.is_zero();
            e.symmetric = k.is_palindromic();
            if (!e.zero && e.symmetric) e.offset = k.degree() + k.low_degree();
            out.push_back(std::move(e));
        }
    return out;
}

/// Compares H^-_xi((1-t)x;t) against hat-H_xi(x;t) for every strict xi of
/// size n: is the former a polynomial multiple of the latter, as in the
/// classical P/H deformation relation?
struct SpinDeformationCheck {
    StrictPartition xi;
    bool proportional = false;    // equal up to some ratio in Q(q,t)
    bool polynomial_ratio = false;
    RatQT ratio;
};

inline std::vector<SpinDeformationCheck> spin_deformation_relation_check(int n) {
    std::vector<SpinDeformationCheck> out;
    for (auto& xi : strict_partitions_of(n)) {
        SpinDeformationCheck chk;
        chk.xi = xi;
        SymFunc<RatQT> hm =
            map_coeffs<RatQT>(spin_hl_H(xi.as_partition()), [](const PolyT& p) { return RatQT(p); });
        SymFunc<RatQT> lhs = plethysm_scale<RatQT>(
            to_basis(hm, Basis::PowerSum),
            [](int r) { return RatQT(PolyT(1) - PolyT::t(r)); });
        SymFunc<RatQT> rhs = to_basis(dual_spin_hl(xi), Basis::PowerSum);
        // proportionality test by cross-multiplication on p-coefficients
        const Partition* pivot = nullptr;
        for (auto& [p, v] : rhs.coeffs) {
            if (!v.is_zero()) { pivot = &p; break; }
        }
        if (pivot == nullptr) throw std::logic_error("spin deformation check: zero dual");
        chk.ratio = lhs.coeff(*pivot) * rhs.coeff(*pivot).invert();
        chk.proportional = true;
        for (auto& p : partitions_of(n)) {
            if (lhs.coeff(p) != chk.ratio * rhs.coeff(p)) {
                chk.proportional = false;
                break;
            }
        }
        if (chk.proportional) {
            const RatQT r = chk.ratio;
            chk.polynomial_ratio = r.is_polynomial() && r.num().is_t_only();
        }
        out.push_back(std::move(chk));
    }
    return out;
}

} // namespace spinkostka
