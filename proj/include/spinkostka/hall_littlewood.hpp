#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "spinkostka/partition.hpp"
#include "spinkostka/polynomial.hpp"
#include "spinkostka/rational_function.hpp"
#include "spinkostka/symfunc.hpp"
#include "spinkostka/tableaux.hpp"

namespace spinkostka {

/// Basis produced by Gram-Schmidt against a diagonal power-sum form:
/// B_mu = m_mu + (dominance-lower monomials), mutually orthogonal under
/// <p_a, p_b> = delta * weight(a).
struct OrthoBasis {
    int n = 0;
    std::vector<std::vector<RatQT>> in_m;  // [mu index][lambda index]
    std::vector<std::vector<RatQT>> in_p;  // [mu index][rho index]
    std::vector<RatQT> norm;               // <B_mu, B_mu>
};

/// Orthogonalizes the monomial basis from the dominance-smallest
/// partition upwards, projecting only against strictly dominance-smaller
/// members; ties between incomparable partitions are immaterial.
inline OrthoBasis gram_schmidt_basis(int n,
                                     const std::function<RatQT(const Partition&)>& weight) {
    const auto& parts = partitions_of(n);
    const size_t k = parts.size();
    OrthoBasis out;
    out.n = n;
    out.in_m.assign(k, std::vector<RatQT>(k));
    out.in_p.assign(k, std::vector<RatQT>(k));
    out.norm.assign(k, RatQT());

    const Mat& m2p = transition(n, Basis::Monomial, Basis::PowerSum);
    std::vector<RatQT> w(k);
    for (size_t j = 0; j < k; ++j) w[j] = weight(parts[j]);

    // weighted rows P_p[l][j] * w[j] and inverted norms, kept so that the
    // projection coefficients only need rational rescaling per term
    std::vector<std::vector<RatQT>> weighted(k);
    std::vector<RatQT> inv_norm(k);

    // canonical order is a linear extension of dominance, so traversing
    // it backwards goes from (1^n) to (n)
    for (size_t step = 0; step < k; ++step) {
        const size_t i = k - 1 - step;
        std::vector<RatQT> up(k), um(k);
        for (size_t j = 0; j < k; ++j)
            if (!m2p[i][j].is_zero()) up[j] = RatQT(Rational(m2p[i][j]));
        um[i] = RatQT(Rational(1));

        for (size_t l = i + 1; l < k; ++l) {
            if (!dominates(parts[i], parts[l])) continue;
            // <m_mu, P_l>: the original m_mu has the same inner products
            // against the orthogonal family as the partially reduced vector
            RatQT c;
            for (size_t j = 0; j < k; ++j) {
                if (m2p[i][j].is_zero() || weighted[l][j].is_zero()) continue;
                c += weighted[l][j] * m2p[i][j];
            }
            if (c.is_zero()) continue;
            c = c * inv_norm[l];
            for (size_t j = 0; j < k; ++j) {
                if (!out.in_p[l][j].is_zero()) up[j] -= c * out.in_p[l][j];
                if (!out.in_m[l][j].is_zero()) um[j] -= c * out.in_m[l][j];
            }
        }
        RatQT nrm;
        weighted[i].assign(k, RatQT());
        for (size_t j = 0; j < k; ++j) {
            if (up[j].is_zero()) continue;
            weighted[i][j] = up[j] * w[j];
            nrm += weighted[i][j] * up[j];
        }
        if (nrm.is_zero())
            throw std::logic_error("gram_schmidt_basis: degenerate norm");
        inv_norm[i] = nrm.invert();
        out.norm[i] = std::move(nrm);
        out.in_p[i] = std::move(up);
        out.in_m[i] = std::move(um);
    }
    return out;
}

/// Power-sum weight of the Hall inner product:
/// <p_a, p_b>_t = delta * z_a * prod_i 1/(1 - t^{a_i}).
inline RatQT hall_weight(const Partition& rho) {
    PolyQT den(1);
    for (int r : rho.parts()) den *= PolyQT(1) - PolyQT::t(r);
    return RatQT(PolyQT(Rational(z_of(rho))), den);
}

/// Per-degree Hall-Littlewood data: the P basis in monomials and the
/// Kostka matrix (both with entries in Z[t]).
struct HallLittlewoodTable {
    int n = 0;
    std::vector<std::vector<PolyT>> P_in_m;  // [mu][lambda]
    std::vector<std::vector<PolyT>> kostka;  // [lambda][mu]
};

inline const HallLittlewoodTable& hall_littlewood_table(int n) {
    static std::map<int, HallLittlewoodTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    HallLittlewoodTable tab;
    tab.n = n;
    OrthoBasis ob = gram_schmidt_basis(n, hall_weight);
    const auto& parts = partitions_of(n);
    const size_t k = parts.size();

    tab.P_in_m.assign(k, std::vector<PolyT>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            if (!ob.in_m[i][j].is_zero()) tab.P_in_m[i][j] = ob.in_m[i][j].to_poly_t();

    // back-substitution of s_lambda = sum_mu K_{lambda mu}(t) P_mu along
    // the canonical order (a linear extension of descending dominance)
    const Mat& s2m = transition(n, Basis::Schur, Basis::Monomial);
    tab.kostka.assign(k, std::vector<PolyT>(k));
    for (size_t li = 0; li < k; ++li) {
        std::vector<PolyT> residual(k);
        for (size_t j = 0; j < k; ++j) residual[j] = PolyT(s2m[li][j]);
        for (size_t mi = 0; mi < k; ++mi) {
            if (residual[mi].is_zero()) continue;
            const PolyT c = residual[mi];
            tab.kostka[li][mi] = c;
            for (size_t j = mi; j < k; ++j) {
                if (tab.P_in_m[mi][j].is_zero()) continue;
                residual[j] -= c * tab.P_in_m[mi][j];
            }
        }
        for (size_t j = 0; j < k; ++j)
            if (!residual[j].is_zero())
                throw std::logic_error("hall_littlewood_table: P basis did not span");
    }
    return cache.emplace(n, std::move(tab)).first->second;
}

/// Hall-Littlewood P function, unitriangular in the monomial basis and
/// orthogonal under the t-deformed inner product.
inline SymFunc<RatQT> hl_P(const Partition& mu) {
    const auto& tab = hall_littlewood_table(mu.size());
    const auto& parts = partitions_of(mu.size());
    const size_t i = size_t(canonical_index(mu));
    SymFunc<RatQT> f(mu.size(), Basis::Monomial);
    for (size_t j = 0; j < parts.size(); ++j)
        if (!tab.P_in_m[i][j].is_zero()) f.coeffs.emplace(parts[j], RatQT(tab.P_in_m[i][j]));
    return f;
}

/// Dual Hall-Littlewood function H_mu = sum_lambda K_{lambda mu}(t) s_lambda.
inline SymFunc<PolyT> hl_H(const Partition& mu) {
    const auto& tab = hall_littlewood_table(mu.size());
    const auto& parts = partitions_of(mu.size());
    const size_t j = size_t(canonical_index(mu));
    SymFunc<PolyT> f(mu.size(), Basis::Schur);
    for (size_t i = 0; i < parts.size(); ++i)
        if (!tab.kostka[i][j].is_zero()) f.coeffs.emplace(parts[i], tab.kostka[i][j]);
    return f;
}

/// b_mu(t) = prod_i prod_{k=1}^{m_i(mu)} (1 - t^k).
inline PolyT b_poly(const Partition& mu) {
    PolyT b(1);
    int i = 0;
    const auto& ps = mu.parts();
    while (i < int(ps.size())) {
        int j = i;
        while (j < int(ps.size()) && ps[size_t(j)] == ps[size_t(i)]) ++j;
        for (int c = 1; c <= j - i; ++c) b *= PolyT(1) - PolyT::t(c);
        i = j;
    }
    return b;
}

// ---------------------------------------------------------------------------
// Lusztig q-weight multiplicity via the t-analog of the Kostant partition
// function for the positive roots e_i - e_j of gl(nvars).

namespace detail {

struct KostantDP {
    int nvars = 0;
    std::vector<std::pair<int, int>> roots;  // (i, j), i < j, 0-based
    std::map<std::pair<int, std::vector<int>>, PolyT> memo;

    explicit KostantDP(int n) : nvars(n) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) roots.emplace_back(i, j);
    }

    static bool feasible(const std::vector<int>& v) {
        // nonneg combinations of e_i - e_j (i<j) have nonnegative prefix sums
        long s = 0;
        for (int x : v) {
            s += x;
            if (s < 0) return false;
        }
        return s == 0;
    }

    PolyT eval(const std::vector<int>& v, int nroots) {
        if (!feasible(v)) return PolyT();
        bool zero = std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
        if (nroots == 0) return zero ? PolyT(1) : PolyT();
        if (zero) return PolyT(1);
        auto key = std::make_pair(nroots, v);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        const auto [i, j] = roots[size_t(nroots - 1)];
        PolyT total;
        std::vector<int> w = v;
        for (int m = 0;; ++m) {
            if (m > 0) { --w[size_t(i)]; ++w[size_t(j)]; }
            if (!feasible_weight(w)) break;
            PolyT sub = eval(w, nroots - 1);
            if (!sub.is_zero()) total += PolyT::t(1).pow(unsigned(m)) * sub;
        }
        memo.emplace(std::move(key), total);
        return total;
    }

    bool feasible_weight(const std::vector<int>& w) const {
        // weighted sum against (n-1, n-2, ..., 0) must stay nonnegative
        long s = 0;
        for (size_t i = 0; i < w.size(); ++i) s += long(w[i]) * (nvars - 1 - int(i));
        return s >= 0;
    }
};

inline KostantDP& kostant_dp(int nvars) {
    static std::map<int, KostantDP> cache;
    auto it = cache.find(nvars);
    if (it == cache.end()) it = cache.emplace(nvars, KostantDP(nvars)).first;
    return it->second;
}

inline std::mutex& kostant_mutex() {
    static std::mutex mu;
    return mu;
}

} // namespace detail

/// t-analog of the Kostant partition function: coefficient of e^v in
/// prod_{i<j} 1/(1 - t e_i/e_j).
inline PolyT kostant_t_partition(const std::vector<int>& v, int nvars) {
    if (int(v.size()) != nvars) throw std::invalid_argument("kostant_t_partition: bad vector");
    std::lock_guard<std::mutex> lock(detail::kostant_mutex());
    auto& dp = detail::kostant_dp(nvars);
    return dp.eval(v, int(dp.roots.size()));
}

/// Lusztig q-weight multiplicity of weight mu in the irreducible
/// gl(nvars) module of highest weight lambda, via the Weyl alternating
/// sum over the t-Kostant partition function.
inline PolyT kostant_q_analog(const Partition& lambda, const Partition& mu, int nvars) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("kostant_q_analog: size mismatch");
    if (nvars < lambda.length() || nvars < mu.length())
        throw std::invalid_argument("kostant_q_analog: need nvars >= both lengths");
    if (nvars > 8) throw std::invalid_argument("kostant_q_analog: nvars too large");

    std::vector<int> lr(size_t(nvars), 0), target(size_t(nvars), 0);
    for (int i = 0; i < nvars; ++i) {
        lr[size_t(i)] = lambda.part(i + 1) + (nvars - 1 - i);
        target[size_t(i)] = mu.part(i + 1) + (nvars - 1 - i);
    }

    std::vector<int> idx(size_t(nvars), 0);
    for (int i = 0; i < nvars; ++i) idx[size_t(i)] = i;
    PolyT total;
    do {
        int inversions = 0;
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = a + 1; b < idx.size(); ++b)
                if (idx[a] > idx[b]) ++inversions;
        std::vector<int> v(size_t(nvars), 0);
        for (int i = 0; i < nvars; ++i)
            v[size_t(i)] = lr[size_t(idx[size_t(i)])] - target[size_t(i)];
        PolyT contrib = kostant_t_partition(v, nvars);
        if (!contrib.is_zero()) {
            if (inversions % 2) total -= contrib; else total += contrib;
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return total;
}

enum class KostkaRoute { Charge, LinearSolve, Kostant };

/// Kostka polynomial K_{lambda mu}(t) by one of three routes: the charge
/// generating function, the expansion of s_lambda in the P basis
/// (production route), or the Weyl/Kostant alternating sum.
inline PolyT kostka_poly(const Partition& lambda, const Partition& mu,
                         KostkaRoute route = KostkaRoute::LinearSolve, int nvars = 0) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("kostka_poly: size mismatch");
    switch (route) {
        case KostkaRoute::Charge: {
            PolyT sum;
            for_each_ssyt(lambda, mu.parts(), [&](const SSYT& t) {
                sum.add_to_coeff(charge(t), Rational(1));
            });
            return sum;
        }
        case KostkaRoute::LinearSolve: {
            const auto& tab = hall_littlewood_table(lambda.size());
            return tab.kostka[size_t(canonical_index(lambda))][size_t(canonical_index(mu))];
        }
        case KostkaRoute::Kostant: {
            if (nvars == 0) nvars = std::max(lambda.length(), mu.length());
            return kostant_q_analog(lambda, mu, nvars);
        }
    }
    throw std::invalid_argument("kostka_poly: unknown route");
}

} // namespace spinkostka
