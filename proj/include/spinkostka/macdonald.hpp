#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "spinkostka/hall_littlewood.hpp"
#include "spinkostka/spin.hpp"
#include "spinkostka/symfunc.hpp"

namespace spinkostka {

/// Power-sum weight of the q,t-deformed inner product:
/// <p_a, p_b>_{q,t} = delta * z_a * prod_i (1-q^{a_i})/(1-t^{a_i}).
inline RatQT macdonald_weight(const Partition& rho) {
    PolyQT num(Rational(z_of(rho)));
    PolyQT den(1);
    for (int r : rho.parts()) {
        num *= PolyQT(1) - PolyQT::q(r);
        den *= PolyQT(1) - PolyQT::t(r);
    }
    return RatQT(num, den);
}

/// Normalization constant c_lambda(q,t) = prod_{s in lambda}
/// (1 - q^{arm(s)} t^{leg(s)+1}) relating the integral form J to P.
inline PolyQT macdonald_norm_c(const Partition& lambda) {
    PolyQT c(1);
    const Partition conj = lambda.conjugate();
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            const int arm = lambda.part(i) - j;
            const int leg = conj.part(j) - i;
            c *= PolyQT(1) - PolyQT::term(Rational(1), arm, leg + 1);
        }
    return c;
}

/// Per-degree Macdonald data: the P basis in monomials over Q(q,t) and
/// the q,t-Kostka matrix with entries in Z[q,t].
struct MacdonaldTable {
    int n = 0;
    std::vector<std::vector<RatQT>> P_in_m;   // [lambda][mu]
    std::vector<std::vector<PolyQT>> kostka;  // [lambda][mu] = K_{lambda mu}(q,t)
};

inline const MacdonaldTable& macdonald_table(int n) {
    static std::map<int, MacdonaldTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    MacdonaldTable tab;
    tab.n = n;
    OrthoBasis ob = gram_schmidt_basis(n, macdonald_weight);
    tab.P_in_m = std::move(ob.in_m);

    const auto& parts = partitions_of(n);
    const size_t k = parts.size();
    const Mat& m2p = transition(n, Basis::Monomial, Basis::PowerSum);
    const Mat& p2s = transition(n, Basis::PowerSum, Basis::Schur);
    tab.kostka.assign(k, std::vector<PolyQT>(k));
    for (size_t mi = 0; mi < k; ++mi) {
        // H_mu = c_mu(q,t) P_mu evaluated at x/(1-t), expanded in Schur
        const RatQT c(macdonald_norm_c(parts[mi]));
        // P_mu in p coordinates
        std::vector<RatQT> p_coords(k);
        for (size_t j = 0; j < k; ++j) {
            if (tab.P_in_m[mi][j].is_zero()) continue;
            for (size_t l = 0; l < k; ++l)
                if (!m2p[j][l].is_zero())
                    p_coords[l] += tab.P_in_m[mi][j] * m2p[j][l];
        }
        // x -> x/(1-t) and the J normalization
        for (size_t l = 0; l < k; ++l) {
            if (p_coords[l].is_zero()) continue;
            PolyQT den(1);
            for (int r : parts[l].parts()) den *= PolyQT(1) - PolyQT::t(r);
            p_coords[l] = p_coords[l] * c * RatQT(PolyQT(1), den);
        }
        for (size_t li = 0; li < k; ++li) {
            RatQT acc;
            for (size_t l = 0; l < k; ++l) {
                if (p_coords[l].is_zero() || p2s[l][li].is_zero()) continue;
                acc += p_coords[l] * p2s[l][li];
            }
            if (acc.is_zero()) continue;
            PolyQT entry = acc.to_polyqt();  // throws if not polynomial
            if (!entry.is_integral())
                throw std::logic_error("macdonald_table: non-integral Kostka entry");
            tab.kostka[li][mi] = std::move(entry);
        }
    }
    return cache.emplace(n, std::move(tab)).first->second;
}

/// Macdonald P polynomial: unitriangular in the monomial basis and
/// orthogonal under the q,t inner product.
inline SymFunc<RatQT> macdonald_P(const Partition& lambda) {
    const auto& tab = macdonald_table(lambda.size());
    const auto& parts = partitions_of(lambda.size());
    const size_t i = size_t(canonical_index(lambda));
    SymFunc<RatQT> f(lambda.size(), Basis::Monomial);
    for (size_t j = 0; j < parts.size(); ++j)
        if (!tab.P_in_m[i][j].is_zero()) f.coeffs.emplace(parts[j], tab.P_in_m[i][j]);
    return f;
}

/// Integral form J_lambda = c_lambda(q,t) P_lambda.
inline SymFunc<RatQT> macdonald_J(const Partition& lambda) {
    SymFunc<RatQT> f = macdonald_P(lambda);
    f.scale(RatQT(macdonald_norm_c(lambda)));
    return f;
}

/// Normalized Macdonald polynomial H_mu(x;q,t) = J_mu evaluated at
/// x/(1-t), in the Schur basis; its coefficients are the q,t-Kostka
/// polynomials.
inline SymFunc<PolyQT> macdonald_H(const Partition& mu) {
    const auto& tab = macdonald_table(mu.size());
    const auto& parts = partitions_of(mu.size());
    const size_t j = size_t(canonical_index(mu));
    SymFunc<PolyQT> f(mu.size(), Basis::Schur);
    for (size_t i = 0; i < parts.size(); ++i)
        if (!tab.kostka[i][j].is_zero()) f.coeffs.emplace(parts[i], tab.kostka[i][j]);
    return f;
}

/// q,t-Kostka polynomial K_{lambda mu}(q,t).
inline PolyQT qt_kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("qt_kostka: size mismatch");
    const auto& tab = macdonald_table(lambda.size());
    return tab.kostka[size_t(canonical_index(lambda))][size_t(canonical_index(mu))];
}

enum class SpinQtRoute { ViaB, ViaPhi };

/// Spin q,t-Kostka polynomial K^-_{xi mu}(q,t): via the branching
/// coefficients (sum_lambda b_{xi lambda} K_{lambda mu}(q,t)) or by
/// applying phi to H_mu(x;q,t) and expanding over 2^{-l} Q_xi.
inline PolyQT spin_qt_kostka(const StrictPartition& xi, const Partition& mu,
                             SpinQtRoute route = SpinQtRoute::ViaB) {
    if (xi.size() != mu.size())
        throw std::invalid_argument("spin_qt_kostka: size mismatch");
    if (route == SpinQtRoute::ViaB) {
        const SpinBranching& br = branching(xi);
        PolyQT total;
        for (auto& [lambda, bval] : br.b) {
            PolyQT k = qt_kostka(lambda, mu);
            if (!k.is_zero()) total += k * Rational(bval);
        }
        return total;
    }
    SymFunc<RatQT> h = map_coeffs<RatQT>(macdonald_H(mu), [](const PolyQT& p) { return RatQT(p); });
    SymFunc<RatQT> img = phi(h);
    auto coeffs = expand_in_Q(img);
    auto it = coeffs.find(xi);
    if (it == coeffs.end()) return PolyQT();
    RatQT c = it->second * rational_pow2(xi.length());
    return c.to_polyqt();
}

/// Doubly graded multiplicity C^-_{xi mu}(q,t) = 2^{-(l-d)/2}
/// K^-_{xi mu}(q, 1/t) t^{n(mu)}; must land in Z_{>=0}[q,t].
inline PolyQT C_qt(const StrictPartition& xi, const Partition& mu) {
    PolyQT k = spin_qt_kostka(xi, mu);
    if (k.is_zero()) return k;
    PolyQT c = k.t_reverse_with_shift(mu.n_stat());
    c *= rational_pow2(-(xi.length() - xi.delta_stat()) / 2);
    if (!c.is_nonneg_integral())
        throw std::logic_error("C_qt: non-integral result at " + xi.str() + "," + mu.str());
    return c;
}

} // namespace spinkostka
