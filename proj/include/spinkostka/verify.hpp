#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spinkostka/format.hpp"
#include "spinkostka/macdonald.hpp"
#include "spinkostka/serialize.hpp"
#include "spinkostka/spin.hpp"

namespace spinkostka {

enum class CheckStatus { Pass, Fail, Info };

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string details;
};

inline Check make_check(const std::string& name, bool pass, const std::string& details = "") {
    return Check{name, pass ? CheckStatus::Pass : CheckStatus::Fail, details};
}

/// Properties of the classical Kostka matrix on the production
/// (linear-solve) route, for all degrees 1..n: dominance triangularity
/// with unit diagonal, degree n(mu)-n(lambda), nonnegative integer
/// coefficients, specialization at t=1 to the Kostka number, the
/// t^{n(mu)} row formula and the hook-length column formula.
inline std::vector<Check> suite_classical_kostka(int n) {
    std::vector<Check> out;
    long cnt = 0;
    std::string bad_tri, bad_deg, bad_pos, bad_t1, bad_row, bad_hook;
    for (int m = 1; m <= n; ++m) {
        const auto& parts = partitions_of(m);
        const auto& tab = hall_littlewood_table(m);
        for (size_t li = 0; li < parts.size(); ++li)
            for (size_t mi = 0; mi < parts.size(); ++mi) {
                const PolyT& K = tab.kostka[li][mi];
                const bool dom = dominates(parts[li], parts[mi]);
                ++cnt;
                const std::string tag = parts[li].str() + "," + parts[mi].str();
                if (dom != !K.is_zero() && bad_tri.empty()) bad_tri = tag;
                if (li == mi && K != PolyT(1) && bad_tri.empty()) bad_tri = tag;
                if (!K.is_zero() &&
                    K.degree() != parts[mi].n_stat() - parts[li].n_stat() && bad_deg.empty())
                    bad_deg = tag;
                if (!K.is_zero() && !K.is_nonneg_integral() && bad_pos.empty()) bad_pos = tag;
                if (K.evaluate(Rational(1)) !=
                        Rational(count_ssyt(parts[li], parts[mi])) && bad_t1.empty())
                    bad_t1 = tag;
            }
        for (auto& mu : parts)
            if (kostka_poly(Partition{m}, mu) != PolyT::t(mu.n_stat()) && bad_row.empty())
                bad_row = mu.str();
        std::vector<int> ones(size_t(m), 1);
        const Partition col(ones);
        for (auto& lam : parts) {
            PolyT num = PolyT::t(lam.conjugate().n_stat());
            for (int k = 1; k <= m; ++k) num *= PolyT(1) - PolyT::t(k);
            PolyT den(1);
            const Partition conj = lam.conjugate();
            for (int i = 1; i <= lam.length(); ++i)
                for (int j = 1; j <= lam.part(i); ++j)
                    den *= PolyT(1) - PolyT::t(lam.part(i) + conj.part(j) - i - j + 1);
            if (num.exact_divide(den) != kostka_poly(lam, col) && bad_hook.empty())
                bad_hook = lam.str();
        }
    }
    auto emit = [&](const std::string& nm, const std::string& bad) {
        out.push_back(make_check(nm, bad.empty(),
                                 bad.empty() ? std::to_string(cnt) + " pairs, n<=" +
                                                   std::to_string(n)
                                             : "first failure at " + bad));
    };
    emit("kostka.triangular-unit-diagonal", bad_tri);
    emit("kostka.degree-n(mu)-n(lambda)", bad_deg);
    emit("kostka.nonnegative-integer-coefficients", bad_pos);
    emit("kostka.t=1-counts-tableaux", bad_t1);
    emit("kostka.single-row-formula", bad_row);
    emit("kostka.column-hook-formula", bad_hook);
    return out;
}

/// Agreement of the three classical routes (charge statistic, P-basis
/// linear solve, Kostant q-analog) for all degrees 1..n.
inline std::vector<Check> suite_classical_oracles(int n) {
    long cnt = 0;
    std::string bad;
    for (int m = 1; m <= n; ++m)
        for (auto& lam : partitions_of(m))
            for (auto& mu : partitions_of(m)) {
                const PolyT a = kostka_poly(lam, mu, KostkaRoute::LinearSolve);
                ++cnt;
                if (a != kostka_poly(lam, mu, KostkaRoute::Charge) ||
                    a != kostka_poly(lam, mu, KostkaRoute::Kostant)) {
                    if (bad.empty()) bad = lam.str() + "," + mu.str();
                }
            }
    return {make_check("kostka.routes-charge-solve-kostant", bad.empty(),
                       bad.empty() ? std::to_string(cnt) + " pairs, n<=" + std::to_string(n)
                                   : "first failure at " + bad)};
}

/// Spin Kostka matrix properties for all degrees 1..n: dominance
/// triangularity with 2^l diagonal, degree n(mu)-n(xi), halved entries
/// in Z_{>=0}[t], specializations at t=1 (marked tableau count) and
/// t=-1 (2^l delta), and the closed row/column formulas.
inline std::vector<Check> suite_theorem_A(int n) {
    std::vector<Check> out;
    long cnt = 0;
    std::string bad1, bad2, bad3, bad4a, bad4b, bad5, bad6;
    for (int m = 1; m <= n; ++m) {
        const auto& strict = strict_partitions_of(m);
        const auto& parts = partitions_of(m);
        const auto& tab = spin_kostka_table(m);
        for (size_t xi = 0; xi < strict.size(); ++xi) {
            const int l = strict[xi].length();
            for (size_t mi = 0; mi < parts.size(); ++mi) {
                ++cnt;
                const PolyT& K = tab.kminus[xi][mi];
                const std::string tag = strict[xi].str() + "," + parts[mi].str();
                const bool dom = dominates(strict[xi].as_partition(), parts[mi]);
                if (dom != !K.is_zero() && bad1.empty()) bad1 = tag;
                if (strict[xi].as_partition() == parts[mi] &&
                    K != PolyT(Rational(1) * rational_pow2(l)) && bad1.empty())
                    bad1 = tag;
                if (!K.is_zero() &&
                    K.degree() != parts[mi].n_stat() - strict[xi].n_stat() && bad2.empty())
                    bad2 = tag;
                PolyT halved = K * rational_pow2(-l);
                if (!halved.is_zero() && !halved.is_nonneg_integral() && bad3.empty())
                    bad3 = tag;
                if (K.evaluate(Rational(1)) !=
                        Rational(count_marked_shifted(strict[xi], parts[mi])) && bad4a.empty())
                    bad4a = tag;
                const Rational at_m1 = K.evaluate(Rational(-1));
                const Rational expect_m1 =
                    strict[xi].as_partition() == parts[mi] ? rational_pow2(l) : Rational(0);
                if (at_m1 != expect_m1 && bad4b.empty()) bad4b = tag;
            }
        }
        for (auto& mu : parts)
            if (spin_kostka(StrictPartition{m}, mu) != spin_kostka_row_closed(mu) &&
                bad5.empty())
                bad5 = mu.str();
        std::vector<int> ones(size_t(m), 1);
        const Partition col(ones);
        for (auto& xi : strict)
            if (spin_kostka(xi, col) != spin_kostka_col_closed(xi) && bad6.empty())
                bad6 = xi.str();
    }
    auto emit = [&](const std::string& nm, const std::string& bad) {
        out.push_back(make_check(nm, bad.empty(),
                                 bad.empty() ? std::to_string(cnt) + " pairs, n<=" +
                                                   std::to_string(n)
                                             : "first failure at " + bad));
    };
    emit("spin-kostka.triangular-2^l-diagonal", bad1);
    emit("spin-kostka.degree-n(mu)-n(xi)", bad2);
    emit("spin-kostka.halved-nonnegative-integer", bad3);
    emit("spin-kostka.t=1-counts-marked-tableaux", bad4a);
    emit("spin-kostka.t=-1-is-2^l-delta", bad4b);
    emit("spin-kostka.single-row-closed-form", bad5);
    emit("spin-kostka.column-hook-content-formula", bad6);
    return out;
}

/// Agreement of spin routes (b-expansion, direct P-basis solve, q-weight
/// multiplicity) plus the t=0 branching specialization, degrees 1..n.
inline std::vector<Check> suite_spin_oracles(int n) {
    long cnt = 0;
    std::string bad, bad0;
    for (int m = 1; m <= n; ++m)
        for (auto& xi : strict_partitions_of(m)) {
            const SpinBranching& br = branching(xi);
            for (auto& mu : partitions_of(m)) {
                const PolyT a = spin_kostka(xi, mu, SpinRoute::ViaB);
                ++cnt;
                if (a != spin_kostka(xi, mu, SpinRoute::Direct) ||
                    a != spin_qweight(xi, mu)) {
                    if (bad.empty()) bad = xi.str() + "," + mu.str();
                }
                auto itb = br.b.find(mu);
                const Rational b0 = itb == br.b.end() ? Rational(0) : Rational(itb->second);
                if (a.evaluate(Rational(0)) != b0 && bad0.empty())
                    bad0 = xi.str() + "," + mu.str();
            }
        }
    return {make_check("spin-kostka.routes-viaB-direct-qweight", bad.empty(),
                       bad.empty() ? std::to_string(cnt) + " pairs, n<=" + std::to_string(n)
                                   : "first failure at " + bad),
            make_check("spin-kostka.t=0-is-branching-coefficient", bad0.empty(),
                       bad0.empty() ? std::to_string(cnt) + " pairs" : "first failure at " + bad0)};
}

namespace detail {

// Coefficient of m_alpha(x) m_beta(y) in sum_mu F_mu(x) G_mu(y), where F
// and G are given in the monomial basis as PolyT rows.
inline std::vector<std::vector<PolyT>> pairing_matrix(
    int m, const std::function<std::vector<PolyT>(const Partition&)>& F,
    const std::function<std::vector<PolyT>(const Partition&)>& G) {
    const auto& parts = partitions_of(m);
    const size_t k = parts.size();
    std::vector<std::vector<PolyT>> side(k, std::vector<PolyT>(k));
    for (auto& mu : parts) {
        const std::vector<PolyT> f = F(mu), g = G(mu);
        for (size_t a = 0; a < k; ++a) {
            if (f[a].is_zero()) continue;
            for (size_t b = 0; b < k; ++b) {
                if (g[b].is_zero()) continue;
                side[a][b] += f[a] * g[b];
            }
        }
    }
    return side;
}

inline std::vector<PolyT> in_monomials(const SymFunc<PolyT>& f) {
    const auto& parts = partitions_of(f.degree);
    SymFunc<PolyT> fm = to_basis(f, Basis::Monomial);
    std::vector<PolyT> row(parts.size());
    for (size_t j = 0; j < parts.size(); ++j) row[j] = fm.coeff(parts[j]);
    return row;
}

} // namespace detail

/// Spin Hall-Littlewood properties for degrees 1..n: the phi image of
/// the dual Hall-Littlewood function, the specializations at t = 1, 0,
/// -1, unitriangularity over the Q basis, and (up to degree cauchy_n)
/// the bidegree truncation of the product Cauchy kernel
/// prod (1+x_i y_j)/(1-x_i y_j).
inline std::vector<Check> suite_spin_hl(int n, int cauchy_n) {
    std::vector<Check> out;
    std::string bad1, bad2, bad3, bad4, bad5, bad6;
    long cnt = 0;
    for (int m = 1; m <= n; ++m) {
        const auto& parts = partitions_of(m);
        for (auto& mu : parts) {
            ++cnt;
            const SymFunc<PolyT> Hm = spin_hl_H(mu);
            // (1) phi(H_mu) = H^-_mu
            if (phi(to_basis(hl_H(mu), Basis::PowerSum)) != to_basis(Hm, Basis::PowerSum) &&
                bad1.empty())
                bad1 = mu.str();
            // (2) t=1 gives q_mu
            auto at1 = map_coeffs<Rational>(Hm, [](const PolyT& p) { return p.evaluate(Rational(1)); });
            if (to_basis(at1, Basis::PowerSum) != q_fun(mu) && bad2.empty()) bad2 = mu.str();
            // (3) t=0 gives S_mu
            auto at0 = map_coeffs<Rational>(Hm, [](const PolyT& p) { return p.evaluate(Rational(0)); });
            if (to_basis(at0, Basis::PowerSum) != to_basis(S_det(mu), Basis::PowerSum) &&
                bad3.empty())
                bad3 = mu.str();
            // (4) t=-1 gives Q_mu for strict mu, else 0
            auto atm = map_coeffs<Rational>(Hm, [](const PolyT& p) { return p.evaluate(Rational(-1)); });
            if (is_strict(mu)) {
                if (to_basis(atm, Basis::Monomial) != schur_Q(StrictPartition(mu)) && bad4.empty())
                    bad4 = mu.str();
            } else if (!atm.is_zero() && bad4.empty()) {
                bad4 = mu.str();
            }
        }
        // (5) matrix of H^-_xi against Q_zeta is unitriangular over Z[t]
        const auto& strict = strict_partitions_of(m);
        const auto& tab = spin_kostka_table(m);
        for (size_t zi = 0; zi < strict.size(); ++zi)
            for (size_t xi = 0; xi < strict.size(); ++xi) {
                const PolyT entry = tab.kminus[zi][size_t(canonical_index(
                                        strict[xi].as_partition()))] *
                                    rational_pow2(-strict[zi].length());
                const bool dom = dominates(strict[zi].as_partition(), strict[xi].as_partition());
                const std::string tag = strict[zi].str() + "," + strict[xi].str();
                if (!entry.is_zero() && !dom && bad5.empty()) bad5 = tag;
                if (zi == xi && entry != PolyT(1) && bad5.empty()) bad5 = tag;
                if (!entry.is_zero() && !entry.is_integral() && bad5.empty()) bad5 = tag;
            }
    }
    for (int m = 1; m <= cauchy_n; ++m) {
        const auto& parts = partitions_of(m);
        auto side1 = detail::pairing_matrix(
            m,
            [&](const Partition& mu) { return detail::in_monomials(spin_hl_H(mu)); },
            [&](const Partition& mu) {
                const auto& hl = hall_littlewood_table(m);
                const size_t i = size_t(canonical_index(mu));
                return hl.P_in_m[i];
            });
        // coefficient of m_a(x) m_b(y) in the kernel is q_b expanded in m_a
        for (size_t b = 0; b < parts.size() && bad6.empty(); ++b) {
            SymFunc<Rational> qb = to_basis(q_fun(parts[b]), Basis::Monomial);
            for (size_t a = 0; a < parts.size(); ++a)
                if (side1[a][b] != PolyT(qb.coeff(parts[a]))) {
                    bad6 = "degree " + std::to_string(m) + " at m" + parts[a].str() + " x m" +
                           parts[b].str();
                    break;
                }
        }
    }
    out.push_back(make_check("spin-hl.phi-image-of-dual-hall-littlewood", bad1.empty(),
                             bad1.empty() ? std::to_string(cnt) + " mu, n<=" + std::to_string(n)
                                          : "first failure at " + bad1));
    out.push_back(make_check("spin-hl.t=1-gives-q_mu", bad2.empty(),
                             bad2.empty() ? "" : "first failure at " + bad2));
    out.push_back(make_check("spin-hl.t=0-gives-S_mu", bad3.empty(),
                             bad3.empty() ? "" : "first failure at " + bad3));
    out.push_back(make_check("spin-hl.t=-1-gives-Q-or-zero", bad4.empty(),
                             bad4.empty() ? "" : "first failure at " + bad4));
    out.push_back(make_check("spin-hl.unitriangular-over-Q-basis", bad5.empty(),
                             bad5.empty() ? "" : "first failure at " + bad5));
    out.push_back(make_check("spin-hl.cauchy-kernel-bidegree", bad6.empty(),
                             bad6.empty() ? "degrees 1.." + std::to_string(cauchy_n)
                                          : "first failure at " + bad6));
    return out;
}

/// Graded multiplicity positivity for degrees 1..n, and its agreement
/// with the rescaled hook-content closed form in the column mu = (1^n).
inline std::vector<Check> suite_graded_multiplicity(int n) {
    long cnt = 0;
    std::string bad_pos, bad_col;
    for (int m = 1; m <= n; ++m) {
        std::vector<int> ones(size_t(m), 1);
        const Partition col(ones);
        for (auto& xi : strict_partitions_of(m)) {
            PolyT col_value;
            for (auto& mu : partitions_of(m)) {
                ++cnt;
                try {
                    PolyT c = graded_multiplicity_C(xi, mu);
                    if (mu == col) col_value = c;
                } catch (const std::exception&) {
                    if (bad_pos.empty()) bad_pos = xi.str() + "," + mu.str();
                }
            }
            PolyT expect = spin_kostka_col_closed(xi) *
                           rational_pow2(-(xi.length() - xi.delta_stat()) / 2);
            if (col_value != expect && bad_col.empty()) bad_col = xi.str();
        }
    }
    return {make_check("graded-multiplicity.nonnegative-integer", bad_pos.empty(),
                       bad_pos.empty() ? std::to_string(cnt) + " pairs, n<=" + std::to_string(n)
                                       : "first failure at " + bad_pos),
            make_check("graded-multiplicity.column-closed-form", bad_col.empty(),
                       bad_col.empty() ? "" : "first failure at " + bad_col)};
}

/// q,t layer for degrees 1..n: classical positivity, the q=0
/// specializations, agreement of the two spin routes, positivity of the
/// doubly graded multiplicity and mu-independence of its value at (1,1).
inline std::vector<Check> suite_qt(int n) {
    long cnt = 0;
    std::string bad_pos, bad_q0, bad_routes, bad_spin_q0, bad_cqt, bad_mu;
    for (int m = 1; m <= n; ++m) {
        const auto& parts = partitions_of(m);
        for (auto& lam : parts)
            for (auto& mu : parts) {
                ++cnt;
                const PolyQT K = qt_kostka(lam, mu);
                if (!K.is_zero() && !K.is_nonneg_integral() && bad_pos.empty())
                    bad_pos = lam.str() + "," + mu.str();
                if (K.specialize_q(Rational(0)) != kostka_poly(lam, mu) && bad_q0.empty())
                    bad_q0 = lam.str() + "," + mu.str();
            }
        for (auto& xi : strict_partitions_of(m)) {
            Rational dim;
            bool have_dim = false;
            for (auto& mu : parts) {
                const PolyQT a = spin_qt_kostka(xi, mu, SpinQtRoute::ViaB);
                const std::string tag = xi.str() + "," + mu.str();
                if (a != spin_qt_kostka(xi, mu, SpinQtRoute::ViaPhi) && bad_routes.empty())
                    bad_routes = tag;
                if (a.specialize_q(Rational(0)) != spin_kostka(xi, mu) && bad_spin_q0.empty())
                    bad_spin_q0 = tag;
                try {
                    const PolyQT c = C_qt(xi, mu);
                    if (c.specialize_q(Rational(0)) != graded_multiplicity_C(xi, mu) &&
                        bad_cqt.empty())
                        bad_cqt = tag;
                    const Rational v = c.evaluate(Rational(1), Rational(1));
                    if (!have_dim) { dim = v; have_dim = true; }
                    else if (v != dim && bad_mu.empty()) bad_mu = tag;
                } catch (const std::exception&) {
                    if (bad_cqt.empty()) bad_cqt = tag;
                }
            }
        }
    }
    return {make_check("qt-kostka.nonnegative-integer", bad_pos.empty(),
                       bad_pos.empty() ? std::to_string(cnt) + " pairs, n<=" + std::to_string(n)
                                       : "first failure at " + bad_pos),
            make_check("qt-kostka.q=0-specializes-to-kostka", bad_q0.empty(),
                       bad_q0.empty() ? "" : "first failure at " + bad_q0),
            make_check("spin-qt-kostka.routes-viaB-viaPhi", bad_routes.empty(),
                       bad_routes.empty() ? "" : "first failure at " + bad_routes),
            make_check("spin-qt-kostka.q=0-specializes-to-spin-kostka", bad_spin_q0.empty(),
                       bad_spin_q0.empty() ? "" : "first failure at " + bad_spin_q0),
            make_check("qt-graded-multiplicity.nonnegative-and-chains", bad_cqt.empty(),
                       bad_cqt.empty() ? "" : "first failure at " + bad_cqt),
            make_check("qt-graded-multiplicity.value-at-(1,1)-mu-independent", bad_mu.empty(),
                       bad_mu.empty() ? "" : "first failure at " + bad_mu)};
}

/// Searches degree 3 for a strict partition witnessing that the
/// deformation relation tying the P and H bases classically has no spin
/// analogue: H^-_xi((1-t)x;t) fails to be a polynomial multiple of the
/// dual basis element hat-H_xi(x;t).
inline std::vector<Check> suite_negative_deformation(int n = 3) {
    std::vector<Check> out;
    bool witness = false;
    std::string detail;
    for (auto& chk : spin_deformation_relation_check(n)) {
        std::string d = "xi=" + chk.xi.str() +
                        (chk.proportional
                             ? " proportional with ratio " + chk.ratio.str() +
                                   (chk.polynomial_ratio ? " (polynomial)" : " (not polynomial)")
                             : " not proportional");
        out.push_back(Check{"spin-deformation.entry", CheckStatus::Info, d});
        if (!chk.proportional || !chk.polynomial_ratio) {
            witness = true;
            if (detail.empty()) detail = d;
        }
    }
    out.push_back(make_check("spin-deformation.witness-found-at-n=" + std::to_string(n), witness,
                             witness ? detail : "no witness: relation held for all xi"));
    return out;
}

/// Informational scan: is K^-_{xi mu}(t) palindromic, i.e. equal to
/// t^m K^-_{xi mu}(1/t) for some m?  Reported per entry, never failing.
inline std::vector<Check> suite_symmetry_scan(int n) {
    std::vector<Check> out;
    long sym = 0, nonsym = 0, zero = 0;
    for (int m = 1; m <= n; ++m)
        for (auto& e : kminus_symmetry_scan(m)) {
            std::string d = "K-[" + e.xi.str() + "," + e.mu.str() + "]: ";
            if (e.zero) { d += "zero"; ++zero; }
            else if (e.symmetric) {
                d += "symmetric with offset " + std::to_string(e.offset);
                ++sym;
            } else { d += "not symmetric"; ++nonsym; }
            out.push_back(Check{"symmetry-scan.entry", CheckStatus::Info, d});
        }
    out.push_back(Check{"symmetry-scan.summary", CheckStatus::Info,
                        std::to_string(sym) + " symmetric, " + std::to_string(nonsym) +
                            " not symmetric, " + std::to_string(zero) + " zero, n<=" +
                            std::to_string(n)});
    return out;
}

struct SuiteReport {
    std::string suite;
    int n = 0;
    std::vector<Check> checks;

    bool pass() const {
        for (auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }

    json to_json() const {
        json arr = json::array();
        for (auto& c : checks)
            arr.push_back(json{{"name", c.name},
                               {"status", c.status == CheckStatus::Pass   ? "pass"
                                          : c.status == CheckStatus::Fail ? "fail"
                                                                          : "info"},
                               {"details", c.details}});
        return json{{"suite", suite}, {"n", n}, {"checks", arr}, {"pass", pass()}};
    }
};

/// Named suites exposed on the command line.  Caps keep the exact
/// computations at desk scale: 8 for the t-level suites, 6 for the
/// oracle/function-level suites, 5 for the q,t layer.
inline SuiteReport run_suite(const std::string& name, int n) {
    auto capped = [&](int cap) {
        if (n < 0 || n > cap)
            throw std::invalid_argument("suite " + name + ": n must be in 0.." +
                                        std::to_string(cap));
        return n;
    };
    SuiteReport rep;
    rep.suite = name;
    rep.n = n;
    if (name == "A") {
        rep.checks = suite_theorem_A(capped(8));
    } else if (name == "2.2") {
        rep.checks = suite_classical_kostka(capped(8));
    } else if (name == "oracles") {
        rep.checks = suite_classical_oracles(capped(6));
        auto spin = suite_spin_oracles(n);
        rep.checks.insert(rep.checks.end(), spin.begin(), spin.end());
    } else if (name == "4.3") {
        rep.checks = suite_spin_hl(capped(6), std::min(n, 5));
    } else if (name == "B1") {
        rep.checks = suite_graded_multiplicity(capped(8));
    } else if (name == "qt") {
        rep.checks = suite_qt(capped(5));
    } else if (name == "negative-4.4") {
        rep.n = 3;
        rep.checks = suite_negative_deformation(3);
    } else if (name == "q4.8") {
        rep.checks = suite_symmetry_scan(capped(8));
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return rep;
}

} // namespace spinkostka
