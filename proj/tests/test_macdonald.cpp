#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinkostka/macdonald.hpp"
#include "spinkostka/verify.hpp"

using namespace spinkostka;

TEST_CASE("degree 2 qt-kostka matrix") {
    CHECK(qt_kostka(Partition{2}, Partition{2}) == PolyQT(1));
    CHECK(qt_kostka(Partition{1, 1}, Partition{2}) == PolyQT::q(1));
    CHECK(qt_kostka(Partition{2}, Partition{1, 1}) == PolyQT::t(1));
    CHECK(qt_kostka(Partition{1, 1}, Partition{1, 1}) == PolyQT(1));
    CHECK_THROWS_AS(qt_kostka(Partition{2}, Partition{1, 1, 1}), std::invalid_argument);
}

TEST_CASE("macdonald P specializations") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> ones(size_t(n), 1);
        CHECK(macdonald_P(Partition(ones)) ==
              SymFunc<RatQT>::generator(Basis::Monomial, Partition(ones)));
        for (auto& lam : partitions_of(n)) {
            const auto P = macdonald_P(lam);
            const auto s_m = to_basis(SymFunc<Rational>::generator(Basis::Schur, lam),
                                      Basis::Monomial);
            for (auto& mu : partitions_of(n)) {
                const RatQT v = P.coeff(mu);
                // q = t collapses to the Schur function
                CHECK(v.num().substitute_q_to_t() ==
                      PolyT(s_m.coeff(mu)) * v.den().substitute_q_to_t());
                // q = 0 is Hall-Littlewood
                CHECK(v.specialize_q(Rational(0)) == hl_P(lam).coeff(mu));
            }
        }
    }
}

TEST_CASE("macdonald P is orthogonal under the q,t inner product") {
    for (int n = 1; n <= 4; ++n)
        for (auto& lam : partitions_of(n))
            for (auto& mu : partitions_of(n)) {
                if (lam == mu) continue;
                CHECK(inner_product_weighted<RatQT>(macdonald_P(lam), macdonald_P(mu),
                                                    macdonald_weight)
                          .is_zero());
            }
}

TEST_CASE("integral form normalization") {
    // c_lambda at q=0 is b_lambda(t)
    for (int n = 1; n <= 5; ++n)
        for (auto& lam : partitions_of(n))
            CHECK(macdonald_norm_c(lam).specialize_q(Rational(0)) == b_poly(lam));
}

TEST_CASE("qt-kostka unitriangularity at the origin") {
    for (int n = 1; n <= 4; ++n)
        for (auto& lam : partitions_of(n))
            for (auto& mu : partitions_of(n))
                CHECK(qt_kostka(lam, mu).evaluate(Rational(0), Rational(0)) ==
                      (lam == mu ? Rational(1) : Rational(0)));
}

TEST_CASE("qt-kostka conjugation duality") {
    // K_{lambda mu}(q,t) = K_{lambda' mu'}(t,q): swap variables and conjugate
    auto swap_qt = [](const PolyQT& p) {
        PolyQT r;
        for (auto& [e, v] : p.terms()) r.add_to_coeff({e.t, e.q}, v);
        return r;
    };
    for (int n = 1; n <= 4; ++n)
        for (auto& lam : partitions_of(n))
            for (auto& mu : partitions_of(n))
                CHECK(qt_kostka(lam, mu) ==
                      swap_qt(qt_kostka(lam.conjugate(), mu.conjugate())));
}

TEST_CASE("qt layer suite up to degree 4") {
    for (auto& chk : suite_qt(4)) {
        INFO(chk.name, ": ", chk.details);
        CHECK(chk.status == CheckStatus::Pass);
    }
}

TEST_CASE("spin qt-kostka frozen values") {
    CHECK(spin_qt_kostka(StrictPartition{2}, Partition{2}) ==
          PolyQT(2) + PolyQT::q(1) * Rational(2));
    CHECK(spin_qt_kostka(StrictPartition{2}, Partition{1, 1}) ==
          PolyQT(2) + PolyQT::t(1) * Rational(2));
    CHECK_THROWS_AS(spin_qt_kostka(StrictPartition{2}, Partition{1, 1, 1}),
                    std::invalid_argument);
}

TEST_CASE("doubly graded multiplicity") {
    // specialization chain at q=0
    for (int n = 1; n <= 4; ++n)
        for (auto& xi : strict_partitions_of(n))
            for (auto& mu : partitions_of(n))
                CHECK(C_qt(xi, mu).specialize_q(Rational(0)) ==
                      graded_multiplicity_C(xi, mu));
    // value at (1,1) is independent of mu
    CHECK(C_qt(StrictPartition{2}, Partition{2}).evaluate(Rational(1), Rational(1)) ==
          C_qt(StrictPartition{2}, Partition{1, 1}).evaluate(Rational(1), Rational(1)));
    // diagonal at q=0 collapses to the single monomial
    // 2^{l-(l-d)/2} t^{n(xi)} inherited from the t-level diagonal
    for (int n = 1; n <= 4; ++n)
        for (auto& xi : strict_partitions_of(n)) {
            const PolyT diag = C_qt(xi, xi.as_partition()).specialize_q(Rational(0));
            const int l = xi.length(), d = xi.delta_stat();
            CHECK(diag == PolyT::term(Rational(1) * rational_pow2(l - (l - d) / 2),
                                      xi.n_stat()));
        }
}

TEST_CASE("specialization square commutes") {
    // (q,t) matrix specialized at q=0 equals the t-level matrix computed
    // without ever introducing q
    for (int n = 1; n <= 4; ++n)
        for (auto& xi : strict_partitions_of(n))
            for (auto& mu : partitions_of(n))
                CHECK(spin_qt_kostka(xi, mu).specialize_q(Rational(0)) ==
                      spin_kostka(xi, mu));
}
