#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinkostka/serialize.hpp"
#include "spinkostka/symfunc.hpp"

using namespace spinkostka;

namespace {

SymFunc<Rational> gen(Basis b, std::initializer_list<int> parts) {
    return SymFunc<Rational>::generator(b, Partition(parts));
}

SymFunc<Rational> random_symfunc(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    const auto& parts = partitions_of(degree);
    std::uniform_int_distribution<size_t> pick(0, parts.size() - 1);
    SymFunc<Rational> f(degree, Basis::PowerSum);
    for (int i = 0; i < 3; ++i) f.add_to(parts[pick(rng)], Rational(coeff(rng)));
    return f;
}

} // namespace

TEST_CASE("murnaghan-nakayama characters") {
    CHECK(symmetric_group_character(Partition{2}, Partition{2}) == 1);
    CHECK(symmetric_group_character(Partition{1, 1}, Partition{2}) == -1);
    CHECK(symmetric_group_character(Partition{3}, Partition{1, 1, 1}) == 1);
    CHECK(symmetric_group_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(symmetric_group_character(Partition{2, 1}, Partition{3}) == -1);
    // column orthogonality of the character table at n=5
    for (auto& rho : partitions_of(5))
        for (auto& sigma : partitions_of(5)) {
            mpz_class acc = 0;
            for (auto& lam : partitions_of(5))
                acc += mpz_class(long(symmetric_group_character(lam, rho))) *
                       long(symmetric_group_character(lam, sigma));
            CHECK(acc == (rho == sigma ? z_of(rho) : mpz_class(0)));
        }
}

TEST_CASE("basis transitions on frozen examples") {
    auto s21m = to_basis(gen(Basis::Schur, {2, 1}), Basis::Monomial);
    CHECK(s21m.coeff(Partition{2, 1}) == Rational(1));
    CHECK(s21m.coeff(Partition{1, 1, 1}) == Rational(2));
    CHECK(s21m.coeff(Partition{3}) == Rational(0));

    for (int n = 1; n <= 6; ++n)
        CHECK(to_basis(SymFunc<Rational>::generator(Basis::Complete, Partition{n}),
                       Basis::Schur) ==
              SymFunc<Rational>::generator(Basis::Schur, Partition{n}));

    auto p2s = to_basis(gen(Basis::PowerSum, {2}), Basis::Schur);
    CHECK(p2s.coeff(Partition{2}) == Rational(1));
    CHECK(p2s.coeff(Partition{1, 1}) == Rational(-1));

    // e_mu = sum_lambda K_{lambda' mu} s_lambda spot check
    auto e2s = to_basis(gen(Basis::Elementary, {2}), Basis::Schur);
    CHECK(e2s.coeff(Partition{1, 1}) == Rational(1));
    CHECK(e2s.coeff(Partition{2}) == Rational(0));
}

TEST_CASE("round trips through all bases") {
    for (int n = 0; n <= 8; ++n)
        for (auto& lam : partitions_of(n)) {
            const auto f = SymFunc<Rational>::generator(Basis::Schur, lam);
            for (Basis b : {Basis::Monomial, Basis::Elementary, Basis::Complete,
                            Basis::PowerSum})
                CHECK(to_basis(to_basis(f, b), Basis::Schur) == f);
        }
    // composed transitions agree: m -> s -> p vs m -> p at n = 6
    const Mat mp = mat_mul(transition(6, Basis::Monomial, Basis::Schur),
                           transition(6, Basis::Schur, Basis::PowerSum));
    CHECK(mp == transition(6, Basis::Monomial, Basis::PowerSum));
}

TEST_CASE("products through the power sum basis") {
    auto p1 = gen(Basis::PowerSum, {1});
    auto sq = mul(p1, p1);
    CHECK(sq.coeff(Partition{1, 1}) == Rational(1));
    // s_1 * s_1 = s_2 + s_11
    auto s1 = gen(Basis::Schur, {1});
    auto prod = to_basis(mul(s1, s1), Basis::Schur);
    CHECK(prod.coeff(Partition{2}) == Rational(1));
    CHECK(prod.coeff(Partition{1, 1}) == Rational(1));
}

TEST_CASE("inner products") {
    for (auto& lam : partitions_of(4))
        for (auto& mu : partitions_of(4))
            CHECK(inner_product(SymFunc<Rational>::generator(Basis::Schur, lam),
                                SymFunc<Rational>::generator(Basis::Schur, mu)) ==
                  (lam == mu ? Rational(1) : Rational(0)));
    CHECK(inner_product(gen(Basis::Complete, {2, 1}), gen(Basis::Monomial, {2, 1})) ==
          Rational(1));
    // full h/m duality at n=5
    for (auto& lam : partitions_of(5))
        for (auto& mu : partitions_of(5))
            CHECK(inner_product(SymFunc<Rational>::generator(Basis::Complete, lam),
                                SymFunc<Rational>::generator(Basis::Monomial, mu)) ==
                  (lam == mu ? Rational(1) : Rational(0)));
    CHECK(inner_product(gen(Basis::PowerSum, {1, 1}), gen(Basis::PowerSum, {1, 1})) ==
          Rational(2));
    CHECK_THROWS_AS(inner_product(gen(Basis::Schur, {2}), gen(Basis::Schur, {1})),
                    std::invalid_argument);
}

TEST_CASE("plethysm scaling") {
    auto p3 = map_coeffs<RatQT>(gen(Basis::PowerSum, {3}),
                                [](const Rational& c) { return RatQT(c); });
    auto scaled = plethysm_scale<RatQT>(
        p3, [](int r) { return RatQT(PolyT(1) - PolyT::t(r)); });
    CHECK(scaled.coeff(Partition{3}) == RatQT(PolyT(1) - PolyT::t(3)));

    auto h2 = map_coeffs<RatQT>(gen(Basis::Complete, {2}),
                                [](const Rational& c) { return RatQT(c); });
    auto there = plethysm_scale<RatQT>(to_basis(h2, Basis::PowerSum), [](int r) {
        return RatQT(PolyQT(1), PolyQT(1) - PolyQT::t(r));
    });
    auto back = plethysm_scale<RatQT>(there, [](int r) { return RatQT(PolyT(1) - PolyT::t(r)); });
    CHECK(back == to_basis(h2, Basis::PowerSum));
    // identity factor
    CHECK(plethysm_scale<RatQT>(there, [](int) { return RatQT(1); }) == there);
}

TEST_CASE("phi doubles odd power sums and kills even ones") {
    CHECK(phi(gen(Basis::PowerSum, {1})).coeff(Partition{1}) == Rational(2));
    CHECK(phi(gen(Basis::PowerSum, {2})).is_zero());
    for (auto& mu : partitions_of(4))
        CHECK(phi(to_basis(SymFunc<Rational>::generator(Basis::Complete, mu),
                           Basis::PowerSum)) == q_fun(mu));
    CHECK(phi(to_basis(gen(Basis::Schur, {2}), Basis::PowerSum)) == q_fun(2));
    CHECK(phi(to_basis(gen(Basis::Schur, {1, 1}), Basis::PowerSum)) == q_fun(2));
}

TEST_CASE("phi is a ring homomorphism") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        const int da = 1 + trial % 4, db = 1 + (trial / 4) % 4;
        const auto f = random_symfunc(rng, da), g = random_symfunc(rng, db);
        CHECK(phi(mul(f, g)) == mul(phi(f), phi(g)));
    }
}

TEST_CASE("q functions") {
    CHECK(q_fun(0).coeff(Partition()) == Rational(1));
    auto q2 = q_fun(2);
    CHECK(q2.coeff(Partition{1, 1}) == Rational(2));
    CHECK(q2.coeff(Partition{2}) == Rational(0));
    auto q3 = q_fun(3);
    CHECK(q3.coeff(Partition{1, 1, 1}) == Rational(4, 3));
    CHECK(q3.coeff(Partition{3}) == Rational(2, 3));
    // independent route: the monomial expansion of the one-row Schur
    // Q-function by marked tableau counts
    for (int r = 1; r <= 6; ++r)
        CHECK(to_basis(schur_Q(StrictPartition{r}), Basis::PowerSum) == q_fun(r));
    // q_lambda is the product of its parts' q functions
    CHECK(q_fun(Partition{2, 1}) == mul(q_fun(2), q_fun(1)));
}

TEST_CASE("schur Q functions expand integrally in the schur basis") {
    auto Q21 = to_basis(schur_Q(StrictPartition{2, 1}), Basis::Schur);
    CHECK(Q21.coeffs.size() == 1);
    CHECK(Q21.coeff(Partition{2, 1}) == Rational(4));
    auto Q3 = to_basis(schur_Q(StrictPartition{3}), Basis::Schur);
    CHECK(Q3.coeff(Partition{3}) == Rational(2));
    CHECK(Q3.coeff(Partition{2, 1}) == Rational(2));
    CHECK(Q3.coeff(Partition{1, 1, 1}) == Rational(2));
    for (int n = 1; n <= 6; ++n)
        for (auto& xi : strict_partitions_of(n))
            for (auto& [lam, c] : to_basis(schur_Q(xi), Basis::Schur).coeffs)
                CHECK(c.is_integer());
}

TEST_CASE("schur Q functions are linearly independent") {
    for (int n = 1; n <= 8; ++n) {
        const auto& strict = strict_partitions_of(n);
        const auto& parts = partitions_of(n);
        // rank of the coefficient matrix (rows: xi, columns: lambda)
        std::vector<std::vector<Rational>> m;
        for (auto& xi : strict) {
            auto Q = to_basis(schur_Q(xi), Basis::Schur);
            std::vector<Rational> row;
            for (auto& lam : parts) row.push_back(Q.coeff(lam));
            m.push_back(std::move(row));
        }
        size_t rank = 0;
        for (size_t col = 0; col < parts.size() && rank < m.size(); ++col) {
            size_t piv = rank;
            while (piv < m.size() && m[piv][col].is_zero()) ++piv;
            if (piv == m.size()) continue;
            std::swap(m[piv], m[rank]);
            for (size_t i = 0; i < m.size(); ++i) {
                if (i == rank || m[i][col].is_zero()) continue;
                const Rational f = m[i][col] / m[rank][col];
                for (size_t j = col; j < parts.size(); ++j) m[i][j] -= f * m[rank][j];
            }
            ++rank;
        }
        CHECK(rank == strict.size());
    }
}

TEST_CASE("determinant form of the phi images") {
    CHECK(S_det(Partition{1}) == q_fun(1));
    CHECK(S_det(Partition{1, 1}) == q_fun(2));
    CHECK(S_det(Partition{1, 1}) == S_det(Partition{2}));
    for (int n = 1; n <= 5; ++n)
        for (auto& lam : partitions_of(n))
            CHECK(S_det(lam) ==
                  phi(to_basis(SymFunc<Rational>::generator(Basis::Schur, lam),
                               Basis::PowerSum)));
}

TEST_CASE("cauchy kernel bidegree matches the S/s pairing") {
    // sum_lambda S_lambda(x) s_lambda(y) against sum_beta q_beta(x) m_beta(y)
    for (int n = 1; n <= 5; ++n) {
        const auto& parts = partitions_of(n);
        const size_t k = parts.size();
        std::vector<std::vector<Rational>> side1(k, std::vector<Rational>(k));
        for (auto& lam : parts) {
            auto S = to_basis(S_det(lam), Basis::Monomial);
            auto s = to_basis(SymFunc<Rational>::generator(Basis::Schur, lam),
                              Basis::Monomial);
            for (size_t a = 0; a < k; ++a) {
                const Rational sa = S.coeff(parts[a]);
                if (sa.is_zero()) continue;
                for (size_t b = 0; b < k; ++b) side1[a][b] += sa * s.coeff(parts[b]);
            }
        }
        for (size_t b = 0; b < k; ++b) {
            auto qb = to_basis(q_fun(parts[b]), Basis::Monomial);
            for (size_t a = 0; a < k; ++a) CHECK(side1[a][b] == qb.coeff(parts[a]));
        }
    }
}

TEST_CASE("symfunc rendering and json") {
    auto f = to_basis(gen(Basis::Schur, {2, 1}), Basis::Monomial);
    CHECK(f.str() == "m[2,1] + 2*m[1,1,1]");
    CHECK(gen(Basis::Schur, {2, 1}).str() == "s[2,1]");
    CHECK(SymFunc<Rational>(3, Basis::Schur).str() == "0");
    CHECK((-gen(Basis::Schur, {2})).str() == "-s[2]");

    const json j = to_json(f);
    CHECK(j.at("degree") == 3);
    CHECK(j.at("basis") == "m");
    REQUIRE(j.at("coeffs").size() == 2);
    // canonical order: [2,1] before [1,1,1]
    CHECK(j.at("coeffs")[0][0] == json::parse("[2,1]"));
    CHECK(j.at("coeffs")[0][1] == "1");
    CHECK(j.at("coeffs")[1][0] == json::parse("[1,1,1]"));
    CHECK(j.at("coeffs")[1][1] == "2");
}
