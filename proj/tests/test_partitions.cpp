#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "spinkostka/partition.hpp"
#include "spinkostka/serialize.hpp"

using namespace spinkostka;

namespace {

// independent oracle: partition counts by the coin-change recurrence
long partition_count(int n) {
    std::vector<std::vector<long>> dp(size_t(n + 1), std::vector<long>(size_t(n + 1), 0));
    for (size_t k = 0; k <= size_t(n); ++k) dp[0][k] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
            dp[size_t(m)][size_t(k)] =
                dp[size_t(m)][size_t(k - 1)] + (m >= k ? dp[size_t(m - k)][size_t(k)] : 0);
    return dp[size_t(n)][size_t(n)];
}

} // namespace

TEST_CASE("partition validation and accessors") {
    const Partition p{4, 2, 1};
    CHECK(p.size() == 7);
    CHECK(p.length() == 3);
    CHECK(p.part(1) == 4);
    CHECK(p.part(5) == 0);
    CHECK(p.multiplicity(2) == 1);
    CHECK(Partition().empty());
    CHECK(Partition().size() == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    CHECK(p.str() == "[4,2,1]");
}

TEST_CASE("partition enumeration in canonical order") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
    CHECK(partitions_of(3) ==
          std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
    CHECK(partitions_of(8).size() == 22);
    for (int n = 0; n <= 10; ++n) {
        const auto& all = partitions_of(n);
        CHECK(long(all.size()) == partition_count(n));
        std::set<std::vector<int>> seen;
        for (auto& p : all) {
            CHECK(p.size() == n);
            CHECK(seen.insert(p.parts()).second);  // no duplicates
        }
        // reverse lexicographic: each partition's parts vector is
        // lexicographically after its successor's
        for (size_t i = 0; i + 1 < all.size(); ++i)
            CHECK(std::lexicographical_compare(all[i + 1].parts().begin(),
                                               all[i + 1].parts().end(),
                                               all[i].parts().begin(), all[i].parts().end()));
        for (auto& p : all) CHECK(all[size_t(canonical_index(p))] == p);
    }
}

TEST_CASE("strict partition enumeration") {
    CHECK(strict_partitions_of(1) == std::vector<StrictPartition>{StrictPartition{1}});
    CHECK(strict_partitions_of(3) ==
          std::vector<StrictPartition>{StrictPartition{3}, StrictPartition{2, 1}});
    CHECK(strict_partitions_of(4) ==
          std::vector<StrictPartition>{StrictPartition{4}, StrictPartition{3, 1}});
    CHECK_THROWS_AS(StrictPartition({2, 2}), std::invalid_argument);
    for (int n = 0; n <= 10; ++n) {
        const auto& all = partitions_of(n);
        for (auto& xi : strict_partitions_of(n)) {
            CHECK(is_strict(xi.as_partition()));
            CHECK(std::find(all.begin(), all.end(), xi.as_partition()) != all.end());
        }
    }
}

TEST_CASE("dominance order") {
    CHECK(dominates(Partition{3}, Partition{2, 1}));
    CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
    CHECK(dominates(Partition{2, 1}, Partition{2, 1}));
    CHECK_THROWS_AS(dominates(Partition{2}, Partition{3}), std::invalid_argument);
    for (int n = 1; n <= 8; ++n) {
        const auto& all = partitions_of(n);
        for (auto& a : all) {
            CHECK(dominates(a, a));
            for (auto& b : all) {
                if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
                for (auto& c : all)
                    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
            }
        }
        // canonical order refines dominance
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = i + 1; j < all.size(); ++j)
                CHECK_FALSE((dominates(all[j], all[i]) && all[i] != all[j]));
    }
}

TEST_CASE("statistics, conjugate, frobenius") {
    CHECK(Partition{2, 1}.n_stat() == 1);
    CHECK(Partition{1, 1, 1}.n_stat() == 3);
    CHECK(Partition().n_stat() == 0);
    CHECK(Partition{2, 1}.delta_stat() == 0);
    CHECK(Partition{3}.delta_stat() == 1);
    CHECK(Partition{3, 3}.conjugate() == Partition{2, 2, 2});

    const auto [alpha, beta] = Partition{5, 4, 3, 1}.frobenius();
    CHECK(alpha == std::vector<int>{4, 2, 0});
    CHECK(beta == std::vector<int>{3, 1, 0});

    for (int n = 0; n <= 8; ++n)
        for (auto& p : partitions_of(n)) {
            CHECK(p.conjugate().conjugate() == p);
            const auto [a, b] = p.frobenius();
            CHECK(Partition::from_frobenius(a, b) == p);
            // n(lambda) equals n computed from the conjugate diagram
            int sum = 0;
            const Partition c = p.conjugate();
            for (int i = 1; i <= c.length(); ++i) sum += c.part(i) * (c.part(i) - 1) / 2;
            CHECK(p.n_stat() == sum);
        }
}

TEST_CASE("shifted diagram contents and hooks") {
    const ShiftedDiagram sd(StrictPartition{4, 2, 1});
    CHECK(sd.double_partition() == Partition{5, 4, 4, 1});
    CHECK(sd.cells().size() == 7);
    CHECK(sd.row_hooks(1) == std::vector<int>{6, 5, 4, 1});
    CHECK(sd.row_hooks(2) == std::vector<int>{3, 2});
    CHECK(sd.row_hooks(3) == std::vector<int>{1});
    std::vector<int> contents;
    for (auto& c : sd.cells()) contents.push_back(c.content);
    CHECK(contents == std::vector<int>{0, 1, 2, 3, 0, 1, 0});

    const ShiftedDiagram sd21(StrictPartition{2, 1});
    CHECK(sd21.double_partition() == Partition{3, 3});
    CHECK(sd21.row_hooks(1) == std::vector<int>{3, 2});
    CHECK(sd21.row_hooks(2) == std::vector<int>{1});

    const ShiftedDiagram sd1(StrictPartition{1});
    CHECK(sd1.cells().size() == 1);
    CHECK(sd1.cells()[0].hook == 1);
    CHECK(sd1.cells()[0].content == 0);
}

TEST_CASE("row hook multiset law") {
    for (int n = 1; n <= 9; ++n)
        for (auto& xi : strict_partitions_of(n)) {
            const ShiftedDiagram sd(xi);
            CHECK(sd.double_partition().size() == 2 * n);
            const int l = xi.length();
            for (int i = 1; i <= l; ++i) {
                std::vector<int> expected;
                for (int v = 1; v <= xi.part(i); ++v) expected.push_back(v);
                for (int j = i + 1; j <= l; ++j) expected.push_back(xi.part(i) + xi.part(j));
                for (int j = i + 1; j <= l; ++j) {
                    auto it = std::find(expected.begin(), expected.end(),
                                        xi.part(i) - xi.part(j));
                    REQUIRE(it != expected.end());
                    expected.erase(it);
                }
                std::vector<int> got = sd.row_hooks(i);
                std::sort(expected.begin(), expected.end());
                std::sort(got.begin(), got.end());
                CHECK(got == expected);
            }
        }
}

TEST_CASE("partition json round trip") {
    const Partition p{4, 2, 1};
    CHECK(partition_from_json(to_json(p)) == p);
    CHECK(partition_from_json(json::parse("[3,1]")) == Partition{3, 1});
    CHECK(partition_from_json(json::parse("[]")) == Partition());
    CHECK_THROWS_AS(partition_from_json(json::parse("[1,2]")), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(json::parse("7")), std::invalid_argument);
    CHECK(strict_partition_from_json(json::parse("[3,1]")) == StrictPartition{3, 1});
    CHECK_THROWS_AS(strict_partition_from_json(json::parse("[2,2]")), std::invalid_argument);
}
