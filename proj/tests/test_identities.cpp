#include <doctest.h>

#include "oracle.hpp"
#include "qdyson/ctengine.hpp"
#include "qdyson/errors.hpp"
#include "qdyson/identities.hpp"

using namespace qdyson;

TEST_CASE("subsets") {
    CHECK(subsets_of_size(4, 2).size() == 6);
    CHECK(subsets_of_size(3, 0) == std::vector<Subset>{Subset{}});
    CHECK(subsets_of_size(2, 3).empty());
    CHECK(nonempty_subsets(Subset{1, 3}).size() == 3);
}

TEST_CASE("q-Dyson closed form") {
    const std::vector<int> a11{1, 1};
    CHECK(qdyson_rhs(a11) == QPoly{1, 1});
    const std::vector<int> a4{4};
    CHECK(qdyson_rhs(a4) == QPoly{1});
    const std::vector<int> a121{1, 2, 1};
    CHECK(qdyson_rhs(a121) == q_multinomial(4, a121));
}

TEST_CASE("single-row closed form") {
    const std::vector<int> a11{1, 1};
    CHECK(kadell_rhs(a11, 1, 1) == ScalarQ(QPoly{0, 1}));
    CHECK(kadell_rhs(a11, 2, 1) == ScalarQ(1));
    for (int a1 = 1; a1 <= 3; ++a1) {
        for (int r = 1; r <= 3; ++r) {
            const std::vector<int> a{a1};
            const auto expected = oracle::to_scalar(oracle::d_value(a, 0, {r}, {r}));
            CHECK(kadell_rhs(a, 1, r) == expected);
        }
    }
    const std::vector<int> a212{2, 1, 2};
    for (int k = 1; k <= 3; ++k) {
        for (int r = 1; r <= 3; ++r) {
            std::vector<int> v(3, 0);
            v[static_cast<size_t>(k - 1)] = r;
            CAPTURE(k);
            CAPTURE(r);
            CHECK(kadell_rhs(a212, k, r) == oracle::to_scalar(oracle::d_value(a212, 0, v, {r})));
        }
    }
}

TEST_CASE("vanishing predicate") {
    const std::vector<int> v11{1, 1};
    const auto w = vanishing_predicate(v11, Partition({2}), 0);
    REQUIRE(w.has_value());
    CHECK(w->j == 1);
    CHECK(w->per_subset.size() == 2);
    for (const auto& e : w->per_subset) {
        CHECK(e.v_sum == 1);
        CHECK(e.lambda_sum == 2);
    }
    const std::vector<int> v01{0, 1};
    CHECK_FALSE(vanishing_predicate(v01, Partition({1}), 0).has_value());
    const std::vector<int> v20{2, 0};
    CHECK_FALSE(vanishing_predicate(v20, Partition({1, 1}), 1).has_value());
    CHECK_THROWS_AS((void)vanishing_predicate(v20, Partition({1}), 0), PreconditionError);
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Partition({1, 1}), Partition({2})));
    CHECK_FALSE(dominance_leq(Partition({2}), Partition({1, 1})));
    CHECK(dominance_leq(Partition({2, 1}), Partition({2, 1})));
    const std::vector<int> v{0, 2, -1, 1};
    CHECK(dominated_by_sorted(Partition({1, 1}), v));
    CHECK_FALSE(dominated_by_sorted(Partition({3}), v));
}

TEST_CASE("L-weight") {
    const std::vector<int> a{5, 7, 11};
    CHECK(l_weight(3, Subset{1}, Subset{2}, a) == 5 + 11);
    CHECK(l_weight(3, Subset{}, Subset{2}, a) == 0);
    CHECK(l_weight(2, Subset{2}, Subset{2}, a) == 0);
}

TEST_CASE("q-binomial sum identity") {
    CHECK(check_e_sum(1, 1));
    CHECK(check_e_sum(3, 0));
    CHECK(check_e_sum(4, 2));
}

TEST_CASE("transformed subset sum") {
    const std::vector<int> a11{1, 1};
    CHECK(check_transsum(2, Subset{1, 2}, a11, 1));
    const std::vector<int> a121{1, 2, 1};
    CHECK(check_transsum(3, Subset{1, 3}, a121, 2));
    const std::vector<int> a211{2, 1, 1};
    CHECK(check_transsum(3, Subset{1, 2, 3}, a211, 1));
}
