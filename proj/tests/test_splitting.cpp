#include <doctest.h>

#include "oracle.hpp"
#include "qdyson/ctengine.hpp"
#include "qdyson/errors.hpp"
#include "qdyson/splitting.hpp"

using namespace qdyson;

namespace {

DysonInstance inst(std::vector<int> a, int n0, std::vector<int> v, std::vector<int> lambda) {
    return DysonInstance{std::move(a), n0, std::move(v), Partition(std::move(lambda))};
}

}  // namespace

TEST_CASE("Pochhammer lemma") {
    CHECK(verify_poch_lemma(1, 1, 1, PochIdentity::b1));
    CHECK(verify_poch_lemma(2, 3, 1, PochIdentity::c));
    CHECK(verify_poch_lemma(0, 0, 0, PochIdentity::b1));
    CHECK(verify_poch_lemma(0, 1, -1, PochIdentity::b2));
    CHECK_THROWS_AS((void)verify_poch_lemma(1, 1, 2, PochIdentity::b1), DomainError);
    CHECK_THROWS_AS((void)verify_poch_lemma(1, 1, 1, PochIdentity::c), DomainError);
}

TEST_CASE("second-block coefficients for one variable") {
    const std::vector<int> a1{1};
    const Vars x = split_vars(1, 1);
    CHECK(equivalent(build_Bij(a1, 0, 1, 0, 1), FactoredRational(ScalarQ(1), LaurentPoly::constant(x, ScalarQ(1)), {})));

    const std::vector<int> a2{2};
    const ScalarQ b10 = ScalarQ::fraction(QPoly{1}, QPoly{1, -1});
    const ScalarQ b11 = ScalarQ::fraction(QPoly{0, -1}, QPoly{1, -1});
    CHECK(equivalent(build_Bij(a2, 0, 1, 0, 1), FactoredRational(b10, LaurentPoly::constant(x, ScalarQ(1)), {})));
    CHECK(equivalent(build_Bij(a2, 0, 1, 1, 1), FactoredRational(b11, LaurentPoly::constant(x, ScalarQ(1)), {})));
}

TEST_CASE("first-block coefficient degree") {
    const std::vector<int> a21{2, 1};
    const auto A = build_Aij(a21, 1, 1, 0, 1);
    CHECK(lowest_degree_in(A.numerator(), 0) >= 1);
    CHECK(degree_claim_holds(a21, 1, 1, 0, 1));
    const std::vector<int> a11{1, 1};
    CHECK_THROWS_AS((void)build_Aij(a11, 1, 1, 0, 1), DomainError);
}

TEST_CASE("residues agree with the closed-form coefficients") {
    const std::vector<int> a2{2};
    CHECK(residue_check(a2, 0, 1, 0, 1));
    const std::vector<int> a11{1, 1};
    CHECK(residue_check(a11, 0, 1, 0, 1));
    CHECK(residue_check(a11, 0, 2, 0, 1));
    const std::vector<int> a21{2, 1};
    CHECK(residue_check(a21, 1, 1, 0, 1));
}

TEST_CASE("partial fraction splitting") {
    const std::vector<int> a2{2};
    CHECK(verify_split(a2, 0, 1));
    const std::vector<int> a11{1, 1};
    CHECK(verify_split(a11, 1, 1));
    const std::vector<int> a22{2, 2};
    CHECK(verify_split(a22, 0, 2));
    CHECK_THROWS_AS((void)verify_split(a11, 2, 1), DegenerateParameters);
    const std::vector<int> big{1, 1, 1, 1};
    CHECK_THROWS_AS((void)verify_split(big, 0, 1), DomainError);
    CHECK_NOTHROW((void)verify_split(big, 0, 1, SplitBounds{4, 3, 2}));
}

TEST_CASE("inductive formula") {
    CHECK(inductive_d(inst({1, 1}, 0, {0, 1}, {1})) == ScalarQ(1));
    CHECK(inductive_d(inst({1, 1}, 0, {1, 0}, {1})) == ScalarQ(QPoly{0, 1}));
    for (const DysonInstance& x : {inst({2, 1}, 1, {3, 0}, {2, 1}), inst({2, 1}, 1, {2, 1}, {1, 1, 1}),
                                   inst({2, 2, 1}, 2, {3, 1, 1}, {2, 2, 1})}) {
        CAPTURE(x.key());
        CHECK(inductive_d(x) == oracle::to_scalar(oracle::d_value(x.a, x.n0, x.v, x.lambda.parts())));
    }
    // here r = v_1 - n + n0 = 1, so lambda_1 = 2 breaks the hypothesis
    CHECK_THROWS_AS((void)inductive_d(inst({2, 1}, 1, {2, 0}, {2})), PreconditionError);
    CHECK_THROWS_AS((void)inductive_d(inst({1, 1}, 0, {1, 1}, {2})), PreconditionError);
    CHECK_THROWS_AS((void)inductive_d(inst({1, 1}, 2, {0, 0}, {})), PreconditionError);
}

TEST_CASE("factored rational equality clears denominators") {
    const Vars x = dyson_vars(1, 1);
    const LinearFactor f{0, Monomial{1, -1}};
    // (1 - x/w) / (1 - x/w) == 1
    const FactoredRational lhs(ScalarQ(1), expand(x, f), {f});
    const FactoredRational rhs(ScalarQ(1), LaurentPoly::constant(x, ScalarQ(1)), {});
    CHECK(equivalent(lhs, rhs));
    FactoredRational removed = lhs;
    removed.remove_denominator(f);
    CHECK_FALSE(equivalent(removed, rhs));
    CHECK_THROWS_AS(removed.remove_denominator(f), DomainError);
    const std::vector<FactoredRational> parts{lhs, rhs};
    CHECK(common_denominator(parts) == std::vector<LinearFactor>{f});
    const FactoredRational twice(ScalarQ(2), LaurentPoly::constant(x, ScalarQ(1)), {});
    CHECK(sum_equals(parts, twice));
}
