#include <doctest.h>

#include "qdyson/errors.hpp"
#include "qdyson/laurent.hpp"

using namespace qdyson;

namespace {

LaurentPoly P(const Vars& vars, const char* text) { return LaurentPoly::parse(vars, text); }

}  // namespace

TEST_CASE("product of two binomials") {
    const Vars x = dyson_vars(2);
    const LaurentPoly lhs = P(x, "1 + (-1)*x1*x2^-1") * P(x, "1 + (-q)*x2*x1^-1");
    CHECK(lhs == P(x, "1 + (q) + (-q)*x2*x1^-1 + (-1)*x1*x2^-1"));
    CHECK(lp_arith(lhs, LaurentPoly(x), PolyOp::add) == lhs);
    CHECK(lp_arith(lhs, LaurentPoly::constant(x, ScalarQ(1)), PolyOp::mul) == lhs);
    CHECK(lp_arith(lhs, lhs, PolyOp::sub).is_zero());
}

TEST_CASE("coefficient extraction") {
    const Vars x = dyson_vars(2);
    const LaurentPoly p = P(x, "1 + (q) + (-q)*x2*x1^-1 + (-1)*x1*x2^-1");
    CHECK(p.coefficient(Monomial{0, 0}) == ScalarQ(QPoly{1, 1}));
    CHECK(p.constant_term() == ScalarQ(QPoly{1, 1}));
    CHECK(p.coefficient(Monomial{3, -3}).is_zero());
    CHECK(P(x, "(1 + q)*x1").coefficient(Monomial{1, 0}) == ScalarQ(QPoly{1, 1}));
}

TEST_CASE("poch_monomial") {
    const Vars x = dyson_vars(2);
    CHECK(poch_monomial(x, Monomial{1, -1}, 1, 0) == P(x, "1 + (-1)*x1*x2^-1"));
    CHECK(poch_monomial(x, Monomial{-1, 1}, 1, 1) == P(x, "1 + (-q)*x2*x1^-1"));
    CHECK(poch_monomial(x, Monomial{1, -1}, 0, 5).is_one());
    const Vars xw = dyson_vars(1, 1);
    CHECK(poch_monomial(xw, Monomial{1, -1}, 2, 0) == P(xw, "1 + (-1 - q)*x1*w1^-1 + (q)*x1^2*w1^-2"));
    CHECK_THROWS_AS((void)poch_monomial(x, Monomial{1, -1}, -1, 0), DomainError);
}

TEST_CASE("substitute a variable by a q-shifted monomial") {
    const Vars xw = dyson_vars(2, 1);
    const int w1 = 2;
    CHECK(substitute(P(xw, "1 + (-1)*x1*w1^-1"), w1, 0, Monomial{1, 0, 0}).is_zero());
    const Vars x = dyson_vars(2);
    CHECK(substitute(P(xw, "w1^2"), w1, 1, Monomial{1, 0, 0}) == P(x, "(q^2)*x1^2"));
    CHECK(substitute(P(xw, "1 + (-q)*x2*w1^-1"), w1, 1, Monomial{1, 0, 0}) == P(x, "1 + (-1)*x2*x1^-1"));
    CHECK_THROWS_AS((void)substitute(P(xw, "w1"), w1, 0, Monomial{0, 0, 1}), DomainError);
}

TEST_CASE("lowest degree in a variable") {
    const Vars x = dyson_vars(2);
    CHECK(lowest_degree_in(P(x, "x1^2 + (q)*x1^3"), 0) == 2);
    CHECK(lowest_degree_in(P(x, "1 + x1"), 0) == 0);
    CHECK(lowest_degree_in(P(x, "x2*x1^-1"), 0) == -1);
}

TEST_CASE("monomial algebra") {
    const Monomial m{2, -1, 0};
    CHECK((m * m.inverse()).is_one());
    CHECK(m.pow(3) == Monomial{6, -3, 0});
    CHECK(m.total_degree() == 1);
    CHECK((Monomial{1, 0, 0} < Monomial{0, 1, 0}) != (Monomial{0, 1, 0} < Monomial{1, 0, 0}));
}

TEST_CASE("variables must match") {
    const LaurentPoly a = LaurentPoly::variable(dyson_vars(2), 0);
    const LaurentPoly b = LaurentPoly::variable(dyson_vars(1, 1), 0);
    CHECK_THROWS_AS((void)(a + b), ContextMismatch);
    CHECK_NOTHROW((void)(a + LaurentPoly::variable(dyson_vars(2), 1)));
}

TEST_CASE("embedding into a larger variable set") {
    const Vars small = dyson_vars(2);
    const Vars big = dyson_vars(3, 1);
    const std::vector<int> map{0, 2};
    const LaurentPoly p = P(small, "x1*x2^-1 + (q)");
    CHECK(p.embedded(big, map) == P(big, "x1*x3^-1 + (q)"));
    CHECK(drop_var(big, 1)->names() == std::vector<std::string>{"x1", "x3", "w1"});
}

TEST_CASE("printing is canonical") {
    const Vars x = dyson_vars(2);
    const LaurentPoly p = P(x, "(-1)*x1*x2^-1 + 1 + (q)");
    CHECK(P(x, p.to_string().c_str()) == p);
    CHECK(LaurentPoly(x).to_string() == "0");
    CHECK_THROWS_AS((void)P(x, "x3"), DomainError);
}
