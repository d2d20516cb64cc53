#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qdyson/ctengine.hpp"
#include "qdyson/harness.hpp"
#include "qdyson/symfun.hpp"

using namespace qdyson;

namespace {

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(uint64_t seed) : rng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    QPoly poly(int max_deg = 4, int max_coef = 5) {
        std::vector<Integer> c(static_cast<size_t>(uniform(0, max_deg + 1)));
        for (auto& x : c) x = Integer(uniform(-max_coef, max_coef));
        return QPoly(std::move(c));
    }

    QPoly nonzero_poly() {
        for (;;) {
            QPoly p = poly();
            if (!p.is_zero()) return p;
        }
    }

    ScalarQ scalar() { return ScalarQ::fraction(poly(), nonzero_poly()); }

    LaurentPoly laurent(const Vars& vars, int terms = 4) {
        LaurentPoly p(vars);
        for (int t = uniform(0, terms); t > 0; --t) {
            Monomial m(vars->size());
            for (int i = 0; i < vars->size(); ++i) m[i] = uniform(-2, 2);
            p += LaurentPoly::term(vars, m, ScalarQ::fraction(poly(2, 3), QPoly{uniform(1, 3)}));
        }
        return p;
    }
};

}  // namespace

TEST_CASE("QPoly arithmetic agrees with dense reference") {
    Gen g(11);
    for (int it = 0; it < 300; ++it) {
        const QPoly a = g.poly(6, 1000);
        const QPoly b = g.poly(6, 1000);
        CHECK(oracle::from(a * b) == oracle::mul(oracle::from(a), oracle::from(b)));
        CHECK(oracle::from(a + b) == oracle::add(oracle::from(a), oracle::from(b)));
    }
}

TEST_CASE("polynomial gcd divides both and exact division inverts multiplication") {
    Gen g(12);
    for (int it = 0; it < 200; ++it) {
        const QPoly common = g.nonzero_poly();
        const QPoly a = g.nonzero_poly() * common;
        const QPoly b = g.nonzero_poly() * common;
        const QPoly d = gcd(a, b);
        REQUIRE_FALSE(d.is_zero());
        CHECK(divexact(a, d) * d == a);
        CHECK(divexact(b, d) * d == b);
        CHECK(divexact(d, gcd(d, common)) * gcd(d, common) == d);
        CHECK(divexact(a * b, b) == a);
    }
}

TEST_CASE("ScalarQ is a field") {
    Gen g(13);
    for (int it = 0; it < 200; ++it) {
        const ScalarQ x = g.scalar();
        const ScalarQ y = g.scalar();
        const ScalarQ z = g.scalar();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK(x - x == ScalarQ(0));
        if (!y.is_zero()) {
            CHECK((x / y) * y == x);
        }
        CHECK(ScalarQ::parse(x.to_string()) == x);
    }
}

TEST_CASE("ScalarQ canonical form is unique") {
    Gen g(14);
    for (int it = 0; it < 200; ++it) {
        const QPoly num = g.poly();
        const QPoly den = g.nonzero_poly();
        QPoly k = g.nonzero_poly();
        if (g.uniform(0, 1) == 0) k = QPoly{g.uniform(1, 6) * (g.uniform(0, 1) == 0 ? 1 : -1)};
        const ScalarQ a = ScalarQ::fraction(num, den);
        const ScalarQ b = ScalarQ::fraction(num * k, den * k);
        CHECK(a.num() == b.num());
        CHECK(a.den() == b.den());
        CHECK(a.den().leading().sign() > 0);
    }
}

TEST_CASE("Laurent polynomials form a commutative ring and print round-trips") {
    Gen g(15);
    const Vars x = dyson_vars(2, 1);
    for (int it = 0; it < 150; ++it) {
        const LaurentPoly p = g.laurent(x);
        const LaurentPoly r = g.laurent(x);
        const LaurentPoly s = g.laurent(x);
        CHECK(p * (r + s) == p * r + p * s);
        CHECK((p * r) * s == p * (r * s));
        CHECK(p * r == r * p);
        CHECK(p - p == LaurentPoly(x));
        CHECK(LaurentPoly::parse(x, p.to_string()) == p);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    Gen g(16);
    const Vars x = dyson_vars(2, 1);
    for (int it = 0; it < 100; ++it) {
        const LaurentPoly p = g.laurent(x);
        const LaurentPoly r = g.laurent(x);
        const int e = g.uniform(0, 2);
        const Monomial target{g.uniform(0, 1), g.uniform(0, 1), 0};
        CHECK(substitute(p * r, 2, e, target) == substitute(p, 2, e, target) * substitute(r, 2, e, target));
        CHECK(substitute(p + r, 2, e, target) == substitute(p, 2, e, target) + substitute(r, 2, e, target));
    }
}

TEST_CASE("complete functions are symmetric in the alphabet letters") {
    Gen g(17);
    for (int it = 0; it < 20; ++it) {
        const std::vector<int> a{g.uniform(1, 3), g.uniform(1, 3), g.uniform(1, 3)};
        const Vars x = dyson_vars(3);
        Alphabet alph = build_alphabet(a, 0);
        const int r = g.uniform(0, 3);
        const LaurentPoly before = complete_h(r, alph, x);
        std::shuffle(alph.letters.begin(), alph.letters.end(), g.rng);
        CHECK(complete_h(r, alph, x) == before);
        // sum_k (-1)^k e_k h_{r-k} = 0 for r >= 1
        if (r >= 1) {
            const auto hs = complete_h_upto(r, alph, x);
            const auto es = elementary_e_upto(r, alph, x);
            LaurentPoly acc(x);
            for (int k = 0; k <= r; ++k) {
                const LaurentPoly t = es[static_cast<size_t>(k)] * hs[static_cast<size_t>(r - k)];
                if (k % 2 == 0) {
                    acc += t;
                } else {
                    acc -= t;
                }
            }
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("brute force agrees with the generating-function expansion") {
    Gen g(18);
    int checked = 0;
    for (int it = 0; it < 40; ++it) {
        const int n = g.uniform(1, 3);
        std::vector<int> a;
        for (int i = 0; i < n; ++i) a.push_back(g.uniform(1, n == 3 ? 2 : 3));
        const int n0 = g.uniform(0, n);
        std::vector<int> v;
        for (int i = 0; i < n; ++i) v.push_back(g.uniform(0, 2));
        int total = 0;
        for (int x : v) total += x;
        const auto parts = partitions_of(total);
        const Partition lambda = parts[static_cast<size_t>(g.uniform(0, static_cast<int>(parts.size()) - 1))];
        const DysonInstance inst{a, n0, v, lambda};
        CAPTURE(inst.key());
        CHECK(d_brute(inst) == d_via_generating_function(inst));
        ++checked;
    }
    CHECK(checked == 40);
}

TEST_CASE("instance generation is deterministic and respects bounds") {
    GenBounds b;
    b.max_n = 2;
    b.max_a = 1;
    b.count = 50;
    const auto first = gen_instances(7, b);
    const auto second = gen_instances(7, b);
    REQUIRE(first.size() == 50);
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].key() == second[i].key());
        CHECK(first[i].n() <= 2);
        for (int ai : first[i].a) CHECK(ai == 1);
        for (int vi : first[i].v) CHECK(vi >= 0);
        int total = 0;
        for (int vi : first[i].v) total += vi;
        CHECK(first[i].lambda.size() == total);
    }
    GenBounds neg = b;
    neg.v_min = -2;
    neg.require_composition = false;
    bool any_negative = false;
    for (const auto& inst : gen_instances(3, neg)) {
        for (int vi : inst.v) any_negative = any_negative || vi < 0;
    }
    CHECK(any_negative);
}

TEST_CASE("exit code reflects any injected failure") {
    Gen g(19);
    for (int it = 0; it < 200; ++it) {
        std::vector<Report> reports(static_cast<size_t>(g.uniform(0, 8)));
        bool bad = false;
        for (auto& r : reports) {
            const int pick = g.uniform(0, 9);
            r.status = pick == 0 ? Status::mismatch : pick == 1 ? Status::error : pick < 5 ? Status::skipped : Status::verified;
            bad = bad || r.status == Status::mismatch || r.status == Status::error;
        }
        CHECK(exit_code(reports) == (bad ? 1 : 0));
    }
}

TEST_CASE("report sorting is independent of input order") {
    Gen g(20);
    std::vector<Report> reports;
    for (int i = 0; i < 30; ++i) {
        Report r;
        r.task = "t" + std::to_string(g.uniform(0, 2));
        r.key = "k" + std::to_string(g.uniform(0, 9));
        r.method = static_cast<Method>(g.uniform(0, 3));
        reports.push_back(r);
    }
    auto a = reports;
    auto b = reports;
    std::shuffle(b.begin(), b.end(), g.rng);
    sort_reports(a);
    sort_reports(b);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].task == b[i].task);
        CHECK(a[i].key == b[i].key);
        CHECK(a[i].method == b[i].method);
    }
}
