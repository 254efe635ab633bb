#include <doctest.h>

#include "harmcont/polynomial.hpp"
#include "test_util.hpp"

using namespace harmcont;
using hctest::Q;

namespace {

Polynomial poly(const std::vector<std::string>& ascending) {
    std::vector<Rational> c;
    for (const auto& s : ascending) c.push_back(Q(s));
    return Polynomial(std::move(c));
}

Polynomial from_roots(const std::vector<Rational>& roots) {
    Polynomial p = Polynomial::constant(Rational(1));
    for (const Rational& r : roots) p = p * Polynomial({-r, Rational(1)});
    return p;
}

}  // namespace

TEST_CASE("basic arithmetic and normalization") {
    Polynomial p = poly({"1", "2"});      // 1 + 2x
    Polynomial q = poly({"-1", "-2"});
    CHECK((p + q).is_zero());
    CHECK(p.degree() == 1);
    CHECK((p * p) == poly({"1", "4", "4"}));
    CHECK(p.eval(Q("3/2")) == Q("4"));
    CHECK(Polynomial({Rational(0)}).is_zero());
    CHECK(poly({"2", "0", "0"}).degree() == 0);
}

TEST_CASE("division leaves the expected remainder") {
    SeededRng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> nc(1 + rng.next_below(6)), dc(1 + rng.next_below(4));
        for (auto& v : nc) v = Rational(static_cast<long>(rng.next_below(9)) - 4);
        for (auto& v : dc) v = Rational(static_cast<long>(rng.next_below(9)) - 4);
        Polynomial num(std::move(nc)), den(std::move(dc));
        if (den.is_zero()) continue;
        Polynomial quot, rem;
        Polynomial::divrem(num, den, quot, rem);
        CHECK(num == quot * den + rem);
        CHECK(rem.degree() < den.degree());
    }
}

TEST_CASE("derivative and monic") {
    Polynomial p = poly({"1", "0", "3"});  // 1 + 3x^2
    CHECK(p.derivative() == poly({"0", "6"}));
    CHECK(poly({"2", "4"}).monic() == poly({"1/2", "1"}));
}

TEST_CASE("gcd of polynomials") {
    Polynomial a = from_roots({Rational(1), Rational(2)});
    Polynomial b = from_roots({Rational(1), Rational(3)});
    CHECK(gcd_monic(a, b) == from_roots({Rational(1)}));
    CHECK(gcd_monic(a, from_roots({Rational(5)})).degree() == 0);
}

TEST_CASE("squarefree decomposition") {
    // (x-1)^2 (x-2)
    Polynomial p = from_roots({Rational(1), Rational(1), Rational(2)});
    auto factors = squarefree_decomposition(p);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].factor == from_roots({Rational(2)}));
    CHECK(factors[0].multiplicity == 1);
    CHECK(factors[1].factor == from_roots({Rational(1)}));
    CHECK(factors[1].multiplicity == 2);

    // squarefree input comes back whole
    Polynomial q = from_roots({Rational(1), Rational(2), Rational(-3)});
    auto sf = squarefree_decomposition(q);
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].factor == q.monic());
    CHECK(sf[0].multiplicity == 1);

    // multiplicity 3 with a gap at multiplicity 2
    Polynomial cubic = from_roots({Rational(4), Rational(4), Rational(4), Rational(7)});
    auto f3 = squarefree_decomposition(cubic);
    REQUIRE(f3.size() == 2);
    CHECK(f3[0].multiplicity == 1);
    CHECK(f3[1].multiplicity == 3);
    CHECK(f3[1].factor == from_roots({Rational(4)}));
}

TEST_CASE("sturm sequence counts roots") {
    Polynomial p = from_roots({Rational(1), Rational(2), Rational(3)});
    SturmSequence sturm(p);
    CHECK(sturm.count_roots(Rational(0), Rational(4)) == 3);
    CHECK(sturm.count_roots(Q("3/2"), Q("5/2")) == 1);
    CHECK(sturm.count_roots(Rational(1), Rational(3)) == 2);  // half-open: excludes 1, includes 3
    CHECK(sturm.count_roots(Rational(-10), Rational(0)) == 0);
}

TEST_CASE("cauchy bound encloses all real roots") {
    Polynomial p = from_roots({Rational(-7), Q("1/3"), Rational(5)});
    Rational bound = cauchy_root_bound(p);
    CHECK(bound > 7);
    SturmSequence sturm(p);
    CHECK(sturm.count_roots(-bound, bound) == 3);
}

TEST_CASE("isolating the roots of x^2 - 2") {
    Polynomial p = poly({"-2", "0", "1"});
    auto roots = isolate_real_roots(p, Q("1/1000000000000"));
    REQUIRE(roots.size() == 2);
    // intervals bracket the true irrational roots: sign change of p
    for (const auto& iv : roots) {
        CHECK(!iv.exact());
        CHECK(iv.hi - iv.lo <= Q("1/1000000000000"));
        CHECK(p.sign_at(iv.lo) * p.sign_at(iv.hi) < 0);
    }
    CHECK(roots[0].hi < 0);
    CHECK(roots[1].lo > 0);
}

TEST_CASE("exact rational roots may collapse to points") {
    // x(x-1): roots 0 and 1; 0 is hit exactly by a bisection midpoint
    Polynomial p = poly({"0", "-1", "1"});
    auto roots = isolate_real_roots(p, Q("1/1000000000000"));
    REQUIRE(roots.size() == 2);
    for (const auto& iv : roots) {
        if (iv.exact()) {
            CHECK(p.eval(iv.lo) == 0);
        } else {
            CHECK(p.sign_at(iv.lo) * p.sign_at(iv.hi) < 0);
        }
    }
}

TEST_CASE("no real roots") {
    Polynomial p = poly({"1", "0", "1"});  // x^2 + 1
    CHECK(isolate_real_roots(p, Q("1/1000")).empty());
}

TEST_CASE("isolation separates clustered roots") {
    Polynomial p = from_roots({Q("1/3"), Q("17/48"), Q("3/8")});
    auto roots = isolate_real_roots(p, Q("1/1000000000000"));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].midpoint() < roots[1].midpoint());
    CHECK(roots[1].midpoint() < roots[2].midpoint());
    // each bracket contains exactly its root
    SturmSequence sturm(p);
    for (const auto& iv : roots) {
        if (!iv.exact()) CHECK(sturm.count_roots(iv.lo, iv.hi) == 1);
    }
}

TEST_CASE("polynomial text form") {
    CHECK(poly({"-1", "5", "-5", "1"}).to_text() == "x^3 - 5*x^2 + 5*x - 1");
    CHECK(poly({"0"}).to_text() == "0");
    CHECK(poly({"1/2"}).to_text() == "1/2");
}

TEST_CASE("zero polynomial is rejected where a polynomial is required") {
    CHECK_THROWS_AS(squarefree_decomposition(Polynomial{}), Error);
    CHECK_THROWS_AS(SturmSequence{Polynomial{}}, Error);
    CHECK_THROWS_AS(Polynomial{}.monic(), Error);
}
