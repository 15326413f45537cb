#include <catch2/catch_amalgamated.hpp>

#include "dkostka/intpoly.hpp"
#include "dkostka/ratfn.hpp"

using namespace dkostka;

static IntPoly P(const std::string& s) { return IntPoly::parse(s); }

TEST_CASE("basic arithmetic and identities") {
  IntPoly t = IntPoly::t_power(1);
  CHECK((t * t + t).str() == "t^2 + t");
  CHECK((t - t).is_zero());
  CHECK(IntPoly(0).str() == "0");
  CHECK((IntPoly(1) - IntPoly::t_power(3)).str() == "-t^3 + 1");
  CHECK((P("t^2 + 2t + 1") * P("t - 1")).str() == "t^3 + t^2 - t - 1");
}

TEST_CASE("parse round trip") {
  for (const char* s :
       {"0", "1", "-1", "t", "2t", "t^2 + t", "t^8 + t^6 + 2t^4", "t^-1",
        "3t^12 - t^3 + 7", "t^16 + t^14 + t^12 + 2t^10 + t^8 + t^6 + t^4"}) {
    CHECK(IntPoly::parse(s).str() == s);
  }
  CHECK(IntPoly::parse("t^{10}").str() == "t^10");
  CHECK(IntPoly::parse(" 2t^4+t^2 ").str() == "2t^4 + t^2");
  CHECK_THROWS(IntPoly::parse("t^"));
  CHECK_THROWS(IntPoly::parse("x"));
  CHECK_THROWS(IntPoly::parse("1 +"));
  CHECK_THROWS(IntPoly::parse(""));
}

TEST_CASE("latex rendering braces long exponents") {
  CHECK(P("t^10 + t^9").str_latex() == "t^{10} + t^9");
  CHECK(P("t^-2").str_latex() == "t^{-2}");
}

TEST_CASE("laurent substitutions") {
  IntPoly p = P("t^3 + 2t - 1");
  CHECK(p.subst_power(2).str() == "t^6 + 2t^2 - 1");
  CHECK(p.reciprocal().str() == "-1 + 2t^-1 + t^-3");
  CHECK(p.reciprocal().reciprocal() == p);
  CHECK(P("t^4 + t^2").half_exponents().str() == "t^2 + t");
  CHECK_THROWS(P("t^3").half_exponents());
  CHECK(p.shifted(2).str() == "t^5 + 2t^3 - t^2");
  CHECK(p.shifted(2).shifted(-2) == p);
}

TEST_CASE("evaluation") {
  IntPoly p = P("t^3 + 2t - 1");
  CHECK(p.eval(2) == 11);
  CHECK(p.eval_one() == 2);
  CHECK(P("t^-2 + t^2").eval(1) == 2);
  CHECK_THROWS(P("t^-1").eval(3));
}

TEST_CASE("exact division") {
  IntPoly a = P("t^4 - 1"), b = P("t^2 + 1");
  CHECK(a.exact_div(b).str() == "t^2 - 1");
  CHECK_THROWS(P("t^2 + 1").exact_div(P("t + 1")));
  CHECK(P("6t^2 + 3t").exact_div_scalar(3).str() == "2t^2 + t");
  CHECK_THROWS(P("6t^2 + 3t").exact_div_scalar(2));
  // Laurent shift is handled.
  CHECK(P("t + t^-1").exact_div(P("t^-1")).str() == "t^2 + 1");
}

TEST_CASE("gcd over Z[t]") {
  CHECK(IntPoly::gcd(P("t^2 - 1"), P("t^2 + 2t + 1")).str() == "t + 1");
  CHECK(IntPoly::gcd(P("6t"), P("4")).str() == "2");
  CHECK(IntPoly::gcd(P("0"), P("-t - 1")).str() == "t + 1");
  CHECK(IntPoly::gcd(P("t^5 - 1"), P("t^3 - 1")).str() == "t - 1");
  // primitive PRS survives coefficient growth
  IntPoly f = P("t^8 + t^6 - 3t^4 - 3t^3 + 8t^2 + 2t - 5");
  IntPoly g = P("3t^6 + 5t^4 - 4t^2 - 9t + 21");
  CHECK(IntPoly::gcd(f, g).str() == "1");
}

TEST_CASE("exponent parity helpers") {
  CHECK(P("t^4 + t^2 + 1").exponents_congruent(0, 2));
  CHECK(P("t^5 + t^3").exponents_congruent(1, 2));
  CHECK_FALSE(P("t^4 + t^3").exponents_congruent(0, 2));
  CHECK(P("t^3 + t").has_nonnegative_coeffs());
  CHECK_FALSE(P("t - 1").has_nonnegative_coeffs());
}

TEST_CASE("ratfn field laws and canonical form") {
  RatFn t(IntPoly::t_power(1));
  RatFn a(P("t^2 - 1"), P("t + 1"));
  CHECK(a == RatFn(P("t - 1")));
  CHECK(a.is_polynomial());

  RatFn b(P("1"), P("1 - t"));  // denominator sign flips
  CHECK(b.den().str() == "t - 1");
  CHECK(b.num().str() == "-1");

  RatFn c = RatFn(1) / (RatFn(1) - t) + RatFn(1) / (RatFn(1) + t);
  CHECK(c == RatFn(P("-2"), P("t^2 - 1")));
  CHECK((c * (RatFn(1) - t * t)).str() == "2");

  // a/b + c/d - c/d == a/b exactly
  RatFn x(P("t^3 + 2"), P("t^2 - 3"));
  RatFn y(P("t - 5"), P("7t^4 + 1"));
  CHECK(x + y - y == x);
  CHECK((x * y) / y == x);
  CHECK_THROWS(x / RatFn(0));
}

TEST_CASE("ratfn with laurent numerator") {
  RatFn r(P("t^-2 + 1"), P("t"));
  CHECK(r * RatFn(P("t^3")) == RatFn(P("t^2 + 1")));
  CHECK(r.eval(2) == Rational(5, 8));
  RatFn s = r.subst_power(2);
  CHECK(s == RatFn(P("t^-4 + 1"), P("t^2")));
  CHECK(r.reciprocal_var() == RatFn(P("t^3 + t")));
}

TEST_CASE("ratfn pole detection") {
  RatFn r(P("1"), P("t - 1"));
  CHECK_THROWS(r.eval(1));
  CHECK(RatFn(P("t^2 - 1"), P("t - 1")).eval(1) == 2);
}
