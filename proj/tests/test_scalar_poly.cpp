#include <catch2/catch_amalgamated.hpp>

#include "tuttex/polynomial.hpp"
#include "tuttex/rational.hpp"

using namespace tuttex;

TEST_CASE("rational construction and normalization") {
  CHECK(rational(2, 4) == rational(1, 2));
  CHECK(rational(-2, -4) == rational(1, 2));
  CHECK(rational(2, -4) == rational(-1, 2));
  CHECK(to_string(rational(-6, 8)) == "-3/4");
  CHECK(to_string(rational(5)) == "5");
  CHECK_THROWS_AS(rational(1, 0), parse_error);
}

TEST_CASE("rational parsing accepts p, -p, p/q and nothing else") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("3/9") == rational(1, 3));
  CHECK(parse_rational("-3/9") == rational(-1, 3));
  for (const char* bad : {"", "-", "1/", "/2", "1/-2", "a", "1.5", "1/0x", "+3", " 1"})
    CHECK_THROWS_AS(parse_rational(bad), parse_error);
  CHECK_THROWS_AS(parse_rational("4/0"), parse_error);
}

TEST_CASE("rational powers, including the 0^0 = 1 convention") {
  CHECK(rational_pow(rational(2, 3), 3) == rational(8, 27));
  CHECK(rational_pow(rational(2, 3), -2) == rational(9, 4));
  CHECK(rational_pow(Rational(0), 0) == 1);
  CHECK(rational_pow(Rational(0), 5) == 0);
  CHECK(rational_pow(rational(-1, 2), 2) == rational(1, 4));
  CHECK(rational_pow(rational(-1, 2), 3) == rational(-1, 8));
  CHECK_THROWS_AS(rational_pow(Rational(0), -1), inapplicable_error);
}

TEST_CASE("polynomial arithmetic and evaluation") {
  Polynomial p = Polynomial::monomial(1, 2) + Polynomial::monomial(3, 1) + Polynomial(2);
  CHECK(p.degree() == 2);
  CHECK(p.low_degree() == 0);
  CHECK(p.evaluate(2) == 12);
  CHECK(p.to_string("u") == "u^2 + 3*u + 2");

  Polynomial q = Polynomial::monomial(1, 1) - Polynomial(1);  // t - 1
  CHECK((p * q).evaluate(5) == p.evaluate(5) * 4);
  CHECK((p - p).is_zero());
  CHECK(Polynomial().to_string() == "0");

  // cancellation must renormalize the exponent range
  Polynomial c = Polynomial::monomial(1, 3) + Polynomial(1);
  c -= Polynomial::monomial(1, 3);
  CHECK(c.degree() == 0);
  CHECK(c == Polynomial(1));
}

TEST_CASE("laurent polynomials carry negative exponents exactly") {
  Polynomial lp = Polynomial::monomial(rational(1, 2), -2) + Polynomial::monomial(1, 1);
  CHECK(lp.low_degree() == -2);
  CHECK(!lp.is_proper());
  CHECK(lp.evaluate(2) == rational(17, 8));
  CHECK_THROWS_AS(lp.evaluate(0), inapplicable_error);
  CHECK(lp.shifted(2).is_proper());
  CHECK(lp.shifted(2).evaluate(2) == rational(17, 2));
}

TEST_CASE("interpolation reproduces exact polynomials") {
  // values of 2t^3 - t + 5/7 at four abscissas determine it exactly
  Polynomial target =
      Polynomial::monomial(2, 3) + Polynomial::monomial(-1, 1) + Polynomial(rational(5, 7));
  std::vector<std::pair<Rational, Rational>> pts;
  for (long t : {-2, -1, 0, 1})
    pts.push_back({Rational(t), target.evaluate(Rational(t))});
  CHECK(interpolate(pts) == target);

  // rational abscissas, constant polynomial
  CHECK(interpolate({{rational(1, 2), Rational(4)}}) == Polynomial(4));

  CHECK_THROWS_AS(interpolate({{Rational(1), Rational(0)}, {Rational(1), Rational(1)}}),
                  std::invalid_argument);
}
