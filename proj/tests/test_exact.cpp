#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wsqrt/exact.hpp"

#include <stdexcept>

using wsqrt::ComplexRational;
using wsqrt::Poly;
using wsqrt::Rational;

TEST_CASE("complex rational arithmetic is exact") {
  const ComplexRational a{Rational(1), Rational(2)};   // 1+2i
  const ComplexRational b{Rational(3), Rational(-1)};  // 3-i
  CHECK(a * b == ComplexRational{Rational(5), Rational(5)});
  CHECK((a * b) / b == a);
  CHECK(a + (-a) == ComplexRational(0));
  CHECK(a - a == ComplexRational(0));

  // 1/i = -i
  CHECK(ComplexRational(1) / ComplexRational::i() == -ComplexRational::i());
  // (1/2 + 1/3 i)(6) = 3 + 2i
  const ComplexRational c{Rational(1, 2), Rational(1, 3)};
  CHECK(c * ComplexRational(6) == ComplexRational{Rational(3), Rational(2)});
}

TEST_CASE("division by zero is a domain error") {
  CHECK_THROWS_AS(ComplexRational(1) / ComplexRational(0), std::domain_error);
}

TEST_CASE("rational parsing") {
  CHECK(wsqrt::parse_rational("1/2") == Rational(1, 2));
  CHECK(wsqrt::parse_rational("-3") == Rational(-3));
  CHECK(wsqrt::parse_rational("-7/4") == Rational(-7, 4));
  CHECK_THROWS_AS(wsqrt::parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(wsqrt::parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(wsqrt::parse_rational("1/0"), std::invalid_argument);

  CHECK(wsqrt::parse_complex_rational("1/2") == ComplexRational(Rational(1, 2)));
  CHECK(wsqrt::parse_complex_rational("0,1") == ComplexRational::i());
  CHECK(wsqrt::parse_complex_rational("1/2,-1/3") ==
        ComplexRational{Rational(1, 2), Rational(-1, 3)});
}

TEST_CASE("complex rational display") {
  CHECK(ComplexRational(0).to_string() == "0");
  CHECK(ComplexRational(Rational(1, 2)).to_string() == "1/2");
  CHECK(ComplexRational::i().to_string() == "i");
  CHECK((-ComplexRational::i()).to_string() == "-i");
  CHECK(ComplexRational{Rational(0), Rational(-1, 8)}.to_string() == "-1/8i");
  CHECK(ComplexRational{Rational(1, 2), Rational(-1, 8)}.to_string() == "(1/2-1/8i)");
}

TEST_CASE("polynomials in the formal symbol") {
  const Poly v = Poly::variable();
  const Poly p = v - Poly(1);         // -1 + V
  const Poly sq = p * p;              // 1 - 2V + V^2
  CHECK(sq.coeff(0) == ComplexRational(1));
  CHECK(sq.coeff(1) == ComplexRational(-2));
  CHECK(sq.coeff(2) == ComplexRational(1));
  CHECK(sq.degree() == 2);
  CHECK(p.to_string() == "-1 + V");
  CHECK(sq.to_string() == "1 - 2V + V^2");

  CHECK((p - p).is_zero());
  CHECK(Poly(1).is_one());
  CHECK((v * Poly(0)).is_zero());
  CHECK(Poly().degree() == -1);
}
