#include <catch_amalgamated.hpp>

#include <random>

#include "vtc/exact/ratfunc.hpp"

using namespace vtc;

namespace {

RatFunc T() { return RatFunc::var(); }
RatFunc pt(const char* s) { return parse_ratfunc(s, "t"); }

// Random rational function with small integer coefficients, degree <= 2 / 2.
RatFunc random_ratfunc(std::mt19937_64& rng, bool nonzero = false) {
  auto coeff = [&] { return Rat(std::int64_t(rng() % 7) - 3); };
  for (;;) {
    Poly num({coeff(), coeff(), coeff()});
    Poly den({coeff(), coeff(), coeff()});
    if (den.is_zero()) continue;
    RatFunc f(num, den);
    if (nonzero && f.is_zero()) continue;
    return f;
  }
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rat("6/8")) == "3/4");
  CHECK(to_string(parse_rat("-3/4")) == "-3/4");
  CHECK(to_string(parse_rat("\xE2\x88\x92" "3/4")) == "-3/4");
  CHECK(to_string(parse_rat("10/5")) == "2");
  CHECK(to_string(ratio(Int(3), Int(-6))) == "-1/2");
  CHECK_THROWS_AS(parse_rat("1/0"), DivisionByZero);
  CHECK_THROWS_AS(parse_rat("1/"), ParseError);
  CHECK_THROWS_AS(parse_rat("x"), ParseError);
  CHECK(floor(Rat(-1, 2)) == -1);
  CHECK(frac(Rat(-1, 3)) == Rat(2, 3));
}

TEST_CASE("phases form a group mod 1") {
  std::mt19937_64 rng(7);
  auto rq = [&] { return Rat(std::int64_t(rng() % 41) - 20, std::int64_t(rng() % 12) + 1); };
  for (int k = 0; k < 200; ++k) {
    Phase a(rq()), b(rq()), c(rq());
    CHECK(a.value() >= 0);
    CHECK(a.value() < 1);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a + Phase()) == a);
    CHECK((a + (-a)).is_trivial());
    CHECK(a - b == a + (-b));
  }
  for (int n = -5; n <= 5; ++n) CHECK(Phase(Rat(n)).is_trivial());
  CHECK(to_string(Phase(Rat(-1, 2))) == "1/2");
}

TEST_CASE("rational function arithmetic examples") {
  CHECK(to_string(T() + T().inverse(), "t") == "(t^2+1)/t");
  RatFunc c = RatFunc(13) - 6 * T() - 6 * T().inverse();
  CHECK(c(Rat(1)) == 1);
  RatFunc s = RatFunc::var();
  CHECK(((s + 1) / (2 * s)) * ((2 * s) / (s + 1)) == RatFunc(1));
  CHECK_THROWS_AS(T() / RatFunc(0), DivisionByZero);
  CHECK_THROWS_AS(T().inverse()(Rat(0)), DivisionByZero);
}

TEST_CASE("canonical text form") {
  CHECK(to_string(pt("3*t/4 - 3/2 + 3/(4*t)"), "t") == "(3*t^2-6*t+3)/(4*t)");
  CHECK(to_string(RatFunc(Rat(-1, 2)), "s") == "-1/2");
  CHECK(to_string(RatFunc(0), "t") == "0");
  CHECK(to_string(parse_ratfunc("3*s/8", "s"), "s") == "(3*s)/8");
  CHECK(to_string(pt("1/(2*t-1)"), "t") == "1/(2*t-1)");
  CHECK(to_string(parse_ratfunc("s^-1 - 1/2", "s"), "s") == "(-s+2)/(2*s)");
  CHECK(to_string(pt("-t"), "t") == "-t");
  CHECK(to_string(pt("t^2"), "t") == "t^2");
  CHECK(to_string(pt("(2*t+2)/(4*t+4)"), "t") == "1/2");
  CHECK_THROWS_AS(pt("t +"), ParseError);
  CHECK_THROWS_AS(pt("s"), ParseError);
  CHECK_THROWS_AS(pt("1/(t-t)"), DivisionByZero);
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    RatFunc f = random_ratfunc(rng);
    std::string text = to_string(f, "t");
    CHECK(pt(text.c_str()) == f);
    CHECK(to_string(pt(text.c_str()), "t") == text);
  }
}

TEST_CASE("field laws on random triples") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == RatFunc(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
    // normalization is idempotent
    CHECK(RatFunc(a.num(), a.den()) == a);
    CHECK(a.den().leading() == 1);
  }
}

TEST_CASE("substitution examples") {
  RatFunc x = RatFunc::var();
  RatFunc k_of_t = (RatFunc(2) - 3 * x) / (2 * x - 1);
  CHECK(to_string(substitute(2 * x + 3, k_of_t), "t") == "1/(2*t-1)");
  CHECK(substitute(x, x) == x);
  CHECK(substitute((x + 1) / (2 * x), RatFunc(1) / (2 * x - 1)) == x);
  CHECK_THROWS_AS(substitute(x.inverse(), RatFunc(0)), DegenerateSubstitution);
  CHECK_THROWS_AS(substitute(RatFunc(1) / (x - 1), RatFunc(1)), DegenerateSubstitution);
}

TEST_CASE("substitution is functorial and a homomorphism") {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 150) {
    RatFunc f = random_ratfunc(rng), g = random_ratfunc(rng), h = random_ratfunc(rng);
    try {
      RatFunc lhs = substitute(substitute(f, g), h);
      RatFunc rhs = substitute(f, substitute(g, h));
      RatFunc fh = substitute(f, h), gh = substitute(g, h);
      CHECK(lhs == rhs);
      CHECK(substitute(f + g, h) == fh + gh);
      CHECK(substitute(f * g, h) == fh * gh);
      ++checked;
    } catch (const DegenerateSubstitution&) {
    } catch (const DivisionByZero&) {
    }
  }
}

TEST_CASE("as_constant") {
  CHECK(as_constant(RatFunc(Rat(-1, 2))) == Rat(-1, 2));
  RatFunc s = RatFunc::var();
  CHECK_FALSE(as_constant(Rat(3, 8) * s + Rat(3, 8) / s - Rat(3, 4)).has_value());
  auto h = [&](int r, int q) {
    return Rat(r * r - 1, 4) * s - Rat(r * q - 1, 2) + Rat(q * q - 1, 4) / s;
  };
  CHECK(as_constant(h(2, 2) - h(2, 1) - h(1, 2)) == Rat(-1, 2));
  CHECK(as_constant(RatFunc(0)) == Rat(0));
}

TEST_CASE("integer-valued polynomials") {
  Poly r = Poly::x();
  CHECK(integer_valued_on_positives(Rat(-1) * (r - Poly::constant(1))));
  CHECK_FALSE(integer_valued_on_positives(Rat(-1, 2) * (r - Poly::constant(1))));
  CHECK(first_non_integer(Rat(-1, 2) * (r - Poly::constant(1))) == 2);
  CHECK(integer_valued_on_positives(Rat(1, 2) * r * (r - Poly::constant(1))));
  CHECK(integer_valued_on_positives(Poly()));

  CHECK(to_factored_string(Rat(-1, 2) * (r - Poly::constant(1))) == "-(r-1)/2");
  CHECK(to_factored_string(Rat(1, 2) * r * (r - Poly::constant(1))) == "(r^2-r)/2");
  CHECK(to_factored_string(Poly::constant(Rat(-7, 3))) == "-7/3");
  CHECK(to_factored_string(Rat(-1) * (r - Poly::constant(1))) == "-(r-1)");
  CHECK(parse_intpoly("-(r-1)/2") == Rat(-1, 2) * (r - Poly::constant(1)));
}

TEST_CASE("integrality test agrees with brute force on r = 1..100") {
  std::mt19937_64 rng(13);
  int positives = 0;
  for (int k = 0; k < 500; ++k) {
    int deg = int(rng() % 5);
    std::vector<Rat> c;
    // mix of binomial-style and arbitrary coefficients to hit both outcomes
    Int den = Int(std::int64_t(rng() % 12) + 1);
    for (int i = 0; i <= deg; ++i) c.push_back(ratio(Int(std::int64_t(rng() % 25) - 12), den));
    Poly p(c);
    if (k % 3 == 0) {
      // C(r, deg) scaled by an integer is integer-valued
      Poly b = Poly::constant(1);
      for (int i = 0; i < deg; ++i) b = Rat(1, i + 1) * (b * (Poly::x() - Poly::constant(i)));
      p = Rat(std::int64_t(rng() % 5) - 2) * b + Poly::constant(std::int64_t(rng() % 3));
    }
    bool brute = true;
    std::optional<std::int64_t> first;
    for (int x = 1; x <= 100; ++x)
      if (!is_integer(p(Rat(x)))) {
        brute = false;
        if (!first) first = x;
      }
    positives += brute;
    CHECK(integer_valued_on_positives(p) == brute);
    CHECK(first_non_integer(p) == first);
  }
  CHECK(positives > 100);
}

TEST_CASE("interpolation recovers polynomials") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 100; ++k) {
    std::vector<Rat> c;
    for (int i = 0; i < 4; ++i) c.push_back(Rat(std::int64_t(rng() % 9) - 4, std::int64_t(rng() % 5) + 1));
    Poly p(c);
    std::vector<std::pair<Rat, Rat>> pts;
    for (int x = 1; x <= 5; ++x) pts.emplace_back(Rat(x), p(Rat(x)));
    CHECK(interpolate(pts) == p);
  }
}
