#include <catch_amalgamated.hpp>

#include <random>

#include "vtc/io.hpp"

using namespace vtc;

namespace {

using L = SimpleLabel;

RatFunc ps(const char* s) { return parse_ratfunc(s, "s"); }

L sbase(std::int64_t n, std::int64_t m) { return L::pair(L::virasoro_kp2(n, 1), L::virasoro_t(m, 1)); }
L obase(std::int64_t n) { return L::pair(L::affine_verma(1), L::virasoro_t(n, 1)); }

FusionElement fe(std::initializer_list<L> xs) {
  FusionElement e;
  for (const auto& x : xs) e.add(x);
  return e;
}

}  // namespace

TEST_CASE("summand templates") {
  for (const char* s : {"(Lk(1,r) x Lt(1,r))", "(V(r) x Lt(1,r))", "Lt(2*r-1,1)", "M(2*r+1)", "S(1,-r+5)"})
    CHECK(to_string(parse_template(s)) == s);
  auto t = parse_template(" ( V( r ) x Lt( 1 , 3 * r - 2 ) ) ");
  CHECK(t.at(2) == L::pair(L::affine_verma(2), L::virasoro_t(1, 4)));
  CHECK(parse_template("Lt(r+2,1)").at(3) == L::virasoro_t(5, 1));
  CHECK_THROWS_AS(parse_template("(Lk(1,r) x"), ParseError);
  CHECK_THROWS_AS(parse_template("Lt(r)"), ParseError);
  CHECK_THROWS_AS(parse_template("Q(r)"), ParseError);
  CHECK_THROWS_AS(parse_template("Lt(1,r) junk"), ParseError);
}

TEST_CASE("induce and restrict") {
  auto svir = builtin_algebra("svir-ext");
  auto osp = builtin_algebra("osp-ext");
  auto u = induce(svir, *svir->base->unit);
  for (std::int64_t r = 1; r <= 6; ++r) CHECK(u.restriction(r) == FusionElement(svir->summand(r)));

  for (std::int64_t n = 1; n <= 5; ++n)
    for (std::int64_t m = 1; m <= 5; ++m) {
      auto mod = induce(svir, sbase(n, m));
      CHECK(mod.restriction(1) == FusionElement(sbase(n, m)));
      for (std::int64_t r = 1; r <= 6; ++r)
        CHECK(mod.restriction(r) == FusionElement(L::pair(L::virasoro_kp2(n, r), L::virasoro_t(m, r))));
    }
  for (std::int64_t n = 1; n <= 7; ++n)
    for (std::int64_t r = 1; r <= 6; ++r)
      CHECK(induce(osp, obase(n)).restriction(r) == FusionElement(L::pair(L::affine_verma(r), L::virasoro_t(n, r))));

  CHECK(induce(svir, sbase(3, 1)).label() == L::super_vir(3, 1));
  CHECK(induce(svir, sbase(2, 1)).label() == L::induced(sbase(2, 1)));
  CHECK(induce(osp, obase(5)).label() == L::osp(5));
  CHECK_THROWS_AS(induce(svir, obase(1)), ForeignLabel);
  CHECK_THROWS_AS(builtin_algebra("nope"), ParseError);
}

TEST_CASE("locality examples") {
  auto svir = builtin_algebra("svir-ext");
  auto c22 = locality(svir, sbase(2, 2));
  CHECK(c22.verdict == Verdict::Local);
  REQUIRE(c22.family.has_value());
  CHECK(to_factored_string(*c22.family) == "-(r-1)");

  auto c21 = locality(svir, sbase(2, 1));
  CHECK(c21.verdict == Verdict::NonLocal);
  CHECK(c21.witness == 2);
  REQUIRE(c21.family.has_value());
  CHECK(to_factored_string(*c21.family) == "-(r-1)/2");
  CHECK_FALSE(c21.checked_up_to.has_value());

  auto osp = builtin_algebra("osp-ext");
  for (std::int64_t n = 1; n <= 9; ++n) {
    auto c = locality(osp, obase(n));
    REQUIRE(c.family.has_value());
    Poly r = Poly::x();
    CHECK(*c.family == Rat(-(n - 1), 2) * (r - Poly::constant(1)));
  }
}

TEST_CASE("locality parities") {
  auto svir = builtin_algebra("svir-ext");
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t m = 1; m <= 12; ++m) {
      INFO("n=" << n << " m=" << m);
      CHECK(is_local(svir, sbase(n, m)) == ((n + m) % 2 == 0));
    }
  auto osp = builtin_algebra("osp-ext");
  for (std::int64_t n = 1; n <= 15; ++n) CHECK(is_local(osp, obase(n)) == (n % 2 == 1));
}

TEST_CASE("locality without a closed form") {
  // Weight-free copy of virasoro-t: every exponent is 0 but Lt(2,1) x Lt(r,1)
  // has two summands, so only the truncated scan applies.
  auto flat = std::make_shared<CategorySpec>(*builtin_category("virasoro-t"));
  flat->weight_of = [](const L&) { return RatFunc(0); };
  AlgebraObject a;
  a.name = "flat";
  a.base = flat;
  a.summand_rule = parse_template("Lt(r,1)");
  auto alg = make_algebra(std::move(a));
  auto c = locality(alg, L::virasoro_t(2, 1), 12);
  CHECK(c.verdict == Verdict::Undecidable);
  CHECK(c.checked_up_to == 12);
  CHECK_FALSE(c.family.has_value());
  CHECK(locality(alg, L::virasoro_t(1, 1)).verdict == Verdict::Local);
}

TEST_CASE("minimum-weight summand") {
  auto svir = builtin_algebra("svir-ext");
  auto mw = min_weight_summand(induce(svir, sbase(2, 2)));
  CHECK(mw.r == 2);
  CHECK(mw.weight == ps("3*s/8 + 3/(8*s) - 3/4"));

  auto osp = builtin_algebra("osp-ext");
  auto m3 = min_weight_summand(induce(osp, obase(3)));
  CHECK(m3.r == 1);
  CHECK(m3.weight == ps("1/s"));

  auto unit = min_weight_summand(induce(svir, *svir->base->unit));
  CHECK(unit.r == 1);
  CHECK(unit.weight == RatFunc(0));

  CHECK_THROWS_AS(min_weight_summand(induce(svir, sbase(7, 7)), default_sample(), 7), TruncationTooSmall);
  CHECK_THROWS_AS(min_weight_summand(induce(svir, sbase(1, 1)), default_sample(), 0), TruncationTooSmall);
}

TEST_CASE("minimum-weight identities") {
  const auto& pc = param_chain();
  auto svir = builtin_algebra("svir-ext");
  auto sv = builtin_category("supervir");
  for (std::int64_t n = 1; n <= 10; ++n)
    for (std::int64_t m = 1; m <= 10; ++m) {
      if ((n + m) % 2) continue;
      std::int64_t r = (n + m) / 2;
      RatFunc lhs = substitute(virasoro_weight(n, r), pc.kp2_of_s) + substitute(virasoro_weight(m, r), pc.t_of_s);
      CHECK(lhs == weight(*sv, L::super_vir(n, m)));
      auto mw = min_weight_summand(induce(svir, sbase(n, m)));
      CHECK(mw.weight == lhs);
    }
  auto osp = builtin_algebra("osp-ext");
  auto ocat = builtin_category("osp");
  for (std::int64_t n = 1; n <= 15; n += 2) {
    auto mod = induce(osp, obase(n));
    RatFunc w = weight(*osp->base, L::pair(L::affine_verma((n + 1) / 2), L::virasoro_t(n, (n + 1) / 2)));
    CHECK(w == weight(*ocat, L::osp(n)));
    CHECK(min_weight_summand(mod).weight == weight(*ocat, L::osp(n)));
  }
}

TEST_CASE("Frobenius reciprocity") {
  auto svir = builtin_algebra("svir-ext");
  for (std::int64_t n = 1; n <= 8; ++n)
    for (std::int64_t m = 1; m <= 8; ++m)
      for (std::int64_t n2 = 1; n2 <= 8; ++n2)
        for (std::int64_t m2 = 1; m2 <= 8; ++m2)
          CHECK(frobenius_dim(svir, sbase(n, m), sbase(n2, m2)) == ((n == n2 && m == m2) ? 1u : 0u));
  auto osp = builtin_algebra("osp-ext");
  for (std::int64_t n = 1; n <= 8; ++n)
    for (std::int64_t n2 = 1; n2 <= 8; ++n2) CHECK(frobenius_dim(osp, obase(n), obase(n2)) == (n == n2 ? 1u : 0u));
  CHECK(frobenius_dim(svir, *svir->base->unit, *svir->base->unit) == 1);
  CHECK_THROWS_AS(frobenius_dim(svir, obase(1), sbase(1, 1)), ForeignLabel);
}

TEST_CASE("Frobenius support bound agrees with a long truncated sum") {
  auto svir = builtin_algebra("svir-ext");
  std::mt19937_64 rng(12);
  auto i = [&] { return std::int64_t(rng() % 5) + 1; };
  for (int k = 0; k < 200; ++k) {
    L b1 = L::pair(L::virasoro_kp2(i(), i()), L::virasoro_t(i(), i()));
    L b2 = L::pair(L::virasoro_kp2(i(), i()), L::virasoro_t(i(), i()));
    std::uint64_t brute = 0;
    for (std::int64_t r = 1; r <= 30; ++r) brute += fuse_labels(svir->summand(r), b2).multiplicity(b1);
    CHECK(frobenius_dim(svir, b1, b2) == brute);
  }
}

TEST_CASE("Frobenius needs growing summands") {
  auto alg = algebra_from_json(nlohmann::json::parse(
      R"j({"name": "const", "base_category": "virasoro-t", "summand_rule": "Lt(1,1)"})j"));
  CHECK_THROWS_AS(frobenius_dim(alg, L::virasoro_t(1, 1), L::virasoro_t(1, 1)), InfiniteSupport);
}

TEST_CASE("induced fusion") {
  auto svir = builtin_algebra("svir-ext");
  CHECK(induced_fusion(svir, sbase(2, 2), sbase(3, 5)) ==
        fe({L::super_vir(2, 4), L::super_vir(2, 6), L::super_vir(4, 4), L::super_vir(4, 6)}));
  CHECK(induced_fusion(svir, sbase(2, 2), sbase(1, 3)) == fe({L::super_vir(2, 2), L::super_vir(2, 4)}));
  CHECK_THROWS_AS(induced_fusion(svir, sbase(2, 1), sbase(1, 1)), NotLocal);

  auto osp = builtin_algebra("osp-ext");
  for (std::int64_t n = 1; n <= 9; n += 2) CHECK(induced_fusion(osp, obase(n), obase(1)) == FusionElement(L::osp(n)));
  CHECK(induced_fusion(osp, obase(3), obase(3)) == fe({L::osp(1), L::osp(3), L::osp(5)}));
  CHECK_THROWS_AS(induced_fusion(osp, obase(2), obase(3)), NotLocal);
}

TEST_CASE("restriction oracle") {
  auto svir = builtin_algebra("svir-ext");
  CHECK(restriction_oracle_check(svir, sbase(2, 2), sbase(2, 2), 10).ok());
  CHECK(restriction_oracle_check(svir, sbase(1, 1), sbase(3, 5), 10).ok());
  auto osp = builtin_algebra("osp-ext");
  CHECK(restriction_oracle_check(osp, obase(3), obase(3), 10).ok());
  for (std::int64_t n = 1; n <= 7; n += 2)
    for (std::int64_t n2 = 1; n2 <= 7; n2 += 2) CHECK(restriction_oracle_check(osp, obase(n), obase(n2), 12).ok());

  std::vector<L> local;
  for (std::int64_t n = 1; n <= 4; ++n)
    for (std::int64_t m = 1; m <= 4; ++m)
      if ((n + m) % 2 == 0) local.push_back(sbase(n, m));
  for (const auto& x : local)
    for (const auto& y : local) CHECK(restriction_oracle_check(svir, x, y, 8).ok());
  CHECK_THROWS_AS(restriction_oracle_check(svir, sbase(2, 1), sbase(1, 1), 8), NotLocal);
}

TEST_CASE("the oracle catches a wrong table") {
  // Same algebra, but the induced labels are shifted so the table check fails.
  AlgebraObject a = *builtin_algebra("osp-ext");
  a.to_induced = [](const L& x) { return L::osp(x.right().first() == 1 ? 1 : x.right().first() + 2); };
  auto bad = make_algebra(std::move(a));
  CHECK_FALSE(restriction_oracle_check(bad, obase(3), obase(3), 10).table_agrees);
}

TEST_CASE("algebra documents") {
  auto alg = algebra_from_json(nlohmann::json::parse(
      R"j({"name": "svir-like", "base_category": "deligne(virasoro-kp2,virasoro-t)", "summand_rule": "(Lk(1,r) x Lt(1,r))"})j"));
  CHECK(alg->summand(3) == L::pair(L::virasoro_kp2(1, 3), L::virasoro_t(1, 3)));
  CHECK(is_local(alg, sbase(3, 1)));
  CHECK_FALSE(is_local(alg, sbase(3, 2)));
  CHECK(induce(alg, sbase(3, 1)).label() == L::induced(sbase(3, 1)));

  auto nested = algebra_from_json(nlohmann::json::parse(
      R"j({"name": "o", "base_category": {"families": ["kl-sl2", "virasoro-t"]}, "summand_rule": "(V(r) x Lt(1,r))"})j"));
  CHECK(is_local(nested, obase(5)));

  CHECK_THROWS_AS(algebra_from_json(nlohmann::json::parse(
                      R"j({"name": "x", "base_category": "virasoro-t", "summand_rule": "Lt(2,r)"})j")),
                  InvalidSystem);
  CHECK_THROWS_AS(algebra_from_json(nlohmann::json::parse(R"j({"name": "x"})j")), ParseError);
}
