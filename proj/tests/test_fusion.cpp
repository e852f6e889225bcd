#include <catch_amalgamated.hpp>

#include <random>

#include "vtc/fusion.hpp"

using namespace vtc;

namespace {

using L = SimpleLabel;

RatFunc ps(const char* s) { return parse_ratfunc(s, "s"); }

FusionElement random_element(std::mt19937_64& rng, std::int64_t bound) {
  FusionElement e;
  int n = int(rng() % 3) + 1;
  for (int k = 0; k < n; ++k)
    e.add(L::virasoro_t(std::int64_t(rng() % bound) + 1, std::int64_t(rng() % bound) + 1), rng() % 2 + 1);
  return e;
}

}  // namespace

TEST_CASE("ring_mul examples") {
  auto vt = builtin_category("virasoro-t");
  FusionElement u(*vt->unit, 2), x(L::virasoro_t(3, 2), 3);
  CHECK(ring_mul(*vt, u, x) == FusionElement(L::virasoro_t(3, 2), 6));

  FusionElement a = FusionElement(L::virasoro_t(2, 1)) + FusionElement(L::virasoro_t(1, 2));
  FusionElement sq = ring_mul(*vt, a, a);
  FusionElement want;
  want.add(L::virasoro_t(1, 1), 2);
  want.add(L::virasoro_t(3, 1), 1);
  want.add(L::virasoro_t(1, 3), 1);
  want.add(L::virasoro_t(2, 2), 2);
  CHECK(sq == want);
  CHECK(to_string(sq) == "2*Lt(1,1) + Lt(1,3) + 2*Lt(2,2) + Lt(3,1)");

  CHECK(ring_mul(*vt, a, FusionElement()).is_zero());
  CHECK_THROWS_AS(ring_mul(*vt, a, FusionElement(L::osp(1))), CategoryMismatch);
}

TEST_CASE("hom_dim") {
  auto vt = builtin_category("virasoro-t");
  L x = L::virasoro_t(2, 3), y = L::virasoro_t(1, 2);
  CHECK(hom_dim(*vt, x, x) == 1);
  CHECK(hom_dim(*vt, x, y) == 0);
  FusionElement a(x, 2);
  a.add(y);
  CHECK(hom_dim(*vt, a, FusionElement(x, 3)) == 6);
  CHECK(hom_dim(*vt, a, a) == 5);
  CHECK_THROWS_AS(hom_dim(*vt, a, FusionElement(L::super_vir(1, 1))), CategoryMismatch);
}

TEST_CASE("ring laws on random elements") {
  auto vt = builtin_category("virasoro-t");
  std::mt19937_64 rng(41);
  FusionElement one(*vt->unit);
  for (int k = 0; k < 500; ++k) {
    FusionElement a = random_element(rng, 6), b = random_element(rng, 6), c = random_element(rng, 6);
    CHECK(ring_mul(*vt, a, b) == ring_mul(*vt, b, a));
    CHECK(ring_mul(*vt, ring_mul(*vt, a, b), c) == ring_mul(*vt, a, ring_mul(*vt, b, c)));
    CHECK(ring_mul(*vt, a, b + c) == ring_mul(*vt, a, b) + ring_mul(*vt, a, c));
    CHECK(ring_mul(*vt, one, a) == a);
  }
}

TEST_CASE("monodromy examples") {
  auto vt = builtin_category("virasoro-t");
  for (std::int64_t r = 1; r <= 10; ++r)
    for (std::int64_t q = 1; q <= 10; ++q) {
      auto rep = monodromy(*vt, L::virasoro_t(r, 1), L::virasoro_t(1, q));
      REQUIRE(rep.entries.size() == 1);
      CHECK(rep.entries[0].summand == L::virasoro_t(r, q));
      CHECK(rep.entries[0].exponent == RatFunc(Rat(r + q - r * q - 1, 2)));
      CHECK(rep.entries[0].phase.has_value());
    }

  auto sv = builtin_category("supervir");
  for (const auto& y : sv->labels(5)) {
    auto rep = monodromy(*sv, *sv->unit, y);
    for (const auto& e : rep.entries) CHECK(e.exponent == RatFunc(0));
    CHECK(rep.trivial());
  }

  auto rep = monodromy(*sv, L::super_vir(2, 2), L::super_vir(3, 3));
  REQUIRE(rep.entries.size() == 4);
  CHECK(rep.entries[0].summand == L::super_vir(2, 2));
  CHECK(rep.entries[0].exponent == ps("-s - 1/s + 2"));
  CHECK(rep.entries[0].status == ExponentStatus::ParameterDependent);
  CHECK_FALSE(rep.entries[0].phase.has_value());
  CHECK_THROWS_AS(monodromy(*sv, L::super_vir(1, 1), L::osp(1)), CategoryMismatch);
}

TEST_CASE("exponent classification") {
  CHECK(classify_exponent(RatFunc(3)) == ExponentStatus::Integer);
  CHECK(classify_exponent(RatFunc(Rat(-1, 2))) == ExponentStatus::NonIntegerConstant);
  CHECK(classify_exponent(ps("s")) == ExponentStatus::ParameterDependent);
  CHECK(to_string(Phase(Rat(-1, 2))) == "1/2");
}

TEST_CASE("monodromy is symmetric") {
  for (const char* name : {"virasoro-t", "supervir", "osp"}) {
    auto cat = builtin_category(name);
    auto labels = cat->labels(5);
    for (const auto& x : labels)
      for (const auto& y : labels) CHECK(monodromy(*cat, x, y) == monodromy(*cat, y, x));
  }
}

TEST_CASE("monodromy exponents add on Deligne pairs") {
  auto a = builtin_category("virasoro-kp2");
  auto b = builtin_category("virasoro-t");
  auto d = deligne(a, b);
  const auto& pc = param_chain();
  std::mt19937_64 rng(9);
  auto rl = [&] {
    auto i = [&] { return std::int64_t(rng() % 6) + 1; };
    return L::pair(L::virasoro_kp2(i(), i()), L::virasoro_t(i(), i()));
  };
  for (int k = 0; k < 150; ++k) {
    L x = rl(), y = rl();
    auto rep = monodromy(*d, x, y);
    auto left = monodromy(*a, x.left(), y.left());
    auto right = monodromy(*b, x.right(), y.right());
    REQUIRE(rep.entries.size() == left.entries.size() * right.entries.size());
    for (const auto& e : rep.entries) {
      RatFunc el, er;
      for (const auto& l : left.entries)
        if (l.summand == e.summand.left()) el = l.exponent;
      for (const auto& r : right.entries)
        if (r.summand == e.summand.right()) er = r.exponent;
      CHECK(e.exponent == el + substitute(er, pc.t_of_s));
    }
  }
}

TEST_CASE("non-degeneracy witness formula") {
  auto sv = builtin_category("supervir");
  RatFunc s = RatFunc::var();
  L w = L::super_vir(2, 2);
  for (std::int64_t n = 1; n <= 8; ++n)
    for (std::int64_t m = 1; m <= 8; ++m) {
      if ((n + m) % 2 != 0 || (n == 1 && m == 1)) continue;
      auto rep = monodromy(*sv, w, L::super_vir(n, m));
      bool nontrivial = false;
      for (const auto& e : rep.entries) {
        std::int64_t eps = e.summand.first() - n, epsp = e.summand.second() - m;
        REQUIRE((eps == 1 || eps == -1));
        REQUIRE((epsp == 1 || epsp == -1));
        RatFunc display = Rat(n * eps - 1, 4) * s + Rat(m * epsp - 1, 4) * s.inverse() -
                          RatFunc(Rat(n * epsp + m * eps - 3 + eps * epsp, 4));
        INFO("n=" << n << " m=" << m << " summand " << to_string(e.summand));
        CHECK(e.exponent == display);
        nontrivial |= e.status != ExponentStatus::Integer;
      }
      CHECK(nontrivial);
    }
}

TEST_CASE("monodromy report JSON round trip") {
  auto sv = builtin_category("supervir");
  for (const auto& x : sv->labels(4))
    for (const auto& y : sv->labels(4)) {
      auto rep = monodromy(*sv, x, y);
      auto j = nlohmann::json::parse(to_json(rep, "s").dump());
      CHECK(monodromy_report_from_json(j, "s") == rep);
    }
  auto vt = builtin_category("virasoro-t");
  auto j = to_json(monodromy(*vt, L::virasoro_t(2, 1), L::virasoro_t(1, 2)), "t");
  CHECK(j[0]["exponent"] == "-1/2");
  CHECK(j[0]["status"] == "non-integer-constant");
  CHECK(j[0]["phase"] == "1/2");
  j[0]["status"] = "integer";
  CHECK_THROWS_AS(monodromy_report_from_json(j, "t"), ParseError);
  CHECK_THROWS_AS(monodromy_report_from_json(nlohmann::json::parse(R"j([{"summand": "Lt(1,1)"}])j"), "t"), ParseError);
}

TEST_CASE("transparency") {
  auto sv = builtin_category("supervir");
  auto all = sv->labels(6);
  CHECK(is_transparent(*sv, *sv->unit, all).transparent);
  CHECK(is_transparent(*sv, *sv->unit, {}).transparent);

  auto res = is_transparent(*sv, L::super_vir(2, 2), {L::super_vir(2, 2)});
  CHECK_FALSE(res.transparent);
  REQUIRE(res.certificate.has_value());
  CHECK(res.certificate->witness == L::super_vir(2, 2));
  CHECK(res.certificate->summand == L::super_vir(1, 1));
  CHECK(res.certificate->exponent == ps("-3*s/4 + 3/2 - 3/(4*s)"));
  CHECK(res.certificate->status == ExponentStatus::ParameterDependent);
}

TEST_CASE("Mueger center scans") {
  auto sv = builtin_category("supervir");
  auto osp = builtin_category("osp");
  CHECK(mueger_scan(*sv, 8, 8) == std::vector<L>{L::super_vir(1, 1)});
  CHECK(mueger_scan(*osp, 9, 9) == std::vector<L>{L::osp(1)});
  CHECK(mueger_scan(*sv, 1, 1) == std::vector<L>{L::super_vir(1, 1)});
  CHECK(mueger_scan(*sv, 8, 8, 4) == mueger_scan(*sv, 8, 8, 1));
  auto vt = builtin_category("virasoro-t");
  CHECK(mueger_scan(*vt, 6, 6) == std::vector<L>{L::virasoro_t(1, 1)});
  CHECK_THROWS_AS(mueger_scan(*sv, 0, 3), std::invalid_argument);
}
