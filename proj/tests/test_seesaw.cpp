#include "doctest.h"
#include "hb/seesaw.hpp"

using namespace hb;

TEST_CASE("theta lifts of the minimal characters") {
  auto u = seesaw_config("umn-u1", {2, 2, 1, 1});
  auto t = theta_lift(u, {"U(1)", {Q(0)}});
  REQUIRE(t.present);
  CHECK(t.eps == scale(qvec({1, 1, -1, -1}), Q(1, 2)));
  CHECK(t.modules.at(0).mu == qvec({0, 1, 0}));

  auto u31 = seesaw_config("umn-u1", {3, 1, 1, 1});
  auto t31 = seesaw_source(u31);
  REQUIRE(t31.present);
  CHECK(t31.eps == scale(qvec({1, 1, 1, -1}), Q(1, 2)));

  auto s = seesaw_config("sostar-sp1", {4, 2});
  auto ts = theta_lift(s, {"Sp(1)", {Q(0)}});
  REQUIRE(ts.present);
  CHECK(ts.eps == qvec({1, 1, 1, 1}));
  CHECK(ts.modules.at(0).mu == qvec({0, 0, 0, 2}));
}

TEST_CASE("non-genuine and non-occurring parameters have no lift") {
  auto u = seesaw_config("umn-u1", {2, 2, 1, 1});
  auto t = theta_lift(u, {"U(1)", {Q(1, 2)}});
  CHECK_FALSE(t.present);
  CHECK(t.reason.find("genuine") != std::string::npos);
  // n = q: the compact block u(2,0) has no negative slot.
  auto d = seesaw_config("umn-u1", {3, 1, 1, 1});
  auto neg = theta_lift(d, {"U(1)xU(1)", {Q(1), Q(0)}});
  CHECK_FALSE(neg.present);
  CHECK(neg.reason.find("u(2,0)") != std::string::npos);
  auto s = seesaw_config("sostar-sp1", {4, 1});
  CHECK_FALSE(theta_lift(s, {"U(2)", {Q(1), Q(1)}}).present);
  CHECK(theta_lift(s, {"U(2)", {Q(-1), Q(-1)}}).present);
  CHECK_FALSE(theta_lift(s, {"U(2)", {Q(1, 2), Q(1, 2)}}).present);
}

TEST_CASE("lifts of H2 characters in u(p,q) + u(m-p,n-q)") {
  auto u = seesaw_config("umn-u1", {2, 2, 1, 1});
  // k = 2: det^{-2} x det^{2}
  auto t = theta_lift(u, {"U(1)xU(1)", {Q(-2), Q(2)}});
  REQUIRE(t.present);
  CHECK(t.eps == scale(qvec({1, 5, -1, -5}), Q(1, 2)));
  // k = -2
  auto t2 = theta_lift(u, {"U(1)xU(1)", {Q(2), Q(-2)}});
  REQUIRE(t2.present);
  CHECK(t2.eps == scale(qvec({5, 1, -5, -1}), Q(1, 2)));
}

TEST_CASE("seesaw multiplicities") {
  auto u = seesaw_config("umn-u1", {2, 2, 1, 1});
  CHECK(seesaw_multiplicity(u, {"U(1)", {Q(0)}}, {"U(1)xU(1)", {Q(-3), Q(3)}}) == 1);
  CHECK(seesaw_multiplicity(u, {"U(1)", {Q(0)}}, {"U(1)xU(1)", {Q(-3), Q(2)}}) == 0);
  auto s = seesaw_config("sostar-sp1", {4, 2});
  CHECK(seesaw_multiplicity(s, {"Sp(1)", {Q(0)}}, {"U(2)", {Q(1), Q(1)}}) == 1);
  CHECK(seesaw_multiplicity(s, {"Sp(1)", {Q(0)}}, {"U(2)", {Q(2), Q(1)}}) == 0);
  CHECK_THROWS_AS(seesaw_multiplicity(s, {"Sp(1)", {Q(0)}}, {"U(2)", {Q(1), Q(2)}}), std::invalid_argument);
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      auto m = seesaw_multiplicity(u, {"U(1)", {Q(0)}}, {"U(1)xU(1)", {Q(a), Q(b)}});
      CHECK((m == 0 || m == 1));
    }
}

TEST_CASE("derived series shapes") {
  auto n_eq_q = derive_branching(seesaw_config("umn-u1", {3, 1, 1, 1}), 5);
  CHECK(n_eq_q.size() == 5);
  for (auto& t : n_eq_q) CHECK(t.series == 0);
  auto generic = derive_branching(seesaw_config("umn-u1", {2, 2, 1, 1}), 5);
  CHECK(generic.size() == 10);
  auto m1 = derive_branching(seesaw_config("sostar-sp1", {4, 1}), 5);
  CHECK(m1.size() == 5);
  for (auto& t : m1) CHECK(t.k <= 0);
  auto m2 = derive_branching(seesaw_config("sostar-sp1", {4, 2}), 5);
  CHECK(m2.size() == 10);
}

TEST_CASE("seesaw series agree with the catalogue") {
  struct Case {
    const char* name;
    std::vector<int> params;
  };
  for (auto& c : {Case{"umn-u1", {2, 2, 1, 1}}, Case{"umn-u1", {3, 2, 1, 1}}, Case{"umn-u1", {3, 1, 1, 1}},
                  Case{"umn-u1", {4, 1, 2, 1}}, Case{"sostar-sp1", {4, 2}}, Case{"sostar-sp1", {6, 3}},
                  Case{"sostar-sp1", {4, 1}}, Case{"sostar-sp1", {5, 1}}, Case{"sostar-sp1", {4, 3}}}) {
    auto cfg = seesaw_config(c.name, c.params);
    CAPTURE(cfg.name());
    auto r = compare_with_catalog(cfg, *seesaw_pair(cfg, Catalog::builtin()), 5);
    for (auto& l : r.lines)
      if (l.rfind("ok", 0) != 0) MESSAGE(l);
    CHECK(r.passed);
    CHECK(r.derived_terms >= 5);
    CHECK(r.derived_terms == r.catalog_terms);
  }
}

TEST_CASE("a perturbed lift is reported") {
  auto cfg = seesaw_config("sostar-sp1", {4, 2});
  PairDescriptor p = *seesaw_pair(cfg, Catalog::builtin());
  p.l_series.at(0).terms.at(1) = "C: -k-n/2+m+1";
  auto r = compare_with_catalog(cfg, p, 5);
  CHECK_FALSE(r.passed);
}
