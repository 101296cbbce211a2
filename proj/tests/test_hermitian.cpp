#include "doctest.h"
#include "hb/hermitian.hpp"
#include "hb/rep.hpp"

using namespace hb;

TEST_CASE("Hermitian settings: p_plus sizes") {
  struct Row {
    const char* label;
    int expected;
  };
  // dim p_+ : mn, 2n, 2n+1, n(n-1)/2, n(n+1)/2, 16, 27
  Row rows[] = {{"su(2,1)", 2}, {"su(3,2)", 6}, {"su(2,4)", 8},  {"so(2,6)", 6},  {"so(2,8)", 8},
                {"so(2,5)", 5}, {"so(2,7)", 7}, {"so*(8)", 6},   {"so*(10)", 10}, {"sp(3,R)", 6},
                {"sp(4,R)", 10}, {"e6(-14)", 16}, {"e7(-25)", 27}};
  for (auto& r : rows) {
    CAPTURE(r.label);
    auto hs = setting_for(r.label);
    CHECK(int(hs.p_plus.size()) == r.expected);
  }
}

TEST_CASE("Hermitian settings: painted node and c zeta") {
  auto su = setting_for("su(2,1)");
  CHECK(su.painted == 1);
  CHECK(su.c_zeta == qvec({0, 1}));
  auto sp = setting_for("sp(3,R)");
  CHECK(sp.painted == 2);
  CHECK(sp.c_zeta == QVec{Q(0), Q(0), Q(1, 2)});
  auto so_odd = setting_for("so(2,7)");
  CHECK(so_odd.c_zeta == QVec{Q(5, 2), Q(0), Q(0), Q(0)});
  auto so_even = setting_for("so(2,8)");
  CHECK(so_even.c_zeta == qvec({3, 0, 0, 0, 0}));
  auto sostar = setting_for("so*(10)");
  CHECK(sostar.c_zeta == qvec({0, 0, 0, 0, 2}));
  auto e6 = setting_for("e6(-14)");
  CHECK(e6.c_zeta == qvec({0, 0, 0, 0, 0, 3}));
  CHECK(e6.beta_highest == qvec({0, 1, 0, 0, 0, 0}));
  auto e7 = setting_for("e7(-25)");
  CHECK(e7.c_zeta == qvec({0, 0, 0, 0, 0, 0, 4}));
  CHECK(e7.beta_highest == qvec({1, 0, 0, 0, 0, 0, 0}));
  auto sp2 = setting_for("sp(2,R)");
  CHECK(sp2.beta_highest == qvec({2, 0}));
}

TEST_CASE("Hermitian invariants hold for every family") {
  const char* labels[] = {"su(2,2)", "su(3,2)", "so(2,5)", "so(2,6)", "so*(8)",  "so*(10)",
                          "sp(2,R)", "sp(3,R)", "e6(-14)", "e7(-25)", "su(1,3)", "so(2,3)"};
  for (auto* l : labels) {
    CAPTURE(l);
    auto hs = setting_for(l);
    const auto& rs = *hs.rootsys;
    size_t n_k = 0;
    for (auto& a : rs.pos_roots_alpha()) {
      CHECK((a[hs.painted] == 0 || a[hs.painted] == 1));
      if (a[hs.painted] == 0) ++n_k;
    }
    CHECK(n_k == hs.k->pos_indices().size());
    CHECK(n_k + hs.p_plus.size() == rs.pos_roots().size());
    // beta is the unique maximal element of p_plus: every other element is
    // strictly below it.
    bool found = false;
    for (auto& w : hs.p_plus) {
      if (w == hs.beta_highest) {
        found = true;
        continue;
      }
      auto diff = rs.to_alpha(sub(hs.beta_highest, w));
      bool nonneg = true;
      for (auto& c : diff) nonneg = nonneg && c >= Q(0);
      CHECK(nonneg);
    }
    CHECK(found);
    CHECK(zprime_grade(hs, hs.beta_highest) == Q(1));
    for (int i : hs.k->simple_indices()) CHECK(zprime_grade(hs, rs.root_w(i)) == Q(0));
    for (int j = 0; j < rs.rank(); ++j)
      CHECK(zprime_grade(hs, rs.simple_root_w(j)) == Q(j == hs.painted ? 1 : 0));
  }
}

TEST_CASE("K-type string") {
  auto su = setting_for("su(2,2)");
  auto ks = ktype_string(su, 3);
  REQUIRE(ks.size() == 4);
  CHECK(ks[0].weight == su.c_zeta);
  CHECK(ks[1].weight == qvec({1, 1, 1}));
  for (size_t i = 0; i < ks.size(); ++i) {
    CHECK(zprime_grade(su, ks[i].weight) - zprime_grade(su, ks[0].weight) == Q(int(i)));
    CHECK(su.k->is_dominant(ks[i].weight));
  }
  auto e7 = setting_for("e7(-25)");
  auto ke = ktype_string(e7, 4);
  for (int k = 0; k <= 4; ++k) CHECK(ke[k].weight == qvec({k, 0, 0, 0, 0, 0, 4}));
  auto sp = setting_for("sp(3,R)");
  for (auto& e : ktype_string(sp, 5)) CHECK(sp.k->is_dominant(e.weight));
  CHECK(ktype_string(sp, 0).size() == 1);
}

TEST_CASE("Real rank one is refused for the minimal representation") {
  CHECK_NOTHROW(setting_for("su(2,1)"));
  CHECK_THROWS_AS(setting_for("su(2,1)", true), RealRankError);
  CHECK_THROWS_AS(ktype_string(setting_for("sp(1,R)"), 2), RealRankError);
  CHECK_THROWS_AS(setting_for("so*(6)", true), RealRankError);
  CHECK_NOTHROW(setting_for("sp(2,R)", true));
  CHECK_THROWS_AS(setting_for("so(2,2)"), std::invalid_argument);
  CHECK_THROWS_AS(setting_for("g2(2)"), std::invalid_argument);
}
