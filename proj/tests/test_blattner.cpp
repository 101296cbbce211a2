#include "doctest.h"
#include "hb/blattner.hpp"

#include <random>

using namespace hb;

namespace {

RealFormPtr hermitian(const char* type_rank, int painted) {
  return real_form_hermitian(type_rank, RootSystem::make(type_rank), painted);
}

Weight w(std::initializer_list<long long> xs) { return qvec(xs); }

}  // namespace

TEST_CASE("parabolic data") {
  auto a4 = real_form_compact("su(5)", RootSystem::make("A4"));
  auto q = make_parabolic(a4, 0);
  CHECK(q->u_abelian);
  CHECK(q->u_roots.size() == 4);
  CHECK(q->u_cap_p.empty());

  auto c3 = real_form_compact("sp(3)", RootSystem::make("C3"));
  auto qc = make_parabolic(c3, 0);
  CHECK_FALSE(qc->u_abelian);
  CHECK(qc->u_roots.size() == 5);

  // so*(12): D6 with the painted node alpha_6.
  auto d6 = hermitian("D6", 5);
  auto q5 = make_parabolic(d6, 4);
  CHECK(q5->u_cap_p.size() == 10);
  CHECK(q5->two_rho_u_cap_p == w({0, 0, 0, 0, 4, 4}));
  CHECK(q5->u_abelian);
  size_t total = q5->levi_roots.size() + q5->u_roots.size();
  CHECK(total == d6->rs->pos_roots().size());
  CHECK_THROWS(make_parabolic(d6, 6));
}

TEST_CASE("minimal representation of su(2,2) as A_q") {
  auto su22 = hermitian("A3", 1);
  AqModuleSpec aq{make_parabolic(su22, 0), w({-2, 0, 0})};
  CHECK(range_check(aq) == Range::WeaklyFair);
  CHECK(abelian_irreducibility_hint(aq) == IrreducibilityHint::IrreducibleOrZero);
  auto kt = aq_ktypes(aq, 4);
  IrrSum expect;
  for (int k = 0; k <= 4; ++k) expect.add(w({k, 1, k}), 1);
  CHECK(kt.ktypes == expect);
  CHECK(kt.shortcut);
  CHECK(kt.exact(w({4, 1, 4})));
  CHECK_FALSE(kt.exact(w({5, 1, 5})));
}

TEST_CASE("so*(12) parabolic q(5) K-types") {
  auto d6 = hermitian("D6", 5);
  auto q5 = make_parabolic(d6, 4);
  for (int k = 0; k <= 2; ++k) {
    CAPTURE(k);
    AqModuleSpec aq{q5, w({0, 0, 0, 0, k - 4, 0})};
    CHECK(range_check(aq) != Range::Neither);
    CHECK(abelian_irreducibility_hint(aq) == IrreducibilityHint::IrreducibleOrZero);
    CHECK(blattner_base(aq) == w({0, 0, 0, 0, k, 4}));
    auto kt = aq_ktypes(aq, 4);
    IrrSum expect;
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; p + 2 * q <= 4; ++q) expect.add(w({0, p, 0, q, k, 4}), 1);
    CHECK(kt.ktypes == expect);
    CHECK(kt.shortcut);
    // The alternating sum agrees on the displayed K-types and vanishes on a
    // nearby weight that is not displayed.
    CHECK(blattner_multiplicity(aq, w({0, 1, 0, 1, k, 4})) == 1);
    CHECK(blattner_multiplicity(aq, w({1, 0, 0, 0, k, 4})) == 0);
  }
}

TEST_CASE("sp(m,n) spherical string") {
  // sp(1,1): C2 with beta_1 noncompact; sp(2,1): C3 with beta_2 noncompact.
  struct Case {
    const char* type;
    int painted, m, n;
  };
  for (auto c : {Case{"C2", 0, 1, 1}, Case{"C3", 1, 2, 1}}) {
    CAPTURE(c.type);
    auto ctx = real_form_parity(c.type, RootSystem::make(c.type), c.painted);
    auto q1 = make_parabolic(ctx, 0);
    int r = ctx->rs->rank();
    Weight lam = zeros(r);
    lam[0] = Q(-2 * c.n);
    AqModuleSpec aq{q1, lam};
    auto kt = aq_ktypes(aq, 10);
    for (int k = 0; k <= 4; ++k) {
      // k eps_1 + k eps_{m+1}
      QVec e = zeros(r);
      e[0] += Q(k);
      e[c.m] += Q(k);
      Weight mu = eps_to_omega('C', r, e);
      CHECK(kt.exact(mu));
      CHECK(kt.ktypes.at(mu) == 1);
    }
    for (auto& [mu, mult] : kt.ktypes.terms) {
      if (!kt.exact(mu)) continue;
      CAPTURE(to_string(mu));
      CHECK(mult == 1);
      auto e = omega_to_eps('C', r, mu);
      CHECK(e[0] == e[c.m]);
    }
  }
}

TEST_CASE("straightened and alternating-sum multiplicities agree") {
  std::mt19937 rng(7);
  struct Ctx {
    RealFormPtr f;
  };
  std::vector<RealFormPtr> forms = {
      hermitian("A3", 1), hermitian("A4", 1), hermitian("C3", 2),     hermitian("D4", 0),
      hermitian("B3", 0), hermitian("D5", 4), real_form_parity("C3", RootSystem::make("C3"), 0),
      real_form_parity("B3", RootSystem::make("B3"), 2)};
  int cases = 0;
  while (cases < 50) {
    auto f = forms[rng() % forms.size()];
    int node = int(rng() % f->rs->ss_rank());
    auto q = make_parabolic(f, node);
    Weight lam = zeros(f->rs->rank());
    lam[node] = Q(int(rng() % 7) - 5);
    AqModuleSpec aq{q, lam};
    auto kt = aq_ktypes(aq, 3);
    for (auto& [mu, m] : kt.ktypes.terms) {
      if (!kt.exact(mu)) continue;
      CAPTURE(f->label);
      CAPTURE(node);
      CAPTURE(to_string(mu));
      CHECK(blattner_multiplicity(aq, mu) == m);
    }
    ++cases;
  }
}

TEST_CASE("good range implies weakly fair") {
  std::mt19937 rng(11);
  std::vector<RealFormPtr> forms = {hermitian("A3", 1), hermitian("C3", 2), hermitian("D5", 4), hermitian("E6", 5),
                                    hermitian("B4", 0)};
  for (int i = 0; i < 500; ++i) {
    auto f = forms[rng() % forms.size()];
    int node = int(rng() % f->rs->ss_rank());
    Weight lam = zeros(f->rs->rank());
    lam[node] = Q(int(rng() % 21) - 10, 1 + int(rng() % 2));
    AqModuleSpec aq{make_parabolic(f, node), lam};
    auto r = range_check(aq);
    if (r == Range::Good) {
      auto shifted = aq;
      CHECK(range_check(aq) != Range::Neither);
    }
    CHECK(infinitesimal_character(aq) == add(lam, f->rs->rho()));
  }
  AqModuleSpec zero{make_parabolic(forms[0], 0), zeros(3)};
  CHECK(range_check(zero) == Range::Good);
}

TEST_CASE("lambda must be a Levi character") {
  auto f = hermitian("A3", 1);
  AqModuleSpec bad{make_parabolic(f, 0), w({0, 1, 0})};
  CHECK_THROWS(aq_ktypes(bad, 1));
}
