#include "doctest.h"
#include "hb/verifier.hpp"

using namespace hb;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

const FormReport& form(const VerificationReport& r, Form f) {
  for (auto& fr : r.forms)
    if (fr.form == f) return fr;
  throw std::logic_error("form missing");
}

}  // namespace

TEST_CASE("fock space dimension identity") {
  for (int n = 0; n <= 6; ++n)
    for (int M = 1; M <= 5; ++M)
      for (int N = M + 1; N <= 8; ++N) {
        auto c = fock_dimension_oracle(N, M, n);
        CAPTURE(N);
        CAPTURE(M);
        CAPTURE(n);
        CHECK(c.passed);
      }
  CHECK(fock_dimension_oracle(4, 2, 3).lhs == 16);
  CHECK_THROWS(fock_dimension_oracle(2, 2, 1));
}

TEST_CASE("su(2,2) > sp(2,R)") {
  auto p = cat().find("su(2,2):sp(2,R)");
  auto r = verify_pair(*p, 4);
  for (auto& e : r.errors) MESSAGE(e);
  CHECK(r.passed);
  const auto& L = form(r, Form::L);
  CHECK_FALSE(L.available);
  const auto& A = form(r, Form::Aq);
  CHECK(A.available);
  CHECK(A.passed);
  CHECK(A.rhs_generators == 2);
  CHECK(A.grades.size() == 5);
}

TEST_CASE("su(2,2) > su(1,1)+su(1,1)+u(1)") {
  auto r = verify_pair(*cat().find("su(2,2):su(1,1)+su(1,1)+u(1)"), 4);
  CHECK(r.passed);
  CHECK(form(r, Form::L).passed);
  CHECK(form(r, Form::Aq).passed);
}

TEST_CASE("so*(8) > so*(2)+so*(6)") {
  auto p = cat().instantiate("so*:so*+so*", {{"n", 4}, {"m", 1}});
  auto r = verify_pair(*p, 4);
  for (auto& e : r.errors) MESSAGE(e);
  for (auto& fr : r.forms)
    for (auto& n : fr.notes) MESSAGE(n);
  CHECK(r.passed);
}

TEST_CASE("a perturbed coefficient is caught at its grade") {
  auto p = cat().find("su(2,2):su(1,1)+su(1,1)+u(1)");
  auto lhs = lhs_graded(*p, 3);
  auto rhs = rhs_graded(*p, 3, Form::L);
  REQUIRE(rhs.available);
  Q g = lhs.base + Q(2);
  auto& bucket = rhs.dec.grades.at(g);
  REQUIRE_FALSE(bucket.empty());
  Weight w = bucket.terms.begin()->first;
  bucket.add(w, 1);
  for (int k = 0; k <= 3; ++k) {
    Q gk = lhs.base + Q(k);
    IrrSum a = lhs.grades.count(gk) ? lhs.grades.at(gk) : IrrSum{};
    IrrSum b = rhs.dec.grades.count(gk) ? rhs.dec.grades.at(gk) : IrrSum{};
    bool same = true;
    for (auto& [mu, m] : b.terms) same = same && a.at(mu) == m;
    for (auto& [mu, m] : a.terms) same = same && b.at(mu) == m;
    CHECK(same == (k != 2));
  }
}

TEST_CASE("lowest weight modules by method") {
  auto f = real_form_hermitian("sp(2,R)", RootSystem::make("C2"), 1);
  auto weil = lowest_weight_ktypes(f, scale(qvec({0, 1}), Q(1, 2)), "weil", 3);
  REQUIRE(weil);
  CHECK(weil->ktypes.count() == 4);
  CHECK(weil->degree.at(scale(qvec({4, 1}), Q(1, 2))) == 1);
  // Holomorphic discrete series: Verma and A_q agree.
  Weight mu = qvec({0, 6});
  auto v = lowest_weight_ktypes(f, mu, "verma", 3);
  auto a = lowest_weight_ktypes(f, mu, "", 3);
  REQUIRE(v);
  REQUIRE(a);
  CHECK(v->ktypes.terms == a->ktypes.terms);
}

TEST_CASE("A_q(lambda) at reduction points") {
  auto cases = demonstrate_reducible_aq(4);
  REQUIRE(cases.size() == 5);
  for (auto& c : cases) {
    CAPTURE(c.label);
    CHECK(c.generators == c.expected);
  }
}

TEST_CASE("non-holomorphic restriction stays irreducible") {
  for (auto* label : {"su(2,2):sp(1,1)", "sp(4,R):sp(2,C)", "so(2,5):so(1,5)"}) {
    CAPTURE(label);
    auto p = cat().find(label);
    auto r = verify_nonhol_irreducibility(*p, 4);
    for (auto& c : r.checks) MESSAGE(c);
    CHECK(r.passed);
  }
}

TEST_CASE("non-holomorphic identification") {
  for (auto* label :
       {"su(2,2):sp(1,1)", "su(4,2):sp(2,1)", "sp(4,R):sp(2,C)", "so(2,5):so(1,5)", "so(2,4):so(1,4)", "e6:f4"}) {
    CAPTURE(label);
    auto r = verify_nonhol_identification(*cat().find(label), 3);
    for (auto& c : r.checks)
      if (c.rfind("FAIL", 0) == 0) MESSAGE(c);
    for (auto& e : r.errors) MESSAGE(e);
    CHECK(r.passed);
  }
}

TEST_CASE("a wrong A_q parameter fails identification") {
  PairDescriptor p = *cat().find("e6:f4");
  REQUIRE(p.ident);
  p.ident->aq[0].second -= Q(1);
  auto r = verify_nonhol_identification(p, 3);
  CHECK_FALSE(r.passed);
  PairDescriptor q = *cat().find("su(2,2):sp(1,1)");
  q.ident->string_expr = "k*e[1]";
  CHECK_FALSE(verify_nonhol_identification(q, 3).passed);
}

TEST_CASE("every admissible holomorphic pair up to rank 8 verifies") {
  const auto& c = cat();
  int checked = 0;
  for (auto& f : c.families()) {
    if (f.type != "holomorphic") continue;
    std::vector<long long> vals(f.params.size(), 1);
    for (;;) {
      std::map<std::string, long long> p;
      for (size_t i = 0; i < vals.size(); ++i) p[f.params[i]] = vals[i];
      if (c.admissible(f.id, p)) {
        PairPtr pair;
        try {
          pair = c.instantiate(f.id, p);
        } catch (const std::invalid_argument&) {
        }
        if (pair) {
          auto r = verify_pair(*pair, 3);
          CAPTURE(pair->key());
          CHECK(r.passed);
          ++checked;
        }
      }
      size_t i = 0;
      while (i < vals.size() && ++vals[i] > (vals.size() > 2 ? 4 : 7)) vals[i++] = 1;
      if (i == vals.size()) break;
    }
  }
  CHECK(checked > 150);
}
