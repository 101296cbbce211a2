#include "doctest.h"
#include "hb/catalog.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <set>

using namespace hb;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

}  // namespace

TEST_CASE("expression language") {
  expr::Env env;
  env.vars = {{"n", Q(5)}, {"m", Q(2)}};
  env.bases = {{"a", 6}};
  CHECK(expr::eval_int("2*n-m", env) == 8);
  CHECK(expr::eval_scalar("-n/4+m/2", env) == Q(-1, 4));
  CHECK(expr::eval_bool("n>=4 && m<=n-2 && !(m==1)", env));
  CHECK_FALSE(expr::eval_bool("m%2==1 || n<m", env));
  CHECK(expr::eval_int("floor(-3/2)", env) == -2);
  CHECK(expr::eval_int("abs(1-n)+max(m,3)", env) == 7);
  CHECK(expr::render(expr::eval_vec("a[m-1]+2*a[m..n-2]+a[n-1]+a[n]", env)) == "a1+2a2+2a3+a4+a5");
  CHECK(expr::render(expr::eval_vec("a[3..2]+a[1]", env)) == "a1");
  CHECK(expr::eval_vec("a[4..3]", env).empty());
  CHECK(expr::render(expr::eval_vec("1/2*a[1]-a[2]", env)) == "1/2a1-a2");
  CHECK_THROWS_AS(expr::eval_vec("a[7]", env), expr::Error);
  CHECK_THROWS_AS(expr::eval_scalar("a[1]", env), expr::Error);
  CHECK_THROWS_AS(expr::eval_scalar("n+", env), expr::Error);
  CHECK_THROWS_AS(expr::eval_scalar("q", env), expr::Error);
}

TEST_CASE("catalog covers eighteen holomorphic and four non-holomorphic families") {
  int hol = 0, non = 0;
  for (auto& f : cat().families()) (f.type == "holomorphic" ? hol : non)++;
  CHECK(hol == 18);
  CHECK(non == 4);
}

TEST_CASE("every example instantiates and passes the root-datum checks") {
  for (auto& p : cat().examples()) {
    CAPTURE(p->key());
    CHECK(p->gs_rs->rank() > 0);
    if (p->holomorphic) {
      CHECK(!p->zfunc.empty());
      CHECK(!p->rhs_terms(Form::L, Q(6)).empty());
    }
  }
}

TEST_CASE("root data validate across parameter ranges") {
  int built = 0;
  for (auto& f : cat().families()) {
    std::vector<long long> vals(f.params.size(), 1);
    for (;;) {
      std::map<std::string, long long> p;
      for (size_t i = 0; i < vals.size(); ++i) p[f.params[i]] = vals[i];
      if (cat().admissible(f.id, p)) {
        CAPTURE(f.id);
        CAPTURE(vals.size() > 0 ? vals[0] : 0);
        CAPTURE(vals.size() > 1 ? vals[1] : 0);
        try {
          cat().instantiate(f.id, p);
          ++built;
        } catch (const std::invalid_argument& e) {
          // Ambient rank above the supported maximum.
          CHECK(std::string(e.what()).find("rank") != std::string::npos);
        } catch (const std::exception& e) {
          FAIL(e.what());
        }
      }
      size_t i = 0;
      while (i < vals.size() && ++vals[i] > (vals.size() > 2 ? 4 : 6)) vals[i++] = 1;
      if (i == vals.size()) break;
    }
  }
  CHECK(built > 80);
}

TEST_CASE("golden root strings") {
  auto p = cat().instantiate("so*:so*+so*", {{"n", 6}, {"m", 3}});
  auto roots = p->golden_roots();
  REQUIRE(roots.size() == 6);
  CHECK(roots[2] == "a2+2a3+2a4+a5+a6");
  CHECK(roots[3] == "a4");

  auto e7 = cat().instantiate("e7:e6+so(2)", {});
  CHECK(e7->golden_roots().back() == "a1+a3+a4+a5+a6+a7");
  CHECK(e7->gs_rs->label() == "E6+T1");

  auto spc = cat().instantiate("sp:sp(n,C)", {{"n", 2}});
  CHECK(spc->g_label == "sp(4,R)");
  CHECK(spc->gs_rs->label() == "C2");
  CHECK(spc->sigma[3] == qvec({-2, -2, -2, -1}));
}

TEST_CASE("labels resolve to catalogue entries") {
  CHECK(cat().find("so(2,4):u(1,2)")->key() == cat().find("so(2,4):su(1,2)+u(1)")->key());
  CHECK(cat().find("sp(2,R):u(1,1)")->family_id == "sp:su+u1");
  CHECK(cat().find("su(2,2):sp(2,R)")->family_id == "su:sp");
  CHECK(cat().find("su(2,2) : su(1,1)+su(1,1)+u(1)")->family_id == "su:su+su+u1");
  CHECK(cat().find("so*(8):so*(4)+so*(4)")->params.at("m") == 2);
  CHECK(cat().find("e7:so*(12)+su(2)")->family_id == "e7:so*(12)+su(2)");
  CHECK(cat().find("sp(3,R):sp(1,R)+sp(2,R)")->params.at("m") == 1);
  CHECK(cat().find("so(2,8):su(1,4)+u(1)")->params.at("n") == 4);
  CHECK(cat().find("sp:sp+sp?n=3,m=1")->g_label == "sp(3,R)");
  CHECK_THROWS_AS(cat().find("su(2,2):g2"), CatalogError);
  CHECK(ambient_label("so2", {5}) == setting_for("so2", std::vector<int>{5}).g_label);
  CHECK(ambient_label("so*", {4}) == setting_for("so*", std::vector<int>{4}).g_label);
}

TEST_CASE("a root outside g^sigma is rejected") {
  std::ifstream in(Catalog::default_path());
  auto doc = nlohmann::json::parse(in);
  doc["checksum"] = "";
  doc.erase("record_checksums");
  for (auto& f : doc["families"]) {
    if (f["id"] != "so*:so*+so*") continue;
    // eps_m + eps_{m+1} in place of eps_{m-1} + eps_m.
    f["variants"][0]["factors"][0]["roots"][1] = "a[m..m]+2*a[m+1..n-2]+a[n-1]+a[n]";
  }
  auto path = std::filesystem::temp_directory_path() / "hb_mutated_pairs.json";
  std::ofstream(path) << doc.dump();
  auto mutated = Catalog::load(path.string());
  CHECK_THROWS_AS(mutated.instantiate("so*:so*+so*", {{"n", 6}, {"m", 3}}), CatalogError);
  CHECK_NOTHROW(cat().instantiate("so*:so*+so*", {{"n", 6}, {"m", 3}}));
  std::filesystem::remove(path);
}

TEST_CASE("series truncation by grade") {
  auto p = cat().instantiate("su:su+su+u1", {{"m", 2}, {"n", 2}, {"p", 1}, {"q", 1}});
  for (auto f : {Form::L, Form::Aq}) {
    auto terms = p->rhs_terms(f, Q(4));
    CAPTURE(std::string(to_string(f)));
    std::multiset<Q> grades;
    for (auto& t : terms) grades.insert(t.base_grade);
    CHECK(grades == std::multiset<Q>{1, 2, 2, 3, 3, 4, 4});
  }
  auto sp = cat().instantiate("sp:sp+sp", {{"n", 3}, {"m", 1}});
  CHECK_FALSE(sp->has_form(Form::Aq));
  CHECK(sp->rhs_terms(Form::L, Q(10)).size() == 2);
}

TEST_CASE("checksum guards the catalogue") {
  std::ifstream in(Catalog::default_path());
  auto doc = nlohmann::json::parse(in);
  doc["families"][0]["constraint"] = "m>=n";
  auto path = std::filesystem::temp_directory_path() / "hb_tampered_pairs.json";
  std::ofstream(path) << doc.dump(2);
  CHECK_THROWS_AS(Catalog::load(path.string()), CatalogError);
  std::filesystem::remove(path);
}

TEST_CASE("a corrupted record is named in the error") {
  std::ifstream in(Catalog::default_path());
  auto doc = nlohmann::json::parse(in);
  auto path = std::filesystem::temp_directory_path() / "hb_corrupt_pairs.json";
  auto message = [&](const nlohmann::json& d) {
    std::ofstream(path) << d.dump(2);
    try {
      Catalog::load(path.string());
    } catch (const CatalogError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  auto edited = doc;
  edited["families"][6]["variants"][0]["factors"][0]["roots"][0] = "a[2]";
  CHECK(message(edited).find("record 7 (so*:su+u1)") != std::string::npos);
  auto missing = doc;
  missing["families"][3].erase("params");
  auto m = message(missing);
  CHECK(m.find("so2e:su1n+u1") != std::string::npos);
  CHECK(m.find("params") != std::string::npos);
  std::filesystem::remove(path);
}
