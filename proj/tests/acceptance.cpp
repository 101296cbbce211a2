// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "hb/report.hpp"
#include "hb/seesaw.hpp"
#include "hb/verifier.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace hb;

namespace {

// Multiplicities are exact integers; every comparison below is equality.
constexpr int64_t kMultiplicityTolerance = 0;
constexpr double kPairSecondsCold = 300.0;
constexpr double kNonholSeconds = 120.0;
constexpr double kFockSeconds = 1.0;

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool passed = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(const std::string& why) {
    passed = false;
    details.push_back(why);
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

const Catalog& cat() { return Catalog::builtin(); }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

// ------------------------------------------------------------------ 1

Outcome holomorphic_catalogue() {
  Outcome o;
  std::vector<PairPtr> pairs;
  std::set<std::string> seen;
  auto add = [&](PairPtr p) {
    if (seen.insert(p->key()).second) pairs.push_back(p);
  };
  for (auto& f : cat().families()) {
    if (f.type != "holomorphic") continue;
    // Smallest admissible parameters: least parameter sum, then lexicographic.
    std::optional<std::map<std::string, long long>> best;
    long long best_sum = 0;
    std::vector<long long> v(f.params.size(), 1);
    for (;;) {
      std::map<std::string, long long> p;
      long long s = 0;
      for (size_t i = 0; i < v.size(); ++i) p[f.params[i]] = v[i], s += v[i];
      if ((!best || s < best_sum) && cat().admissible(f.id, p)) {
        try {
          cat().instantiate(f.id, p);
          best = p;
          best_sum = s;
        } catch (const std::invalid_argument&) {
        }
      }
      size_t i = 0;
      while (i < v.size() && ++v[i] > 6) v[i++] = 1;
      if (i == v.size()) break;
    }
    if (!best) {
      o.fail(f.id + ": no admissible parameters");
      continue;
    }
    add(cat().instantiate(f.id, *best));
  }
  for (auto* label :
       {"su(2,2):sp(2,R)", "su(2,2):so*(4)", "su(3,2):su(1,1)+su(2,1)+u(1)", "so(2,4):u(1,2)", "so(2,5):so(2,4)",
        "so(2,5):so(2,3)+so(2)", "so*(8):su(1,3)+u(1)", "so*(8):su(3,1)+u(1)", "so*(8):so*(4)+so*(4)",
        "sp(2,R):u(1,1)", "sp(3,R):sp(1,R)+sp(2,R)", "e6:so(2,8)+so(2)", "e6:su(4,2)+su(2)", "e6:so*(10)+so(2)",
        "e6:su(5,1)+sp(1,R)", "e7:e6+so(2)", "e7:so(2,10)+sp(1,R)", "e7:su(6,2)", "e7:so*(12)+su(2)"})
    add(cat().find(label));
  for (auto& p : cat().examples())
    if (p->holomorphic) add(p);

  std::set<std::string> families;
  int forms = 0, single = 0;
  double worst = 0;
  for (auto& p : pairs) {
    int N = default_max_grade(*p);
    auto r = verify_pair(*p, N);
    worst = std::max(worst, r.seconds);
    families.insert(p->family_id);
    int avail = 0;
    for (auto& f : r.forms) {
      if (!f.available) continue;
      ++avail;
      for (auto& g : f.grades)
        for (auto& m : g.mismatches)
          o.expect(std::abs(m.lhs - m.rhs) <= kMultiplicityTolerance,
                   r.pair_key + " " + to_string(f.form) + " grade " + to_string(g.grade));
      o.expect(f.passed, r.pair_key + ": " + to_string(f.form) + "-form fails");
      o.expect(int(f.grades.size()) == N + 1, r.pair_key + ": not every grade compared");
    }
    forms += avail;
    if (avail == 1) ++single;
    o.expect(r.passed, r.pair_key + " fails: " + join(r.errors, "; "));
    o.expect(r.seconds < kPairSecondsCold, r.pair_key + " exceeds the time budget");
  }
  o.expect(families.size() == 18, "families covered: " + std::to_string(families.size()));
  std::ostringstream s;
  s << pairs.size() << " pairs over " << families.size() << " families, " << forms << " forms (" << single
    << " pairs with one evaluable form), N=4/3/2, slowest " << std::fixed;
  s.precision(2);
  s << worst << " s";
  o.summary = s.str();
  return o;
}

// ------------------------------------------------------------------ 2

Outcome e7_worked_example() {
  Outcome o;
  auto pair = cat().find("e7:so*(12)+su(2)");
  const auto& so = pair->factors.at(0);
  const auto& su = pair->factors.at(1);
  auto lhs = lhs_graded(*pair, 3);
  for (int l = 0; l <= 3; ++l) {
    IrrSum want;
    for (int p = 0; p <= l; ++p)
      for (int q = 0; p + 2 * q <= l; ++q) {
        int r = l - p - 2 * q;
        Weight w = zeros(pair->gs_rs->rank());
        w[so.offset + 1] = Q(p);
        w[so.offset + 3] = Q(q);
        w[so.offset + 4] = Q(r);
        w[so.offset + 5] = Q(4);
        w[su.offset] = Q(r);
        want.add(w, 1);
      }
    const auto& got = lhs.grades.at(lhs.base + Q(l));
    o.expect(got == want, "branch of F(" + std::to_string(l) + "w1+4w7) differs");
  }
  auto q = make_parabolic(so.form, 4);
  o.expect(q->two_rho_u_cap_p == qvec({0, 0, 0, 0, 4, 4}), "2rho(u' cap p') = " + to_string(q->two_rho_u_cap_p));
  int rank = so.form->rs->rank();
  std::vector<Weight> up;
  for (int i : q->u_cap_p) up.push_back(from_ivec(so.form->rs->pos_roots()[i], rank, 1));
  auto sym = sym_power_characters(rank, up, 4);
  for (int n = 0; n <= 4; ++n) {
    IrrSum want;
    for (int p = 0; p <= n; ++p)
      if ((n - p) % 2 == 0) {
        Weight w = zeros(rank);
        w[1] = Q(p);
        w[3] = Q((n - p) / 2);
        want.add(w, 1);
      }
    o.expect(decompose(*q->l_cap_k, sym[n]) == want, "S^" + std::to_string(n) + "(u' cap p') differs");
  }
  o.summary = "F(lw1+4w7)|K^sigma for l<=3, S^n(u' cap p') for n<=4, 2rho(u' cap p') = 4mu5+4mu6";
  return o;
}

// ------------------------------------------------------------------ 3

Outcome reducible_aq() {
  Outcome o;
  auto cases = demonstrate_reducible_aq(4);
  std::vector<std::string> parts;
  auto need = [&](const std::string& prefix, int64_t expected) {
    for (auto& c : cases)
      if (c.label.rfind(prefix, 0) == 0) {
        o.expect(c.generators == expected, c.label + ": " + std::to_string(c.generators) + " lowest K-types");
        parts.push_back(c.label + " -> " + std::to_string(c.generators));
        return;
      }
    o.fail("case " + prefix + " missing");
  };
  need("sp(2,R): A_q(1)(-2mu1)", 2);
  need("so(2,4) > so(2,3): A_q(2)(-2mu2)", 2);
  need("e7 control", 1);
  for (auto& c : cases) o.expect(c.generators == c.expected, c.label + " differs from its expected count");
  o.summary = join(parts, "; ");
  return o;
}

// ------------------------------------------------------------------ 4

Outcome nonhol_irreducibility() {
  Outcome o;
  double worst = 0;
  int types = 0;
  for (auto* label : {"su(2,2):sp(1,1)", "su(4,2):sp(2,1)", "so(2,3):so(1,3)", "so(2,4):so(1,4)", "sp(2,R):sp(1,C)",
                      "e6:f4"}) {
    auto p = cat().find(label);
    int K = p->ambient.family == HermitianFamily::E6 ? 3 : 5;
    auto r = verify_nonhol_irreducibility(*p, K);
    worst = std::max(worst, r.seconds);
    o.expect(r.passed, std::string(label) + ": " + join(r.errors, "; "));
    for (auto& c : r.checks)
      if (c.rfind("FAIL", 0) == 0) o.fail(std::string(label) + " " + c);
    o.expect(r.seconds < kNonholSeconds, std::string(label) + " exceeds the time budget");
    types += K + 1;
  }
  std::ostringstream s;
  s << "6 pairs, " << types << " restricted K-types, each one irreducible of multiplicity 1 and pairwise distinct, slowest "
    << std::fixed;
  s.precision(2);
  s << worst << " s";
  o.summary = s.str();
  return o;
}

// ------------------------------------------------------------------ 5

Outcome identification() {
  Outcome o;
  int orbit = 0, strings = 0;
  for (auto* label : {"su(2,2):sp(1,1)", "su(4,2):sp(2,1)", "so(2,4):so(1,4)", "so(2,6):so(1,6)"}) {
    auto r = verify_nonhol_identification(*cat().find(label), 4);
    o.expect(r.passed, std::string(label) + ": " + join(r.errors, "; "));
    bool has_orbit = false;
    for (auto& c : r.checks) {
      if (c.rfind("FAIL", 0) == 0) o.fail(std::string(label) + " " + c);
      if (c.rfind("ok", 0) == 0 && c.find("lie in one Weyl orbit") != std::string::npos) has_orbit = true, ++orbit;
      if (c.rfind("ok", 0) == 0 && c.find("(b) k=") != std::string::npos) ++strings;
    }
    o.expect(has_orbit, std::string(label) + ": no orbit check ran");
  }
  o.expect(strings == 10, "string checks run: " + std::to_string(strings));
  o.summary = std::to_string(orbit) + " Weyl-orbit checks, " + std::to_string(strings) +
              " string terms k<=4 for sp(1,1) and sp(2,1)";
  return o;
}

// ------------------------------------------------------------------ 6

Outcome seesaw_crosscheck() {
  Outcome o;
  std::vector<std::string> parts;
  auto run = [&](const std::string& name, std::vector<int> params) {
    auto c = seesaw_config(name, params);
    auto pair = seesaw_pair(c, cat());
    auto cmp = compare_with_catalog(c, *pair, 5);
    o.expect(cmp.passed, c.name() + " disagrees with the catalogue");
    for (auto& l : cmp.lines)
      if (l.rfind("ok", 0) != 0) o.fail(c.name() + ": " + l);
    o.expect(cmp.derived_terms == cmp.catalog_terms, c.name() + ": term counts differ");
    parts.push_back(c.name() + " " + std::to_string(cmp.derived_terms) + " terms");
  };
  run("umn-u1", {2, 2, 1, 1});
  run("umn-u1", {3, 1, 1, 1});
  run("sostar-sp1", {4, 2});
  run("sostar-sp1", {4, 1});
  o.summary = join(parts, ", ");
  return o;
}

// ------------------------------------------------------------------ 7

Outcome fock() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  int n_checks = 0;
  for (int N = 3; N <= 8; ++N)
    for (int M = 1; M <= N - 2; ++M)
      for (int n = 0; n <= 10; ++n) {
        auto c = fock_dimension_oracle(N, M, n);
        o.expect(c.passed, "N=" + std::to_string(N) + " M=" + std::to_string(M) + " n=" + std::to_string(n));
        ++n_checks;
      }
  double t = since(t0);
  o.expect(t < kFockSeconds, "took " + std::to_string(t) + " s");
  o.summary = std::to_string(n_checks) + " (N,M,n) triples";
  return o;
}

// ------------------------------------------------------------------ 8

Outcome library_properties() {
  Outcome o;
  std::mt19937 rng(20240611);
  std::vector<std::string> types = {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C2", "C3",
                                    "C4", "C5", "C6", "D4", "D5", "D6", "E6", "F4", "G2"};
  auto random_weight = [&](int rank) {
    int budget = rank <= 3 ? 6 : (rank <= 4 ? 4 : 3);
    Weight w = zeros(rank);
    int left = int(rng() % (budget + 1));
    while (left-- > 0) w[rng() % rank] += Q(1);
    return w;
  };
  int weyl = 0, decomp = 0, branches = 0;
  for (auto& t : types) {
    auto rs = RootSystem::make(t);
    auto full = Subsystem::full(rs);
    int r = rs->rank();
    for (int i = 0; i < 100; ++i) {
      Weight lam = random_weight(r);
      auto dc = dominant_character(full, lam);
      int64_t mass = 0;
      for (auto& [v, m] : dc->entries) mass += m * int64_t(orbit_size(full, from_ivec(v, r, dc->den)));
      o.expect(mass == weyl_dim(full, lam), t + " " + to_string(lam) + ": Freudenthal mass " + std::to_string(mass));
      ++weyl;
    }
    for (int i = 0; i < 10; ++i) {
      IrrSum v;
      int terms = 1 + int(rng() % 3);
      for (int j = 0; j < terms; ++j) v.add(random_weight(r), 1 + int(rng() % 2));
      o.expect(decompose(full, character_of(full, v)) == v, t + ": decompose(character) differs");
      ++decomp;
    }
    RestrictionMap id{identity(r)};
    for (int i = 0; i < 5; ++i) {
      Weight lam = random_weight(r);
      int node = int(rng() % r);
      auto levi = Subsystem::levi(rs, {node});
      auto even = Subsystem::where(
          rs, [node](const std::vector<int>& a) { return a[node] % 2 == 0; }, "even" + std::to_string(node));
      for (auto* sub : {&levi, &even}) {
        auto b = branch(id, full, *sub, lam);
        o.expect(dimension(*sub, b) == weyl_dim(full, lam), t + " " + to_string(lam) + ": branch to " + sub->id());
        ++branches;
      }
    }
  }

  std::vector<RealFormPtr> forms = {
      real_form_hermitian("A3", RootSystem::make("A3"), 1), real_form_hermitian("A4", RootSystem::make("A4"), 1),
      real_form_hermitian("C3", RootSystem::make("C3"), 2), real_form_hermitian("D4", RootSystem::make("D4"), 0),
      real_form_hermitian("B3", RootSystem::make("B3"), 0), real_form_hermitian("D5", RootSystem::make("D5"), 4),
      real_form_parity("C3", RootSystem::make("C3"), 0),    real_form_parity("B3", RootSystem::make("B3"), 2)};
  int blattner = 0, compared = 0;
  while (blattner < 50) {
    auto f = forms[rng() % forms.size()];
    int node = int(rng() % f->rs->ss_rank());
    Weight lam = zeros(f->rs->rank());
    lam[node] = Q(int(rng() % 7) - 5);
    AqModuleSpec aq{make_parabolic(f, node), lam};
    auto kt = aq_ktypes(aq, 3);
    for (auto& [mu, m] : kt.ktypes.terms) {
      if (!kt.exact(mu)) continue;
      o.expect(blattner_multiplicity(aq, mu) == m, f->label + " q(" + std::to_string(node + 1) + ") " + to_string(mu));
      ++compared;
    }
    ++blattner;
  }
  o.summary = std::to_string(weyl) + " Weyl/Freudenthal, " + std::to_string(decomp) + " decompose(character), " +
              std::to_string(branches) + " branchings, " + std::to_string(blattner) + " Blattner cases (" +
              std::to_string(compared) + " K-types)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all = {
      {1, "holomorphic catalogue verification", holomorphic_catalogue},
      {2, "E7 worked example", e7_worked_example},
      {3, "reducible A_q(lambda)", reducible_aq},
      {4, "non-holomorphic irreducibility", nonhol_irreducibility},
      {5, "identification checks", identification},
      {6, "seesaw cross-check", seesaw_crosscheck},
      {7, "Fock oracle", fock},
      {8, "library property suites", library_properties},
  };
  bool ok = true;
  for (auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %d %s: %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", c.id, c.name, o.summary.c_str(), since(t0));
    for (size_t i = 0; i < o.details.size() && i < 20; ++i) std::printf("       %s\n", o.details[i].c_str());
    std::fflush(stdout);
    ok = ok && o.passed;
  }
  return ok ? 0 : 1;
}
