#include "doctest.h"
#include "hb/lie.hpp"

#include <random>
#include <set>

using namespace hb;

namespace {

// Brute-force closure of the simple roots under simple reflections, working
// with simple-root coefficient vectors and the Cartan matrix only.
std::set<std::vector<int>> reflection_closure(const std::vector<std::vector<int>>& c) {
  int n = c.size();
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> todo;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    all.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    auto r = todo.back();
    todo.pop_back();
    for (int i = 0; i < n; ++i) {
      int pair = 0;
      for (int j = 0; j < n; ++j) pair += r[j] * c[j][i];
      auto s = r;
      s[i] -= pair;
      if (all.insert(s).second) todo.push_back(s);
    }
  }
  return all;
}

size_t positive_count(const std::set<std::vector<int>>& roots) {
  size_t k = 0;
  for (auto& r : roots) {
    bool pos = true;
    for (int x : r) pos = pos && x >= 0;
    k += pos;
  }
  return k;
}

Weight random_weight(std::mt19937& g, int rank, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Weight w(rank);
  for (auto& x : w) x = d(g);
  return w;
}

}  // namespace

TEST_CASE("A2 has three positive roots and rho = w1 + w2") {
  auto rs = RootSystem::make("A2");
  CHECK(rs->pos_roots().size() == 3);
  CHECK(rs->rho() == qvec({1, 1}));
}

TEST_CASE("positive root counts agree with reflection closure") {
  for (std::string t : {"A1", "A5", "B3", "C4", "D4", "D5", "E6", "E7", "F4", "G2"}) {
    auto rs = RootSystem::make(t);
    auto closure = reflection_closure(rs->cartan());
    CHECK_MESSAGE(closure.size() == 2 * rs->pos_roots().size(), t);
    CHECK_MESSAGE(positive_count(closure) == rs->pos_roots().size(), t);
  }
  CHECK(RootSystem::make("E7")->pos_roots().size() == 63);
  CHECK(RootSystem::make("E6")->pos_roots().size() == 36);
}

TEST_CASE("closed-form positive root counts") {
  for (int n = 1; n <= 8; ++n) CHECK(RootSystem::make('A', n)->pos_roots().size() == size_t(n * (n + 1) / 2));
  for (int n = 2; n <= 8; ++n) {
    CHECK(RootSystem::make('B', n)->pos_roots().size() == size_t(n * n));
    CHECK(RootSystem::make('C', n)->pos_roots().size() == size_t(n * n));
  }
  for (int n = 3; n <= 8; ++n) CHECK(RootSystem::make('D', n)->pos_roots().size() == size_t(n * (n - 1)));
}

TEST_CASE("E6 bond pattern: 1-3-4-5-6 with 2 attached to 4") {
  auto rs = RootSystem::make("E6");
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (rs->cartan()[i][j] != 0) edges.insert({i + 1, j + 1});
  std::set<std::pair<int, int>> expect{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
  CHECK(edges == expect);
  // Removing node 6 leaves D5 (the so(10) part of k).
  auto k = Subsystem::levi(rs, {5});
  CHECK(k.pos_indices().size() == 20);
  CHECK(k.weyl_order() == 1920);
}

TEST_CASE("inner product normalization and Cartan consistency") {
  for (std::string t : {"A3", "B3", "C3", "D4", "E6", "E7", "F4", "G2", "A1+C2"}) {
    auto rs = RootSystem::make(t);
    Q longest = 0;
    for (size_t k = 0; k < rs->pos_roots().size(); ++k)
      longest = std::max(longest, rs->inner(rs->root_w(k), rs->root_w(k)));
    CHECK(longest == 2);
    for (int i = 0; i < rs->ss_rank(); ++i) {
      Weight ai = rs->simple_root_w(i);
      CHECK(2 * rs->inner(rs->rho(), ai) / rs->inner(ai, ai) == 1);
      for (int j = 0; j < rs->ss_rank(); ++j) {
        Weight aj = rs->simple_root_w(j);
        CHECK(2 * rs->inner(ai, aj) / rs->inner(aj, aj) == rs->cartan()[i][j]);
      }
    }
    for (int i = 0; i < rs->rank(); ++i)
      for (int j = 0; j < rs->rank(); ++j) CHECK(rs->gram()[i][j] == rs->gram()[j][i]);
  }
  auto c2 = RootSystem::make("C2");
  CHECK(c2->cartan()[0][1] == -1);
  CHECK(c2->cartan()[1][0] == -2);
  CHECK(c2->inner(c2->simple_root_w(1), c2->simple_root_w(1)) ==
        2 * c2->inner(c2->simple_root_w(0), c2->simple_root_w(0)));
}

TEST_CASE("rho is half the sum of positive roots") {
  for (std::string t : {"A4", "B4", "C3", "D5", "E6", "E7"}) {
    auto rs = RootSystem::make(t);
    Weight s = zeros(rs->rank());
    for (size_t k = 0; k < rs->pos_roots().size(); ++k) s = add(s, rs->root_w(k));
    CHECK(scale(s, Q(1, 2)) == rs->rho());
  }
}

TEST_CASE("to_dominant basics") {
  auto rs = RootSystem::make("A2");
  auto w = Subsystem::full(rs);
  auto r = w.to_dominant(qvec({2, 1}));
  CHECK(r.dominant == qvec({2, 1}));
  CHECK(r.parity == 1);
  CHECK(!r.singular);
  auto r2 = w.to_dominant(w.reflect(0, qvec({2, 1})));
  CHECK(r2.dominant == qvec({2, 1}));
  CHECK(r2.parity == -1);
  CHECK(w.apply(r2.word, w.reflect(0, qvec({2, 1}))) == qvec({2, 1}));
  // -rho goes to rho through the longest element; find it among all six.
  Weight mrho = scale(rs->rho(), -1);
  auto r3 = w.to_dominant(mrho);
  CHECK(r3.dominant == rs->rho());
  int found = 0;
  for (auto& e : w.weyl_elements(kDefaultWeylCap))
    if (w.apply(e, mrho) == rs->rho()) {
      ++found;
      CHECK(e.length() == 3);
      CHECK(e.parity == -1);
    }
  CHECK(found == 1);
  CHECK(r3.parity == -1);
  CHECK(w.to_dominant(qvec({1, 0})).singular);
  CHECK(w.to_dominant(qvec({-1, 0})).singular);
}

TEST_CASE("to_dominant is idempotent and same_weyl_orbit") {
  std::mt19937 g(7);
  for (std::string t : {"B3", "D4", "E6"}) {
    auto rs = RootSystem::make(t);
    auto w = Subsystem::full(rs);
    for (int s = 0; s < 50; ++s) {
      Weight x = random_weight(g, rs->rank(), -3, 3);
      auto d = w.to_dominant(x).dominant;
      CHECK(w.is_dominant(d));
      CHECK(w.to_dominant(d).dominant == d);
      CHECK(w.to_dominant(d).parity == 1);
      CHECK(w.same_orbit(x, d));
    }
    CHECK(w.same_orbit(rs->rho(), scale(rs->rho(), -1)));
  }
}

TEST_CASE("Weyl group enumeration") {
  auto a1 = Subsystem::full(RootSystem::make("A1"));
  CHECK(a1.weyl_elements(10).size() == 2);
  auto a2 = Subsystem::full(RootSystem::make("A2"));
  auto els = a2.weyl_elements(10);
  CHECK(els.size() == 6);
  int sum = 0;
  for (auto& e : els) sum += e.parity;
  CHECK(sum == 0);
  auto d5 = Subsystem::full(RootSystem::make("D5"));
  auto all = d5.weyl_elements(kDefaultWeylCap);
  CHECK(all.size() == 1920);
  // Distinct images of a strictly dominant weight.
  std::set<Weight> imgs;
  Weight probe = qvec({1, 2, 3, 4, 5});
  for (auto& e : all) imgs.insert(d5.apply(e, probe));
  CHECK(imgs.size() == 1920);
  for (auto& e : all) CHECK(e.parity == ((e.length() % 2) ? -1 : 1));
  CHECK_THROWS_AS(d5.weyl_elements(1000), std::length_error);
  CHECK(Subsystem::full(RootSystem::make("E6")).weyl_order() == 51840);
  CHECK(Subsystem::full(RootSystem::make("E7")).weyl_order() == 2903040);
}

TEST_CASE("inner product is Weyl invariant") {
  std::mt19937 g(11);
  for (std::string t : {"A3", "B3", "C4", "D4", "G2", "F4", "E6"}) {
    auto rs = RootSystem::make(t);
    auto w = Subsystem::full(rs);
    for (int s = 0; s < 1000; ++s) {
      Weight a = random_weight(g, rs->rank(), -4, 4), b = random_weight(g, rs->rank(), -4, 4);
      std::uniform_int_distribution<int> len(0, 8), node(0, rs->ss_rank() - 1);
      WeylWord word;
      int l = len(g);
      for (int i = 0; i < l; ++i) word.word.push_back(node(g));
      CHECK(rs->inner(w.apply(word, a), w.apply(word, b)) == rs->inner(a, b));
    }
  }
}

TEST_CASE("subsystems cut by a parity rule") {
  // Roots of C3 with even coefficient at node 1: the compact part sp(1)+sp(2).
  auto rs = RootSystem::make("C3");
  auto k = Subsystem::where(rs, [](const std::vector<int>& a) { return a[0] % 2 == 0; }, "even0");
  CHECK(k.pos_indices().size() == 1 + 4);
  CHECK(k.n_simple() == 3);
  CHECK(k.weyl_order() == 2 * 8);
  CHECK(orbit_size(Subsystem::full(rs), qvec({1, 0, 0})) == 6);
}

TEST_CASE("unsupported input is rejected") {
  CHECK_THROWS(RootSystem::make("Q3"));
  CHECK_THROWS(RootSystem::make("A9"));
  CHECK_THROWS(RootSystem::make("E5"));
  CHECK_THROWS(RootSystem::make("A2")->inner(qvec({1}), qvec({1, 0})));
}

TEST_CASE("epsilon coordinates") {
  for (auto [type, rank] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 4}, {'B', 2}, {'B', 4}, {'C', 1}, {'C', 3}, {'D', 2}, {'D', 3}, {'D', 5}}) {
    CAPTURE(type);
    CAPTURE(rank);
    auto rs = RootSystem::make(type, rank);
    Q c = type == 'C' ? Q(1, 2) : Q(1);
    for (int i = 0; i < rank; ++i) {
      Weight a = rs->simple_root_w(i);
      CHECK(eps_to_omega(type, rank, omega_to_eps(type, rank, a)) == a);
      for (int j = 0; j < rank; ++j) {
        Weight b = rs->simple_root_w(j);
        auto ea = omega_to_eps(type, rank, a), eb = omega_to_eps(type, rank, b);
        if (type == 'A') {
          // Project off the all-ones direction.
          Q ma(0), mb(0);
          for (size_t t = 0; t < ea.size(); ++t) ma += ea[t], mb += eb[t];
          for (size_t t = 0; t < ea.size(); ++t) ea[t] -= ma / Q(int64_t(ea.size())), eb[t] -= mb / Q(int64_t(eb.size()));
        }
        Q dot(0);
        for (size_t t = 0; t < ea.size(); ++t) dot += ea[t] * eb[t];
        CHECK(rs->inner(a, b) == c * dot);
      }
    }
  }
  CHECK(omega_to_eps('C', 3, qvec({1, -1, 1})) == qvec({1, 0, 1}));
  CHECK(omega_to_eps('D', 4, qvec({0, 0, 0, 1})) == scale(qvec({1, 1, 1, 1}), Q(1, 2)));
}
