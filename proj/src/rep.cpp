#include "hb/rep.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace hb {

// ---------------------------------------------------------------- Character

void Character::rescale(int64_t nd) {
  if (nd == den) return;
  if (nd % den) throw std::logic_error("rescale to a non-multiple denominator");
  int32_t f = int32_t(nd / den);
  std::unordered_map<IVec, int64_t, IVecHash> m2;
  m2.reserve(mult.size());
  for (auto& [k, v] : mult) {
    IVec x = k;
    for (int i = 0; i < rank; ++i) x[i] *= f;
    m2.emplace(x, v);
  }
  mult.swap(m2);
  den = nd;
}

void Character::add(const Weight& w, int64_t m) {
  int64_t d = common_den(w);
  if (den % d) rescale(std::lcm(den, d));
  add_num(to_ivec(w, den), m);
}

void Character::add_num(const IVec& w, int64_t m) {
  if (!m) return;
  auto it = mult.find(w);
  if (it == mult.end()) {
    mult.emplace(w, m);
  } else if ((it->second += m) == 0) {
    mult.erase(it);
  }
}

int64_t Character::at(const Weight& w) const {
  for (auto& x : w)
    if ((x * den).denominator() != 1) return 0;
  auto it = mult.find(to_ivec(w, den));
  return it == mult.end() ? 0 : it->second;
}

int64_t Character::mass() const {
  int64_t s = 0;
  for (auto& [k, v] : mult) s += v;
  return s;
}

std::vector<std::pair<Weight, int64_t>> Character::sorted() const {
  std::vector<std::pair<Weight, int64_t>> out;
  for (auto& [k, v] : mult) out.emplace_back(weight(k), v);
  std::sort(out.begin(), out.end());
  return out;
}

bool Character::operator==(const Character& o) const {
  if (rank != o.rank) return false;
  return sorted() == o.sorted();
}

// ---------------------------------------------------------------- IrrSum

void IrrSum::add(const Weight& w, int64_t m) {
  if (!m) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, m);
  } else if ((it->second += m) == 0) {
    terms.erase(it);
  }
}

void IrrSum::add(const IrrSum& o, int64_t m) {
  for (auto& [w, c] : o.terms) add(w, c * m);
}

int64_t IrrSum::at(const Weight& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? 0 : it->second;
}

int64_t IrrSum::count() const {
  int64_t s = 0;
  for (auto& [w, c] : terms) s += c;
  return s;
}

IrrSum outer(const IrrSum& a, const IrrSum& b) {
  IrrSum r;
  for (auto& [wa, ca] : a.terms)
    for (auto& [wb, cb] : b.terms) r.add(hb::add(wa, wb), ca * cb);
  return r;
}

NotAModuleCharacter::NotAModuleCharacter(const Weight& w, int64_t m)
    : std::runtime_error("not a module character: weight " + to_string(w) + " has multiplicity " +
                         std::to_string(m) + " during highest-weight extraction"),
      weight(w),
      multiplicity(m) {}

// ---------------------------------------------------------------- Freudenthal

namespace {

std::mutex g_cache_mu;
std::unordered_map<std::string, std::shared_ptr<const DominantCharacter>> g_dom_cache;

std::shared_ptr<DominantCharacter> compute_dominant(const Subsystem& s, const Weight& lam) {
  const RootSystem& rs = s.ambient();
  int n = rs.rank();
  int64_t D = common_den(lam);
  IVec top = to_ivec(lam, D);
  std::vector<IVec> roots;
  for (int j : s.pos_indices()) {
    IVec r = rs.pos_roots()[j];
    for (int i = 0; i < n; ++i) r[i] *= int32_t(D);
    roots.push_back(r);
  }
  const auto& pv = s.pair_num();

  // Dominant weights below lam are linked to lam by chains of dominant
  // weights differing by positive roots.
  std::vector<IVec> doms{top};
  std::unordered_set<IVec, IVecHash> seen{top};
  for (size_t cur = 0; cur < doms.size(); ++cur) {
    for (const auto& r : roots) {
      IVec x = doms[cur];
      axpy(x, r, -1);
      if (seen.count(x) || !s.dominant_num(x)) continue;
      seen.insert(x);
      doms.push_back(x);
    }
  }
  const IVec& h = s.height_num();
  std::sort(doms.begin(), doms.end(), [&](const IVec& a, const IVec& b) {
    int64_t ha = dot(a, h), hb2 = dot(b, h);
    if (ha != hb2) return ha > hb2;
    return b < a;
  });

  Weight rho2 = scale(s.rho(), 2);
  auto norm_gap = [&](const IVec& mu) {
    Weight m = from_ivec(mu, n, D);
    return rs.inner(sub(lam, m), add(add(lam, m), rho2));
  };

  auto dc = std::make_shared<DominantCharacter>();
  dc->rank = n;
  dc->den = D;
  std::unordered_map<IVec, int64_t, IVecHash> m;
  m.emplace(top, 1);
  dc->entries.emplace_back(top, 1);
  for (size_t idx = 1; idx < doms.size(); ++idx) {
    const IVec& mu = doms[idx];
    int64_t acc = 0;
    for (size_t j = 0; j < roots.size(); ++j) {
      IVec x = mu;
      while (true) {
        axpy(x, roots[j], 1);
        IVec d = x;
        s.to_dominant_num(d);
        auto it = m.find(d);
        if (it == m.end()) break;
        acc += it->second * dot(x, pv[j]);
      }
    }
    Q val = Q(2 * acc, D * s.pair_den()) / norm_gap(mu);
    if (val.denominator() != 1 || val < 0)
      throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
    int64_t v = val.numerator();
    if (v) {
      m.emplace(mu, v);
      dc->entries.emplace_back(mu, v);
    }
  }
  return dc;
}

}  // namespace

std::shared_ptr<const DominantCharacter> dominant_character(const Subsystem& s, const Weight& lam) {
  if (!s.is_dominant(lam) || !s.is_integral(lam))
    throw std::invalid_argument("highest weight " + to_string(lam) + " is not dominant integral for " + s.id());
  std::string key = s.id() + "#" + to_string(lam);
  {
    std::lock_guard<std::mutex> g(g_cache_mu);
    auto it = g_dom_cache.find(key);
    if (it != g_dom_cache.end()) return it->second;
  }
  auto dc = compute_dominant(s, lam);
  std::lock_guard<std::mutex> g(g_cache_mu);
  return g_dom_cache.emplace(key, dc).first->second;
}

void clear_rep_caches() {
  std::lock_guard<std::mutex> g(g_cache_mu);
  g_dom_cache.clear();
}

size_t rep_cache_size() {
  std::lock_guard<std::mutex> g(g_cache_mu);
  return g_dom_cache.size();
}

Character expand_orbits(const Subsystem& s, const DominantCharacter& dc) {
  Character ch(dc.rank, dc.den);
  const auto& cv = s.coroot_num();
  const auto& beta = s.simple_num();
  int64_t cden = s.coroot_den();
  std::vector<IVec> stack;
  std::unordered_set<IVec, IVecHash> orbit;
  for (auto& [mu, mult] : dc.entries) {
    orbit.clear();
    orbit.insert(mu);
    stack.assign(1, mu);
    while (!stack.empty()) {
      IVec x = stack.back();
      stack.pop_back();
      for (size_t k = 0; k < cv.size(); ++k) {
        int64_t d = dot(x, cv[k]);
        if (d <= 0) continue;
        IVec y = x;
        axpy(y, beta[k], -int32_t(d / cden));
        if (orbit.insert(y).second) stack.push_back(y);
      }
    }
    for (auto& w : orbit) ch.mult.emplace(w, mult);
  }
  return ch;
}

Character freudenthal(const Subsystem& s, const Weight& lam) {
  return expand_orbits(s, *dominant_character(s, lam));
}

int64_t weyl_dim(const Subsystem& s, const Weight& lam) {
  if (!s.is_dominant(lam) || !s.is_integral(lam))
    throw std::invalid_argument("weyl_dim needs a dominant integral weight, got " + to_string(lam));
  using boost::multiprecision::cpp_int;
  const RootSystem& rs = s.ambient();
  Weight lr = add(lam, s.rho());
  cpp_int num = 1, den = 1;
  for (int j : s.pos_indices()) {
    Weight a = rs.root_w(j);
    Q x = rs.inner(lr, a), y = rs.inner(s.rho(), a);
    Q r = x / y;
    num *= r.numerator();
    den *= r.denominator();
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not an integer");
  return static_cast<int64_t>(num / den);
}

IrrSum decompose(const Subsystem& s, const Character& ch) {
  std::unordered_map<IVec, int64_t, IVecHash> rem;
  for (auto& [k, v] : ch.mult)
    if (s.dominant_num(k)) rem.emplace(k, v);
  const IVec& h = s.height_num();
  IrrSum out;
  while (!rem.empty()) {
    auto best = rem.begin();
    int64_t bh = dot(best->first, h);
    for (auto it = rem.begin(); it != rem.end(); ++it) {
      int64_t hh = dot(it->first, h);
      if (hh > bh || (hh == bh && best->first < it->first)) {
        best = it;
        bh = hh;
      }
    }
    Weight lam = ch.weight(best->first);
    int64_t c = best->second;
    if (c < 0) throw NotAModuleCharacter(lam, c);
    if (!s.is_integral(lam)) throw NotAModuleCharacter(lam, c);
    out.add(lam, c);
    auto dc = dominant_character(s, lam);
    int32_t f = int32_t(ch.den / dc->den);
    for (auto& [mu, m] : dc->entries) {
      IVec x = mu;
      if (f != 1)
        for (int i = 0; i < ch.rank; ++i) x[i] *= f;
      auto it = rem.find(x);
      int64_t v = (it == rem.end() ? 0 : it->second) - c * m;
      if (v < 0) throw NotAModuleCharacter(ch.weight(x), v);
      if (it == rem.end()) {
        if (v) rem.emplace(x, v);
      } else if (v == 0) {
        rem.erase(it);
      } else {
        it->second = v;
      }
    }
  }
  return out;
}

Character character_of(const Subsystem& s, const IrrSum& v) {
  Character ch(s.ambient().rank());
  for (auto& [w, c] : v.terms) {
    Character f = freudenthal(s, w);
    if (ch.den % f.den) ch.rescale(std::lcm(ch.den, f.den));
    f.rescale(ch.den);
    for (auto& [k, m] : f.mult) ch.add_num(k, m * c);
  }
  return ch;
}

int64_t dimension(const Subsystem& s, const IrrSum& v) {
  int64_t d = 0;
  for (auto& [w, c] : v.terms) d += c * weyl_dim(s, w);
  return d;
}

Character restrict(const RestrictionMap& map, const Character& ch, const Subsystem* keep) {
  int dst = map.dst_rank();
  int64_t mden = 1;
  for (auto& row : map.m) mden = std::lcm(mden, common_den(row));
  std::vector<IVec> cols(dst);
  for (int j = 0; j < dst; ++j)
    for (int i = 0; i < map.src_rank(); ++i) {
      Q x = map.m[i][j] * mden;
      cols[j][i] = int32_t(x.numerator());
    }
  Character out(dst, ch.den * mden);
  for (auto& [k, v] : ch.mult) {
    IVec y;
    for (int j = 0; j < dst; ++j) y[j] = int32_t(dot(k, cols[j]));
    if (keep && !keep->dominant_num(y)) continue;
    out.add_num(y, v);
  }
  // Canonicalize to the smallest common denominator.
  int64_t g = out.den;
  for (auto& [k, v] : out.mult)
    for (int j = 0; j < dst; ++j) g = std::gcd(g, int64_t(k[j]));
  if (g > 1) {
    Character c2(dst, out.den / g);
    for (auto& [k, v] : out.mult) {
      IVec y = k;
      for (int j = 0; j < dst; ++j) y[j] /= int32_t(g);
      c2.mult.emplace(y, v);
    }
    return c2;
  }
  return out;
}

IrrSum branch(const RestrictionMap& map, const Subsystem& src, const Subsystem& dst, const Weight& lam) {
  Character full = freudenthal(src, lam);
  return decompose(dst, restrict(map, full, &dst));
}

std::vector<Character> sym_power_characters(int rank, const std::vector<Weight>& weights, int n) {
  int64_t D = 1;
  for (auto& w : weights) D = std::lcm(D, common_den(w));
  std::vector<Character> cur(n + 1, Character(rank, D));
  cur[0].add_num(IVec{}, 1);
  for (auto& w : weights) {
    IVec step = to_ivec(w, D);
    // Multiplying by 1/(1 - x^w): new[d] = old[d] + new[d-1] * x^w.
    for (int d = 1; d <= n; ++d) {
      for (auto& [k, v] : cur[d - 1].mult) {
        IVec y = k;
        axpy(y, step, 1);
        cur[d].add_num(y, v);
      }
    }
  }
  return cur;
}

Character sym_power_character(int rank, const std::vector<Weight>& weights, int n) {
  return sym_power_characters(rank, weights, n)[n];
}

Character tensor(const Character& a, const Character& b) {
  int64_t D = std::lcm(a.den, b.den);
  Character x = a, y = b;
  x.rescale(D);
  y.rescale(D);
  Character out(a.rank, D);
  for (auto& [ka, va] : x.mult)
    for (auto& [kb, vb] : y.mult) {
      IVec z = ka;
      axpy(z, kb, 1);
      out.add_num(z, va * vb);
    }
  return out;
}

Character shift(const Character& a, const Weight& by) {
  int64_t D = std::lcm(a.den, common_den(by));
  Character x = a;
  x.rescale(D);
  IVec s = to_ivec(by, D);
  Character out(a.rank, D);
  for (auto& [k, v] : x.mult) {
    IVec z = k;
    axpy(z, s, 1);
    out.mult.emplace(z, v);
  }
  return out;
}

}  // namespace hb
