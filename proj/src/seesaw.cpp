#include "hb/seesaw.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hb {

namespace {

bool is_int(const Q& q) { return q.denominator() == 1; }

std::string qs(const Q& q) { return to_string(q); }

int P(const SeesawConfig& c, int i) { return c.params.at(i); }

// One block U(|P|,|Q|) x U(r) of a dual pair: eps slots of the positive and
// negative parts, and the shift (|P|-|Q|)/2 of the genuine parameters.
struct Block {
  std::vector<int> pos, neg;
  int total = 0;
  std::string label() const {
    return "u(" + std::to_string(pos.size()) + "," + std::to_string(neg.size()) + ")";
  }
};

std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int i = from; i < to; ++i) v.push_back(i);
  return v;
}

// Lowest K-type of theta(rho) for U(|P|,|Q|) x U(r), rho given by its
// highest weight in nonincreasing order.
std::optional<QVec> lift_block(const Block& b, const QVec& rho, std::string* why) {
  int r = int(rho.size());
  Q shift = Q(int64_t(b.pos.size()) - int64_t(b.neg.size()), 2);
  QVec x(r);
  int npos = 0, nneg = 0;
  for (int i = 0; i < r; ++i) {
    x[i] = rho[i] - shift;
    if (!is_int(x[i])) {
      if (why) *why = "parameter " + qs(rho[i]) + " - " + qs(shift) + " is not an integer";
      return std::nullopt;
    }
    if (i > 0 && x[i] > x[i - 1]) {
      if (why) *why = "parameters are not dominant";
      return std::nullopt;
    }
    if (x[i] > Q(0)) ++npos;
    if (x[i] < Q(0)) ++nneg;
  }
  if (npos > int(b.pos.size()) || nneg > int(b.neg.size())) {
    if (why)
      *why = "needs " + std::to_string(npos) + " positive and " + std::to_string(nneg) +
             " negative entries, " + b.label() + " allows " + std::to_string(b.pos.size()) + " and " +
             std::to_string(b.neg.size());
    return std::nullopt;
  }
  QVec e = zeros(b.total);
  Q half(r, 2);
  for (int i : b.pos) e[i] += half;
  for (int i : b.neg) e[i] -= half;
  for (int i = 0; i < npos; ++i) e[b.pos[i]] += x[i];
  for (int i = 0; i < nneg; ++i) e[b.neg[b.neg.size() - 1 - i]] += x[r - 1 - i];
  return e;
}

LowestWeightModuleSpec block_module(const Block& b, const QVec& eps) {
  LowestWeightModuleSpec m;
  m.context = b.label();
  QVec local;
  Q trace(0);
  for (int i : b.pos) local.push_back(eps[i]), trace += eps[i];
  for (int i : b.neg) local.push_back(eps[i]), trace += eps[i];
  int rank = int(local.size()) - 1;
  m.mu = rank > 0 ? eps_to_omega('A', rank, local) : QVec{};
  m.c_offsets = {trace};
  return m;
}

void check_group(const GenuineChar& pi, const std::string& want, size_t n) {
  if (pi.group != want) throw std::invalid_argument("expected a character of " + want + ", got " + pi.group);
  if (pi.params.size() != n)
    throw std::invalid_argument(want + " takes " + std::to_string(n) + " parameter(s)");
}

// Blocks of G1 (index 0) or of G2 (indices 1, 2) in eps slots.
std::vector<Block> g2_blocks(const SeesawConfig& c) {
  if (c.kind == SeesawKind::UmnU1) {
    int m = P(c, 0), n = P(c, 1), p = P(c, 2), q = P(c, 3);
    Block a{range(0, p), range(m + n - q, m + n), m + n};
    Block b{range(p, m), range(m, m + n - q), m + n};
    return {a, b};
  }
  int n = P(c, 0), m = P(c, 1);
  return {Block{range(0, m), range(m, n), n}};
}

}  // namespace

std::string SeesawConfig::name() const {
  std::string s = kind == SeesawKind::UmnU1 ? "umn-u1" : "sostar-sp1";
  for (size_t i = 0; i < params.size(); ++i) s += (i ? "," : " ") + std::to_string(params[i]);
  return s;
}

SeesawConfig seesaw_config(const std::string& name, const std::vector<int>& p) {
  SeesawConfig c;
  c.params = p;
  auto s = [](int x) { return std::to_string(x); };
  if (name == "umn-u1") {
    if (p.size() != 4) throw std::invalid_argument("umn-u1 takes m,n,p,q");
    int m = p[0], n = p[1], pp = p[2], q = p[3];
    if (!(m >= 1 && n >= 1 && pp >= 1 && q >= 1 && pp <= m && q <= n && (m - pp) + (n - q) >= 1))
      throw std::invalid_argument("umn-u1 needs 1 <= p <= m, 1 <= q <= n and (p,q) != (m,n)");
    c.kind = SeesawKind::UmnU1;
    c.g1 = "U(" + s(m) + "," + s(n) + ")";
    c.h1 = "U(1)";
    c.g2 = "U(" + s(pp) + "," + s(q) + ")xU(" + s(m - pp) + "," + s(n - q) + ")";
    c.h2 = "U(1)xU(1)";
    return c;
  }
  if (name == "sostar-sp1") {
    if (p.size() != 2) throw std::invalid_argument("sostar-sp1 takes n,m");
    int n = p[0], m = p[1];
    if (!(n >= 3 && m >= 1 && m <= n - 1)) throw std::invalid_argument("sostar-sp1 needs n >= 3, 1 <= m <= n-1");
    c.kind = SeesawKind::SoStarSp1;
    c.g1 = "O*(" + s(2 * n) + ")";
    c.h1 = "Sp(1)";
    c.g2 = "U(" + s(m) + "," + s(n - m) + ")";
    c.h2 = "U(2)";
    return c;
  }
  throw std::invalid_argument("unknown seesaw configuration '" + name + "' (umn-u1, sostar-sp1)");
}

bool is_genuine(const SeesawConfig& c, const GenuineChar& pi, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (c.kind == SeesawKind::UmnU1) {
    int m = P(c, 0), n = P(c, 1), p = P(c, 2), q = P(c, 3);
    if (pi.group == "U(1)" && pi.params.size() == 1) {
      if (!is_int(pi.params[0] - Q(m + n, 2))) return fail("det^c needs c - (m+n)/2 in Z");
      return true;
    }
    if (pi.group == "U(1)xU(1)" && pi.params.size() == 2) {
      if (!is_int(pi.params[0] - Q(p + q, 2))) return fail("det^a needs a - (p+q)/2 in Z");
      if (!is_int(pi.params[1] - Q(m + n - p - q, 2))) return fail("det^b needs b - (m+n-p-q)/2 in Z");
      return true;
    }
    return fail("not a character of " + c.h1 + " or " + c.h2);
  }
  int n = P(c, 0);
  if (pi.group == "Sp(1)" && pi.params.size() == 1) {
    if (!is_int(pi.params[0]) || pi.params[0] < Q(0)) return fail("Sp(1) highest weight must be in Z>=0");
    return true;
  }
  if (pi.group == "U(2)" && pi.params.size() == 2) {
    Q d = pi.params[0] - pi.params[1];
    if (!is_int(d) || d < Q(0)) return fail("a delta_1 + b delta_2 needs a - b in Z>=0");
    if (!is_int(pi.params[0] - Q(n, 2))) return fail("a delta_1 + b delta_2 needs a in n/2 + Z");
    return true;
  }
  return fail("not a character of " + c.h1 + " or " + c.h2);
}

ThetaLift seesaw_source(const SeesawConfig& c) {
  if (c.kind == SeesawKind::UmnU1) {
    int m = P(c, 0), n = P(c, 1);
    return theta_lift(c, {"U(1)", {Q(m - n, 2)}});
  }
  return theta_lift(c, {"Sp(1)", {Q(0)}});
}

ThetaLift theta_lift(const SeesawConfig& c, const GenuineChar& pi) {
  ThetaLift t;
  std::string why;
  if (!is_genuine(c, pi, &why)) {
    t.reason = "not genuine: " + why;
    return t;
  }
  if (c.kind == SeesawKind::UmnU1) {
    int m = P(c, 0), n = P(c, 1);
    if (pi.group == "U(1)") {
      Block g1{range(0, m), range(m, m + n), m + n};
      auto e = lift_block(g1, pi.params, &why);
      if (!e) {
        t.reason = "not in R(H1, omega): " + why;
        return t;
      }
      t.present = true;
      t.group = "u(" + std::to_string(m) + "," + std::to_string(n) + ")";
      t.eps = *e;
      t.modules = {block_module(g1, *e)};
      return t;
    }
    auto blocks = g2_blocks(c);
    QVec e = zeros(m + n);
    for (int i = 0; i < 2; ++i) {
      auto part = lift_block(blocks[i], {pi.params[i]}, &why);
      if (!part) {
        t.reason = "not in R(H2, omega): " + blocks[i].label() + ": " + why;
        return t;
      }
      e = add(e, *part);
      t.modules.push_back(block_module(blocks[i], *part));
    }
    t.present = true;
    t.group = blocks[0].label() + "+" + blocks[1].label();
    t.eps = e;
    return t;
  }
  int n = P(c, 0);
  if (pi.group == "Sp(1)") {
    if (pi.params[0] != Q(0)) {
      t.reason = "only theta(chi) is tabulated for O*(2n) x Sp(1)";
      return t;
    }
    t.present = true;
    t.group = "so*(" + std::to_string(2 * n) + ")";
    t.eps = QVec(n, Q(1));
    LowestWeightModuleSpec mod;
    mod.context = t.group;
    mod.mu = eps_to_omega('D', n, t.eps);
    t.modules = {mod};
    return t;
  }
  Block b = g2_blocks(c)[0];
  auto e = lift_block(b, pi.params, &why);
  if (!e) {
    t.reason = "not in R(H2, omega): " + why;
    return t;
  }
  t.present = true;
  t.group = b.label();
  t.modules = {block_module(b, *e)};
  // The lift is in the standard basis of u(m,n-m), whose p_+ is
  // eps_i - eps_{m+j}; inside so*(2n) p_+ is eps_i + eps_{m+j}, so the
  // second block is negated and reversed.
  int m = P(c, 1);
  t.eps = *e;
  for (int j = 0; j < n - m; ++j) t.eps[m + j] = -(*e)[n - 1 - j];
  return t;
}

int64_t seesaw_multiplicity(const SeesawConfig& c, const GenuineChar& pi, const GenuineChar& rho) {
  std::string why;
  if (!is_genuine(c, pi, &why)) throw std::invalid_argument("pi: " + why);
  if (!is_genuine(c, rho, &why)) throw std::invalid_argument("rho: " + why);
  if (c.kind == SeesawKind::UmnU1) {
    check_group(pi, "U(1)", 1);
    check_group(rho, "U(1)xU(1)", 2);
    // H1 sits diagonally in H2.
    return rho.params[0] + rho.params[1] == pi.params[0] ? 1 : 0;
  }
  check_group(pi, "Sp(1)", 1);
  check_group(rho, "U(2)", 2);
  // F(a delta_1 + b delta_2) stays irreducible on Sp(1) = SU(2), of highest
  // weight a - b.
  return rho.params[0] - rho.params[1] == pi.params[0] ? 1 : 0;
}

std::vector<SeesawTerm> derive_branching(const SeesawConfig& c, int count) {
  std::vector<SeesawTerm> out;
  GenuineChar pi;
  std::vector<std::vector<long long>> series(2);
  for (int i = 0; i < count; ++i) {
    if (c.kind == SeesawKind::UmnU1) {
      series[0].push_back(i);
      series[1].push_back(-1 - i);
    } else {
      series[0].push_back(-i);
      series[1].push_back(1 + i);
    }
  }
  for (int s = 0; s < 2; ++s)
    for (long long k : series[s]) {
      SeesawTerm t;
      t.series = s;
      t.k = k;
      if (c.kind == SeesawKind::UmnU1) {
        int m = P(c, 0), n = P(c, 1), p = P(c, 2), q = P(c, 3);
        pi = {"U(1)", {Q(m - n, 2)}};
        t.rho = {"U(1)xU(1)", {Q(p - q, 2) - Q(k), Q((m - p) - (n - q), 2) + Q(k)}};
      } else {
        int n = P(c, 0), m = P(c, 1);
        pi = {"Sp(1)", {Q(0)}};
        Q a = Q(m) - Q(n, 2) + Q(k);
        t.rho = {"U(2)", {a, a}};
      }
      if (seesaw_multiplicity(c, pi, t.rho) != 1) throw std::logic_error("seesaw: rho does not contain pi");
      t.lift = theta_lift(c, t.rho);
      if (t.lift.present) out.push_back(std::move(t));
    }
  return out;
}

Weight seesaw_ambient_weight(const SeesawConfig& c, const QVec& eps) {
  if (c.kind == SeesawKind::UmnU1) return eps_to_omega('A', P(c, 0) + P(c, 1) - 1, eps);
  return eps_to_omega('D', P(c, 0), eps);
}

PairPtr seesaw_pair(const SeesawConfig& c, const Catalog& cat) {
  if (c.kind == SeesawKind::UmnU1)
    return cat.instantiate("su:su+su+u1", {{"m", P(c, 0)}, {"n", P(c, 1)}, {"p", P(c, 2)}, {"q", P(c, 3)}});
  return cat.instantiate("so*:su+u1", {{"n", P(c, 0)}, {"m", P(c, 1)}});
}

std::optional<SeesawConfig> seesaw_config_for(const PairDescriptor& pair) {
  auto at = [&](const char* k) { return int(pair.params.at(k)); };
  if (pair.family_id == "su:su+su+u1") return seesaw_config("umn-u1", {at("m"), at("n"), at("p"), at("q")});
  if (pair.family_id == "so*:su+u1") return seesaw_config("sostar-sp1", {at("n"), at("m")});
  return std::nullopt;
}

SeesawComparison compare_with_catalog(const SeesawConfig& c, const PairDescriptor& pair, int count) {
  SeesawComparison cmp;
  auto gs_of = [&](const QVec& eps) { return pair.restriction.apply(seesaw_ambient_weight(c, eps)); };

  Weight src = seesaw_ambient_weight(c, seesaw_source(c).eps);
  bool src_ok = src == pair.ambient.c_zeta;
  cmp.lines.push_back(std::string(src_ok ? "ok" : "MISMATCH") + " theta(pi) = L(" + to_string(src) +
                      "), minimal holomorphic L(" + to_string(pair.ambient.c_zeta) + ")");

  auto first = derive_branching(c, count);
  if (first.empty()) {
    cmp.lines.push_back("MISMATCH no derived terms");
    return cmp;
  }
  cmp.max_grade = pair.grade(gs_of(first[0].lift.eps));
  for (auto& t : first) cmp.max_grade = std::max(cmp.max_grade, pair.grade(gs_of(t.lift.eps)));

  // Grades grow with |k|; extend until both series pass the bound.
  std::vector<SeesawTerm> derived;
  for (int n = count;; n *= 2) {
    derived = derive_branching(c, n);
    bool done = n >= 1024;
    if (!done) {
      done = true;
      for (int s = 0; s < 2; ++s) {
        int in_series = 0;
        Q top(0);
        bool any = false;
        for (auto& t : derived)
          if (t.series == s) {
            ++in_series;
            Q g = pair.grade(gs_of(t.lift.eps));
            top = any ? std::max(top, g) : g;
            any = true;
          }
        if (in_series == n && top <= cmp.max_grade) done = false;
      }
    }
    if (done) break;
  }

  std::map<Weight, std::vector<std::string>> want;
  for (auto& t : derived) {
    Weight w = gs_of(t.lift.eps);
    if (pair.grade(w) > cmp.max_grade) continue;
    want[w].push_back("k=" + std::to_string(t.k) + " rho=" + to_string(t.rho.params) + " eps=" + to_string(t.lift.eps));
    ++cmp.derived_terms;
  }
  std::map<Weight, std::vector<std::string>> have;
  for (auto& t : pair.rhs_terms(Form::L, cmp.max_grade)) {
    Weight w = zeros(pair.gs_rs->rank());
    for (size_t i = 0; i < t.parts.size(); ++i) {
      const auto& p = t.parts[i];
      if (p.kind == 'C') w = add(w, pair.embed_u1(int(i), p.value));
      else if (p.kind == 'L' || p.kind == 'F') w = add(w, pair.embed(int(i), p.weight));
      else throw std::logic_error("A_q part in an L-form term");
    }
    have[w].push_back(t.text);
    ++cmp.catalog_terms;
  }
  cmp.passed = src_ok;
  for (auto& [w, ds] : want) {
    auto it = have.find(w);
    size_t n = it == have.end() ? 0 : it->second.size();
    for (size_t i = 0; i < ds.size(); ++i) {
      bool ok = i < n;
      cmp.lines.push_back(std::string(ok ? "ok " : "MISSING ") + ds[i] + " -> " + to_string(w) +
                          (ok ? " = " + it->second[i] : " not in catalogue"));
      cmp.passed = cmp.passed && ok;
    }
  }
  for (auto& [w, hs] : have) {
    size_t n = want.count(w) ? want.at(w).size() : 0;
    for (size_t i = n; i < hs.size(); ++i) {
      cmp.lines.push_back("EXTRA catalogue term " + hs[i] + " at " + to_string(w));
      cmp.passed = false;
    }
  }
  return cmp;
}

}  // namespace hb
