#include "hb/hermitian.hpp"

#include <regex>

namespace hb {

Q HermitianSetting::zprime(const Weight& w) const { return rootsys->to_alpha(w)[painted]; }

Q zprime_grade(const HermitianSetting& hs, const Weight& mu) { return hs.zprime(mu); }

namespace {

HermitianSetting build(HermitianFamily fam, std::vector<int> params, char type, int rank, int painted,
                       Q c, std::string label, int real_rank) {
  HermitianSetting hs;
  hs.family = fam;
  hs.params = std::move(params);
  hs.g_label = std::move(label);
  hs.rootsys = RootSystem::make(type, rank);
  hs.painted = painted;
  hs.real_rank = real_rank;
  hs.c_zeta = scale(hs.rootsys->omega(painted), c);
  hs.beta_highest = hs.rootsys->highest_root(0);
  hs.k = std::make_shared<Subsystem>(Subsystem::levi(hs.rootsys, {painted}));
  const auto& alpha = hs.rootsys->pos_roots_alpha();
  for (size_t i = 0; i < alpha.size(); ++i) {
    int c = alpha[i][painted];
    if (c > 1) throw std::logic_error(hs.g_label + ": painted node is not cominuscule");
    if (c == 1) hs.p_plus.push_back(hs.rootsys->root_w(int(i)));
  }
  return hs;
}

void need(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

HermitianSetting setting_for(const std::string& family, const std::vector<int>& p, bool require_minimal) {
  HermitianSetting hs;
  auto arity = [&](size_t n) { need(p.size() == n, family + ": wrong number of parameters"); };
  if (family == "su") {
    arity(2);
    int m = p[0], n = p[1];
    need(m >= 1 && n >= 1 && m + n >= 2, "su(m,n) needs m,n >= 1");
    hs = build(HermitianFamily::SU, p, 'A', m + n - 1, m - 1, Q(1),
               "su(" + std::to_string(m) + "," + std::to_string(n) + ")", std::min(m, n));
  } else if (family == "so2") {
    arity(1);
    int N = p[0];
    need(N >= 3, "so(2,N) needs N >= 3");
    std::string label = "so(2," + std::to_string(N) + ")";
    if (N % 2 == 0) {
      int n = N / 2;
      hs = build(HermitianFamily::SO2Even, {n}, 'D', n + 1, 0, Q(n - 1), label, 2);
    } else {
      int n = (N - 1) / 2;
      hs = build(HermitianFamily::SO2Odd, {n}, 'B', n + 1, 0, Q(2 * n - 1, 2), label, 2);
    }
  } else if (family == "so*") {
    arity(1);
    int n = p[0];
    need(n >= 3, "so*(2n) needs n >= 3");
    hs = build(HermitianFamily::SOStar, p, 'D', n, n - 1, Q(2), "so*(" + std::to_string(2 * n) + ")", n / 2);
  } else if (family == "sp") {
    arity(1);
    int n = p[0];
    need(n >= 1, "sp(n,R) needs n >= 1");
    hs = build(HermitianFamily::SpR, p, 'C', n, n - 1, Q(1, 2), "sp(" + std::to_string(n) + ",R)", n);
  } else if (family == "e6") {
    need(p.empty(), "e6(-14) takes no parameters");
    hs = build(HermitianFamily::E6, {}, 'E', 6, 5, Q(3), "e6(-14)", 2);
  } else if (family == "e7") {
    need(p.empty(), "e7(-25) takes no parameters");
    hs = build(HermitianFamily::E7, {}, 'E', 7, 6, Q(4), "e7(-25)", 3);
  } else {
    throw std::invalid_argument("unknown Hermitian family: " + family);
  }
  if (require_minimal && !hs.minimal_rep_defined())
    throw RealRankError(hs.g_label + " has real rank " + std::to_string(hs.real_rank) +
                        "; the minimal holomorphic representation needs real rank > 1");
  return hs;
}

HermitianSetting setting_for(const std::string& g_label, bool require_minimal) {
  static const std::regex su(R"(su\((\d+),(\d+)\))"), so2(R"(so\(2,(\d+)\))"), sostar(R"(so\*\((\d+)\))"),
      sp(R"(sp\((\d+),R\))");
  std::smatch m;
  std::string s;
  for (char c : g_label)
    if (c != ' ') s += c;
  if (std::regex_match(s, m, su)) return setting_for("su", {std::stoi(m[1]), std::stoi(m[2])}, require_minimal);
  if (std::regex_match(s, m, so2)) return setting_for("so2", {std::stoi(m[1])}, require_minimal);
  if (std::regex_match(s, m, sostar)) {
    int two_n = std::stoi(m[1]);
    need(two_n % 2 == 0, "so*(2n) needs an even argument");
    return setting_for("so*", {two_n / 2}, require_minimal);
  }
  if (std::regex_match(s, m, sp)) return setting_for("sp", {std::stoi(m[1])}, require_minimal);
  if (s == "e6(-14)") return setting_for("e6", {}, require_minimal);
  if (s == "e7(-25)") return setting_for("e7", {}, require_minimal);
  throw std::invalid_argument("unknown Hermitian real form: " + g_label);
}

std::vector<KTypeEntry> ktype_string(const HermitianSetting& hs, int k_max) {
  if (!hs.minimal_rep_defined())
    throw RealRankError(hs.g_label + " has real rank " + std::to_string(hs.real_rank) +
                        "; the minimal holomorphic representation needs real rank > 1");
  if (k_max < 0) throw std::invalid_argument("k_max must be non-negative");
  std::vector<KTypeEntry> out;
  for (int k = 0; k <= k_max; ++k) out.push_back({k, add(hs.c_zeta, scale(hs.beta_highest, Q(k)))});
  return out;
}


bool RealForm::noncompact_root(int pos_index) const {
  return painted >= 0 && rs->pos_roots_alpha()[pos_index][painted] % 2 != 0;
}

RealFormPtr real_form_hermitian(const std::string& label, RootSystemPtr rs, int painted) {
  auto f = std::make_shared<RealForm>();
  f->label = label;
  f->rs = rs;
  f->painted = painted;
  f->hermitian = true;
  for (auto& a : rs->pos_roots_alpha())
    if (a[painted] > 1) throw std::invalid_argument(label + ": painted node is not cominuscule");
  f->k = std::make_shared<Subsystem>(Subsystem::levi(rs, {painted}));
  return f;
}

RealFormPtr real_form_parity(const std::string& label, RootSystemPtr rs, int painted) {
  auto f = std::make_shared<RealForm>();
  f->label = label;
  f->rs = rs;
  f->painted = painted;
  f->k = std::make_shared<Subsystem>(Subsystem::where(
      rs, [painted](const std::vector<int>& a) { return a[painted] % 2 == 0; },
      "even" + std::to_string(painted)));
  return f;
}

RealFormPtr real_form_compact(const std::string& label, RootSystemPtr rs) {
  auto f = std::make_shared<RealForm>();
  f->label = label;
  f->rs = rs;
  f->k = std::make_shared<Subsystem>(Subsystem::full(rs));
  return f;
}

RealFormPtr real_form(const HermitianSetting& hs) {
  auto f = std::make_shared<RealForm>();
  f->label = hs.g_label;
  f->rs = hs.rootsys;
  f->painted = hs.painted;
  f->hermitian = true;
  f->k = hs.k;
  return f;
}

}  // namespace hb
