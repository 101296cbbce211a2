#include "hb/catalog.hpp"

#include "json.hpp"

#include <boost/crc.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hb {

using json = nlohmann::json;

const char* to_string(FactorKind k) {
  switch (k) {
    case FactorKind::Hermitian: return "hermitian";
    case FactorKind::Parity: return "parity";
    case FactorKind::Compact: return "compact";
    case FactorKind::U1: return "u1";
  }
  return "?";
}

const char* to_string(Form f) { return f == Form::L ? "L" : "Aq"; }

namespace {

const char* kBasis[] = {"mu", "nu", "w"};

// Number of epsilon coordinates of a classical factor, 0 otherwise.
int eps_size(const FactorSpec& f) {
  switch (f.type) {
    case 'A': return f.rank + 1;
    case 'B':
    case 'C':
    case 'D': return f.rank;
    default: return 0;
  }
}

// Fundamental-weight basis "mu" plus epsilon basis "emu" of factor i.
Weight factor_weight(const FactorSpec& f, int i, const expr::Vec& v) {
  std::string b = kBasis[i], eb = "e" + b;
  expr::Vec fund, eps;
  for (auto& [key, c] : v) {
    if (key.first == eb) eps[key] = c;
    else fund[key] = c;
  }
  Weight w = expr::dense(fund, b, f.rank);
  if (!eps.empty()) w = add(w, eps_to_omega(f.type, f.rank, expr::dense(eps, eb, eps_size(f))));
  return w;
}

[[noreturn]] void bad(const std::string& what) { throw CatalogError(what); }

std::string str(const json& j, const char* key, const std::string& dflt = "") {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return dflt;
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  bad(std::string("field '") + key + "' must be a string");
}

// Replaces each {expr} in a name template by its integer value.
std::string fill(const std::string& tmpl, const expr::Env& env) {
  std::string out;
  for (size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] != '{') {
      out += tmpl[i];
      continue;
    }
    size_t j = tmpl.find('}', i);
    if (j == std::string::npos) bad("unbalanced brace in '" + tmpl + "'");
    out += std::to_string(expr::eval_int(tmpl.substr(i + 1, j - i - 1), env));
    i = j;
  }
  return out;
}

QMat alpha_gram(const RootSystem& rs) {
  int n = rs.ss_rank();
  QMat g = zero_mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = Q(rs.cartan()[i][j]) * rs.half_len2()[j];
  return g;
}

Q qdot(const QVec& a, const QVec& b) {
  Q s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Q form(const QVec& x, const QMat& g, const QVec& y) { return qdot(vec_mat(x, g), y); }

int mat_rank(QMat a) {
  int rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == Q(0)) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == Q(0)) continue;
      Q f = a[i][c] / a[r][c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<int>> as_ints(const QVec& v) {
  std::vector<int> out;
  for (auto& q : v) {
    if (q.denominator() != 1) return std::nullopt;
    out.push_back(int(q.numerator()));
  }
  return out;
}

// Index into pos_roots of +-v, or -1.
int root_index(const RootSystem& rs, const QVec& v, bool* negative = nullptr) {
  auto iv = as_ints(v);
  if (!iv) return -1;
  bool pos = std::all_of(iv->begin(), iv->end(), [](int c) { return c >= 0; });
  bool neg = std::all_of(iv->begin(), iv->end(), [](int c) { return c <= 0; });
  if (!pos && !neg) return -1;
  if (!pos)
    for (int& c : *iv) c = -c;
  if (negative) *negative = !pos;
  return rs.find_pos_root(*iv);
}

QVec expand_one(const std::string& src, const expr::Env& env, int rank) {
  return expr::dense(expr::eval_vec(src, env), "a", rank);
}

std::vector<QVec> expand_roots(const json& list, const expr::Env& env, int rank,
                               std::vector<std::string>* texts = nullptr) {
  std::vector<QVec> out;
  for (auto& item : list) {
    if (item.is_string()) {
      out.push_back(expand_one(item.get<std::string>(), env, rank));
      continue;
    }
    std::string var = str(item, "for");
    int lo = expr::eval_int(str(item, "from"), env), hi = expr::eval_int(str(item, "to"), env);
    for (int i = lo; i <= hi; ++i) {
      expr::Env e = env;
      e.vars[var] = Q(i);
      out.push_back(expand_one(str(item, "root"), e, rank));
    }
  }
  if (texts) {
    texts->clear();
    for (auto& v : out) {
      expr::Vec sv;
      for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != Q(0)) sv[{"a", int(i) + 1}] = v[i];
      texts->push_back(expr::render(sv));
    }
  }
  return out;
}

void apply_lets(const json& j, expr::Env& env) {
  auto it = j.find("let");
  if (it == j.end()) return;
  for (auto& [k, v] : it->items()) env.vars[k] = expr::eval_scalar(v.get<std::string>(), env);
}

std::vector<SeriesSpec> parse_series(const json& j) {
  std::vector<SeriesSpec> out;
  if (!j.is_array()) return out;
  for (auto& s : j) {
    SeriesSpec sp;
    sp.index = str(s, "index");
    sp.from = str(s, "from");
    sp.to = str(s, "to");
    sp.when = str(s, "when");
    for (auto& t : s.at("terms")) sp.terms.push_back(t.get<std::string>());
    if (!sp.index.empty() && sp.from.empty()) bad("indexed series without 'from'");
    out.push_back(std::move(sp));
  }
  return out;
}

std::string weight_text(const Weight& w, const std::string& basis) {
  expr::Vec v;
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] != Q(0)) v[{basis, int(i) + 1}] = w[i];
  return expr::render(v);
}

std::string lower_strip(const std::string& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    unsigned char c = s[i];
    if (std::isspace(c)) continue;
    // U+2295 circled plus.
    if (c == 0xE2 && i + 2 < s.size() && (unsigned char)s[i + 1] == 0x8A && (unsigned char)s[i + 2] == 0x95) {
      out += '+';
      i += 2;
      continue;
    }
    out += char(std::tolower(c));
  }
  return out;
}

std::string normalize_token(std::string t) {
  for (const char* suffix : {"(-14)", "(-25)", "(-20)"}) {
    auto p = t.find(suffix);
    if (p != std::string::npos) t.erase(p, std::string(suffix).size());
  }
  std::string out;
  for (char c : t)
    if (c != '(' && c != ')') out += c;
  if (out == "so2" || out == "so*2" || out == "u1") return "u1";
  return out;
}

std::vector<std::string> gs_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::string t = lower_strip(s);
  int depth = 0;
  // u(p,q) is su(p,q)+u(1).
  auto push = [&](const std::string& tok) {
    if (tok.rfind("u(", 0) == 0 && tok.find(',') != std::string::npos) {
      out.push_back(normalize_token("s" + tok));
      out.push_back(normalize_token("u(1)"));
    } else {
      out.push_back(normalize_token(tok));
    }
  };
  for (char c : t) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      push(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) push(cur);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::string, long long> parse_param_list(const std::string& s) {
  std::map<std::string, long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) bad("expected name=value in '" + s + "'");
    out[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
  }
  return out;
}

}  // namespace

std::string normalize_label(const std::string& s) {
  auto toks = gs_tokens(s);
  std::string out;
  for (auto& t : toks) out += (out.empty() ? "" : "+") + t;
  return out;
}

std::string ambient_label(const std::string& family, const std::vector<long long>& p) {
  auto s = [](long long x) { return std::to_string(x); };
  if (family == "su" && p.size() == 2) return "su(" + s(p[0]) + "," + s(p[1]) + ")";
  if (family == "so2" && p.size() == 1) return "so(2," + s(p[0]) + ")";
  if (family == "so*" && p.size() == 1) return "so*(" + s(2 * p[0]) + ")";
  if (family == "sp" && p.size() == 1) return "sp(" + s(p[0]) + ",R)";
  if (family == "e6" && p.empty()) return "e6(-14)";
  if (family == "e7" && p.empty()) return "e7(-25)";
  bad("unknown ambient family '" + family + "'");
}

struct Catalog::Impl {
  json families;
  std::vector<FamilyInfo> infos;
  std::map<std::string, size_t> by_id;
};

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open catalog " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    bad("catalog " + path + " is not valid JSON: " + e.what());
  }
  if (doc.value("format_version", 0) != 1) bad("unsupported catalog format_version");
  auto impl = std::make_shared<Impl>();
  impl->families = doc.at("families");
  auto crc_hex = [](const json& j) {
    std::string dumped = j.dump();
    boost::crc_32_type crc;
    crc.process_bytes(dumped.data(), dumped.size());
    char buf[16];
    std::snprintf(buf, sizeof buf, "%08x", unsigned(crc.checksum()));
    return std::make_pair(uint32_t(crc.checksum()), std::string(buf));
  };
  if (!impl->families.is_array()) bad("catalog " + path + ": 'families' must be an array");
  Catalog c;
  auto [sum, got] = crc_hex(impl->families);
  c.checksum_ = sum;
  json records = doc.value("record_checksums", json::object());
  for (size_t i = 0; i < impl->families.size(); ++i) {
    auto& f = impl->families[i];
    std::string rec = "record " + std::to_string(i + 1);
    if (f.is_object() && f.contains("id") && f["id"].is_string()) rec += " (" + f["id"].get<std::string>() + ")";
    FamilyInfo info;
    try {
      if (!f.is_object()) bad("not an object");
      for (const char* k : {"id", "type", "title", "methods", "ambient", "params", "constraint", "examples", "variants"})
        if (!f.contains(k)) bad(std::string("missing field '") + k + "'");
      info.id = f.at("id").get<std::string>();
      info.type = f.at("type").get<std::string>();
      if (info.type != "holomorphic" && info.type != "non-holomorphic") bad("unknown type '" + info.type + "'");
      info.g_title = f.at("title").at("g").get<std::string>();
      info.gs_title = f.at("title").at("gs").get<std::string>();
      info.constraint = f.at("constraint").get<std::string>();
      for (auto& p : f.at("params")) info.params.push_back(p.get<std::string>());
      for (auto& m : f.at("methods")) info.methods.push_back(m.get<std::string>());
      for (auto& ex : f.at("examples")) {
        std::map<std::string, long long> e;
        for (auto& [k, v] : ex.items()) e[k] = v.get<long long>();
        info.examples.push_back(e);
      }
      if (!f.at("variants").is_array() || f.at("variants").empty()) bad("'variants' must be a non-empty array");
      for (auto& v : f.at("variants")) {
        if (!v.contains("factors") || !v.contains("when")) bad("variant without 'factors' or 'when'");
        if (v.contains("identification")) {
          auto& id = v.at("identification");
          std::string t = id.value("tag", "");
          if (id.contains("aq"))
            for (auto& a : id.at("aq"))
              t += (t.empty() ? "" : ", ") + std::string("A_q(") + a.at("node").get<std::string>() + ": " +
                   a.at("lambda").get<std::string>() + ")";
          if (id.contains("string")) t += (t.empty() ? "" : ", ") + std::string("string ") + id.at("string").get<std::string>();
          if (id.contains("orbit")) t += (t.empty() ? "" : ", ") + std::string("orbit");
          if (!t.empty() && info.identification.find(t) == std::string::npos)
            info.identification += (info.identification.empty() ? "" : "; ") + t;
        }
      }
    } catch (const CatalogError& e) {
      bad("catalog " + path + ", " + rec + ": " + e.what());
    } catch (const json::exception& e) {
      bad("catalog " + path + ", " + rec + ": " + e.what());
    }
    if (records.contains(info.id)) {
      auto want = records.at(info.id).get<std::string>();
      auto have = crc_hex(f).second;
      if (want != have)
        bad("catalog " + path + ", " + rec + ": checksum mismatch (recorded " + want + ", computed " + have + ")");
    }
    if (impl->by_id.count(info.id)) bad("catalog " + path + ", " + rec + ": duplicate family id");
    impl->by_id[info.id] = i;
    impl->infos.push_back(std::move(info));
  }
  std::string want = doc.value("checksum", "");
  if (!want.empty() && want != got)
    bad("catalog checksum mismatch in " + path + ": recorded " + want + ", computed " + got);
  c.impl_ = impl;
  return c;
}

std::string Catalog::default_path() {
  if (const char* d = std::getenv("HB_DATA_DIR"); d && *d) return std::string(d) + "/pairs.json";
  return std::string(HB_DATA_DIR) + "/pairs.json";
}

const Catalog& Catalog::builtin() {
  static const Catalog c = load(default_path());
  return c;
}

std::vector<FamilyInfo> Catalog::families() const { return impl_->infos; }

const FamilyInfo& Catalog::family(const std::string& id) const {
  auto it = impl_->by_id.find(id);
  if (it == impl_->by_id.end()) bad("unknown pair family '" + id + "'");
  return impl_->infos[it->second];
}

namespace {

expr::Env base_env(const json& fam, const std::map<std::string, long long>& params) {
  expr::Env env;
  for (auto& p : fam.at("params")) {
    std::string name = p;
    auto it = params.find(name);
    if (it == params.end()) bad(fam.at("id").get<std::string>() + ": missing parameter " + name);
    env.vars[name] = Q(it->second);
  }
  for (auto& [k, v] : params)
    if (!env.vars.count(k)) bad(fam.at("id").get<std::string>() + ": unknown parameter " + k);
  apply_lets(fam, env);
  return env;
}

const json* pick_variant(const json& fam, const expr::Env& env) {
  for (auto& v : fam.at("variants"))
    if (expr::eval_bool(str(v, "when", "1"), env)) return &v;
  return nullptr;
}

}  // namespace

bool Catalog::admissible(const std::string& id, const std::map<std::string, long long>& params) const {
  const json& fam = impl_->families[impl_->by_id.at(family(id).id)];
  auto env = base_env(fam, params);
  return expr::eval_bool(str(fam, "constraint", "1"), env) && pick_variant(fam, env) != nullptr;
}

PairPtr Catalog::instantiate(const std::string& id, const std::map<std::string, long long>& params) const {
  const auto& info = family(id);
  const json& fam = impl_->families[impl_->by_id.at(id)];
  auto d = std::make_shared<PairDescriptor>();
  d->family_id = id;
  d->params = params;
  d->holomorphic = info.type == "holomorphic";
  d->methods = info.methods;

  expr::Env env = base_env(fam, params);
  std::string where = id;
  {
    std::string ps;
    for (auto& p : info.params) ps += (ps.empty() ? "" : ",") + p + "=" + std::to_string(params.at(p));
    if (!ps.empty()) where += "?" + ps;
  }
  if (!expr::eval_bool(str(fam, "constraint", "1"), env))
    bad(where + ": parameters violate " + str(fam, "constraint"));
  const json* var = pick_variant(fam, env);
  if (!var) bad(where + ": no variant covers these parameters");
  d->variant = str(*var, "name");
  d->aq_absent = str(*var, "aq_absent");

  // Ambient Hermitian group.
  auto& amb = fam.at("ambient");
  std::vector<int> ap;
  std::vector<long long> apl;
  for (auto& e : amb.at("params")) {
    ap.push_back(expr::eval_int(e.get<std::string>(), env));
    apl.push_back(ap.back());
  }
  std::string afam = amb.at("family");
  d->ambient = setting_for(afam, ap);
  d->g_label = d->ambient.g_label;
  d->g_form = real_form(d->ambient);
  const RootSystem& grs = *d->ambient.rootsys;
  int r = grs.rank();
  env.bases["a"] = r;
  {
    expr::Vec beta;
    QVec b = grs.to_alpha(d->ambient.beta_highest);
    for (int i = 0; i < r; ++i)
      if (b[i] != Q(0)) beta[{"a", i + 1}] = b[i];
    env.vecs["beta"] = beta;
  }
  apply_lets(*var, env);

  // sigma on simple-root coefficients.
  d->sigma = identity(r);
  if (auto s = var->find("sigma"); s != var->end()) {
    for (auto& e : *s) {
      if (e.contains("at")) {
        int i = expr::eval_int(str(e, "at"), env);
        if (i < 1 || i > r) bad(where + ": sigma index out of range");
        d->sigma[i - 1] = expand_one(str(e, "image"), env, r);
        continue;
      }
      std::string v = str(e, "for");
      int lo = expr::eval_int(str(e, "from"), env), hi = expr::eval_int(str(e, "to"), env);
      for (int k = lo; k <= hi; ++k) {
        expr::Env e2 = env;
        e2.vars[v] = Q(k);
        int i = expr::eval_int(str(e, "src", v), e2);
        if (i < 1 || i > r) bad(where + ": sigma index out of range");
        d->sigma[i - 1] = expand_one(str(e, "image"), e2, r);
      }
    }
  }
  const QMat& S = d->sigma;
  QMat G = alpha_gram(grs);
  if (mat_mul(S, S) != identity(r)) bad(where + ": sigma is not an involution");
  if (mat_mul(mat_mul(S, G), transpose(S)) != G) bad(where + ": sigma is not an isometry");
  for (int i = 0; i < r; ++i)
    if (root_index(grs, S[i]) < 0) bad(where + ": sigma(alpha_" + std::to_string(i + 1) + ") is not a root");
  QMat P = zero_mat(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) P[i][j] = (S[i][j] + (i == j ? Q(1) : Q(0))) / 2;

  // Factors.
  int ss = 0, nu1 = 0;
  std::string label;
  std::vector<std::string> names;
  for (auto& fj : var->at("factors")) {
    FactorSpec f;
    f.name = fill(str(fj, "name"), env);
    std::string kind = str(fj, "kind");
    if (kind == "hermitian")
      f.kind = FactorKind::Hermitian;
    else if (kind == "parity")
      f.kind = FactorKind::Parity;
    else if (kind == "compact")
      f.kind = FactorKind::Compact;
    else if (kind == "u1")
      f.kind = FactorKind::U1;
    else
      bad(where + ": unknown factor kind " + kind);
    if (f.kind == FactorKind::U1) {
      f.rank = 1;
      QVec e = expand_one(str(fj, "e"), env, r);
      for (int i = 0; i < r; ++i)
        if (e[i] != Q(0)) f.e_node = i;
      if (f.e_node < 0) bad(where + ": u(1) factor without a simple root");
      ++nu1;
    } else {
      f.type = str(fj, "type").at(0);
      f.rank = expr::eval_int(str(fj, "rank"), env);
      if (f.kind == FactorKind::Hermitian || f.kind == FactorKind::Parity)
        f.painted = expr::eval_int(str(fj, "painted"), env) - 1;
      f.roots = expand_roots(fj.at("roots"), env, r, &f.roots_text);
      if (int(f.roots.size()) != f.rank)
        bad(where + ": factor " + f.name + " lists " + std::to_string(f.roots.size()) + " roots for rank " +
            std::to_string(f.rank));
      f.offset = ss;
      ss += f.rank;
      std::string tr = std::string(1, f.type) + std::to_string(f.rank);
      label += (label.empty() ? "" : "+") + tr;
      f.rs = RootSystem::make(tr);
      if (f.kind == FactorKind::Hermitian)
        f.form = real_form_hermitian(f.name, f.rs, f.painted);
      else if (f.kind == FactorKind::Parity)
        f.form = real_form_parity(f.name, f.rs, f.painted);
      else
        f.form = real_form_compact(f.name, f.rs);
    }
    names.push_back(f.name);
    d->factors.push_back(std::move(f));
  }
  {
    int u = 0;
    for (auto& f : d->factors)
      if (f.kind == FactorKind::U1) f.offset = ss + u++;
  }
  if (nu1) label += (label.empty() ? "" : "+") + std::string("T") + std::to_string(nu1);
  for (auto& n : names) d->gs_label += (d->gs_label.empty() ? "" : "+") + n;
  d->gs_rs = RootSystem::make(label);
  int rs_rank = d->gs_rs->rank();
  if (rs_rank != mat_rank(P)) bad(where + ": fixed space of sigma has the wrong dimension");

  // Validate each factor against the ambient root datum.
  int pa = d->ambient.painted;
  for (auto& f : d->factors) {
    if (f.kind == FactorKind::U1) continue;
    std::vector<QVec> pb;
    for (size_t j = 0; j < f.roots.size(); ++j) {
      bool neg = false;
      if (root_index(grs, f.roots[j], &neg) < 0 || neg)
        bad(where + ": " + f.name + " root " + f.roots_text[j] + " is not a positive root");
      pb.push_back(vec_mat(f.roots[j], P));
      Q c = f.roots[j][pa];
      bool nc = c.numerator() % 2 != 0;
      bool want = f.painted == int(j);
      if (nc != want)
        bad(where + ": " + f.name + " root " + f.roots_text[j] + (nc ? " is noncompact" : " is compact") +
            " contrary to the painted node");
    }
    for (int i = 0; i < f.rank; ++i)
      for (int j = 0; j < f.rank; ++j) {
        Q c = 2 * form(pb[i], G, pb[j]) / form(pb[j], G, pb[j]);
        if (c != Q(f.rs->cartan()[i][j]))
          bad(where + ": " + f.name + " roots do not have Cartan matrix " + std::string(1, f.type) +
              std::to_string(f.rank) + " (entry " + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
  }

  // Restriction ambient -> g^sigma.
  QMat R = zero_mat(r, rs_rank);
  const QVec& dlen = grs.half_len2();
  for (auto& f : d->factors) {
    if (f.kind == FactorKind::U1) continue;
    for (int j = 0; j < f.rank; ++j) {
      QVec pb = vec_mat(f.roots[j], P);
      Q norm = form(pb, G, pb);
      for (int i = 0; i < r; ++i) R[i][f.offset + j] = 2 * pb[i] * dlen[i] / norm;
    }
  }
  for (auto& f : d->factors) {
    if (f.kind != FactorKind::U1) continue;
    QMat M;
    QVec rhs;
    for (auto& g : d->factors) {
      if (g.kind == FactorKind::U1) {
        M.push_back(G[g.e_node]);
        rhs.push_back(&g == &f ? Q(1) : Q(0));
        continue;
      }
      for (auto& b : g.roots) {
        M.push_back(vec_mat(b, G));
        rhs.push_back(Q(0));
      }
    }
    for (int i = 0; i < r; ++i) {
      QVec row = zero_mat(1, r)[0];
      for (int j = 0; j < r; ++j) row[j] = S[j][i] - (i == j ? Q(1) : Q(0));
      if (!is_zero(row)) {
        M.push_back(row);
        rhs.push_back(Q(0));
      }
    }
    auto v = solve_left(transpose(M), rhs);
    if (!v) bad(where + ": cannot solve for the center of " + f.name);
    for (int i = 0; i < r; ++i) R[i][f.offset] = (*v)[i] * dlen[i];
  }
  d->restriction = {R};

  // K^sigma.
  std::vector<std::pair<int, int>> parity_nodes;
  for (auto& f : d->factors)
    if (f.painted >= 0) parity_nodes.push_back({f.offset, f.painted});
  d->ks = std::make_shared<Subsystem>(Subsystem::where(
      d->gs_rs,
      [parity_nodes](const std::vector<int>& a) {
        for (auto [off, p] : parity_nodes)
          if (a[off + p] % 2 != 0) return false;
        return true;
      },
      "Ksigma:" + where));

  if (d->holomorphic) {
    QVec z(r);
    for (int j = 0; j < r; ++j) z[j] = d->ambient.zprime(grs.omega(j));
    auto f = solve_left(transpose(R), z);
    if (!f) bad(where + ": the grading does not factor through g^sigma");
    d->zfunc = *f;
  }

  d->l_series = parse_series(var->value("L", json()));
  d->aq_series = parse_series(var->value("Aq", json()));
  if (d->holomorphic && d->l_series.empty()) bad(where + ": holomorphic pair without an L-form");
  if (d->holomorphic && d->aq_series.empty() && d->aq_absent.empty()) bad(where + ": A_q form missing without reason");
  for (size_t i = 0; i < d->factors.size() && i < 3; ++i) {
    const auto& f = d->factors[i];
    if (f.kind == FactorKind::U1) continue;
    env.bases[kBasis[i]] = f.rank;
    if (auto n = eps_size(f)) env.bases[std::string("e") + kBasis[i]] = n;
  }

  if (auto id_it = var->find("identification"); id_it != var->end()) {
    Identification idn;
    const json& ij = *id_it;
    idn.spherical = ij.value("spherical", false);
    idn.tag = str(ij, "tag");
    idn.string_expr = str(ij, "string");
    if (ij.contains("aq"))
      for (auto& a : ij.at("aq"))
        idn.aq.push_back({expr::eval_int(str(a, "node"), env) - 1, expr::eval_scalar(str(a, "lambda"), env)});
    if (ij.contains("orbit")) {
      const auto& f0 = d->factors.at(0);
      expr::Env e = env;
      expr::Vec rho;
      for (int i = 1; i <= f0.rank; ++i) rho[{"w", i}] = Q(1);
      e.vecs["rho"] = rho;
      e.bases["w"] = f0.rank;
      auto orb = ij.at("orbit");
      idn.orbit = OrbitCheck{expr::dense(expr::eval_vec(orb.at(0), e), "w", f0.rank),
                             expr::dense(expr::eval_vec(orb.at(1), e), "w", f0.rank)};
    }
    d->ident = idn;
  }
  d->env = env;
  return d;
}

std::string PairDescriptor::key() const {
  const auto& info = Catalog::builtin().family(family_id);
  std::string ps;
  for (auto& p : info.params) ps += (ps.empty() ? "" : ",") + p + "=" + std::to_string(params.at(p));
  return ps.empty() ? family_id : family_id + "?" + ps;
}

Q PairDescriptor::grade(const Weight& x) const {
  if (zfunc.empty()) throw CatalogError(g_label + " > " + gs_label + " has no holomorphic grading");
  return qdot(x, zfunc);
}

Weight PairDescriptor::embed(int factor, const Weight& local) const {
  const auto& f = factors.at(factor);
  if (int(local.size()) != f.rank) throw CatalogError("embed: weight has the wrong rank for " + f.name);
  Weight out = zeros(gs_rs->rank());
  for (int i = 0; i < f.rank; ++i) out[f.offset + i] = local[i];
  return out;
}

Weight PairDescriptor::embed_u1(int factor, const Q& c) const {
  Weight out = zeros(gs_rs->rank());
  out[factors.at(factor).offset] = c;
  return out;
}

std::vector<std::string> PairDescriptor::golden_roots() const {
  std::vector<std::string> out;
  for (auto& f : factors)
    for (auto& t : f.roots_text) out.push_back(t);
  return out;
}

std::string PairDescriptor::term_text(const RhsTerm& t) const {
  std::string out;
  for (size_t i = 0; i < t.parts.size(); ++i) {
    const auto& p = t.parts[i];
    std::string b = i < 3 ? kBasis[i] : "x";
    std::string s;
    switch (p.kind) {
      case 'L': s = "L" + (p.method.empty() ? "" : "[" + p.method + "]") + "(" + weight_text(p.weight, b) + ")"; break;
      case 'F': s = "F(" + weight_text(p.weight, b) + ")"; break;
      case 'C': s = "C(" + hb::to_string(p.value) + ")"; break;
      case 'A':
        s = "A_q(" + std::to_string(p.node + 1) + ")(" + weight_text(p.weight, b) + ")";
        break;
    }
    out += (out.empty() ? "" : " x ") + s;
  }
  return out;
}

std::vector<RhsTerm> PairDescriptor::rhs_terms(Form which, const Q& max_grade) const {
  const auto& list = which == Form::L ? l_series : aq_series;
  std::map<std::pair<int, int>, ParabolicPtr> qs;
  auto make_term = [&](const SeriesSpec& s, const expr::Env& e, std::optional<long long> k) {
    if (s.terms.size() != factors.size())
      throw CatalogError(g_label + " > " + gs_label + ": term has " + std::to_string(s.terms.size()) +
                         " parts for " + std::to_string(factors.size()) + " factors");
    RhsTerm t;
    t.k = k;
    Weight base = zeros(gs_rs->rank());
    for (size_t i = 0; i < s.terms.size(); ++i) {
      const auto& f = factors[i];
      const std::string& src = s.terms[i];
      auto colon = src.find(':');
      if (colon == std::string::npos) throw CatalogError("term '" + src + "' lacks a kind");
      std::string head = src.substr(0, colon), body = src.substr(colon + 1);
      TermPart p;
      p.kind = head.at(0);
      std::string arg;
      if (auto lb = head.find('['); lb != std::string::npos) arg = head.substr(lb + 1, head.find(']') - lb - 1);
      switch (p.kind) {
        case 'L':
        case 'F': {
          if (f.kind == FactorKind::U1) throw CatalogError("'" + src + "' on a u(1) factor");
          p.method = arg;
          p.weight = factor_weight(f, int(i), expr::eval_vec(body, e));
          base = add(base, embed(int(i), p.weight));
          break;
        }
        case 'C': {
          if (f.kind != FactorKind::U1) throw CatalogError("'" + src + "' on a semisimple factor");
          p.value = expr::eval_scalar(body, e);
          base = add(base, embed_u1(int(i), p.value));
          break;
        }
        case 'A': {
          if (!f.form || f.form->compact()) throw CatalogError("'" + src + "' needs a noncompact factor");
          p.node = expr::eval_int(arg, e) - 1;
          if (p.node < 0 || p.node >= f.rank) throw CatalogError("'" + src + "': node out of range");
          // A scalar is the coefficient of the node's fundamental weight.
          auto v = expr::eval(body, e);
          if (v.is_vec) {
            p.weight = factor_weight(f, int(i), v.v);
          } else {
            p.weight = zeros(f.rank);
            p.weight[p.node] = v.s;
          }
          auto& q = qs[{int(i), p.node}];
          if (!q) q = make_parabolic(f.form, p.node);
          base = add(base, embed(int(i), add(p.weight, q->two_rho_u_cap_p)));
          break;
        }
        default: throw CatalogError("unknown term kind in '" + src + "'");
      }
      t.parts.push_back(std::move(p));
    }
    t.base_grade = grade(base);
    t.text = term_text(t);
    return t;
  };

  std::vector<RhsTerm> out;
  for (const auto& s : list) {
    if (s.index.empty()) {
      auto t = make_term(s, env, std::nullopt);
      if (t.base_grade <= max_grade) out.push_back(std::move(t));
      continue;
    }
    bool two_sided = s.from == "-inf";
    long long start = two_sided ? 0 : expr::eval_int(s.from, env);
    std::optional<long long> hi;
    if (s.to != "inf" && !s.to.empty()) hi = expr::eval_int(s.to, env);
    for (int dir : two_sided ? std::vector<int>{1, -1} : std::vector<int>{1}) {
      std::optional<Q> prev;
      long long k = dir == 1 ? start : start - 1;
      for (int guard = 0; guard < 1024; ++guard, k += dir) {
        if (hi && k > *hi) break;
        expr::Env e = env;
        e.vars[s.index] = Q(k);
        if (!s.when.empty() && !expr::eval_bool(s.when, e)) continue;
        auto t = make_term(s, e, k);
        Q g = t.base_grade;
        if (g <= max_grade) out.push_back(std::move(t));
        if (g > max_grade && prev && g >= *prev) break;
        prev = g;
      }
    }
  }
  return out;
}

PairPtr Catalog::find(const std::string& label) const {
  if (auto q = label.find('?'); q != std::string::npos || impl_->by_id.count(label)) {
    std::string id = label.substr(0, q);
    auto params = q == std::string::npos ? std::map<std::string, long long>{} : parse_param_list(label.substr(q + 1));
    return instantiate(id, params);
  }
  auto colon = label.find(':');
  if (colon == std::string::npos) bad("pair label '" + label + "' should look like g:gs");
  std::string g = normalize_label(label.substr(0, colon));
  auto gs = gs_tokens(label.substr(colon + 1));
  for (size_t fi = 0; fi < impl_->infos.size(); ++fi) {
    const auto& info = impl_->infos[fi];
    const json& fam = impl_->families[fi];
    size_t np = info.params.size();
    std::vector<long long> vals(np, 1);
    for (;;) {
      std::map<std::string, long long> p;
      for (size_t i = 0; i < np; ++i) p[info.params[i]] = vals[i];
      try {
        auto env = base_env(fam, p);
        if (expr::eval_bool(str(fam, "constraint", "1"), env)) {
          std::vector<long long> ap;
          for (auto& e : fam.at("ambient").at("params")) ap.push_back(expr::eval_int(e.get<std::string>(), env));
          if (normalize_label(ambient_label(fam.at("ambient").at("family"), ap)) == g) {
            if (const json* var = pick_variant(fam, env)) {
              std::string names;
              for (auto& fj : var->at("factors")) names += (names.empty() ? "" : "+") + fill(str(fj, "name"), env);
              if (gs_tokens(names) == gs) return instantiate(info.id, p);
            }
          }
        }
      } catch (const expr::Error&) {
      }
      size_t i = 0;
      while (i < np && ++vals[i] > 12) vals[i++] = 1;
      if (i == np) break;
    }
  }
  bad("no catalogued pair matches '" + label + "'");
}

std::vector<PairPtr> Catalog::examples() const {
  std::vector<PairPtr> out;
  for (auto& info : impl_->infos)
    for (auto& e : info.examples) out.push_back(instantiate(info.id, e));
  return out;
}

}  // namespace hb
