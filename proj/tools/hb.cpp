#include "hb/report.hpp"
#include "hb/seesaw.hpp"
#include "hb/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

using namespace hb;
using json = nlohmann::json;

namespace {

struct RunConfig {
  std::string format = "human";
  std::string cache_dir;
  std::string data_dir;
  int threads = 1;
  uint64_t weyl_cap = 0;
  bool verbose = false;

  std::vector<std::string> pairs;
  bool all = false;
  bool examples = false;
  int max_grade = -1;
  std::string filter;
  std::string g;
  int k = 0;
  int depth = 3;
  std::string seesaw;
  std::string params;
  int count = 5;
};

// "2mu2+4mu6"
std::string sym_text(const Weight& w, const std::string& sym) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Q(0)) continue;
    std::string c = w[i] == Q(1) ? "" : (w[i] == Q(-1) ? "-" : to_string(w[i]));
    if (c.find('/') != std::string::npos) c = "(" + c + ")";
    if (!s.empty() && c.rfind("-", 0) != 0 && c.rfind("(-", 0) != 0) s += "+";
    s += c + sym + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

std::string gs_text(const PairDescriptor& pair, const Weight& w) {
  static const char* syms[] = {"mu", "nu", "xi", "eta"};
  std::string main, chars;
  int next = 0;
  for (auto& f : pair.factors) {
    if (f.kind == FactorKind::U1) {
      chars += " x C_" + to_string(w.at(f.offset));
      continue;
    }
    Weight local(w.begin() + f.offset, w.begin() + f.offset + f.rank);
    std::string t = sym_text(local, syms[std::min(next++, 3)]);
    if (t == "0") continue;
    if (!main.empty() && t[0] != '-') main += "+";
    main += t;
  }
  return "F(" + (main.empty() ? "0" : main) + ")" + chars;
}

std::string short_label(std::string g) {
  if (g == "e6") return "e6(-14)";
  if (g == "e7") return "e7(-25)";
  return g;
}

void emit_json(const json& j) { std::cout << j.dump() << "\n" << std::flush; }

// ---------------------------------------------------------------- list-pairs

int cmd_list_pairs(const RunConfig& cfg) {
  const auto& cat = Catalog::builtin();
  std::vector<FamilyInfo> rows;
  for (auto& f : cat.families()) {
    if (!cfg.filter.empty()) {
      std::string hay = f.id + " " + f.g_title + " " + f.gs_title;
      if (hay.find(cfg.filter) == std::string::npos) continue;
    }
    rows.push_back(f);
  }
  auto has = [](const FamilyInfo& f, const char* m) {
    return std::find(f.methods.begin(), f.methods.end(), m) != f.methods.end();
  };
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
  };
  if (cfg.format == "json") {
    json a = json::array();
    for (auto& f : rows)
      a.push_back({{"id", f.id},
                   {"type", f.type},
                   {"g", f.g_title},
                   {"gs", f.gs_title},
                   {"params", f.params},
                   {"constraint", f.constraint},
                   {"methods", {{"dual_pair", has(f, "dual_pair")}, {"aq", has(f, "aq")}, {"fock", has(f, "fock")}}},
                   {"identification", f.identification}});
    std::cout << json{{"schema_version", kReportSchemaVersion}, {"families", a}}.dump(2) << "\n";
    return 0;
  }
  if (cfg.format == "latex") {
    std::cout << "\\begin{tabular}{llccc}\n$\\mathfrak{g}$ & $\\mathfrak{g}^\\sigma$ & dual pair & $A_\\mathfrak{q}(\\lambda)$ & "
                 "Fock \\\\\n\\hline\n";
    for (auto& f : rows) {
      if (f.type != "holomorphic") continue;
      auto c = [&](const char* m) { return has(f, m) ? "$\\circ$" : ""; };
      std::cout << "$\\mathfrak{" << f.g_title << "}$ & $\\mathfrak{" << f.gs_title << "}$ & " << c("dual_pair") << " & "
                << c("aq") << " & " << c("fock") << " \\\\\n";
    }
    std::cout << "\\end{tabular}\n";
    return 0;
  }
  std::cout << std::left << std::setw(22) << "id" << std::setw(11) << "g" << std::setw(28) << "g^sigma" << std::setw(5)
            << "dual" << std::setw(5) << "A_q" << std::setw(6) << "Fock"
            << "constraint / identification\n";
  int holo = 0, non = 0;
  for (auto& f : rows) {
    auto c = [&](const char* m) { return has(f, m) ? "o" : "."; };
    std::string tail = f.constraint == "1" ? "" : f.constraint + " [" + join(f.params) + "]";
    if (f.type != "holomorphic") tail += (tail.empty() ? "" : "  ") + std::string("non-holomorphic: ") + f.identification;
    std::cout << std::setw(22) << f.id << std::setw(11) << f.g_title << std::setw(28) << f.gs_title << std::setw(5)
              << c("dual_pair") << std::setw(5) << c("aq") << std::setw(6) << c("fock") << tail << "\n";
    (f.type == "holomorphic" ? holo : non)++;
  }
  std::cout << holo << " holomorphic, " << non << " non-holomorphic\n";
  return 0;
}

// ---------------------------------------------------------------- verify

struct PairRun {
  PairPtr pair;
  std::vector<VerificationReport> reports;
};

VerificationReport with_seesaw(VerificationReport r, const PairDescriptor& pair, int N) {
  auto cfg = seesaw_config_for(pair);
  if (!cfg) return r;
  try {
    auto cmp = compare_with_catalog(*cfg, pair, N + 1);
    r.seesaw_checked = true;
    r.checks.push_back(std::string(cmp.passed ? "ok" : "FAIL") + ": seesaw " + cfg->name() + ", " +
                       std::to_string(cmp.derived_terms) + " derived terms against " +
                       std::to_string(cmp.catalog_terms) + " catalogue terms up to grade " + to_string(cmp.max_grade));
    for (auto& l : cmp.lines)
      if (l.rfind("ok", 0) != 0) r.checks.push_back("FAIL: seesaw " + l);
    r.passed = r.passed && cmp.passed;
  } catch (const std::exception& e) {
    r.errors.push_back(std::string("seesaw: ") + e.what());
    r.passed = false;
  }
  return r;
}

PairRun run_pair(PairPtr pair, int N, const ReportCache& cache) {
  PairRun out{pair, {}};
  auto cached = [&](const std::string& kind, int n, auto compute) {
    if (auto hit = cache.get(kind, pair->key(), n)) return *hit;
    VerificationReport r = compute();
    cache.put(r);
    return r;
  };
  if (pair->holomorphic) {
    int n = N >= 0 ? N : default_max_grade(*pair);
    out.reports.push_back(cached("holomorphic", n, [&] { return with_seesaw(verify_pair(*pair, n), *pair, n); }));
  } else {
    int n = N >= 0 ? N : default_max_grade(*pair);
    out.reports.push_back(cached("irreducibility", n, [&] { return verify_nonhol_irreducibility(*pair, n); }));
    int m = std::min(n, 4);
    out.reports.push_back(cached("identification", m, [&] { return verify_nonhol_identification(*pair, m); }));
  }
  return out;
}

std::vector<PairPtr> select_pairs(const RunConfig& cfg) {
  const auto& cat = Catalog::builtin();
  std::vector<PairPtr> out;
  if (cfg.all || cfg.examples) {
    for (auto& p : cat.examples()) out.push_back(p);
  }
  for (auto& label : cfg.pairs) out.push_back(cat.find(label));
  if (out.empty()) throw CLI::ValidationError("verify", "give --pair LABEL or --all");
  return out;
}

std::string cell(const VerificationReport& r, Form f) {
  for (auto& fr : r.forms)
    if (fr.form == f) return !fr.available ? "-" : (fr.passed ? "pass" : "FAIL");
  return "-";
}

int cmd_verify(const RunConfig& cfg) {
  auto pairs = select_pairs(cfg);
  ReportCache cache(cfg.cache_dir, Catalog::builtin().checksum());
  size_t n = pairs.size();
  std::vector<std::promise<PairRun>> done(n);
  std::vector<std::future<PairRun>> results;
  for (auto& p : done) results.push_back(p.get_future());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < n;) {
      try {
        done[i].set_value(run_pair(pairs[i], cfg.max_grade, cache));
      } catch (...) {
        done[i].set_exception(std::current_exception());
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, cfg.threads); ++t) pool.emplace_back(worker);

  struct Row {
    std::string label, key, l, aq, seesaw, irr, ident;
    int N = 0;
    bool passed = true;
    double seconds = 0;
  };
  std::vector<Row> rows;
  json failures = json::array();
  bool all_pass = true;
  for (size_t i = 0; i < n; ++i) {
    PairRun run;
    Row row;
    row.label = pairs[i]->g_label + " > " + pairs[i]->gs_label;
    row.key = pairs[i]->key();
    row.l = row.aq = row.seesaw = row.irr = row.ident = "-";
    try {
      run = results[i].get();
    } catch (const std::exception& e) {
      VerificationReport r;
      r.kind = pairs[i]->holomorphic ? "holomorphic" : "irreducibility";
      r.pair_key = row.key;
      r.g_label = pairs[i]->g_label;
      r.gs_label = pairs[i]->gs_label;
      r.errors.push_back(e.what());
      run.reports.push_back(r);
    }
    for (auto& r : run.reports) {
      if (cfg.format == "json")
        emit_json(report_to_json(r));
      else if (cfg.format == "latex")
        std::cout << report_latex(r, pairs[i].get()) << std::flush;
      else
        std::cout << report_human(r, cfg.verbose) << std::flush;
      row.N = std::max(row.N, r.max_grade);
      row.seconds += r.seconds;
      row.passed = row.passed && r.passed;
      std::string pf = r.passed ? "pass" : "FAIL";
      if (r.kind == "holomorphic") {
        row.l = cell(r, Form::L);
        row.aq = cell(r, Form::Aq);
        if (r.seesaw_checked) {
          bool ok = true;
          for (auto& c : r.checks)
            if (c.find("seesaw") != std::string::npos && c.rfind("FAIL", 0) == 0) ok = false;
          row.seesaw = ok ? "pass" : "FAIL";
        }
      } else if (r.kind == "irreducibility") {
        row.irr = pf;
      } else {
        row.ident = pf;
      }
      if (!r.passed) {
        json f = {{"pair", r.pair_key}, {"kind", r.kind}, {"errors", r.errors}};
        json mm = json::array();
        for (auto& fr : r.forms)
          if (fr.first_mismatch)
            mm.push_back({{"form", to_string(fr.form)},
                          {"grade", to_string(fr.first_mismatch->grade)},
                          {"weight", weight_to_json(fr.first_mismatch->weight)},
                          {"lhs", fr.first_mismatch->lhs},
                          {"rhs", fr.first_mismatch->rhs}});
        f["first_mismatches"] = mm;
        json bad = json::array();
        for (auto& c : r.checks)
          if (c.rfind("FAIL", 0) == 0) bad.push_back(c);
        f["failed_checks"] = bad;
        failures.push_back(f);
        if (cfg.format != "json") std::cerr << "FAIL " << f.dump() << "\n";
      }
    }
    all_pass = all_pass && row.passed;
    rows.push_back(row);
  }
  for (auto& t : pool) t.join();

  if (cfg.format == "json") {
    json s = json::array();
    for (auto& r : rows)
      s.push_back({{"pair", r.key},
                   {"max_grade", r.N},
                   {"passed", r.passed},
                   {"L", r.l},
                   {"Aq", r.aq},
                   {"seesaw", r.seesaw},
                   {"irreducibility", r.irr},
                   {"identification", r.ident}});
    emit_json({{"summary",
                {{"schema_version", kReportSchemaVersion},
                 {"passed", all_pass},
                 {"pairs", s},
                 {"failures", failures}}}});
  } else if (cfg.format == "human") {
    std::cout << "\n"
              << std::left << std::setw(46) << "pair" << std::setw(4) << "N" << std::setw(6) << "L" << std::setw(6)
              << "A_q" << std::setw(8) << "seesaw" << std::setw(7) << "irred" << std::setw(7) << "ident"
              << "seconds\n";
    int passed = 0;
    for (auto& r : rows) {
      std::cout << std::setw(46) << r.label << std::setw(4) << r.N << std::setw(6) << r.l << std::setw(6) << r.aq
                << std::setw(8) << r.seesaw << std::setw(7) << r.irr << std::setw(7) << r.ident << std::fixed
                << std::setprecision(2) << r.seconds << "\n";
      passed += r.passed;
    }
    std::cout << passed << "/" << rows.size() << " pairs passed\n";
  }
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- ktypes

int cmd_ktypes(const RunConfig& cfg) {
  PairPtr pair;
  HermitianSetting hs;
  if (!cfg.pairs.empty()) {
    pair = Catalog::builtin().find(cfg.pairs[0]);
    hs = pair->ambient;
  } else if (!cfg.g.empty()) {
    hs = setting_for(short_label(cfg.g));
  } else {
    throw CLI::ValidationError("ktypes", "give --g LABEL or --pair LABEL");
  }
  int N = cfg.max_grade >= 0 ? cfg.max_grade : (pair ? default_max_grade(*pair) : 4);
  auto rows = ktype_string(hs, N);
  std::optional<GradedDecomposition> lhs;
  if (pair && pair->holomorphic) lhs = lhs_graded(*pair, N);
  Q base = rows.empty() ? Q(0) : hs.zprime(rows[0].weight);

  if (cfg.format == "json") {
    json a = json::array();
    for (auto& r : rows) {
      json row = {{"k", r.grade},
                  {"weight", weight_to_json(r.weight)},
                  {"dim", weyl_dim(*hs.k, r.weight)},
                  {"grade", to_string(hs.zprime(r.weight))}};
      if (lhs) {
        json br = json::array();
        auto g = lhs->base + Q(r.grade);
        if (lhs->grades.count(g))
          for (auto& [w, m] : lhs->grades.at(g).terms) br.push_back({{"weight", weight_to_json(w)}, {"mult", m}});
        row["restriction"] = br;
      }
      a.push_back(row);
    }
    std::cout << json{{"schema_version", kReportSchemaVersion},
                      {"g", hs.g_label},
                      {"c_zeta", weight_to_json(hs.c_zeta)},
                      {"beta", weight_to_json(hs.beta_highest)},
                      {"rows", a}}
                     .dump(2)
              << "\n";
    return 0;
  }
  if (cfg.format == "latex") {
    std::cout << "\\begin{align*}\n";
    for (auto& r : rows) {
      std::cout << "  c\\zeta";
      if (r.grade == 1) std::cout << "+\\beta";
      if (r.grade > 1) std::cout << "+" << r.grade << "\\beta";
      std::cout << " &= " << omega_tex(r.weight) << " \\\\\n";
      if (lhs) {
        auto g = lhs->base + Q(r.grade);
        std::cout << "  F(" << omega_tex(r.weight) << ")|_{\\mathfrak{k}^\\sigma} &\\simeq ";
        bool first = true;
        for (auto& [w, m] : lhs->grades.at(g).terms) {
          auto t = gs_weight_tex(*pair, w);
          auto b = t.find(" \\boxtimes");
          std::cout << (first ? "" : " \\oplus ") << (m == 1 ? "" : std::to_string(m)) << "F(" << t.substr(0, b) << ")"
                    << (b == std::string::npos ? "" : t.substr(b));
          first = false;
        }
        std::cout << " \\\\\n";
      }
    }
    std::cout << "\\end{align*}\n";
    return 0;
  }
  std::cout << hs.g_label << ": c zeta = " << to_string(hs.c_zeta) << ", beta = " << to_string(hs.beta_highest)
            << ", z' grade of c zeta = " << to_string(base) << "\n";
  for (auto& r : rows) {
    std::string name = "c zeta";
    if (r.grade == 1) name += " + beta";
    if (r.grade > 1) name += " + " + std::to_string(r.grade) + " beta";
    std::cout << "  " << std::left << std::setw(18) << name << std::setw(22) << to_string(r.weight)
              << sym_text(r.weight, "w") << "   dim " << weyl_dim(*hs.k, r.weight) << "\n";
    if (lhs) {
      auto g = lhs->base + Q(r.grade);
      for (auto& [w, m] : lhs->grades.at(g).terms)
        std::cout << "      " << (m == 1 ? "" : std::to_string(m) + " x ") << gs_text(*pair, w) << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- blattner

int cmd_blattner(const RunConfig& cfg) {
  if (cfg.pairs.empty()) throw CLI::ValidationError("blattner", "give --pair LABEL");
  auto pair = Catalog::builtin().find(cfg.pairs[0]);
  if (!pair->has_form(Form::Aq)) throw std::invalid_argument(pair->key() + " has no A_q form: " + pair->aq_absent);
  Q top = pair->grade(pair->restriction.apply(pair->ambient.c_zeta)) + Q(std::abs(cfg.k) + cfg.depth + 4);
  std::vector<RhsTerm> terms;
  for (auto& t : pair->rhs_terms(Form::Aq, top))
    if (t.k && *t.k == cfg.k) terms.push_back(t);
  if (terms.empty()) throw std::invalid_argument("no A_q term with k = " + std::to_string(cfg.k));

  json out = json::array();
  for (auto& t : terms) {
    json tj = {{"term", pair->term_text(t)}, {"k", cfg.k}, {"parts", json::array()}};
    if (cfg.format == "human") std::cout << pair->g_label << " > " << pair->gs_label << ", k = " << cfg.k << ": " << pair->term_text(t) << "\n";
    if (cfg.format == "latex") std::cout << "% " << pair->term_text(t) << "\n\\begin{align*}\n";
    static const char* syms[] = {"mu", "nu", "xi", "eta"};
    int sym = 0;
    for (size_t fi = 0; fi < t.parts.size(); ++fi) {
      const auto& part = t.parts[fi];
      const auto& f = pair->factors[fi];
      std::string s = f.kind == FactorKind::U1 ? "" : syms[std::min(sym++, 3)];
      if (part.kind != 'A') {
        if (cfg.format == "human")
          std::cout << "  " << f.name << ": "
                    << (part.kind == 'C' ? "C_" + to_string(part.value) : std::string(1, part.kind) + "(" + sym_text(part.weight, s) + ")")
                    << "\n";
        continue;
      }
      AqModuleSpec aq{make_parabolic(f.form, part.node), part.weight};
      validate(aq);
      const auto& q = *aq.q;
      int rank = q.ctx->rs->rank();
      std::vector<Weight> up;
      for (int i : q.u_cap_p) up.push_back(from_ivec(q.ctx->rs->pos_roots()[i], rank, 1));
      auto syms_d = sym_power_characters(rank, up, cfg.depth);
      auto by_deg = aq_by_degree(aq, cfg.depth);
      Weight base = blattner_base(aq);
      json pj = {{"factor", f.name},
                 {"node", part.node + 1},
                 {"lambda", weight_to_json(part.weight)},
                 {"two_rho_u_cap_p", weight_to_json(q.two_rho_u_cap_p)},
                 {"range", to_string(range_check(aq))},
                 {"degrees", json::array()}};
      if (cfg.format == "human")
        std::cout << "  " << f.name << ": A_q(" << part.node + 1 << ")(" << sym_text(part.weight, s) << "), "
                  << to_string(range_check(aq)) << ", u abelian: " << (q.u_abelian ? "yes" : "no") << "\n"
                  << "    u cap p = " << q.u_cap_p.size() << "-dimensional, 2 rho(u cap p) = "
                  << sym_text(q.two_rho_u_cap_p, s) << ", lambda + 2 rho(u cap p) = " << sym_text(base, s) << "\n";
      if (cfg.format == "latex")
        std::cout << "  2\\rho(\\mathfrak{u}\\cap\\mathfrak{p}) &= " << omega_tex(q.two_rho_u_cap_p, "\\" + s) << " \\\\\n";
      for (int d = 0; d <= cfg.depth; ++d) {
        auto sd = decompose(*q.l_cap_k, syms_d[d]);
        json dj = {{"degree", d}, {"sym", json::array()}, {"ktypes", json::array()}};
        std::string ls, ks;
        for (auto& [w, m] : sd.terms) {
          dj["sym"].push_back({{"weight", weight_to_json(w)}, {"mult", m}});
          ls += (ls.empty() ? "" : " + ") + (m == 1 ? "" : std::to_string(m) + " ") + "F(" + sym_text(w, s) + ")";
        }
        std::string lt, kt;
        for (auto& [w, m] : sd.terms)
          lt += (lt.empty() ? "" : " \\oplus ") + std::string("F(") + omega_tex(w, "\\" + s) + ")";
        for (auto& [w, m] : by_deg[d].terms) {
          dj["ktypes"].push_back({{"weight", weight_to_json(w)}, {"mult", m}});
          ks += (ks.empty() ? "" : " + ") + (m == 1 ? "" : std::to_string(m) + " ") + "F(" + sym_text(w, s) + ")";
          kt += (kt.empty() ? "" : " \\oplus ") + (m == 1 ? std::string() : std::to_string(m)) + "F(" +
                omega_tex(w, "\\" + s) + ")";
        }
        if (cfg.format == "human")
          std::cout << "    S^" << d << "(u cap p) = " << (ls.empty() ? "0" : ls) << "\n"
                    << "      K-types: " << (ks.empty() ? "0" : ks) << "\n";
        if (cfg.format == "latex")
          std::cout << "  S^{" << d << "}(\\mathfrak{u}\\cap\\mathfrak{p}) &\\simeq " << (lt.empty() ? "0" : lt)
                    << " \\\\\n  &\\leadsto " << (kt.empty() ? "0" : kt) << " \\\\\n";
        pj["degrees"].push_back(dj);
      }
      tj["parts"].push_back(pj);
    }
    if (cfg.format == "latex") std::cout << "\\end{align*}\n";
    out.push_back(tj);
  }
  if (cfg.format == "json")
    std::cout << json{{"schema_version", kReportSchemaVersion}, {"pair", pair->key()}, {"terms", out}}.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------- seesaw

int cmd_seesaw(const RunConfig& cfg) {
  std::vector<int> ps;
  std::stringstream ss(cfg.params);
  for (std::string x; std::getline(ss, x, ',');) ps.push_back(std::stoi(x));
  auto c = seesaw_config(cfg.seesaw, ps);
  auto src = seesaw_source(c);
  auto terms = derive_branching(c, cfg.count);
  std::optional<SeesawComparison> cmp;
  std::string no_pair;
  try {
    auto pair = seesaw_pair(c, Catalog::builtin());
    cmp = compare_with_catalog(c, *pair, cfg.count);
  } catch (const std::exception& e) {
    no_pair = e.what();
  }
  auto mods = [](const ThetaLift& l) {
    std::string s;
    for (auto& m : l.modules) {
      s += (s.empty() ? "" : " x ") + std::string("L^{") + m.context + "}(" + to_string(m.mu) + ")";
      if (!m.c_offsets.empty()) s += "[" + to_string(m.c_offsets) + "]";
    }
    return s;
  };
  if (cfg.format == "json") {
    json a = json::array();
    for (auto& t : terms) {
      json m = json::array();
      for (auto& x : t.lift.modules)
        m.push_back({{"context", x.context}, {"mu", weight_to_json(x.mu)}, {"c", weight_to_json(x.c_offsets)}});
      a.push_back({{"series", t.series},
                   {"k", t.k},
                   {"rho", {{"group", t.rho.group}, {"params", weight_to_json(t.rho.params)}}},
                   {"lift", {{"group", t.lift.group}, {"eps", weight_to_json(t.lift.eps)}, {"modules", m}}}});
    }
    json j = {{"schema_version", kReportSchemaVersion},
              {"config", c.name()},
              {"groups", {{"G1", c.g1}, {"H1", c.h1}, {"G2", c.g2}, {"H2", c.h2}}},
              {"source", {{"group", src.group}, {"eps", weight_to_json(src.eps)}}},
              {"terms", a}};
    if (cmp)
      j["catalog"] = {{"passed", cmp->passed}, {"max_grade", to_string(cmp->max_grade)}, {"lines", cmp->lines}};
    else
      j["catalog"] = {{"unavailable", no_pair}};
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "latex") {
    std::cout << "\\begin{align*}\n  \\theta(\\pi)|_{" << c.g2 << "} &\\simeq ";
    bool first = true;
    for (auto& t : terms) {
      std::cout << (first ? "" : " \\\\\n  &\\oplus ") << "\\theta(" << to_string(t.rho.params) << ")";
      first = false;
    }
    std::cout << "\n\\end{align*}\n";
  } else {
    std::cout << "seesaw " << c.name() << ": (G1, H1) = (" << c.g1 << ", " << c.h1 << "), (G2, H2) = (" << c.g2 << ", "
              << c.h2 << ")\n";
    std::cout << "theta(pi) for " << c.g1 << ": lowest K-type eps = " << to_string(src.eps) << "  " << mods(src) << "\n";
    std::cout << "restriction to " << c.g2 << ", sum over rho with m(pi, rho) = 1:\n";
    for (auto& t : terms)
      std::cout << "  series " << t.series << "  k = " << std::setw(3) << t.k << "  rho = " << t.rho.group
                << to_string(t.rho.params) << "  ->  " << t.lift.group << " eps " << to_string(t.lift.eps) << "  "
                << mods(t.lift) << "\n";
    if (cmp) {
      std::cout << "catalogue comparison up to grade " << to_string(cmp->max_grade) << ": "
                << (cmp->passed ? "pass" : "FAIL") << "\n";
      for (auto& l : cmp->lines) std::cout << "  " << l << "\n";
    } else {
      std::cout << "no catalogue comparison: " << no_pair << "\n";
    }
  }
  return cmp && !cmp->passed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branching laws of minimal holomorphic representations: catalogue, verification, tables"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "human, json or latex")
      ->envname("HB_FORMAT")
      ->check(CLI::IsMember({"human", "json", "latex"}));
  app.add_option("--cache-dir", cfg.cache_dir, "directory for cached verification reports")->envname("HB_CACHE_DIR");
  app.add_option("--data-dir", cfg.data_dir, "directory holding pairs.json")->envname("HB_DATA_DIR");
  app.add_option("--threads", cfg.threads, "worker threads")->envname("HB_THREADS")->check(CLI::PositiveNumber);
  app.add_option("--weyl-cap", cfg.weyl_cap, "cap on Weyl group enumeration")->envname("HB_WEYL_CAP");
  app.add_flag("-v,--verbose", cfg.verbose, "print every K-type");

  auto* lp = app.add_subcommand("list-pairs", "catalogued families with proof methods");
  lp->add_option("--filter", cfg.filter, "substring of id or labels, e.g. e7");

  auto* vf = app.add_subcommand("verify", "verify branching laws grade by grade");
  vf->add_option("--pair", cfg.pairs, "pair label such as su(2,2):sp(2,R), or a key fam?m=..");
  vf->add_flag("--all", cfg.all, "every catalogued example");
  vf->add_option("--max-grade", cfg.max_grade, "z' grades above the lowest to compare")
      ->envname("HB_MAX_GRADE")
      ->check(CLI::NonNegativeNumber);

  auto* kt = app.add_subcommand("ktypes", "K-types c zeta + k beta of the minimal representation");
  kt->add_option("--g", cfg.g, "ambient, e.g. e7 or su(2,2)");
  kt->add_option("--pair", cfg.pairs, "also restrict to K^sigma");
  kt->add_option("--max-grade", cfg.max_grade)->check(CLI::NonNegativeNumber);

  auto* bl = app.add_subcommand("blattner", "Blattner expansion of an A_q(lambda) term");
  bl->add_option("--pair", cfg.pairs)->required();
  bl->add_option("--k", cfg.k, "series index");
  bl->add_option("--depth", cfg.depth, "symmetric degree")->check(CLI::NonNegativeNumber);

  auto* sw = app.add_subcommand("seesaw", "branching derived from a seesaw dual pair");
  sw->add_option("--config", cfg.seesaw, "umn-u1 or sostar-sp1")->required();
  sw->add_option("--params", cfg.params, "m,n,p,q or n,m")->required();
  sw->add_option("--count", cfg.count, "terms per series")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (!cfg.data_dir.empty()) setenv("HB_DATA_DIR", cfg.data_dir.c_str(), 1);
  set_weyl_cap(cfg.weyl_cap);
  try {
    Catalog::builtin();
    if (lp->parsed()) return cmd_list_pairs(cfg);
    if (vf->parsed()) return cmd_verify(cfg);
    if (kt->parsed()) return cmd_ktypes(cfg);
    if (bl->parsed()) return cmd_blattner(cfg);
    if (sw->parsed()) return cmd_seesaw(cfg);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
