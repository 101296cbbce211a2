#include "hb/report.hpp"

#include <boost/crc.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace hb {

using json = nlohmann::json;

namespace {

json q_to_json(const Q& q) { return to_string(q); }
Q q_from_json(const json& j) { return parse_q(j.get<std::string>()); }

json irr_to_json(const IrrSum& s) {
  json a = json::array();
  for (auto& [w, m] : s.terms) a.push_back({{"weight", weight_to_json(w)}, {"mult", m}});
  return a;
}

IrrSum irr_from_json(const json& j) {
  IrrSum s;
  for (auto& e : j) s.add(weight_from_json(e.at("weight")), e.at("mult").get<int64_t>());
  return s;
}

json mismatch_to_json(const Mismatch& m) {
  return {{"grade", q_to_json(m.grade)}, {"weight", weight_to_json(m.weight)}, {"lhs", m.lhs}, {"rhs", m.rhs}};
}

Mismatch mismatch_from_json(const json& j) {
  Mismatch m;
  m.grade = q_from_json(j.at("grade"));
  m.weight = weight_from_json(j.at("weight"));
  m.lhs = j.at("lhs").get<int64_t>();
  m.rhs = j.at("rhs").get<int64_t>();
  return m;
}

json grades_to_json(const std::vector<GradeReport>& gs) {
  json a = json::array();
  for (auto& g : gs) {
    json mm = json::array();
    for (auto& m : g.mismatches) mm.push_back(mismatch_to_json(m));
    a.push_back({{"grade", q_to_json(g.grade)},
                 {"matched", g.matched},
                 {"lhs_dim", g.lhs_dim},
                 {"rhs_dim", g.rhs_dim},
                 {"lhs", irr_to_json(g.lhs)},
                 {"rhs", irr_to_json(g.rhs)},
                 {"mismatches", mm}});
  }
  return a;
}

std::vector<GradeReport> grades_from_json(const json& a) {
  std::vector<GradeReport> out;
  for (auto& e : a) {
    GradeReport g;
    g.grade = q_from_json(e.at("grade"));
    g.matched = e.at("matched").get<bool>();
    g.lhs_dim = e.at("lhs_dim").get<int64_t>();
    g.rhs_dim = e.at("rhs_dim").get<int64_t>();
    g.lhs = irr_from_json(e.at("lhs"));
    g.rhs = irr_from_json(e.at("rhs"));
    for (auto& m : e.at("mismatches")) g.mismatches.push_back(mismatch_from_json(m));
    out.push_back(std::move(g));
  }
  return out;
}

Form form_from_string(const std::string& s) {
  if (s == "L") return Form::L;
  if (s == "Aq") return Form::Aq;
  throw std::invalid_argument("unknown form " + s);
}

json pair_json(const VerificationReport& r) {
  json params = json::object();
  std::string family = r.pair_key;
  auto q = r.pair_key.find('?');
  if (q != std::string::npos) {
    family = r.pair_key.substr(0, q);
    std::stringstream ss(r.pair_key.substr(q + 1));
    std::string kv;
    while (std::getline(ss, kv, ',')) {
      auto eq = kv.find('=');
      if (eq != std::string::npos) params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
    }
  }
  return {{"family", family}, {"params", params}, {"key", r.pair_key}, {"g", r.g_label}, {"gs", r.gs_label}};
}

const FormReport* primary(const VerificationReport& r) {
  for (auto& f : r.forms)
    if (f.available) return &f;
  return nullptr;
}

std::string latex_weight(const Weight& w, const std::string& sym) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Q(0)) continue;
    std::string c = w[i] == Q(1) ? "" : (w[i] == Q(-1) ? "-" : to_string(w[i]));
    if (c.find('/') != std::string::npos) {
      bool neg = c[0] == '-';
      auto sl = c.find('/');
      c = std::string(neg ? "-" : "") + "\\tfrac{" + c.substr(neg, sl - neg) + "}{" + c.substr(sl + 1) + "}";
    }
    if (!s.empty() && c.rfind("-", 0) != 0) s += "+";
    s += c + sym + "_{" + std::to_string(i + 1) + "}";
  }
  return s.empty() ? "0" : s;
}

}  // namespace

json weight_to_json(const Weight& w) {
  long long d = common_den(w);
  json num = json::array();
  for (auto& x : w) num.push_back(x.numerator() * (d / x.denominator()));
  return {{"num", num}, {"den", d}};
}

Weight weight_from_json(const json& j) {
  long long d = j.at("den").get<long long>();
  if (d <= 0) throw std::invalid_argument("weight denominator must be positive");
  Weight w;
  for (auto& x : j.at("num")) w.push_back(Q(x.get<long long>(), d));
  return w;
}

json report_to_json(const VerificationReport& r, bool with_timings) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = r.kind;
  j["pair"] = pair_json(r);
  j["max_grade"] = r.max_grade;
  j["passed"] = r.passed;
  const FormReport* p = primary(r);
  j["grades"] = p ? grades_to_json(p->grades) : json::array();
  json forms = json::array();
  bool shortcut = true;
  for (auto& f : r.forms) {
    if (f.available) shortcut = shortcut && f.blattner_shortcut;
    json fj = {{"form", to_string(f.form)},
               {"available", f.available},
               {"unavailable_reason", f.unavailable_reason},
               {"passed", f.passed},
               {"dims_matched", f.dims_matched},
               {"rhs_terms", f.rhs_terms},
               {"rhs_generators", f.rhs_generators},
               {"blattner_shortcut", f.blattner_shortcut},
               {"terms", f.term_texts},
               {"notes", f.notes},
               {"grades", grades_to_json(f.grades)}};
    fj["first_mismatch"] = f.first_mismatch ? mismatch_to_json(*f.first_mismatch) : json(nullptr);
    forms.push_back(std::move(fj));
  }
  j["forms"] = forms;
  j["checks"] = r.checks;
  j["errors"] = r.errors;
  j["methods"] = {{"blattner_shortcut", shortcut}, {"seesaw_checked", r.seesaw_checked}};
  if (with_timings) j["timings"] = {{"seconds", r.seconds}};
  return j;
}

VerificationReport report_from_json(const json& j) {
  int v = j.at("schema_version").get<int>();
  if (v != kReportSchemaVersion) throw std::invalid_argument("unsupported report schema version " + std::to_string(v));
  VerificationReport r;
  r.kind = j.at("kind").get<std::string>();
  const auto& pj = j.at("pair");
  r.pair_key = pj.at("key").get<std::string>();
  r.g_label = pj.at("g").get<std::string>();
  r.gs_label = pj.at("gs").get<std::string>();
  r.max_grade = j.at("max_grade").get<int>();
  r.passed = j.at("passed").get<bool>();
  for (auto& fj : j.at("forms")) {
    FormReport f;
    f.form = form_from_string(fj.at("form").get<std::string>());
    f.available = fj.at("available").get<bool>();
    f.unavailable_reason = fj.at("unavailable_reason").get<std::string>();
    f.passed = fj.at("passed").get<bool>();
    f.dims_matched = fj.at("dims_matched").get<bool>();
    f.rhs_terms = fj.at("rhs_terms").get<int64_t>();
    f.rhs_generators = fj.at("rhs_generators").get<int64_t>();
    f.blattner_shortcut = fj.at("blattner_shortcut").get<bool>();
    f.term_texts = fj.at("terms").get<std::vector<std::string>>();
    f.notes = fj.at("notes").get<std::vector<std::string>>();
    f.grades = grades_from_json(fj.at("grades"));
    if (!fj.at("first_mismatch").is_null()) f.first_mismatch = mismatch_from_json(fj.at("first_mismatch"));
    r.forms.push_back(std::move(f));
  }
  r.checks = j.at("checks").get<std::vector<std::string>>();
  r.errors = j.at("errors").get<std::vector<std::string>>();
  r.seesaw_checked = j.at("methods").at("seesaw_checked").get<bool>();
  if (j.contains("timings")) r.seconds = j.at("timings").at("seconds").get<double>();
  return r;
}

std::string report_human(const VerificationReport& r, bool verbose) {
  std::ostringstream o;
  o << (r.passed ? "PASS" : "FAIL") << "  " << r.g_label << " > " << r.gs_label << "  [" << r.kind
    << ", N=" << r.max_grade << "]  " << r.pair_key << "\n";
  for (auto& f : r.forms) {
    o << "  " << to_string(f.form) << "-form: ";
    if (!f.available) {
      o << "unavailable (" << f.unavailable_reason << ")\n";
      continue;
    }
    o << (f.passed ? "pass" : "FAIL") << ", " << f.rhs_terms << " terms, " << f.rhs_generators
      << " lowest K-types, shortcut " << (f.blattner_shortcut ? "yes" : "no") << "\n";
    for (auto& g : f.grades) {
      o << "    grade " << to_string(g.grade) << ": " << g.lhs.count() << " K-types, dim " << g.lhs_dim
        << (g.matched ? "  ok" : "  MISMATCH") << "\n";
      if (verbose)
        for (auto& [w, m] : g.lhs.terms) o << "      " << m << " x F" << to_string(w) << "\n";
      for (auto& m : g.mismatches)
        o << "      F" << to_string(m.weight) << ": lhs " << m.lhs << ", rhs " << m.rhs << "\n";
    }
    if (verbose)
      for (auto& n : f.notes) o << "    note: " << n << "\n";
  }
  for (auto& c : r.checks)
    if (verbose || c.rfind("FAIL", 0) == 0) o << "  " << c << "\n";
  for (auto& e : r.errors) o << "  error: " << e << "\n";
  return o.str();
}

std::string omega_tex(const Weight& w, const std::string& sym) { return latex_weight(w, sym); }

std::string gs_weight_tex(const PairDescriptor& pair, const Weight& w) {
  static const char* syms[] = {"\\mu", "\\nu", "\\xi", "\\eta"};
  std::string main, chars;
  int next = 0;
  for (auto& f : pair.factors) {
    if (f.kind == FactorKind::U1) {
      chars += " \\boxtimes \\mathbb{C}_{" + to_string(w.at(f.offset)) + "}";
      continue;
    }
    Weight local(w.begin() + f.offset, w.begin() + f.offset + f.rank);
    std::string t = latex_weight(local, syms[std::min(next++, 3)]);
    if (t == "0") continue;
    if (!main.empty() && t[0] != '-') main += "+";
    main += t;
  }
  return (main.empty() ? "0" : main) + chars;
}

std::string report_latex(const VerificationReport& r, const PairDescriptor* pair) {
  std::ostringstream o;
  o << "% " << r.pair_key << "\n\\begin{align*}\n";
  const FormReport* p = primary(r);
  if (p) {
    for (auto& g : p->grades) {
      o << "  \\text{grade } " << to_string(g.grade) << " &: ";
      bool first = true;
      for (auto& [w, m] : g.lhs.terms) {
        if (!first) o << " \\oplus ";
        first = false;
        if (m != 1) o << m;
        if (pair) {
          auto t = gs_weight_tex(*pair, w);
          auto b = t.find(" \\boxtimes");
          o << "F(" << t.substr(0, b) << ")" << (b == std::string::npos ? "" : t.substr(b));
        } else {
          o << "F(" << latex_weight(w, "\\omega") << ")";
        }
      }
      o << (g.matched ? "" : " \\quad \\text{(mismatch)}") << " \\\\\n";
    }
  }
  o << "\\end{align*}\n";
  return o.str();
}

ReportCache::ReportCache(std::string dir, uint32_t catalog_checksum)
    : dir_(std::move(dir)), checksum_(catalog_checksum) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string ReportCache::path_for(const std::string& kind, const std::string& pair_key, int max_grade) const {
  std::string id = "v" + std::to_string(kReportSchemaVersion) + "|" + std::to_string(checksum_) + "|" + kind + "|" +
                   pair_key + "|" + std::to_string(max_grade);
  boost::crc_32_type crc;
  crc.process_bytes(id.data(), id.size());
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x", unsigned(crc.checksum()));
  return (std::filesystem::path(dir_) / (std::string(buf) + ".json")).string();
}

std::optional<VerificationReport> ReportCache::get(const std::string& kind, const std::string& pair_key,
                                                   int max_grade) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(kind, pair_key, max_grade));
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.value("catalog_checksum", 0u) != checksum_) return std::nullopt;
    auto r = report_from_json(j);
    if (r.kind != kind || r.pair_key != pair_key || r.max_grade != max_grade) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ReportCache::put(const VerificationReport& r) const {
  if (!enabled()) return;
  json j = report_to_json(r);
  j["catalog_checksum"] = checksum_;
  auto path = path_for(r.kind, r.pair_key, r.max_grade);
  auto tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hb
