#pragma once

#include "hb/blattner.hpp"
#include "hb/expr.hpp"
#include "hb/hermitian.hpp"
#include "hb/rep.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hb {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FactorKind { Hermitian, Parity, Compact, U1 };
const char* to_string(FactorKind k);

struct FactorSpec {
  std::string name;  // e.g. "su(1,1)"
  FactorKind kind = FactorKind::Compact;
  char type = 'T';
  int rank = 0;      // 1 for u(1)
  int painted = -1;  // 0-based, Hermitian and parity factors only
  int offset = 0;    // first coordinate in the combined g^sigma weight
  std::vector<QVec> roots;  // ambient simple-root coefficients of each b~_j
  std::vector<std::string> roots_text;
  int e_node = -1;  // u(1): alpha_{e_node}(e) = 1
  RootSystemPtr rs;   // null for u(1)
  RealFormPtr form;   // null for u(1)
};

enum class Form { L, Aq };
const char* to_string(Form f);

struct TermPart {
  char kind = 'L';     // 'L', 'F', 'C', 'A'
  std::string method;  // L only: "", "verma", "weil"
  Weight weight;       // L, F: highest weight; A: lambda (factor coordinates)
  Q value;             // C: u(1) character
  int node = -1;       // A: 0-based parabolic node
};

struct RhsTerm {
  std::optional<long long> k;
  std::vector<TermPart> parts;  // one per factor
  Q base_grade;                 // grade of the lowest K-type
  std::string text;
};

struct SeriesSpec {
  std::string index;  // empty: a single term
  std::string from, to, when;
  std::vector<std::string> terms;
};

struct OrbitCheck {
  Weight a, b;
};

struct Identification {
  std::vector<std::pair<int, Q>> aq;  // (0-based node, coefficient of the fundamental weight)
  std::optional<OrbitCheck> orbit;
  std::string string_expr;  // expected spherical string in w[...] with index k
  std::string tag;
  bool spherical = false;
};

struct PairDescriptor {
  std::string family_id, variant;
  std::map<std::string, long long> params;
  bool holomorphic = true;
  std::vector<std::string> methods;
  std::string g_label, gs_label;
  std::string aq_absent;  // why the A_q form is missing, if it is

  HermitianSetting ambient;
  RealFormPtr g_form;
  QMat sigma;  // row i = sigma(alpha_i) in simple-root coefficients
  std::vector<FactorSpec> factors;
  RootSystemPtr gs_rs;
  std::shared_ptr<const Subsystem> ks;  // K^sigma inside gs_rs
  RestrictionMap restriction;            // ambient weights -> g^sigma weights
  QVec zfunc;                            // holomorphic: grade(x) = x . zfunc

  std::vector<SeriesSpec> l_series, aq_series;
  std::optional<Identification> ident;
  expr::Env env;

  std::string key() const;
  Q grade(const Weight& gs_weight) const;
  Weight embed(int factor, const Weight& local) const;
  Weight embed_u1(int factor, const Q& c) const;
  bool has_form(Form f) const { return f == Form::L ? !l_series.empty() : !aq_series.empty(); }
  // Terms whose lowest K-type has grade <= max_grade.
  std::vector<RhsTerm> rhs_terms(Form f, const Q& max_grade) const;
  // b~_j rendered like "a1+2a2+a3", in factor order.
  std::vector<std::string> golden_roots() const;
  std::string term_text(const RhsTerm& t) const;
};

using PairPtr = std::shared_ptr<const PairDescriptor>;

struct FamilyInfo {
  std::string id, type, g_title, gs_title;
  std::string constraint;
  std::string identification;  // non-holomorphic: summary of the identification record
  std::vector<std::string> params, methods;
  std::vector<std::map<std::string, long long>> examples;
};

class Catalog {
 public:
  static Catalog load(const std::string& path);
  // $HB_DATA_DIR/pairs.json, falling back to the build-time data directory.
  static const Catalog& builtin();
  static std::string default_path();

  std::vector<FamilyInfo> families() const;
  const FamilyInfo& family(const std::string& id) const;
  bool admissible(const std::string& id, const std::map<std::string, long long>& params) const;
  PairPtr instantiate(const std::string& id, const std::map<std::string, long long>& params) const;
  // Accepts "g:gs" labels such as "su(2,2):sp(2,R)" or "e7:so*(12)+su(2)",
  // and keys such as "sp:sp+sp?n=3,m=1".
  PairPtr find(const std::string& label) const;
  std::vector<PairPtr> examples() const;
  uint32_t checksum() const { return checksum_; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  uint32_t checksum_ = 0;
};

// Canonical ambient label, e.g. ("so2", {5}) -> "so(2,5)".
std::string ambient_label(const std::string& family, const std::vector<long long>& params);
std::string normalize_label(const std::string& s);

}  // namespace hb
