#pragma once

#include "hb/blattner.hpp"
#include "hb/catalog.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hb {

// z'-grade -> K^sigma-types.
struct GradedDecomposition {
  Q base;
  int max_grade = 0;  // grades base .. base + max_grade
  std::map<Q, IrrSum> grades;
};

struct Mismatch {
  Q grade;
  Weight weight;
  int64_t lhs = 0, rhs = 0;
};

struct GradeReport {
  Q grade;
  bool matched = true;
  int64_t lhs_dim = 0, rhs_dim = 0;
  IrrSum lhs, rhs;
  std::vector<Mismatch> mismatches;
};

struct FormReport {
  Form form = Form::L;
  bool available = true;
  std::string unavailable_reason;
  bool passed = false;
  bool dims_matched = false;
  std::vector<GradeReport> grades;
  std::optional<Mismatch> first_mismatch;
  int64_t rhs_terms = 0;
  // Lowest K^sigma-types generating the right-hand side, summed over terms.
  int64_t rhs_generators = 0;
  bool blattner_shortcut = true;
  std::vector<std::string> term_texts;
  std::vector<std::string> notes;
};

struct VerificationReport {
  std::string kind;  // "holomorphic", "irreducibility", "identification"
  std::string pair_key, g_label, gs_label;
  int max_grade = 0;
  bool passed = false;
  std::vector<FormReport> forms;
  std::vector<std::string> checks;  // "ok: ..." / "FAIL: ..." lines
  std::vector<std::string> errors;
  bool seesaw_checked = false;
  double seconds = 0;
};

GradedDecomposition lhs_graded(const PairDescriptor& pair, int max_grade);

struct RhsResult {
  bool available = true;
  std::string reason;
  GradedDecomposition dec;
  int64_t terms = 0;
  bool shortcut = true;
  std::vector<std::string> texts;
  std::vector<std::string> notes;
};
RhsResult rhs_graded(const PairDescriptor& pair, int max_grade, Form form);

// Default truncation: 4, 3 for e7(-25) ambient, 2 for su(m,n) with m+n >= 8.
// Non-holomorphic pairs: 5, 3 for e6(-14).
int default_max_grade(const PairDescriptor& pair);

VerificationReport verify_pair(const PairDescriptor& pair, int max_grade);
VerificationReport verify_nonhol_irreducibility(const PairDescriptor& pair, int max_grade);
VerificationReport verify_nonhol_identification(const PairDescriptor& pair, int max_grade = 4);

// K-types of the lowest weight module L(mu) of one Hermitian factor up to
// internal degree max_degree, with the method used ("aq:<node>", "verma",
// "weil"), or nullopt when no method applies.
struct LowestWeightKTypes {
  IrrSum ktypes;
  std::map<Weight, int> degree;
  std::string method;
  bool shortcut = true;
};
std::optional<LowestWeightKTypes> lowest_weight_ktypes(RealFormPtr form, const Weight& mu, const std::string& method,
                                                       int max_degree);

// Number of K-types not reached from lower grades by p_+, i.e. the number of
// lowest K-types of the submodules they generate.  ktypes_by_degree[d] holds
// the K-types of internal degree d.
int64_t count_generators(const Subsystem& k, const std::vector<Weight>& p_plus, const std::vector<IrrSum>& ktypes_by_degree);
std::vector<IrrSum> aq_by_degree(const AqModuleSpec& aq, int max_degree);

struct FockCheck {
  bool passed = true;
  int64_t lhs = 0, rhs = 0;
};
FockCheck fock_dimension_oracle(int n_vars, int m, int grade);

struct ReducibilityCase {
  std::string label;
  int64_t generators = 0;
  int64_t expected = 0;
  std::string note;
};
std::vector<ReducibilityCase> demonstrate_reducible_aq(int max_degree = 4);

}  // namespace hb
