#pragma once

#include "hb/catalog.hpp"
#include "hb/hermitian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hb {

// Seesaw dual pairs (G1, H1) and (G2, H2) in Sp(N,R) with G1 > G2 and
// H1 < H2 compact.
//   umn-u1:     G1 = U(m,n),    H1 = U(1),  G2 = U(p,q) x U(m-p,n-q), H2 = U(1) x U(1)
//   sostar-sp1: G1 = O*(2n),    H1 = Sp(1), G2 = U(m,n-m),            H2 = U(2)
enum class SeesawKind { UmnU1, SoStarSp1 };

struct SeesawConfig {
  SeesawKind kind = SeesawKind::UmnU1;
  std::vector<int> params;  // (m,n,p,q) or (n,m)
  std::string g1, h1, g2, h2;
  std::string name() const;
};

// "umn-u1" with {m,n,p,q}, "sostar-sp1" with {n,m}.
SeesawConfig seesaw_config(const std::string& name, const std::vector<int>& params);

// A representation of the double cover of H1 or H2.  group is "U(1)",
// "U(1)xU(1)", "U(2)" or "Sp(1)".  U(1): {c} for det^c.  U(1)xU(1): {a,b}
// for det^a x det^b.  U(2): {a,b} for a delta_1 + b delta_2.  Sp(1): {j},
// F(j) twisted by the nontrivial character of Z/2; {0} is chi.
struct GenuineChar {
  std::string group;
  QVec params;
};

bool is_genuine(const SeesawConfig& c, const GenuineChar& pi, std::string* why = nullptr);

struct ThetaLift {
  bool present = false;
  std::string reason;  // why absent
  std::string group;   // "u(p,q)", "so*(2n)", ...
  // Lowest K-type, epsilon coordinates of the ambient u(m,n) or so*(2n).
  QVec eps;
  // One module per simple block of G (two for U(p,q) x U(m-p,n-q)), in the
  // standard basis of that block; mu in fundamental weights of the
  // semisimple part, c_offsets = {trace}.
  std::vector<LowestWeightModuleSpec> modules;
};

ThetaLift theta_lift(const SeesawConfig& c, const GenuineChar& pi);

// dim Hom_{H1}(pi, rho|_{H1}).
int64_t seesaw_multiplicity(const SeesawConfig& c, const GenuineChar& pi, const GenuineChar& rho);

struct SeesawTerm {
  int series = 0;  // 0: k >= 0, 1: k < 0
  long long k = 0;
  GenuineChar rho;
  ThetaLift lift;
};

// theta(pi) restricted to G2 for the minimal pi, as a sum over rho with
// m(pi, rho) = 1; the first `count` indices of each series.
std::vector<SeesawTerm> derive_branching(const SeesawConfig& c, int count);

// The minimal holomorphic representation theta(pi) of G1.
ThetaLift seesaw_source(const SeesawConfig& c);

// Matching catalogue pair: su:su+su+u1 or so*:su+u1.
PairPtr seesaw_pair(const SeesawConfig& c, const Catalog& cat);

struct SeesawComparison {
  bool passed = false;
  Q max_grade;
  int derived_terms = 0, catalog_terms = 0;
  std::vector<std::string> lines;  // one per term, "ok ..." or "MISSING ..."
};

// The seesaw configuration whose G2 is the catalogue pair's g^sigma.
std::optional<SeesawConfig> seesaw_config_for(const PairDescriptor& pair);

// Lowest K^sigma-types of the derived series against the catalogue's L-form
// terms, over all grades reached by the first `count` indices of each series.
SeesawComparison compare_with_catalog(const SeesawConfig& c, const PairDescriptor& pair, int count);

// Epsilon coordinates of the ambient u(m,n) / so*(2n) to the ambient
// fundamental-weight coordinates used by the catalogue.
Weight seesaw_ambient_weight(const SeesawConfig& c, const QVec& eps);

}  // namespace hb
