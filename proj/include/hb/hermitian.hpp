#pragma once

#include "hb/lie.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hb {

enum class HermitianFamily { SU, SO2Even, SO2Odd, SOStar, SpR, E6, E7 };

struct HermitianSetting {
  std::string g_label;  // canonical, e.g. "su(2,2)", "sp(3,R)"
  HermitianFamily family;
  std::vector<int> params;
  RootSystemPtr rootsys;
  int painted = 0;  // 0-based node index
  Weight c_zeta;
  Weight beta_highest;
  std::shared_ptr<const Subsystem> k;  // Levi of the unpainted nodes; the painted coordinate carries the center
  std::vector<Weight> p_plus;
  int real_rank = 0;

  // Coefficient of the painted simple root.
  Q zprime(const Weight& w) const;
  bool minimal_rep_defined() const { return real_rank > 1; }
};

struct RealRankError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Accepts "su(m,n)", "so(2,N)", "so*(2n)", "sp(n,R)", "e6(-14)", "e7(-25)".
// With require_minimal, real rank 1 is refused.
HermitianSetting setting_for(const std::string& g_label, bool require_minimal = false);
// family is one of "su", "so2" (params {N}), "so*" (params {n}), "sp", "e6", "e7".
HermitianSetting setting_for(const std::string& family, const std::vector<int>& params,
                             bool require_minimal = false);

struct KTypeEntry {
  int grade;
  Weight weight;
};

// K-types c zeta + k beta of the minimal holomorphic representation.
std::vector<KTypeEntry> ktype_string(const HermitianSetting& hs, int k_max);

Q zprime_grade(const HermitianSetting& hs, const Weight& mu);

// Irreducible lowest weight module of a (possibly reductive) Hermitian
// context; c_offsets are the u(1) characters.
struct LowestWeightModuleSpec {
  std::string context;
  Weight mu;
  QVec c_offsets;
};


// Equal-rank real form given by a compact subsystem K of a complex root
// system.  painted < 0 means compact; otherwise noncompact roots are those
// with odd painted coefficient.  For Hermitian forms K is the Levi of the
// painted node and the painted coefficient is the z' grade.
struct RealForm {
  std::string label;
  RootSystemPtr rs;
  int painted = -1;
  bool hermitian = false;
  std::shared_ptr<const Subsystem> k;

  bool compact() const { return painted < 0; }
  Q grade(const Weight& w) const { return painted < 0 ? Q(0) : rs->to_alpha(w)[painted]; }
  bool noncompact_root(int pos_index) const;
};

using RealFormPtr = std::shared_ptr<const RealForm>;

RealFormPtr real_form(const HermitianSetting& hs);
RealFormPtr real_form_hermitian(const std::string& label, RootSystemPtr rs, int painted);
RealFormPtr real_form_parity(const std::string& label, RootSystemPtr rs, int painted);
RealFormPtr real_form_compact(const std::string& label, RootSystemPtr rs);

}  // namespace hb
