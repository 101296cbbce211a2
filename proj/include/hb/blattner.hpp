#pragma once

#include "hb/hermitian.hpp"
#include "hb/rep.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hb {

// theta-stable maximal parabolic q(node) of an equal-rank real form.
struct ParabolicData {
  RealFormPtr ctx;
  int node = 0;
  std::string id;
  // Indices into ctx->rs->pos_roots().
  std::vector<int> levi_roots, u_roots, u_cap_p;
  std::shared_ptr<const Subsystem> l_cap_k;
  Weight rho, rho_u, two_rho_u_cap_p;
  bool u_abelian = false;
};

using ParabolicPtr = std::shared_ptr<const ParabolicData>;

ParabolicPtr make_parabolic(RealFormPtr ctx, int node);

struct AqModuleSpec {
  ParabolicPtr q;
  Weight lambda;
};

// Throws unless lambda is a character of the Levi.
void validate(const AqModuleSpec& aq);

enum class Range { Good, WeaklyFair, Neither };
const char* to_string(Range r);
Range range_check(const AqModuleSpec& aq);

Weight infinitesimal_character(const AqModuleSpec& aq);

// lambda + 2 rho(u cap p), the bottom of the S(u cap p) tower.
Weight blattner_base(const AqModuleSpec& aq);

// Full alternating sum over W_K.  weyl_cap 0 uses the process-wide cap.
int64_t blattner_multiplicity(const AqModuleSpec& aq, const Weight& mu, uint64_t weyl_cap = 0);

// m(nu): multiplicity of F^{l cap k}(nu) in S(u cap p) (x) C_{base}.
int64_t blattner_m(const AqModuleSpec& aq, const Weight& nu);

struct AqKTypes {
  Weight base;
  int max_degree = 0;
  IrrSum ktypes;
  // Every contributing nu was K-dominant, so no reflection was needed.
  bool shortcut = true;
  // Weakly fair, or the shortcut hypothesis holds up to max_degree.
  bool applicable = true;
  bool hermitian = false;
  Q base_grade;
  Q base_pair;   // <base + rho_K, h>
  Q h_norm2;     // |h|^2, h the painted coweight
  RealFormPtr ctx;

  // Whether the multiplicity of mu is final, i.e. no symmetric degree above
  // max_degree can contribute to it.
  bool exact(const Weight& mu) const;
};

AqKTypes aq_ktypes(const AqModuleSpec& aq, int max_degree);

enum class IrreducibilityHint { IrreducibleOrZero, Unknown };
IrreducibilityHint abelian_irreducibility_hint(const AqModuleSpec& aq);

void clear_blattner_caches();

}  // namespace hb
