#pragma once

#include "hb/lie.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace hb {

// Finitely supported weight multiplicities.  All weights share one
// denominator; keys are the integer numerators.
struct Character {
  int rank = 0;
  int64_t den = 1;
  std::unordered_map<IVec, int64_t, IVecHash> mult;

  Character() = default;
  Character(int r, int64_t d = 1) : rank(r), den(d) {}

  void add(const Weight& w, int64_t m);
  void add_num(const IVec& w, int64_t m);
  int64_t at(const Weight& w) const;
  Weight weight(const IVec& k) const { return from_ivec(k, rank, den); }
  int64_t mass() const;
  // Re-express over a multiple of the current denominator.
  void rescale(int64_t new_den);
  std::vector<std::pair<Weight, int64_t>> sorted() const;
  bool operator==(const Character& o) const;
};

// Multiset of dominant weights (irreducible constituents).
struct IrrSum {
  std::map<Weight, int64_t> terms;

  void add(const Weight& w, int64_t m);
  void add(const IrrSum& o, int64_t m = 1);
  int64_t at(const Weight& w) const;
  int64_t count() const;
  bool empty() const { return terms.empty(); }
  bool operator==(const IrrSum& o) const { return terms == o.terms; }
  bool operator!=(const IrrSum& o) const { return terms != o.terms; }
};

// Constituents sit in disjoint coordinate blocks; highest weights add.
IrrSum outer(const IrrSum& a, const IrrSum& b);

struct NotAModuleCharacter : std::runtime_error {
  Weight weight;
  int64_t multiplicity;
  NotAModuleCharacter(const Weight& w, int64_t m);
};

// Dominant weights of F(lam) with multiplicities, ordered by decreasing
// height.  Cached per (subsystem, lam).
struct DominantCharacter {
  int rank = 0;
  int64_t den = 1;
  std::vector<std::pair<IVec, int64_t>> entries;
};

std::shared_ptr<const DominantCharacter> dominant_character(const Subsystem& s, const Weight& lam);
Character freudenthal(const Subsystem& s, const Weight& lam);
// Full W-orbit expansion of dominant data.
Character expand_orbits(const Subsystem& s, const DominantCharacter& dc);

// Exact Weyl dimension; throws on non-dominant or non-integral input.
int64_t weyl_dim(const Subsystem& s, const Weight& lam);

IrrSum decompose(const Subsystem& s, const Character& ch);
Character character_of(const Subsystem& s, const IrrSum& v);
int64_t dimension(const Subsystem& s, const IrrSum& v);

// Linear map on weights: target = source * m.
struct RestrictionMap {
  QMat m;
  Weight apply(const Weight& w) const { return vec_mat(w, m); }
  int src_rank() const { return int(m.size()); }
  int dst_rank() const { return m.empty() ? 0 : int(m[0].size()); }
  RestrictionMap then(const RestrictionMap& next) const { return {mat_mul(m, next.m)}; }
};

Character restrict(const RestrictionMap& map, const Character& ch, const Subsystem* keep_dominant = nullptr);
IrrSum branch(const RestrictionMap& map, const Subsystem& src, const Subsystem& dst, const Weight& lam);

// Degree-n part of the symmetric algebra on the listed weights.
Character sym_power_character(int rank, const std::vector<Weight>& weights, int n);
// Degrees 0..n in one pass.
std::vector<Character> sym_power_characters(int rank, const std::vector<Weight>& weights, int n);
Character tensor(const Character& a, const Character& b);
Character shift(const Character& a, const Weight& by);

void clear_rep_caches();
size_t rep_cache_size();

}  // namespace hb
