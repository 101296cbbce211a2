#pragma once

#include "hb/lattice.hpp"
#include "hb/rational.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace hb {

using Weight = QVec;

struct SimpleFactor {
  char type;  // 'A'..'G', or 'T' for a block of u(1) coordinates
  int rank;
  int offset;  // first coordinate of the factor
};

// Reductive root datum in the fundamental-weight basis.  Coordinates are the
// semisimple nodes in factor order followed by the u(1) coordinates.
// Convention: c_ij = <alpha_i, alpha_j^vee>, so alpha_i is row i of the
// Cartan matrix.
class RootSystem {
 public:
  // Labels like "E7", "A2+A1+T1", "T2".  u1_form gives <e,e> per u(1)
  // coordinate (default 1).
  static std::shared_ptr<const RootSystem> make(const std::string& label, QVec u1_form = {});
  static std::shared_ptr<const RootSystem> make(char type, int rank);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  int ss_rank() const { return ss_rank_; }
  int n_u1() const { return rank_ - ss_rank_; }
  const std::vector<SimpleFactor>& factors() const { return factors_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  // <alpha_i, alpha_i> / 2
  const QVec& half_len2() const { return d_; }
  const QMat& gram() const { return gram_; }

  // Sorted by height, then lexicographically by simple-root coefficients.
  const std::vector<IVec>& pos_roots() const { return pos_omega_; }
  const std::vector<std::vector<int>>& pos_roots_alpha() const { return pos_alpha_; }
  int find_pos_root(const std::vector<int>& alpha_coeffs) const;
  IVec simple_root(int i) const;
  Weight simple_root_w(int i) const;
  Weight root_w(int pos_index) const;
  Weight omega(int i) const;
  Weight rho() const { return rho_; }
  // Highest root of the simple factor containing node i.
  Weight highest_root(int factor) const;

  Q inner(const Weight& a, const Weight& b) const;
  // Coefficients on the simple roots of the semisimple part of w.
  QVec to_alpha(const Weight& w) const;
  Weight from_alpha(const QVec& coeffs) const;
  // <w, alpha_i^vee>
  Q label(const Weight& w, int i) const { return w[i]; }
  uint64_t weyl_order() const;

 private:
  RootSystem() = default;
  void finish();

  std::string label_;
  int rank_ = 0, ss_rank_ = 0;
  std::vector<SimpleFactor> factors_;
  std::vector<std::vector<int>> cartan_;
  QVec d_;
  QVec u1_form_;
  QMat gram_;
  QMat cartan_inv_;
  std::vector<IVec> pos_omega_;
  std::vector<std::vector<int>> pos_alpha_;
  Weight rho_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Order of the Weyl group of one irreducible reduced root system, identified
// by rank, number of positive roots and whether it is simply laced.
uint64_t weyl_order_irreducible(int rank, int n_pos, bool simply_laced);

struct WeylWord {
  std::vector<int> word;  // w = s_{word[0]} ... s_{word[l-1]}
  int parity = 1;
  size_t length() const { return word.size(); }
};

struct DominantResult {
  Weight dominant;
  int parity = 1;
  bool singular = false;
  WeylWord word;  // dominant = word applied to the input
};

// A closed subsystem of an ambient root system sharing its Cartan subalgebra
// and positive chamber.  Weights stay in ambient coordinates.
class Subsystem {
 public:
  using RootPredicate = std::function<bool(const std::vector<int>& alpha_coeffs)>;

  static Subsystem full(RootSystemPtr rs);
  static Subsystem levi(RootSystemPtr rs, const std::vector<int>& excluded_nodes);
  static Subsystem where(RootSystemPtr rs, const RootPredicate& pred, const std::string& tag);

  const RootSystem& ambient() const { return *rs_; }
  RootSystemPtr ambient_ptr() const { return rs_; }
  const std::string& id() const { return id_; }
  int n_simple() const { return int(simple_.size()); }
  // Indices into ambient().pos_roots().
  const std::vector<int>& simple_indices() const { return simple_; }
  const std::vector<int>& pos_indices() const { return pos_; }
  const Weight& simple_root(int k) const { return simple_w_[k]; }
  const Weight& rho() const { return rho_; }

  Q label(const Weight& w, int k) const;
  QVec labels(const Weight& w) const;
  bool is_dominant(const Weight& w) const;
  bool is_integral(const Weight& w) const;
  Weight reflect(int k, const Weight& w) const;
  Weight apply(const WeylWord& w, const Weight& x) const;
  DominantResult to_dominant(const Weight& w) const;
  bool same_orbit(const Weight& a, const Weight& b) const;
  // <w, rho^vee>
  Q height(const Weight& w) const;

  uint64_t weyl_order() const;
  // Every element exactly once, ordered by length then by first discovery.
  std::vector<WeylWord> weyl_elements(uint64_t cap) const;

  // Integer kernels: weights given as numerators over a shared denominator.
  // Labels are returned as numerators over (den * coroot_den()).
  const std::vector<IVec>& coroot_num() const { return cv_num_; }
  int64_t coroot_den() const { return cv_den_; }
  const std::vector<IVec>& simple_num() const { return simple_num_; }
  // Pairing vectors: <x, alpha> = dot(x, pv[j]) / (den * pair_den()).
  const std::vector<IVec>& pair_num() const { return pv_num_; }
  int64_t pair_den() const { return pv_den_; }
  const IVec& height_num() const { return h_num_; }
  bool dominant_num(const IVec& x) const;
  // Reflects x (integral for this subsystem) into the dominant chamber.
  int to_dominant_num(IVec& x) const;

 private:
  void build(const std::vector<int>& pos);

  RootSystemPtr rs_;
  std::string id_;
  std::vector<int> pos_, simple_;
  std::vector<Weight> simple_w_;
  std::vector<QVec> coroot_;
  Weight rho_;
  QVec height_vec_;
  std::vector<IVec> cv_num_, simple_num_, pv_num_;
  int64_t cv_den_ = 1, pv_den_ = 1;
  IVec h_num_;
};

// |W| / |Stab(w)| for a dominant w.
uint64_t orbit_size(const Subsystem& s, const Weight& dominant);

// Default cap on Weyl group enumeration.
constexpr uint64_t kDefaultWeylCap = 1000000;
// Process-wide cap used where none is passed; 0 restores the default.
uint64_t weyl_cap();
void set_weyl_cap(uint64_t cap);

IVec to_ivec(const Weight& w, int64_t den);
Weight from_ivec(const IVec& v, int rank, int64_t den);

// Standard epsilon coordinates of a classical simple type (A_r uses r+1
// coordinates, read modulo the all-ones vector).
QVec eps_to_omega(char type, int rank, const QVec& eps);
QVec omega_to_eps(char type, int rank, const Weight& w);

}  // namespace hb
