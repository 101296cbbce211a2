#include "hb/lie.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace hb {

namespace {

struct FactorSpec {
  char type;
  int rank;
};

// Inner products of simple roots before normalization.
QMat simple_gram(char type, int n) {
  QMat b = zero_mat(n, n);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) b[i][i + 1] = b[i + 1][i] = -1;
  };
  switch (type) {
    case 'A':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      chain(n);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      chain(n);
      b[n - 1][n - 1] = 1;
      break;
    case 'C':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      chain(n);
      b[n - 1][n - 1] = 4;
      if (n >= 2) b[n - 2][n - 1] = b[n - 1][n - 2] = -2;
      break;
    case 'D':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      if (n == 1) throw std::invalid_argument("D1 is not a root system");
      chain(n - 1);
      if (n >= 3) b[n - 3][n - 1] = b[n - 1][n - 3] = -1;
      break;
    case 'E': {
      if (n < 6 || n > 8) throw std::invalid_argument("E type needs rank 6..8");
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
      for (auto& e : edges)
        if (e[0] < n && e[1] < n) b[e[0]][e[1]] = b[e[1]][e[0]] = -1;
      break;
    }
    case 'F':
      if (n != 4) throw std::invalid_argument("F type needs rank 4");
      b = {{Q(2), Q(-1), Q(0), Q(0)},
           {Q(-1), Q(2), Q(-1), Q(0)},
           {Q(0), Q(-1), Q(1), Q(-1, 2)},
           {Q(0), Q(0), Q(-1, 2), Q(1)}};
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("G type needs rank 2");
      b = {{Q(2, 3), Q(-1)}, {Q(-1), Q(2)}};
      break;
    default:
      throw std::invalid_argument(std::string("unsupported root system type '") + type + "'");
  }
  return b;
}

std::vector<FactorSpec> parse_label(const std::string& label) {
  std::vector<FactorSpec> out;
  size_t i = 0;
  while (i < label.size()) {
    char t = label[i];
    if (t == '+' || t == ' ') {
      ++i;
      continue;
    }
    if (std::string("ABCDEFGT").find(t) == std::string::npos)
      throw std::invalid_argument("bad root system label '" + label + "'");
    ++i;
    size_t j = i;
    while (j < label.size() && std::isdigit(static_cast<unsigned char>(label[j]))) ++j;
    if (j == i) throw std::invalid_argument("missing rank in label '" + label + "'");
    int r = std::stoi(label.substr(i, j - i));
    if (r < 1 || (t != 'T' && r > 8))
      throw std::invalid_argument("rank out of range in label '" + label + "'");
    out.push_back({t, r});
    i = j;
  }
  if (out.empty()) throw std::invalid_argument("empty root system label");
  return out;
}

std::vector<int> components_of(const QMat& b) {
  int n = b.size();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y)
        if (comp[y] < 0 && b[x][y] != 0) {
          comp[y] = c;
          stack.push_back(y);
        }
    }
    ++c;
  }
  return comp;
}

}  // namespace

uint64_t weyl_order_irreducible(int n, int npos, bool simply_laced) {
  auto fact = [](int k) {
    uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  if (simply_laced) {
    if (npos == n * (n + 1) / 2) return fact(n + 1);
    if (npos == n * (n - 1)) return (uint64_t(1) << (n - 1)) * fact(n);
    if (n == 6 && npos == 36) return 51840;
    if (n == 7 && npos == 63) return 2903040;
    if (n == 8 && npos == 120) return 696729600;
  } else {
    if (npos == n * n) return (uint64_t(1) << n) * fact(n);
    if (n == 4 && npos == 24) return 1152;
    if (n == 2 && npos == 6) return 12;
  }
  throw std::logic_error("unrecognized irreducible root system");
}

std::shared_ptr<const RootSystem> RootSystem::make(char type, int rank) {
  return make(std::string(1, type) + std::to_string(rank));
}

std::shared_ptr<const RootSystem> RootSystem::make(const std::string& label, QVec u1_form) {
  auto specs = parse_label(label);
  std::shared_ptr<RootSystem> rs(new RootSystem());
  int ss = 0, nu1 = 0;
  for (auto& f : specs) (f.type == 'T' ? nu1 : ss) += f.rank;
  if (ss + nu1 > kMaxRank) throw std::invalid_argument("total rank exceeds " + std::to_string(kMaxRank));
  QMat b = zero_mat(ss, ss);
  int off = 0;
  std::string canon;
  for (auto& f : specs) {
    if (f.type == 'T') continue;
    QMat fb = simple_gram(f.type, f.rank);
    for (int i = 0; i < f.rank; ++i)
      for (int j = 0; j < f.rank; ++j) b[off + i][off + j] = fb[i][j];
    rs->factors_.push_back({f.type, f.rank, off});
    if (!canon.empty()) canon += "+";
    canon += f.type + std::to_string(f.rank);
    off += f.rank;
  }
  if (nu1) {
    rs->factors_.push_back({'T', nu1, ss});
    if (!canon.empty()) canon += "+";
    canon += "T" + std::to_string(nu1);
  }
  // Long roots get squared length 2 in every connected component.
  auto comp = components_of(b);
  std::map<int, Q> longest;
  for (int i = 0; i < ss; ++i) longest[comp[i]] = std::max(longest[comp[i]], b[i][i]);
  for (int i = 0; i < ss; ++i)
    for (int j = 0; j < ss; ++j) b[i][j] *= Q(2) / longest[comp[i]];
  rs->label_ = canon;
  rs->rank_ = ss + nu1;
  rs->ss_rank_ = ss;
  rs->cartan_.assign(ss, std::vector<int>(ss, 0));
  rs->d_.assign(ss, Q(0));
  for (int i = 0; i < ss; ++i) {
    rs->d_[i] = b[i][i] / 2;
    for (int j = 0; j < ss; ++j) {
      Q c = 2 * b[i][j] / b[j][j];
      if (c.denominator() != 1) throw std::logic_error("non-integral Cartan entry");
      rs->cartan_[i][j] = int(c.numerator());
    }
  }
  if (u1_form.empty()) u1_form.assign(nu1, Q(1));
  if (int(u1_form.size()) != nu1) throw std::invalid_argument("u(1) form size mismatch");
  rs->u1_form_ = u1_form;
  rs->finish();
  return rs;
}

void RootSystem::finish() {
  int n = ss_rank_;
  QMat c = zero_mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = cartan_[i][j];
  cartan_inv_ = n ? inverse(c) : QMat{};
  gram_ = zero_mat(rank_, rank_);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) gram_[j][l] = cartan_inv_[j][l] * d_[l];
  for (int u = 0; u < rank_ - n; ++u) gram_[n + u][n + u] = u1_form_[u];

  std::vector<std::vector<int>> roots;
  std::set<std::vector<int>> seen;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.push_back(e);
    seen.insert(e);
  }
  for (size_t r = 0; r < roots.size(); ++r) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> x = roots[r];
      int p = 0;
      while (true) {
        x[i] -= 1;
        if (!seen.count(x)) break;
        ++p;
      }
      int pair = 0;
      for (int j = 0; j < n; ++j) pair += roots[r][j] * cartan_[j][i];
      if (p - pair > 0) {
        std::vector<int> y = roots[r];
        y[i] += 1;
        if (seen.insert(y).second) roots.push_back(y);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  pos_alpha_ = roots;
  pos_omega_.clear();
  rho_ = zeros(rank_);
  for (auto& r : roots) {
    IVec v;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) v[i] += r[j] * cartan_[j][i];
    pos_omega_.push_back(v);
    for (int i = 0; i < n; ++i) rho_[i] += Q(v[i], 2);
  }
}

int RootSystem::find_pos_root(const std::vector<int>& a) const {
  auto it = std::find(pos_alpha_.begin(), pos_alpha_.end(), a);
  return it == pos_alpha_.end() ? -1 : int(it - pos_alpha_.begin());
}

IVec RootSystem::simple_root(int i) const {
  IVec v;
  for (int j = 0; j < ss_rank_; ++j) v[j] = cartan_[i][j];
  return v;
}

Weight RootSystem::simple_root_w(int i) const { return from_ivec(simple_root(i), rank_, 1); }

Weight RootSystem::root_w(int k) const { return from_ivec(pos_omega_[k], rank_, 1); }

Weight RootSystem::omega(int i) const {
  Weight w = zeros(rank_);
  w[i] = 1;
  return w;
}

Weight RootSystem::highest_root(int factor) const {
  const auto& f = factors_.at(factor);
  if (f.type == 'T') throw std::invalid_argument("abelian factor has no roots");
  int best = -1, besth = -1;
  for (size_t k = 0; k < pos_alpha_.size(); ++k) {
    const auto& a = pos_alpha_[k];
    int h = 0;
    bool inside = true;
    for (int i = 0; i < ss_rank_; ++i) {
      if (a[i] && (i < f.offset || i >= f.offset + f.rank)) inside = false;
      h += a[i];
    }
    if (inside && h > besth) {
      besth = h;
      best = int(k);
    }
  }
  return root_w(best);
}

Q RootSystem::inner(const Weight& a, const Weight& b) const {
  if (int(a.size()) != rank_ || int(b.size()) != rank_)
    throw std::invalid_argument("rank mismatch in inner product");
  Q s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (gram_[i][j] != 0 && b[j] != 0) s += a[i] * gram_[i][j] * b[j];
  }
  return s;
}

QVec RootSystem::to_alpha(const Weight& w) const {
  QVec head(w.begin(), w.begin() + ss_rank_);
  return vec_mat(head, cartan_inv_);
}

Weight RootSystem::from_alpha(const QVec& coeffs) const {
  Weight w = zeros(rank_);
  for (int j = 0; j < ss_rank_; ++j)
    for (int i = 0; i < ss_rank_; ++i) w[i] += coeffs[j] * cartan_[j][i];
  return w;
}

uint64_t RootSystem::weyl_order() const { return Subsystem::full(
    std::shared_ptr<const RootSystem>(std::shared_ptr<const RootSystem>{}, this)).weyl_order(); }

IVec to_ivec(const Weight& w, int64_t den) {
  IVec v;
  for (size_t i = 0; i < w.size(); ++i) {
    Q x = w[i] * den;
    if (x.denominator() != 1) throw std::logic_error("weight not on the requested lattice");
    v[i] = int32_t(x.numerator());
  }
  return v;
}

Weight from_ivec(const IVec& v, int rank, int64_t den) {
  Weight w(rank);
  for (int i = 0; i < rank; ++i) w[i] = Q(v[i], den);
  return w;
}

// ---------------------------------------------------------------- Subsystem

Subsystem Subsystem::full(RootSystemPtr rs) {
  return where(rs, [](const std::vector<int>&) { return true; }, "all");
}

Subsystem Subsystem::levi(RootSystemPtr rs, const std::vector<int>& excluded) {
  std::string tag = "levi";
  for (int e : excluded) tag += "-" + std::to_string(e);
  return where(
      rs,
      [excluded](const std::vector<int>& a) {
        for (int e : excluded)
          if (a[e] != 0) return false;
        return true;
      },
      tag);
}

Subsystem Subsystem::where(RootSystemPtr rs, const RootPredicate& pred, const std::string& tag) {
  Subsystem s;
  s.rs_ = rs;
  std::vector<int> pos;
  for (size_t k = 0; k < rs->pos_roots_alpha().size(); ++k)
    if (pred(rs->pos_roots_alpha()[k])) pos.push_back(int(k));
  s.build(pos);
  s.id_ = rs->label() + "|" + tag;
  return s;
}

void Subsystem::build(const std::vector<int>& pos) {
  const auto& rs = *rs_;
  int n = rs.rank();
  pos_ = pos;
  std::set<std::vector<int>> in;
  for (int k : pos_) in.insert(rs.pos_roots_alpha()[k]);
  simple_.clear();
  for (int k : pos_) {
    const auto& a = rs.pos_roots_alpha()[k];
    bool decomposable = false;
    for (int j : pos_) {
      if (j == k) continue;
      const auto& b = rs.pos_roots_alpha()[j];
      std::vector<int> d(a.size());
      bool nonneg = true;
      for (size_t i = 0; i < a.size(); ++i) {
        d[i] = a[i] - b[i];
        if (d[i] < 0) nonneg = false;
      }
      if (nonneg && in.count(d)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple_.push_back(k);
  }
  simple_w_.clear();
  coroot_.clear();
  for (int k : simple_) {
    Weight b = rs.root_w(k);
    simple_w_.push_back(b);
    Q len2 = rs.inner(b, b);
    const auto& a = rs.pos_roots_alpha()[k];
    QVec cv = zeros(n);
    for (int i = 0; i < rs.ss_rank(); ++i) cv[i] = Q(2) * a[i] * rs.half_len2()[i] / len2;
    coroot_.push_back(cv);
  }
  rho_ = zeros(n);
  height_vec_ = zeros(n);
  std::vector<QVec> pv;
  for (int k : pos_) {
    Weight b = rs.root_w(k);
    for (int i = 0; i < n; ++i) rho_[i] += b[i] / 2;
    QVec p = mat_vec(rs.gram(), b);
    Q len2 = rs.inner(b, b);
    for (int i = 0; i < n; ++i) height_vec_[i] += p[i] / len2;
    pv.push_back(p);
  }
  cv_den_ = 1;
  for (auto& c : coroot_) cv_den_ = std::lcm(cv_den_, common_den(c));
  pv_den_ = 1;
  for (auto& p : pv) pv_den_ = std::lcm(pv_den_, common_den(p));
  pv_den_ = std::lcm(pv_den_, common_den(height_vec_));
  cv_num_.clear();
  simple_num_.clear();
  pv_num_.clear();
  for (size_t k = 0; k < coroot_.size(); ++k) {
    cv_num_.push_back(to_ivec(coroot_[k], cv_den_));
    simple_num_.push_back(to_ivec(simple_w_[k], 1));
  }
  for (auto& p : pv) pv_num_.push_back(to_ivec(p, pv_den_));
  h_num_ = to_ivec(height_vec_, pv_den_);
}

Q Subsystem::label(const Weight& w, int k) const {
  Q s = 0;
  for (size_t i = 0; i < w.size(); ++i)
    if (coroot_[k][i] != 0) s += w[i] * coroot_[k][i];
  return s;
}

QVec Subsystem::labels(const Weight& w) const {
  QVec out;
  for (int k = 0; k < n_simple(); ++k) out.push_back(label(w, k));
  return out;
}

bool Subsystem::is_dominant(const Weight& w) const {
  for (int k = 0; k < n_simple(); ++k)
    if (label(w, k) < 0) return false;
  return true;
}

bool Subsystem::is_integral(const Weight& w) const {
  for (int k = 0; k < n_simple(); ++k)
    if (label(w, k).denominator() != 1) return false;
  return true;
}

Weight Subsystem::reflect(int k, const Weight& w) const {
  Q l = label(w, k);
  Weight r = w;
  if (l != 0)
    for (size_t i = 0; i < r.size(); ++i) r[i] -= l * simple_w_[k][i];
  return r;
}

Weight Subsystem::apply(const WeylWord& w, const Weight& x) const {
  Weight y = x;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) y = reflect(*it, y);
  return y;
}

DominantResult Subsystem::to_dominant(const Weight& w) const {
  DominantResult r;
  r.dominant = w;
  std::vector<int> applied;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int k = 0; k < n_simple(); ++k) {
      if (label(r.dominant, k) < 0) {
        r.dominant = reflect(k, r.dominant);
        applied.push_back(k);
        r.parity = -r.parity;
        moved = true;
        break;
      }
    }
  }
  r.word.word.assign(applied.rbegin(), applied.rend());
  r.word.parity = r.parity;
  for (int k = 0; k < n_simple(); ++k)
    if (label(r.dominant, k) == 0) r.singular = true;
  return r;
}

bool Subsystem::same_orbit(const Weight& a, const Weight& b) const {
  return to_dominant(a).dominant == to_dominant(b).dominant;
}

Q Subsystem::height(const Weight& w) const {
  Q s = 0;
  for (size_t i = 0; i < w.size(); ++i) s += w[i] * height_vec_[i];
  return s;
}

uint64_t Subsystem::weyl_order() const {
  const auto& rs = *rs_;
  int m = n_simple();
  std::vector<int> comp(m, -1);
  int nc = 0;
  for (int s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> st{s};
    comp[s] = nc;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y = 0; y < m; ++y)
        if (comp[y] < 0 && rs.inner(simple_w_[x], simple_w_[y]) != 0) {
          comp[y] = nc;
          st.push_back(y);
        }
    }
    ++nc;
  }
  std::vector<int> rank(nc, 0), npos(nc, 0);
  std::vector<std::set<Q>> lens(nc);
  for (int k = 0; k < m; ++k) {
    ++rank[comp[k]];
    lens[comp[k]].insert(rs.inner(simple_w_[k], simple_w_[k]));
  }
  for (int j : pos_) {
    Weight b = rs.root_w(j);
    for (int k = 0; k < m; ++k)
      if (rs.inner(b, simple_w_[k]) != 0) {
        ++npos[comp[k]];
        break;
      }
  }
  uint64_t order = 1;
  for (int c = 0; c < nc; ++c) order *= weyl_order_irreducible(rank[c], npos[c], lens[c].size() == 1);
  return order;
}

std::vector<WeylWord> Subsystem::weyl_elements(uint64_t cap) const {
  uint64_t order = weyl_order();
  if (order > cap)
    throw std::length_error("Weyl group of order " + std::to_string(order) +
                            " exceeds the enumeration cap " + std::to_string(cap) +
                            "; raise the cap to at least " + std::to_string(order));
  std::vector<WeylWord> out;
  std::vector<IVec> images;
  std::unordered_map<IVec, size_t, IVecHash> index;
  IVec start = to_ivec(rho_, 2);
  out.push_back(WeylWord{});
  images.push_back(start);
  index.emplace(start, 0);
  for (size_t cur = 0; cur < out.size(); ++cur) {
    for (int k = 0; k < n_simple(); ++k) {
      IVec x = images[cur];
      int64_t d = dot(x, cv_num_[k]);
      if (d <= 0) continue;
      axpy(x, simple_num_[k], -int32_t(d / cv_den_));
      if (index.count(x)) continue;
      WeylWord w;
      w.word.push_back(k);
      w.word.insert(w.word.end(), out[cur].word.begin(), out[cur].word.end());
      w.parity = -out[cur].parity;
      index.emplace(x, out.size());
      out.push_back(std::move(w));
      images.push_back(x);
    }
  }
  return out;
}

bool Subsystem::dominant_num(const IVec& x) const {
  for (const auto& c : cv_num_)
    if (dot(x, c) < 0) return false;
  return true;
}

int Subsystem::to_dominant_num(IVec& x) const {
  int parity = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t k = 0; k < cv_num_.size(); ++k) {
      int64_t d = dot(x, cv_num_[k]);
      if (d < 0) {
        if (d % cv_den_) throw std::logic_error("non-integral weight in integer reflection");
        axpy(x, simple_num_[k], -int32_t(d / cv_den_));
        parity = -parity;
        moved = true;
        break;
      }
    }
  }
  return parity;
}

uint64_t orbit_size(const Subsystem& s, const Weight& w) {
  const RootSystem& rs = s.ambient();
  std::set<int> fixed;
  for (int j : s.pos_indices())
    if (rs.inner(w, rs.root_w(j)) == 0) fixed.insert(j);
  Subsystem stab = Subsystem::where(
      s.ambient_ptr(), [&](const std::vector<int>& a) { return fixed.count(rs.find_pos_root(a)) > 0; },
      "stab");
  return s.weyl_order() / stab.weyl_order();
}

QVec eps_to_omega(char type, int rank, const QVec& e) {
  int n = type == 'A' ? rank + 1 : rank;
  if (int(e.size()) != n) throw std::invalid_argument("epsilon vector has the wrong length");
  QVec w(rank);
  for (int i = 0; i + 1 < rank; ++i) w[i] = e[i] - e[i + 1];
  switch (type) {
    case 'A': w[rank - 1] = e[rank - 1] - e[rank]; break;
    case 'B': w[rank - 1] = Q(2) * e[rank - 1]; break;
    case 'C': w[rank - 1] = e[rank - 1]; break;
    case 'D':
      if (rank < 2) throw std::invalid_argument("D needs rank >= 2");
      w[rank - 1] = e[rank - 2] + e[rank - 1];
      break;
    default: throw std::invalid_argument(std::string("no epsilon coordinates for type ") + type);
  }
  return w;
}

QVec omega_to_eps(char type, int rank, const Weight& w) {
  if (int(w.size()) != rank) throw std::invalid_argument("weight has the wrong length");
  int n = type == 'A' ? rank + 1 : rank;
  QVec e(n);
  switch (type) {
    case 'A':
      for (int i = rank - 1; i >= 0; --i) e[i] = e[i + 1] + w[i];
      break;
    case 'B':
      e[rank - 1] = w[rank - 1] / Q(2);
      for (int i = rank - 2; i >= 0; --i) e[i] = e[i + 1] + w[i];
      break;
    case 'C':
      e[rank - 1] = w[rank - 1];
      for (int i = rank - 2; i >= 0; --i) e[i] = e[i + 1] + w[i];
      break;
    case 'D':
      if (rank < 2) throw std::invalid_argument("D needs rank >= 2");
      e[rank - 1] = (w[rank - 1] - w[rank - 2]) / Q(2);
      e[rank - 2] = (w[rank - 1] + w[rank - 2]) / Q(2);
      for (int i = rank - 3; i >= 0; --i) e[i] = e[i + 1] + w[i];
      break;
    default: throw std::invalid_argument(std::string("no epsilon coordinates for type ") + type);
  }
  return e;
}

namespace {
std::atomic<uint64_t> g_weyl_cap{kDefaultWeylCap};
}

uint64_t weyl_cap() { return g_weyl_cap.load(); }
void set_weyl_cap(uint64_t cap) { g_weyl_cap.store(cap ? cap : kDefaultWeylCap); }

}  // namespace hb
