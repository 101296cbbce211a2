#include "hb/rational.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hb {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Q Q::from128(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
  if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational overflow");
  Q q;
  q.n_ = static_cast<long long>(n);
  q.d_ = static_cast<long long>(d);
  return q;
}

void Q::set(long long n, long long d) { *this = from128(n, d); }

std::string to_string(const Q& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_string(const QVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

Q parse_q(std::string_view s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t += c;
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto slash = t.find('/');
  size_t used = 0;
  if (slash == std::string::npos) {
    long long n = std::stoll(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad rational '" + t + "'");
    return Q(n);
  }
  std::string a = t.substr(0, slash), b = t.substr(slash + 1);
  long long n = std::stoll(a, &used);
  if (used != a.size()) throw std::invalid_argument("bad rational '" + t + "'");
  long long d = std::stoll(b, &used);
  if (used != b.size() || d == 0) throw std::invalid_argument("bad rational '" + t + "'");
  return Q(n, d);
}

QVec qvec(std::initializer_list<long long> xs) {
  QVec v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

QVec zeros(int n) { return QVec(n, Q(0)); }

QVec add(const QVec& a, const QVec& b) {
  QVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

QVec sub(const QVec& a, const QVec& b) {
  QVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

QVec scale(const QVec& a, const Q& s) {
  QVec r(a);
  for (auto& x : r) x *= s;
  return r;
}

bool is_zero(const QVec& a) {
  for (auto& x : a)
    if (x != 0) return false;
  return true;
}

long long common_den(const QVec& v) {
  long long d = 1;
  for (auto& x : v) d = std::lcm(d, x.denominator());
  return d;
}

QMat zero_mat(int r, int c) { return QMat(r, QVec(c, Q(0))); }

QMat identity(int n) {
  QMat m = zero_mat(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat transpose(const QMat& a) {
  if (a.empty()) return {};
  QMat t = zero_mat(a[0].size(), a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

QMat mat_mul(const QMat& a, const QMat& b) {
  if (a.empty()) return {};
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMat r = zero_mat(n, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

QVec vec_mat(const QVec& v, const QMat& m) {
  size_t cols = m.empty() ? 0 : m[0].size();
  QVec r(cols, Q(0));
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < cols; ++j) r[j] += v[i] * m[i][j];
  }
  return r;
}

QVec mat_vec(const QMat& m, const QVec& v) {
  QVec r(m.size(), Q(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

QMat inverse(const QMat& a) {
  int n = a.size();
  QMat m = a, inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Q piv = m[c][c];
    for (int j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Q f = m[r][c];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

std::optional<QVec> solve_left(const QMat& a, const QVec& b) {
  // x a = b  <=>  a^T x^T = b^T; Gauss-Jordan on the augmented transpose.
  QMat t = transpose(a);
  int rows = t.size(), cols = a.size();
  for (int i = 0; i < rows; ++i) t[i].push_back(b[i]);
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && t[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(t[p], t[r]);
    Q piv = t[r][c];
    for (auto& x : t[r]) x /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || t[i][c] == 0) continue;
      Q f = t[i][c];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (t[i][cols] != 0) return std::nullopt;
  QVec x(cols, Q(0));
  for (int i = 0; i < r; ++i) x[pivcol[i]] = t[i][cols];
  return x;
}

}  // namespace hb
