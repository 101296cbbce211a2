#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hb {

// Exact rational over int64 with overflow-checked arithmetic.  Always kept
// in lowest terms with a positive denominator.
class Q {
 public:
  constexpr Q() = default;
  constexpr Q(long long n) : n_(n) {}  // NOLINT: implicit by design
  Q(long long n, long long d) { set(n, d); }

  long long numerator() const { return n_; }
  long long denominator() const { return d_; }

  Q operator-() const { return from128(-static_cast<__int128>(n_), d_); }
  Q& operator+=(const Q& o) { return *this = *this + o; }
  Q& operator-=(const Q& o) { return *this = *this - o; }
  Q& operator*=(const Q& o) { return *this = *this * o; }
  Q& operator/=(const Q& o) { return *this = *this / o; }

  friend Q operator+(const Q& a, const Q& b) {
    if (a.d_ == b.d_) return from128(static_cast<__int128>(a.n_) + b.n_, a.d_);
    return from128(static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_,
                   static_cast<__int128>(a.d_) * b.d_);
  }
  friend Q operator-(const Q& a, const Q& b) { return a + (-b); }
  friend Q operator*(const Q& a, const Q& b) {
    return from128(static_cast<__int128>(a.n_) * b.n_, static_cast<__int128>(a.d_) * b.d_);
  }
  friend Q operator/(const Q& a, const Q& b) {
    if (b.n_ == 0) throw std::domain_error("rational division by zero");
    __int128 n = static_cast<__int128>(a.n_) * b.d_, d = static_cast<__int128>(a.d_) * b.n_;
    return from128(n, d);
  }
  friend bool operator==(const Q& a, const Q& b) { return a.n_ == b.n_ && a.d_ == b.d_; }
  friend std::strong_ordering operator<=>(const Q& a, const Q& b) {
    __int128 l = static_cast<__int128>(a.n_) * b.d_, r = static_cast<__int128>(b.n_) * a.d_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static Q from128(__int128 n, __int128 d);
  void set(long long n, long long d);

  long long n_ = 0, d_ = 1;
};
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

std::string to_string(const Q& q);
std::string to_string(const QVec& v);
// Accepts "3", "-1/2", " 7 / 4 ".
Q parse_q(std::string_view s);

QVec qvec(std::initializer_list<long long> xs);
QVec zeros(int n);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Q& s);
bool is_zero(const QVec& a);
long long common_den(const QVec& v);

QMat zero_mat(int r, int c);
QMat identity(int n);
QMat transpose(const QMat& a);
QMat mat_mul(const QMat& a, const QMat& b);
// Row vector times matrix.
QVec vec_mat(const QVec& v, const QMat& m);
// Matrix times column vector.
QVec mat_vec(const QMat& m, const QVec& v);
QMat inverse(const QMat& a);
// Some x with x * a = b, if one exists.
std::optional<QVec> solve_left(const QMat& a, const QVec& b);

}  // namespace hb
