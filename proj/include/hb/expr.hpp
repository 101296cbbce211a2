#pragma once

#include "hb/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace hb::expr {

// Sparse linear combination of indexed basis symbols such as a[3] or mu[1].
using Vec = std::map<std::pair<std::string, int>, Q>;

struct Env {
  std::map<std::string, Q> vars;
  std::map<std::string, Vec> vecs;   // named vector constants, e.g. beta
  std::map<std::string, int> bases;  // basis name -> dimension (indices 1..dim)
};

struct Error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Value {
  bool is_vec = false;
  Q s;
  Vec v;
};

// Grammar: || && ! comparisons + - * / % unary-minus, abs/min/max/floor,
// name[i] and name[lo..hi] (sum over the range, empty when lo > hi).
// Booleans are 0 and 1.
Value eval(const std::string& src, const Env& env);
Q eval_scalar(const std::string& src, const Env& env);
bool eval_bool(const std::string& src, const Env& env);
Vec eval_vec(const std::string& src, const Env& env);
int eval_int(const std::string& src, const Env& env);

// Coefficients on basis `name`, indices 1..dim, as a dense 0-based vector.
QVec dense(const Vec& v, const std::string& name, int dim);
// "a1+2a2-a3" style rendering; zero renders as "0".
std::string render(const Vec& v);

}  // namespace hb::expr
