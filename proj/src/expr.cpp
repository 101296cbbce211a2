#include "hb/expr.hpp"

#include <cctype>

namespace hb::expr {

namespace {

void axpy(Vec& y, const Q& a, const Vec& x) {
  for (auto& [k, c] : x) {
    Q r = y[k] + a * c;
    if (r == Q(0))
      y.erase(k);
    else
      y[k] = r;
  }
}

class Parser {
 public:
  Parser(const std::string& s, const Env& env) : s_(s), env_(env) {}

  Value run() {
    Value v = parse_or();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + s_.substr(i_) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw Error("in '" + s_ + "': " + what); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(const char* tok) {
    skip();
    size_t n = std::char_traits<char>::length(tok);
    if (s_.compare(i_, n, tok) != 0) return false;
    // Keep "<" from swallowing "<=", "." from "..", and so on.
    if (n == 1 && i_ + 1 < s_.size()) {
      char c = s_[i_], d = s_[i_ + 1];
      if ((c == '<' || c == '>' || c == '!' || c == '=') && d == '=') return false;
      if ((c == '&' && d == '&') || (c == '|' && d == '|')) return false;
    }
    i_ += n;
    return true;
  }
  void expect(const char* tok) {
    if (!eat(tok)) fail(std::string("expected '") + tok + "'");
  }

  Q scalar(const Value& v) const {
    if (v.is_vec) fail("expected a number, got a vector");
    return v.s;
  }
  static Value num(Q q) { return Value{false, q, {}}; }
  static Value truth(bool b) { return num(Q(b ? 1 : 0)); }

  Value parse_or() {
    Value a = parse_and();
    while (eat("||")) {
      Value b = parse_and();
      a = truth(scalar(a) != Q(0) || scalar(b) != Q(0));
    }
    return a;
  }
  Value parse_and() {
    Value a = parse_not();
    while (eat("&&")) {
      Value b = parse_not();
      a = truth(scalar(a) != Q(0) && scalar(b) != Q(0));
    }
    return a;
  }
  Value parse_not() {
    if (eat("!")) return truth(scalar(parse_not()) == Q(0));
    return parse_cmp();
  }
  Value parse_cmp() {
    Value a = parse_add();
    for (const char* op : {"==", "!=", "<=", ">=", "<", ">"}) {
      if (!eat(op)) continue;
      Q x = scalar(a), y = scalar(parse_add());
      std::string o = op;
      if (o == "==") return truth(x == y);
      if (o == "!=") return truth(x != y);
      if (o == "<=") return truth(x <= y);
      if (o == ">=") return truth(x >= y);
      if (o == "<") return truth(x < y);
      return truth(x > y);
    }
    return a;
  }
  Value parse_add() {
    Value a = parse_mul();
    for (;;) {
      int sign;
      if (eat("+"))
        sign = 1;
      else if (eat("-"))
        sign = -1;
      else
        return a;
      Value b = parse_mul();
      if (a.is_vec != b.is_vec) {
        // 0 + vector is allowed so that empty sums compose.
        if (!a.is_vec && a.s == Q(0)) {
          a = Value{true, Q(0), {}};
        } else if (!b.is_vec && b.s == Q(0)) {
          continue;
        } else {
          fail("cannot add a number and a vector");
        }
      }
      if (a.is_vec)
        axpy(a.v, Q(sign), b.v);
      else
        a.s += Q(sign) * b.s;
    }
  }
  Value parse_mul() {
    Value a = parse_unary();
    for (;;) {
      if (eat("*")) {
        Value b = parse_unary();
        if (a.is_vec && b.is_vec) fail("cannot multiply two vectors");
        if (a.is_vec || b.is_vec) {
          Value out{true, Q(0), {}};
          axpy(out.v, a.is_vec ? b.s : a.s, a.is_vec ? a.v : b.v);
          a = out;
        } else {
          a.s *= b.s;
        }
      } else if (eat("/")) {
        Q d = scalar(parse_unary());
        if (d == Q(0)) fail("division by zero");
        if (a.is_vec) {
          Value out{true, Q(0), {}};
          axpy(out.v, Q(1) / d, a.v);
          a = out;
        } else {
          a.s /= d;
        }
      } else if (eat("%")) {
        Q x = scalar(a), y = scalar(parse_unary());
        if (x.denominator() != 1 || y.denominator() != 1 || y == Q(0)) fail("% needs nonzero integers");
        long long r = x.numerator() % y.numerator();
        if (r < 0) r += std::abs(y.numerator());
        a = num(Q(r));
      } else {
        return a;
      }
    }
  }
  Value parse_unary() {
    if (eat("-")) {
      Value v = parse_unary();
      if (v.is_vec) {
        Value out{true, Q(0), {}};
        axpy(out.v, Q(-1), v.v);
        return out;
      }
      return num(-v.s);
    }
    if (eat("+")) return parse_unary();
    return parse_primary();
  }

  int index_value() {
    Q q = scalar(parse_add());
    if (q.denominator() != 1) fail("index is not an integer");
    return int(q.numerator());
  }

  Value parse_primary() {
    skip();
    if (eat("(")) {
      Value v = parse_or();
      expect(")");
      return v;
    }
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      long long n = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        n = n * 10 + (s_[i_] - '0');
        ++i_;
      }
      return num(Q(n));
    }
    if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
      size_t st = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name = s_.substr(st, i_ - st);
      if (eat("(")) return call(name);
      if (eat("[")) {
        auto b = env_.bases.find(name);
        if (b == env_.bases.end()) fail("unknown basis '" + name + "'");
        int lo = index_value(), hi = lo;
        if (eat("..")) hi = index_value();
        expect("]");
        Value out{true, Q(0), {}};
        for (int j = lo; j <= hi; ++j) {
          if (j < 1 || j > b->second)
            fail(name + "[" + std::to_string(j) + "] is outside 1.." + std::to_string(b->second));
          axpy(out.v, Q(1), Vec{{{name, j}, Q(1)}});
        }
        return out;
      }
      if (auto v = env_.vars.find(name); v != env_.vars.end()) return num(v->second);
      if (auto v = env_.vecs.find(name); v != env_.vecs.end()) return Value{true, Q(0), v->second};
      fail("unknown name '" + name + "'");
    }
    fail("unexpected end of expression");
  }

  Value call(const std::string& f) {
    std::vector<Q> args;
    if (!eat(")")) {
      do {
        args.push_back(scalar(parse_or()));
      } while (eat(","));
      expect(")");
    }
    auto arity = [&](size_t n) {
      if (args.size() != n) fail(f + " takes " + std::to_string(n) + " arguments");
    };
    if (f == "abs") {
      arity(1);
      return num(args[0] < Q(0) ? -args[0] : args[0]);
    }
    if (f == "min" || f == "max") {
      arity(2);
      bool lt = args[0] < args[1];
      return num((f == "min") == lt ? args[0] : args[1]);
    }
    if (f == "floor") {
      arity(1);
      long long n = args[0].numerator(), d = args[0].denominator();
      long long q = n / d;
      if (n % d != 0 && n < 0) --q;
      return num(Q(q));
    }
    fail("unknown function '" + f + "'");
  }

  const std::string& s_;
  const Env& env_;
  size_t i_ = 0;
};

}  // namespace

Value eval(const std::string& src, const Env& env) { return Parser(src, env).run(); }

Q eval_scalar(const std::string& src, const Env& env) {
  Value v = eval(src, env);
  if (v.is_vec) throw Error("in '" + src + "': expected a number");
  return v.s;
}

bool eval_bool(const std::string& src, const Env& env) { return eval_scalar(src, env) != Q(0); }

Vec eval_vec(const std::string& src, const Env& env) {
  Value v = eval(src, env);
  if (!v.is_vec) {
    if (v.s == Q(0)) return {};
    throw Error("in '" + src + "': expected a vector");
  }
  return v.v;
}

int eval_int(const std::string& src, const Env& env) {
  Q q = eval_scalar(src, env);
  if (q.denominator() != 1) throw Error("in '" + src + "': expected an integer, got " + to_string(q));
  return int(q.numerator());
}

QVec dense(const Vec& v, const std::string& name, int dim) {
  QVec out = zeros(dim);
  for (auto& [k, c] : v) {
    if (k.first != name) throw Error("unexpected basis '" + k.first + "', expected '" + name + "'");
    if (k.second < 1 || k.second > dim) throw Error(name + " index out of range");
    out[k.second - 1] = c;
  }
  return out;
}

std::string render(const Vec& v) {
  std::string out;
  for (auto& [k, c] : v) {
    std::string coef;
    if (c == Q(1))
      coef = out.empty() ? "" : "+";
    else if (c == Q(-1))
      coef = "-";
    else {
      coef = to_string(c);
      if (c > Q(0) && !out.empty()) coef = "+" + coef;
    }
    out += coef + k.first + std::to_string(k.second);
  }
  return out.empty() ? "0" : out;
}

}  // namespace hb::expr
