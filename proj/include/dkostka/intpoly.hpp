#pragma once

// Laurent polynomials in one variable t over arbitrary-precision integers.
// Exponents may be negative; the zero polynomial has an empty support.
// Division, gcd and content act on the ordinary-polynomial part and are
// exact (they throw on any nonzero remainder instead of truncating).

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace dkostka {

using Int = boost::multiprecision::cpp_int;

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long v) { if (v != 0) c_[0] = v; }
  IntPoly(Int v) { if (v != 0) c_[0] = std::move(v); }

  // coeff * t^exp
  static IntPoly term(Int coeff, int exp) {
    IntPoly p;
    if (coeff != 0) p.c_[exp] = std::move(coeff);
    return p;
  }
  static IntPoly t_power(int exp) { return term(1, exp); }

  bool is_zero() const { return c_.empty(); }

  // Highest/lowest exponent with nonzero coefficient; zero poly has none.
  int degree() const {
    require(!c_.empty(), "degree of zero polynomial");
    return c_.rbegin()->first;
  }
  int valuation() const {
    require(!c_.empty(), "valuation of zero polynomial");
    return c_.begin()->first;
  }
  bool is_ordinary() const { return c_.empty() || c_.begin()->first >= 0; }

  Int coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Int(0) : it->second;
  }
  Int leading_coeff() const { return c_.empty() ? Int(0) : c_.rbegin()->second; }
  const std::map<int, Int>& terms() const { return c_; }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  IntPoly& operator+=(const IntPoly& o) {
    for (const auto& [e, v] : o.c_) add_term(e, v);
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    for (const auto& [e, v] : o.c_) add_term(e, -v);
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { a += b; return a; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { a -= b; return a; }
  IntPoly operator-() const {
    IntPoly r;
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    for (const auto& [ea, va] : a.c_)
      for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
    return r;
  }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  IntPoly& operator*=(const Int& k) {
    if (k == 0) { c_.clear(); return *this; }
    for (auto& [e, v] : c_) v *= k;
    return *this;
  }
  friend IntPoly operator*(IntPoly a, const Int& k) { a *= k; return a; }
  friend IntPoly operator*(const Int& k, IntPoly a) { a *= k; return a; }

  // *this * t^k
  IntPoly shifted(int k) const {
    IntPoly r;
    for (const auto& [e, v] : c_) r.c_[e + k] = v;
    return r;
  }

  // t -> t^m with m != 0; m = -1 is the reciprocal substitution t -> 1/t.
  IntPoly subst_power(int m) const {
    require(m != 0, "subst_power: zero power");
    IntPoly r;
    for (const auto& [e, v] : c_) r.c_[e * m] = v;
    return r;
  }
  IntPoly reciprocal() const { return subst_power(-1); }

  // t -> t^{1/2}; every exponent must be even.
  IntPoly half_exponents() const {
    IntPoly r;
    for (const auto& [e, v] : c_) {
      require(e % 2 == 0, "half_exponents: odd exponent present");
      r.c_[e / 2] = v;
    }
    return r;
  }

  Int eval(const Int& x) const {
    require(is_ordinary() || x == 1 || x == -1, "eval: negative exponent");
    Int r = 0;
    for (const auto& [e, v] : c_) r += v * pow_int(x, e);
    return r;
  }
  Int eval_one() const {
    Int r = 0;
    for (const auto& [e, v] : c_) r += v;
    return r;
  }

  bool has_nonnegative_coeffs() const {
    for (const auto& [e, v] : c_)
      if (v < 0) return false;
    return true;
  }

  // True when every exponent is congruent to r mod m.
  bool exponents_congruent(int r, int m) const {
    for (const auto& [e, v] : c_)
      if (((e - r) % m + m) % m != 0) return false;
    return true;
  }

  Int content() const {
    Int g = 0;
    for (const auto& [e, v] : c_) g = gcd_int(g, v);
    return g;  // 0 for the zero polynomial
  }

  // Quotient and remainder over Q restricted to exact integer steps: each
  // quotient coefficient must be integral, otherwise this throws. Both
  // operands must be ordinary polynomials.
  static void divmod(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r) {
    require(!b.is_zero(), "divmod: division by zero");
    require(a.is_ordinary() && b.is_ordinary(), "divmod: Laurent operand");
    q = IntPoly();
    r = a;
    const int db = b.degree();
    const Int lb = b.leading_coeff();
    while (!r.is_zero() && r.degree() >= db) {
      Int lr = r.leading_coeff();
      require(lr % lb == 0, "divmod: non-integral quotient");
      IntPoly m = term(lr / lb, r.degree() - db);
      q += m;
      r -= m * b;
    }
  }

  // Exact division; the divisor may be shifted by a power of t.
  IntPoly exact_div(const IntPoly& b) const {
    require(!b.is_zero(), "exact_div: division by zero");
    if (is_zero()) return IntPoly();
    int sa = is_ordinary() ? 0 : -valuation();
    int sb = b.is_ordinary() ? 0 : -b.valuation();
    IntPoly q, r;
    divmod(shifted(sa), b.shifted(sb), q, r);
    require(r.is_zero(), "exact_div: nonzero remainder");
    return q.shifted(sb - sa);
  }

  // Divide every coefficient by k, which must divide exactly.
  IntPoly exact_div_scalar(const Int& k) const {
    require(k != 0, "exact_div_scalar: division by zero");
    IntPoly r;
    for (const auto& [e, v] : c_) {
      require(v % k == 0, "exact_div_scalar: non-integral coefficient");
      r.c_[e] = v / k;
    }
    return r;
  }

  // Gcd over Z[t] (content times primitive part), positive leading
  // coefficient, computed by a primitive pseudo-remainder sequence.
  static IntPoly gcd(IntPoly a, IntPoly b) {
    require(a.is_ordinary() && b.is_ordinary(), "gcd: Laurent operand");
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    Int ca = a.content(), cb = b.content();
    Int cg = gcd_int(ca, cb);
    IntPoly pa = a.exact_div_scalar(ca), pb = b.exact_div_scalar(cb);
    while (!pb.is_zero()) {
      IntPoly r = prem(pa, pb);
      pa = pb;
      Int cr = r.content();
      pb = cr == 0 ? IntPoly() : r.exact_div_scalar(cr);
    }
    return normalize_sign(pa * cg);
  }

  std::string str() const { return render(false); }
  // LaTeX-style rendering braces multi-character exponents: t^{10}.
  std::string str_latex() const { return render(true); }

  // Accepts the rendering grammar: terms joined by + or -, each term an
  // optional integer, optional t, optional ^exponent (possibly negative).
  static IntPoly parse(const std::string& s);

 private:
  std::map<int, Int> c_;

  static void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(std::string("IntPoly: ") + msg);
  }

  void add_term(int e, Int v) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      if (v != 0) c_.emplace(e, std::move(v));
    } else {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }

  static Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { Int r = a % b; a = b; b = r; }
    return a;
  }

  static Int pow_int(Int x, int e) {
    if (e < 0) {
      require(x == 1 || x == -1, "pow_int: negative exponent");
      e = -e;
    }
    Int r = 1;
    while (e-- > 0) r *= x;
    return r;
  }

  static IntPoly normalize_sign(IntPoly p) {
    if (!p.is_zero() && p.leading_coeff() < 0) return -p;
    return p;
  }

  // Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
  static IntPoly prem(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    const Int lb = b.leading_coeff();
    while (!a.is_zero() && a.degree() >= db) {
      IntPoly m = term(a.leading_coeff(), a.degree() - db);
      a = a * lb - m * b;
    }
    return a;
  }

  std::string render(bool latex) const;
};

inline std::string IntPoly::render(bool latex) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, v] = *it;
    Int av = v < 0 ? Int(-v) : v;
    if (first) {
      if (v < 0) out << "-";
      first = false;
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << av;
      continue;
    }
    if (av != 1) out << av;
    out << "t";
    if (e != 1) {
      std::string es = std::to_string(e);
      if (latex && es.size() > 1)
        out << "^{" << es << "}";
      else
        out << "^" << es;
    }
  }
  return out.str();
}

inline IntPoly IntPoly::parse(const std::string& s) {
  IntPoly result;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
  skip_ws();
  require(i < s.size(), "parse: empty input");
  bool expect_term = true;
  int sign = 1;
  while (i < s.size()) {
    if (!expect_term) {
      if (s[i] == '+') sign = 1;
      else if (s[i] == '-') sign = -1;
      else throw std::domain_error("IntPoly: parse: expected + or -");
      ++i;
      skip_ws();
      expect_term = true;
      continue;
    }
    if (s[i] == '-') { sign = -sign; ++i; skip_ws(); }
    Int coeff = 1;
    bool saw_digits = false;
    std::string digits;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) digits += s[i++];
    if (!digits.empty()) { coeff = Int(digits); saw_digits = true; }
    int exp = 0;
    bool saw_t = false;
    if (i < s.size() && s[i] == 't') {
      saw_t = true;
      exp = 1;
      ++i;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool brace = i < s.size() && s[i] == '{';
        if (brace) ++i;
        std::string es;
        if (i < s.size() && s[i] == '-') es += s[i++];
        while (i < s.size() && std::isdigit((unsigned char)s[i])) es += s[i++];
        require(!es.empty() && es != "-", "parse: missing exponent");
        if (brace) {
          require(i < s.size() && s[i] == '}', "parse: unclosed exponent brace");
          ++i;
        }
        exp = std::stoi(es);
      }
    }
    require(saw_digits || saw_t, "parse: empty term");
    result += term(sign * coeff, exp);
    sign = 1;
    expect_term = false;
    skip_ws();
  }
  require(!expect_term, "parse: trailing operator");
  return result;
}

}  // namespace dkostka
