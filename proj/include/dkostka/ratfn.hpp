#pragma once

// Rational functions in t, stored as a quotient of Laurent polynomials in
// canonical form: the denominator is an ordinary polynomial with nonzero
// constant term and positive leading coefficient, the numerator carries any
// power of t, and the pair is fully reduced (coprime polynomial parts and
// coprime integer contents). Equality is therefore componentwise.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

#include "dkostka/intpoly.hpp"

namespace dkostka {

using Rational = boost::multiprecision::cpp_rational;

class RatFn {
 public:
  RatFn() : num_(), den_(1) {}
  RatFn(long v) : num_(v), den_(1) {}
  RatFn(Int v) : num_(std::move(v)), den_(1) {}
  RatFn(IntPoly p) : num_(std::move(p)), den_(1) {}
  RatFn(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  static RatFn from_rational(const Rational& r) {
    return RatFn(IntPoly(numerator(r)), IntPoly(denominator(r)));
  }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == IntPoly(1); }

  const IntPoly& as_poly() const {
    if (!is_polynomial()) throw std::domain_error("RatFn: not a polynomial: " + str());
    return num_;
  }

  bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFn& o) const { return !(*this == o); }

  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw std::domain_error("RatFn: division by zero");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFn operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

  RatFn subst_power(int m) const {
    return RatFn(num_.subst_power(m), den_.subst_power(m));
  }
  RatFn reciprocal_var() const { return subst_power(-1); }

  // Evaluation at t = x; throws on a pole.
  Rational eval(const Rational& x) const {
    Rational den_val = eval_poly(den_, x);
    if (den_val == 0) throw std::domain_error("RatFn: pole at evaluation point");
    return eval_poly(num_, x) / den_val;
  }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  IntPoly num_, den_;

  static Rational eval_poly(const IntPoly& p, const Rational& x) {
    Rational r = 0;
    for (const auto& [e, v] : p.terms()) {
      Rational pw = 1;
      Rational base = e >= 0 ? x : Rational(1) / x;
      for (int k = 0; k < (e >= 0 ? e : -e); ++k) pw *= base;
      r += Rational(v) * pw;
    }
    return r;
  }

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("RatFn: zero denominator");
    if (num_.is_zero()) { den_ = IntPoly(1); return; }
    // Shift the fraction so the denominator has constant term.
    int vd = den_.valuation();
    if (vd != 0) { num_ = num_.shifted(-vd); den_ = den_.shifted(-vd); }
    int vn = num_.valuation();
    IntPoly n0 = num_.shifted(-vn);
    IntPoly g = IntPoly::gcd(n0, den_);
    if (g != IntPoly(1)) {
      n0 = n0.exact_div(g);
      den_ = den_.exact_div(g);
    }
    if (den_.leading_coeff() < 0) { n0 = -n0; den_ = -den_; }
    num_ = n0.shifted(vn);
  }
};

}  // namespace dkostka
