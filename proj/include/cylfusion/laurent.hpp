#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cylfusion {

using Int = boost::multiprecision::cpp_int;

// ===================== Laurent polynomials in t over Z =====================

// Dense coefficient block [off, off + c.size()) with nonzero ends.
// The zero polynomial has an empty block.
class Laurent {
public:
  Laurent() = default;
  Laurent(long v) { if (v != 0) { off_ = 0; c_.assign(1, Int(v)); } }
  explicit Laurent(Int v) { if (v != 0) { off_ = 0; c_.assign(1, std::move(v)); } }

  static Laurent term(Int coeff, int exp);
  static Laurent t(int exp = 1) { return term(1, exp); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && off_ == 0 && c_[0] == 1; }
  int min_exp() const;  // nonzero input only
  int max_exp() const;
  Int coeff(int exp) const;
  bool is_polynomial() const { return c_.empty() || off_ >= 0; }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const { Laurent r = *this; r += o; return r; }
  Laurent operator-(const Laurent& o) const { Laurent r = *this; r -= o; return r; }
  Laurent operator*(const Laurent& o) const;
  Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
  bool operator==(const Laurent& o) const { return off_ == o.off_ && c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  bool operator<(const Laurent& o) const;  // arbitrary total order for map keys

  Laurent shifted(int exp) const;                    // * t^exp
  Laurent scaled(const Int& s) const;                // * s
  Laurent divided_by(const Laurent& d) const;        // exact; throws on remainder
  bool divides_exactly(const Laurent& d) const;      // d | *this
  Laurent subs_t_inverse() const;                    // t -> 1/t
  Int content() const;                               // gcd of coefficients (>= 0)
  Int eval_int(const Int& v) const;                  // exact evaluation, needs polynomial or v=+-1
  std::complex<double> eval(std::complex<double> t0) const;

  // Grammar: <int> | <int>*t^<int> | t^<int> | t, joined by +/-.
  std::string str() const;
  static Laurent parse(const std::string& s);

  // Ascending-exponent (exp, coeff) pairs.
  std::vector<std::pair<int, Int>> terms() const;

private:
  int off_ = 0;
  std::vector<Int> c_;
  void normalize();
};

inline Laurent operator*(const Int& s, const Laurent& p) { return p.scaled(s); }

// ======================= rational functions in t ===========================

// Canonical form: den has min exponent 0 and positive leading coefficient,
// and gcd of all integer coefficients across num and den is 1.
// Equality is decided by cross-multiplication.
class LaurentRatio {
public:
  LaurentRatio() : num_(0), den_(1) {}
  LaurentRatio(Laurent n) : num_(std::move(n)), den_(1) {}
  LaurentRatio(Laurent n, Laurent d);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  LaurentRatio operator-() const;
  LaurentRatio operator+(const LaurentRatio& o) const;
  LaurentRatio operator-(const LaurentRatio& o) const;
  LaurentRatio operator*(const LaurentRatio& o) const;
  LaurentRatio operator/(const LaurentRatio& o) const;  // throws on zero divisor
  LaurentRatio& operator+=(const LaurentRatio& o) { *this = *this + o; return *this; }
  LaurentRatio& operator*=(const LaurentRatio& o) { *this = *this * o; return *this; }
  bool operator==(const LaurentRatio& o) const;
  bool operator!=(const LaurentRatio& o) const { return !(*this == o); }

  bool is_laurent() const { return num_.divides_exactly(den_); }
  Laurent to_laurent() const { return num_.divided_by(den_); }
  std::complex<double> eval(std::complex<double> t0) const;  // throws at poles
  std::string str() const;

private:
  Laurent num_, den_;
  void canonicalize();
};

// ===================== bivariate (q,t) oracle ring =========================

// Nonnegative exponents in both variables; sparse.
class BiPoly {
public:
  BiPoly() = default;
  BiPoly(long v) { if (v != 0) c_[{0, 0}] = v; }
  static BiPoly term(Int coeff, int qexp, int texp);

  bool is_zero() const { return c_.empty(); }
  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  bool operator==(const BiPoly& o) const { return c_ == o.c_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  Laurent at_q0() const;  // set q = 0, Laurent in t
  Laurent at_t0() const;  // set t = 0, Laurent in the remaining variable
  std::string str() const;

private:
  std::map<std::pair<int, int>, Int> c_;  // (qexp, texp) -> coeff
  void strip_zeros();
};

// Ratio of bivariate polynomials; equality by cross-multiplication.
struct BiRatio {
  BiPoly num{1};
  BiPoly den{1};
  BiRatio operator*(const BiRatio& o) const { return {num * o.num, den * o.den}; }
  bool operator==(const BiRatio& o) const { return num * o.den == o.num * den; }
  bool operator!=(const BiRatio& o) const { return !(*this == o); }
};

// ============================ q-numbers ====================================

Laurent t_pochhammer(int r);               // (t)_r, r >= 0
Laurent gauss_binomial(int a, int b);      // [a over b]_t; zero if b<0 or a-b<0
Laurent t_bracket(int m);                  // [m]_t = 1 + t + ... + t^{m-1}, m >= 0
Laurent b_lambda(const std::vector<int>& lambda);  // prod_i (t)_{m_i(lambda)}

}  // namespace cylfusion
