#include "cylfusion/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace cylfusion {

// ============================== Laurent =====================================

void Laurent::normalize() {
  size_t lo = 0, hi = c_.size();
  while (lo < hi && c_[lo] == 0) ++lo;
  while (hi > lo && c_[hi - 1] == 0) --hi;
  if (lo == hi) {
    c_.clear();
    off_ = 0;
    return;
  }
  if (lo > 0 || hi < c_.size()) {
    std::vector<Int> next(c_.begin() + lo, c_.begin() + hi);
    c_ = std::move(next);
    off_ += static_cast<int>(lo);
  }
}

Laurent Laurent::term(Int coeff, int exp) {
  Laurent r;
  if (coeff != 0) {
    r.off_ = exp;
    r.c_.assign(1, std::move(coeff));
  }
  return r;
}

int Laurent::min_exp() const {
  if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
  return off_;
}

int Laurent::max_exp() const {
  if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
  return off_ + static_cast<int>(c_.size()) - 1;
}

Int Laurent::coeff(int exp) const {
  if (is_zero()) return 0;
  int i = exp - off_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) { *this = o; return *this; }
  int lo = std::min(off_, o.off_);
  int hi = std::max(max_exp(), o.max_exp());
  std::vector<Int> out(static_cast<size_t>(hi - lo + 1));
  for (size_t i = 0; i < c_.size(); ++i) out[off_ - lo + i] = std::move(c_[i]);
  for (size_t i = 0; i < o.c_.size(); ++i) out[o.off_ - lo + i] += o.c_[i];
  off_ = lo;
  c_ = std::move(out);
  normalize();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  if (is_zero() || o.is_zero()) return r;
  r.off_ = off_ + o.off_;
  r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.normalize();
  return r;
}

bool Laurent::operator<(const Laurent& o) const {
  if (off_ != o.off_) return off_ < o.off_;
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

Laurent Laurent::shifted(int exp) const {
  Laurent r = *this;
  if (!r.is_zero()) r.off_ += exp;
  return r;
}

Laurent Laurent::scaled(const Int& s) const {
  if (s == 0) return {};
  Laurent r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

Laurent Laurent::divided_by(const Laurent& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  // Strip t-powers, then plain descending long division.
  Laurent q;
  q.off_ = off_ - d.off_;
  q.c_.assign(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, Int(0));
  if (q.c_.empty()) throw std::domain_error("inexact polynomial division");
  std::vector<Int> rem = c_;
  const Int& lead = d.c_.back();
  for (size_t i = rem.size(); i-- >= d.c_.size();) {
    if (rem[i] == 0) { if (i == d.c_.size() - 1) break; continue; }
    Int f = rem[i] / lead;
    if (f * lead != rem[i]) throw std::domain_error("inexact polynomial division");
    size_t shift = i - (d.c_.size() - 1);
    q.c_[shift] = f;
    for (size_t j = 0; j < d.c_.size(); ++j) rem[shift + j] -= f * d.c_[j];
    if (i == d.c_.size() - 1) break;
  }
  for (const auto& v : rem)
    if (v != 0) throw std::domain_error("inexact polynomial division");
  q.normalize();
  return q;
}

bool Laurent::divides_exactly(const Laurent& d) const {
  try {
    (void)divided_by(d);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

Laurent Laurent::subs_t_inverse() const {
  Laurent r;
  if (is_zero()) return r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.off_ = -max_exp();
  return r;
}

Int Laurent::content() const {
  Int g = 0;
  for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
  return g;
}

Int Laurent::eval_int(const Int& v) const {
  if (is_zero()) return 0;
  if (off_ < 0 && v != 1 && v != -1)
    throw std::domain_error("integer evaluation of negative exponents");
  Int acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
  // multiply by v^off_, using v = +-1 when off_ < 0
  Int p = 1;
  int e = std::abs(off_);
  for (int s = 0; s < e; ++s) p *= v;
  if (off_ < 0) acc *= p;  // v^{-e} = v^{e} for v = +-1
  else acc *= p;
  return acc;
}

static std::complex<double> ipow(std::complex<double> b, int e) {
  if (e < 0) return 1.0 / ipow(b, -e);
  std::complex<double> r = 1.0;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::complex<double> Laurent::eval(std::complex<double> t0) const {
  std::complex<double> acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * t0 + static_cast<double>(c_[i]);
  return acc * ipow(t0, off_);
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = min_exp(); e <= max_exp(); ++e) {
    Int v = coeff(e);
    if (v == 0) continue;
    bool neg = v < 0;
    Int mag = neg ? Int(-v) : v;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string body;
    if (e == 0) {
      body = mag.str();
    } else {
      if (mag != 1) body = mag.str() + "*";
      body += "t";
      if (e != 1) body += "^" + std::to_string(e);
    }
    out += body;
  }
  return out;
}

std::vector<std::pair<int, Int>> Laurent::terms() const {
  std::vector<std::pair<int, Int>> out;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(off_ + static_cast<int>(i), c_[i]);
  return out;
}

Laurent Laurent::parse(const std::string& s) {
  Laurent out;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("expected +/- in polynomial: " + s);
    }
    first = false;
    Int coeff = 1;
    bool saw_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      coeff = Int(s.substr(i, j - i));
      saw_coeff = true;
      i = j;
      skip_ws();
      if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
    }
    int exp = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t j = i;
        if (j < s.size() && s[j] == '-') ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("missing exponent: " + s);
        exp = std::atoi(s.substr(i, j - i).c_str());
        i = j;
      }
    } else if (!saw_coeff) {
      throw std::invalid_argument("malformed polynomial term: " + s);
    }
    out += term(sign * coeff, exp);
    skip_ws();
  }
  return out;
}

// ============================ LaurentRatio ==================================

LaurentRatio::LaurentRatio(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) {
  canonicalize();
}

void LaurentRatio::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  int m = den_.min_exp();
  if (m != 0) {
    den_ = den_.shifted(-m);
    num_ = num_.shifted(-m);
  }
  if (den_.coeff(den_.max_exp()) < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  Int g = boost::multiprecision::gcd(num_.content(), den_.content());
  if (g > 1) {
    num_ = num_.divided_by(Laurent(g));
    den_ = den_.divided_by(Laurent(g));
  }
}

LaurentRatio LaurentRatio::operator-() const {
  LaurentRatio r = *this;
  r.num_ = -r.num_;
  return r;
}

LaurentRatio LaurentRatio::operator+(const LaurentRatio& o) const {
  return LaurentRatio(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

LaurentRatio LaurentRatio::operator-(const LaurentRatio& o) const { return *this + -o; }

LaurentRatio LaurentRatio::operator*(const LaurentRatio& o) const {
  return LaurentRatio(num_ * o.num_, den_ * o.den_);
}

LaurentRatio LaurentRatio::operator/(const LaurentRatio& o) const {
  if (o.num_.is_zero()) throw std::domain_error("division by zero rational");
  return LaurentRatio(num_ * o.den_, den_ * o.num_);
}

bool LaurentRatio::operator==(const LaurentRatio& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::complex<double> LaurentRatio::eval(std::complex<double> t0) const {
  std::complex<double> d = den_.eval(t0);
  if (std::abs(d) == 0.0) throw std::domain_error("pole at evaluation point");
  return num_.eval(t0) / d;
}

std::string LaurentRatio::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// =============================== BiPoly =====================================

void BiPoly::strip_zeros() {
  for (auto it = c_.begin(); it != c_.end();)
    it = it->second == 0 ? c_.erase(it) : std::next(it);
}

BiPoly BiPoly::term(Int coeff, int qexp, int texp) {
  if (qexp < 0 || texp < 0) throw std::invalid_argument("BiPoly exponents must be >= 0");
  BiPoly r;
  if (coeff != 0) r.c_[{qexp, texp}] = std::move(coeff);
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, v] : r.c_) v = -v;
  return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [k, v] : o.c_) r.c_[k] += v;
  r.strip_zeros();
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + -o; }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [ka, va] : c_)
    for (const auto& [kb, vb] : o.c_)
      r.c_[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
  r.strip_zeros();
  return r;
}

Laurent BiPoly::at_q0() const {
  Laurent r;
  for (const auto& [k, v] : c_)
    if (k.first == 0) r += Laurent::term(v, k.second);
  return r;
}

Laurent BiPoly::at_t0() const {
  Laurent r;
  for (const auto& [k, v] : c_)
    if (k.second == 0) r += Laurent::term(v, k.first);
  return r;
}

std::string BiPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : c_) {
    bool neg = v < 0;
    Int mag = neg ? Int(-v) : v;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string body;
    bool unit = mag == 1 && (k.first > 0 || k.second > 0);
    if (!unit) body = mag.str();
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (!body.empty()) body += "*";
      body += name;
      if (e != 1) body += "^" + std::to_string(e);
    };
    var("q", k.first);
    var("t", k.second);
    out += body;
  }
  return out;
}

// ============================== q-numbers ===================================

Laurent t_pochhammer(int r) {
  if (r < 0) throw std::invalid_argument("t_pochhammer needs r >= 0");
  Laurent p(1);
  for (int s = 1; s <= r; ++s) p *= Laurent(1) - Laurent::t(s);
  return p;
}

Laurent gauss_binomial(int a, int b) {
  if (b < 0 || a - b < 0) return {};
  b = std::min(b, a - b);
  Laurent num(1);
  for (int s = a - b + 1; s <= a; ++s) num *= Laurent(1) - Laurent::t(s);
  return num.divided_by(t_pochhammer(b));
}

Laurent t_bracket(int m) {
  if (m < 0) throw std::invalid_argument("t_bracket needs m >= 0");
  Laurent r;
  for (int i = 0; i < m; ++i) r += Laurent::t(i);
  return r;
}

Laurent b_lambda(const std::vector<int>& lambda) {
  std::map<int, int> mult;
  for (int part : lambda)
    if (part > 0) ++mult[part];
  Laurent r(1);
  for (const auto& [part, m] : mult) r *= t_pochhammer(m);
  return r;
}

}  // namespace cylfusion
