#include "cylfusion/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace cylfusion {

namespace {

// Number of distinct rearrangements of la padded with zeros to length v.
long long orbit_size(const Partition& la, int v) {
  if (v > 20) throw std::invalid_argument("variable count too large for orbit counting");
  std::map<int, int> mult;
  mult[0] = v - static_cast<int>(la.size());
  for (int x : la) ++mult[x];
  long long res = 1;
  int rem = v;
  for (const auto& [val, cnt] : mult) {
    (void)val;
    for (int i = 1; i <= cnt; ++i) {
      res = res * rem / i;  // running product stays a binomial, exact
      --rem;
    }
  }
  return res;
}

Partition sorted_key(std::vector<int> u) {
  std::sort(u.begin(), u.end(), std::greater<int>());
  return trimmed(std::move(u));
}

}  // namespace

// ============================== SymPoly =====================================

SymPoly::SymPoly(int vars, const Laurent& constant) : v_(vars) {
  if (!constant.is_zero()) c_[{}] = constant;
}

SymPoly SymPoly::monomial(const Partition& la, int vars) {
  SymPoly p(vars);
  p.add_term(la, Laurent(1));
  return p;
}

Laurent SymPoly::coeff(const Partition& la) const {
  auto it = c_.find(trimmed(la));
  return it == c_.end() ? Laurent() : it->second;
}

bool SymPoly::polynomial_coeffs() const {
  for (const auto& [la, c] : c_)
    if (!c.is_polynomial()) return false;
  return true;
}

void SymPoly::add_term(const Partition& la, const Laurent& c) {
  if (c.is_zero()) return;
  Partition key = trimmed(la);
  if (!is_partition(key)) throw std::invalid_argument("monomial key must be a partition");
  if (static_cast<int>(key.size()) > v_) return;  // m_la vanishes in fewer variables
  auto it = c_.find(key);
  if (it == c_.end()) {
    c_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (v_ != o.v_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [la, c] : o.c_) add_term(la, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  if (v_ != o.v_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [la, c] : o.c_) add_term(la, -c);
  return *this;
}

SymPoly SymPoly::operator+(const SymPoly& o) const { SymPoly r = *this; r += o; return r; }
SymPoly SymPoly::operator-(const SymPoly& o) const { SymPoly r = *this; r -= o; return r; }

SymPoly SymPoly::operator-() const {
  SymPoly r(v_);
  for (const auto& [la, c] : c_) r.c_[la] = -c;
  return r;
}

SymPoly SymPoly::scaled(const Laurent& c) const {
  SymPoly r(v_);
  if (c.is_zero()) return r;
  for (const auto& [la, cc] : c_) r.c_[la] = cc * c;
  return r;
}

// m_alpha * m_beta: the coefficient of m_gamma equals
//   |orbit(alpha)| * #{b in orbit(beta) : sort(alpha^ + b) = gamma} / |orbit(gamma)|
// where alpha^ is the descending representative. Summing over key pairs gives
// the product with one orbit enumeration per pair.
SymPoly SymPoly::operator*(const SymPoly& o) const {
  if (v_ != o.v_) throw std::invalid_argument("variable count mismatch");
  SymPoly out(v_);
  const SymPoly* A = this;
  const SymPoly* B = &o;
  long long costA = 0, costB = 0;
  for (const auto& [la, c] : c_) costA += orbit_size(la, v_);
  for (const auto& [la, c] : o.c_) costB += orbit_size(la, v_);
  if (costA < costB) std::swap(A, B);

  for (const auto& [alpha, ca] : A->c_) {
    std::vector<int> ahat = padded(alpha, v_);
    long long oa = orbit_size(alpha, v_);
    for (const auto& [beta, cb] : B->c_) {
      std::vector<int> b = padded(beta, v_);
      std::sort(b.begin(), b.end());
      std::map<Partition, long long> cnt;
      std::vector<int> u(v_);
      do {
        for (int i = 0; i < v_; ++i) u[i] = ahat[i] + b[i];
        ++cnt[sorted_key(u)];
      } while (std::next_permutation(b.begin(), b.end()));
      Laurent cab = ca * cb;
      for (const auto& [gamma, c] : cnt) {
        long long og = orbit_size(gamma, v_);
        long long num = oa * c;
        if (num % og != 0) throw std::logic_error("orbit count not divisible");
        out.add_term(gamma, cab.scaled(Int(num / og)));
      }
    }
  }
  return out;
}

std::complex<double> SymPoly::eval(const std::vector<std::complex<double>>& x,
                                   std::complex<double> t0) const {
  if (static_cast<int>(x.size()) != v_)
    throw std::invalid_argument("point dimension mismatch");
  std::complex<double> total = 0.0;
  for (const auto& [la, c] : c_) {
    std::vector<int> e = padded(la, v_);
    std::sort(e.begin(), e.end());
    std::complex<double> msum = 0.0;
    do {
      std::complex<double> term = 1.0;
      for (int i = 0; i < v_; ++i)
        for (int p = 0; p < e[i]; ++p) term *= x[i];
      msum += term;
    } while (std::next_permutation(e.begin(), e.end()));
    total += c.eval(t0) * msum;
  }
  return total;
}

std::string SymPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")*m[" << partition_str(it->first) << "]";
  }
  return os.str();
}

// =========================== strip weights ==================================

bool is_horizontal_strip(const Partition& la, const Partition& mu) {
  if (!contains(la, mu)) return false;
  Partition lc = conjugate(la), mc = conjugate(mu);
  mc.resize(lc.size(), 0);
  for (size_t j = 0; j < lc.size(); ++j)
    if (lc[j] - mc[j] > 1) return false;
  return true;
}

Laurent strip_psi(const Partition& la, const Partition& mu) {
  if (!is_horizontal_strip(la, mu)) return Laurent();
  int cols = la.empty() ? 0 : la[0];
  Partition lc = padded(conjugate(la), cols + 1);
  Partition mc = padded(conjugate(mu), cols + 1);
  Laurent w(1);
  for (int i = 1; i <= cols; ++i) {
    int th_i = lc[i - 1] - mc[i - 1];
    int th_n = lc[i] - mc[i];
    if (th_i == 0 && th_n == 1) {
      int m_mu = mc[i - 1] - mc[i];
      w *= Laurent(1) - Laurent::t(m_mu);
    }
  }
  return w;
}

Laurent strip_phi(const Partition& la, const Partition& mu) {
  if (!is_horizontal_strip(la, mu)) return Laurent();
  int cols = la.empty() ? 0 : la[0];
  Partition lc = padded(conjugate(la), cols + 1);
  Partition mc = padded(conjugate(mu), cols + 1);
  Laurent w(1);
  for (int i = 1; i <= cols; ++i) {
    int th_i = lc[i - 1] - mc[i - 1];
    int th_n = lc[i] - mc[i];
    if (th_i == 1 && th_n == 0) {
      int m_la = lc[i - 1] - lc[i];
      w *= Laurent(1) - Laurent::t(m_la);
    }
  }
  return w;
}

Laurent strip_psi_prime(const Partition& la, const Partition& mu) {
  if (!is_horizontal_strip(la, mu)) return Laurent();
  int rows = static_cast<int>(la.size());
  Partition l = padded(la, rows + 1), m = padded(mu, rows + 1);
  Laurent w(1);
  for (int i = 0; i < rows; ++i) w *= gauss_binomial(l[i] - l[i + 1], l[i] - m[i]);
  return w;
}

LaurentRatio strip_phi_prime(const Partition& la, const Partition& mu) {
  if (!is_horizontal_strip(la, mu)) return LaurentRatio(Laurent());
  int rows = static_cast<int>(la.size());
  Partition l = padded(la, rows + 1), m = padded(mu, rows + 2);
  Laurent num(1);
  for (int i = 0; i < rows; ++i) num *= gauss_binomial(m[i] - m[i + 1], l[i + 1] - m[i + 1]);
  Laurent den = t_pochhammer(l.empty() ? 0 : l[0] - m[0]);
  return LaurentRatio(num, den);
}

namespace {

// b_nu(s; q, t) for the square s = (i, j), 1-based; 1 when s lies outside nu.
BiRatio qt_b(const Partition& nu, const Partition& nuc, int i, int j) {
  if (i > static_cast<int>(nu.size()) || j > nu[i - 1]) return {BiPoly(1), BiPoly(1)};
  int arm = nu[i - 1] - j;
  int leg = nuc[j - 1] - i;
  BiPoly num = BiPoly(1) - BiPoly::term(1, arm, leg + 1);
  BiPoly den = BiPoly(1) - BiPoly::term(1, arm + 1, leg);
  return {num, den};
}

}  // namespace

BiRatio strip_qt_phi(const Partition& la, const Partition& mu) {
  if (!is_horizontal_strip(la, mu)) return {BiPoly(0), BiPoly(1)};
  Partition lc = conjugate(la), mc = conjugate(mu);
  Partition mcp = padded(mc, lc.size());
  BiRatio w{BiPoly(1), BiPoly(1)};
  for (size_t j = 1; j <= lc.size(); ++j) {
    if (lc[j - 1] == mcp[j - 1]) continue;  // column does not meet the strip
    for (int i = 1; i <= lc[j - 1]; ++i) {
      BiRatio bl = qt_b(la, lc, i, static_cast<int>(j));
      BiRatio bm = qt_b(mu, mc, i, static_cast<int>(j));
      w = w * BiRatio{bl.num * bm.den, bl.den * bm.num};
    }
  }
  return w;
}

BiRatio strip_qt_psi(const Partition& la, const Partition& mu) {
  if (!is_horizontal_strip(la, mu)) return {BiPoly(0), BiPoly(1)};
  Partition lc = conjugate(la), mc = conjugate(mu);
  Partition mcp = padded(mc, lc.size());
  Partition mup = padded(mu, la.size());
  BiRatio w{BiPoly(1), BiPoly(1)};
  for (size_t i = 1; i <= la.size(); ++i) {
    if (la[i - 1] == mup[i - 1]) continue;  // row does not meet the strip
    for (int j = 1; j <= mup[i - 1]; ++j) {
      if (lc[j - 1] != mcp[j - 1]) continue;  // strip column, excluded
      BiRatio bl = qt_b(la, lc, static_cast<int>(i), j);
      BiRatio bm = qt_b(mu, mc, static_cast<int>(i), j);
      w = w * BiRatio{bm.num * bl.den, bm.den * bl.num};
    }
  }
  return w;
}

Laurent qw_b_denominator(const Partition& la) {
  Partition lc = conjugate(la);
  Laurent d(1);
  for (size_t j = 1; j <= lc.size(); ++j) {
    int i = lc[j - 1];  // bottom square of column j has leg 0
    int arm = la[i - 1] - static_cast<int>(j);
    d *= Laurent(1) - Laurent::t(arm + 1);
  }
  return d;
}

// =========================== tableau engine =================================

namespace {

Laurent strip_weight_of(StripWeight w, const Partition& nu, const Partition& mu) {
  switch (w) {
    case StripWeight::unit: return Laurent(1);
    case StripWeight::hl_psi: return strip_psi(nu, mu);
    case StripWeight::hl_phi: return strip_phi(nu, mu);
    case StripWeight::qw_psi: return strip_psi_prime(nu, mu);
  }
  throw std::logic_error("unreachable");
}

// All nu with cur <= nu <= bound (containment), nu/cur a horizontal strip of
// size r. Interlacing form: bound_i >= nu_i >= cur_i and nu_{i+1} <= cur_i.
void hstrips_rec(const Partition& cur, const Partition& bound, int row, int rem,
                 Partition& acc, std::vector<Partition>& out) {
  if (row == static_cast<int>(bound.size())) {
    if (rem == 0) out.push_back(trimmed(acc));
    return;
  }
  int lo = row < static_cast<int>(cur.size()) ? cur[row] : 0;
  int hi = std::min(bound[row], row == 0 ? bound[0] : (row - 1 < static_cast<int>(cur.size()) ? cur[row - 1] : 0));
  if (row > 0) hi = std::min(hi, acc[row - 1]);
  for (int val = lo; val <= std::min(hi, lo + rem); ++val) {
    acc[row] = val;
    hstrips_rec(cur, bound, row + 1, rem - (val - lo), acc, out);
  }
  acc[row] = 0;
}

std::vector<Partition> hstrips(const Partition& cur, const Partition& bound, int r) {
  std::vector<Partition> out;
  if (r < 0) return out;
  Partition acc(bound.size(), 0);
  hstrips_rec(cur, bound, 0, r, acc, out);
  return out;
}

}  // namespace

SymPoly tableau_poly(StripWeight w, const Partition& la, const Partition& mu, int vars) {
  if (vars < 1) throw std::invalid_argument("need at least one variable");
  SymPoly out(vars);
  Partition l = trimmed(la), m = trimmed(mu);
  if (!contains(l, m)) return out;
  int size = weight(l) - weight(m);
  if (size == 0) {
    out.add_term({}, Laurent(1));
    return out;
  }
  bool skew = !m.empty();
  int maxpart = l.empty() ? 0 : l[0];
  for (const Partition& gamma : partitions_of(size, vars, maxpart)) {
    if (!skew && !dominates(l, gamma)) continue;
    // chain DP from m to l with horizontal strip sizes gamma_1, gamma_2, ...
    std::map<Partition, Laurent> layer{{m, Laurent(1)}};
    Partition sizes = padded(gamma, vars);
    for (int step = 0; step < vars && !layer.empty(); ++step) {
      std::map<Partition, Laurent> next;
      for (const auto& [shape, c] : layer) {
        for (const Partition& nu : hstrips(shape, l, sizes[step])) {
          Laurent sw = strip_weight_of(w, nu, shape);
          if (sw.is_zero()) continue;
          auto [it, fresh] = next.try_emplace(nu, Laurent());
          it->second += c * sw;
          if (it->second.is_zero()) next.erase(it);
        }
      }
      layer = std::move(next);
    }
    auto it = layer.find(l);
    if (it != layer.end() && !it->second.is_zero()) out.add_term(gamma, it->second);
  }
  return out;
}

// ============================== bases =======================================

BasisKind basis_kind(const std::string& name) {
  if (name == "m") return BasisKind::m;
  if (name == "e") return BasisKind::e;
  if (name == "h") return BasisKind::h;
  if (name == "s") return BasisKind::s;
  if (name == "g") return BasisKind::g;
  if (name == "g'") return BasisKind::gp;
  if (name == "P") return BasisKind::P;
  if (name == "Q") return BasisKind::Q;
  if (name == "P'") return BasisKind::Pp;
  if (name == "Q'") return BasisKind::Qp;
  if (name == "S") return BasisKind::S;
  if (name == "S'") return BasisKind::Sp;
  throw std::invalid_argument("unknown basis: " + name);
}

std::string basis_name(BasisKind k) {
  switch (k) {
    case BasisKind::m: return "m";
    case BasisKind::e: return "e";
    case BasisKind::h: return "h";
    case BasisKind::s: return "s";
    case BasisKind::g: return "g";
    case BasisKind::gp: return "g'";
    case BasisKind::P: return "P";
    case BasisKind::Q: return "Q";
    case BasisKind::Pp: return "P'";
    case BasisKind::Qp: return "Q'";
    case BasisKind::S: return "S";
    case BasisKind::Sp: return "S'";
  }
  throw std::logic_error("unreachable");
}

namespace {

// One-row pieces.
SymPoly one_row_g(int r, int vars) {
  SymPoly p(vars);
  if (r == 0) { p.add_term({}, Laurent(1)); return p; }
  Laurent one_minus_t = Laurent(1) - Laurent::t();
  for (const Partition& mu : partitions_of(r, vars, r)) {
    Laurent c(1);
    for (int i = 0; i < num_parts(mu); ++i) c *= one_minus_t;
    p.add_term(mu, c);
  }
  return p;
}

// Cleared one-row piece (t)_r g'_r with Gaussian multinomial coefficients.
SymPoly one_row_gp_cleared(int r, int vars) {
  SymPoly p(vars);
  if (r == 0) { p.add_term({}, Laurent(1)); return p; }
  Laurent top = t_pochhammer(r);
  for (const Partition& mu : partitions_of(r, vars, r)) {
    Laurent den(1);
    for (int part : mu) den *= t_pochhammer(part);
    p.add_term(mu, top.divided_by(den));
  }
  return p;
}

SymPoly one_row_h(int r, int vars) {
  SymPoly p(vars);
  if (r == 0) { p.add_term({}, Laurent(1)); return p; }
  for (const Partition& mu : partitions_of(r, vars, r)) p.add_term(mu, Laurent(1));
  return p;
}

SymPoly one_row_e(int r, int vars) {
  SymPoly p(vars);
  if (r == 0) { p.add_term({}, Laurent(1)); return p; }
  if (r <= vars) p.add_term(Partition(r, 1), Laurent(1));
  return p;
}

// Determinant of a square SymPoly matrix by first-row expansion, memoised on
// the surviving column set.
SymPoly det_rec(const std::vector<std::vector<SymPoly>>& mat, std::vector<int> cols,
                std::map<std::vector<int>, SymPoly>& memo, int vars) {
  if (cols.empty()) return SymPoly(vars, Laurent(1));
  auto it = memo.find(cols);
  if (it != memo.end()) return it->second;
  int row = static_cast<int>(mat.size() - cols.size());
  SymPoly acc(vars);
  for (size_t p = 0; p < cols.size(); ++p) {
    const SymPoly& entry = mat[row][cols[p]];
    if (entry.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (size_t q = 0; q < cols.size(); ++q)
      if (q != p) rest.push_back(cols[q]);
    SymPoly minor = det_rec(mat, std::move(rest), memo, vars);
    SymPoly term = entry * minor;
    if (p % 2 == 0) acc += term; else acc -= term;
  }
  memo.emplace(std::move(cols), acc);
  return acc;
}

SymPoly sym_det(const std::vector<std::vector<SymPoly>>& mat, int vars) {
  std::vector<int> cols(mat.size());
  std::iota(cols.begin(), cols.end(), 0);
  std::map<std::vector<int>, SymPoly> memo;
  return det_rec(mat, std::move(cols), memo, vars);
}

SymPoly basis_poly_uncached(BasisKind kind, const Partition& la, int vars);

// Cache over (kind, la, vars); conversions hit the same expansions repeatedly.
SymPoly cached_basis(BasisKind kind, const Partition& la, int vars) {
  static std::map<std::tuple<int, Partition, int>, SymPoly> cache;
  static std::mutex mu;
  std::tuple<int, Partition, int> key{static_cast<int>(kind), trimmed(la), vars};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SymPoly p = basis_poly_uncached(kind, std::get<1>(key), vars);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(p)).first->second;
}

SymPoly basis_poly_uncached(BasisKind kind, const Partition& la, int vars) {
  switch (kind) {
    case BasisKind::m:
      return SymPoly::monomial(la, vars);
    case BasisKind::e: {
      SymPoly p(vars, Laurent(1));
      for (int r : la) p = p * one_row_e(r, vars);
      return p;
    }
    case BasisKind::h: {
      SymPoly p(vars, Laurent(1));
      for (int r : la) p = p * one_row_h(r, vars);
      return p;
    }
    case BasisKind::g: {
      SymPoly p(vars, Laurent(1));
      for (int r : la) p = p * one_row_g(r, vars);
      return p;
    }
    case BasisKind::s:
      return tableau_poly(StripWeight::unit, la, {}, vars);
    case BasisKind::P:
      return tableau_poly(StripWeight::hl_psi, la, {}, vars);
    case BasisKind::Q:
      return tableau_poly(StripWeight::hl_psi, la, {}, vars).scaled(b_lambda(la));
    case BasisKind::Pp:
      return tableau_poly(StripWeight::qw_psi, la, {}, vars);
    case BasisKind::S: {
      int n = static_cast<int>(la.size());
      if (n == 0) return SymPoly(vars, Laurent(1));
      std::vector<std::vector<SymPoly>> mat(n, std::vector<SymPoly>(n, SymPoly(vars)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int r = la[i] - (i + 1) + (j + 1);
          if (r >= 0) mat[i][j] = cached_basis(BasisKind::g, {r}, vars);
        }
      return sym_det(mat, vars);
    }
    default:
      throw std::invalid_argument("basis " + basis_name(kind) +
                                  " carries a denominator; use basis_scaled");
  }
}

}  // namespace

SymPoly basis_poly(BasisKind kind, const Partition& la, int vars) {
  if (vars < 1) throw std::invalid_argument("need at least one variable");
  Partition l = trimmed(la);
  if (!is_partition(l)) throw std::invalid_argument("index must be a partition");
  return cached_basis(kind, l, vars);
}

ScaledSym basis_scaled(BasisKind kind, const Partition& la, int vars) {
  if (vars < 1) throw std::invalid_argument("need at least one variable");
  Partition l = trimmed(la);
  if (!is_partition(l)) throw std::invalid_argument("index must be a partition");
  switch (kind) {
    case BasisKind::gp: {
      SymPoly num(vars, Laurent(1));
      Laurent den(1);
      for (int r : l) {
        num = num * one_row_gp_cleared(r, vars);
        den *= t_pochhammer(r);
      }
      return {num, den};
    }
    case BasisKind::Qp:
      return {cached_basis(BasisKind::Pp, l, vars), qw_b_denominator(l)};
    case BasisKind::Sp: {
      int n = static_cast<int>(l.size());
      if (n == 0) return {SymPoly(vars, Laurent(1)), Laurent(1)};
      // Row i is cleared by (t)_{R_i}, R_i = la_i - i + n, the largest index
      // appearing in that row; entries stay Laurent.
      std::vector<std::vector<SymPoly>> mat(n, std::vector<SymPoly>(n, SymPoly(vars)));
      Laurent den(1);
      for (int i = 0; i < n; ++i) {
        int Ri = l[i] - (i + 1) + n;
        Laurent row_clear = t_pochhammer(Ri);
        den *= row_clear;
        for (int j = 0; j < n; ++j) {
          int r = l[i] - (i + 1) + (j + 1);
          if (r < 0) continue;
          Laurent cofactor = row_clear.divided_by(t_pochhammer(r));
          mat[i][j] = one_row_gp_cleared(r, vars).scaled(cofactor);
        }
      }
      return {sym_det(mat, vars), den};
    }
    default:
      return {cached_basis(kind, l, vars), Laurent(1)};
  }
}

// ========================= basis conversions ================================

std::map<Partition, Laurent> to_basis(BasisKind kind, const SymPoly& p) {
  std::map<Partition, Laurent> out;
  if (kind == BasisKind::m) {
    out = p.coeffs();
    return out;
  }
  if (kind != BasisKind::s && kind != BasisKind::P && kind != BasisKind::Pp)
    throw std::invalid_argument("conversion target must be m, s, P or P'");
  bool poly_in = p.polynomial_coeffs();
  SymPoly residue = p;
  while (!residue.is_zero()) {
    // The lex-greatest key is dominance-maximal within its degree, and the
    // target bases are unitriangular along dominance with unit diagonal.
    auto it = std::prev(residue.coeffs().end());
    Partition gamma = it->first;
    Laurent c = it->second;
    residue -= cached_basis(kind, gamma, residue.vars()).scaled(c);
    if (!residue.coeff(gamma).is_zero())
      throw std::logic_error("triangular elimination failed to clear pivot");
    out[gamma] = std::move(c);
  }
  if ((kind == BasisKind::P || kind == BasisKind::s) && poly_in) {
    for (const auto& [la, c] : out)
      if (!c.is_polynomial())
        throw std::logic_error("expected polynomial coefficients in conversion");
  }
  return out;
}

KostkaTables kostka_matrices(int size, int vars) {
  KostkaTables T;
  T.labels = partitions_of(size, vars, size);
  int n = static_cast<int>(T.labels.size());
  T.K.assign(n, std::vector<Int>(n, Int(0)));
  T.Kt.assign(n, std::vector<Laurent>(n));
  for (int i = 0; i < n; ++i) {
    SymPoly s = basis_poly(BasisKind::s, T.labels[i], vars);
    auto row = to_basis(BasisKind::P, s);
    for (int j = 0; j < n; ++j) {
      Laurent c = s.coeff(T.labels[j]);
      T.K[i][j] = c.coeff(0);  // SSYT count, a constant
      auto it = row.find(T.labels[j]);
      if (it != row.end()) T.Kt[i][j] = it->second;
    }
  }
  // Unitriangular inverses by nilpotent back-substitution: labels are in
  // descending lexicographic order, so both matrices are upper triangular
  // with unit diagonal.
  T.Ktinv.assign(n, std::vector<Laurent>(n));
  T.Kinv.assign(n, std::vector<Int>(n, Int(0)));
  for (int i = n - 1; i >= 0; --i) {
    T.Ktinv[i][i] = Laurent(1);
    T.Kinv[i][i] = 1;
    for (int j = i + 1; j < n; ++j) {
      Laurent acc;
      Int acci(0);
      for (int r = i + 1; r <= j; ++r) {
        acc += T.Kt[i][r] * T.Ktinv[r][j];
        acci += T.K[i][r] * T.Kinv[r][j];
      }
      T.Ktinv[i][j] = -acc;
      T.Kinv[i][j] = -acci;
    }
  }
  return T;
}

std::map<Partition, Laurent> hall_coeff(const Partition& mu, const Partition& nu) {
  Partition m = trimmed(mu), n = trimmed(nu);
  int vars = std::max<int>(1, static_cast<int>(m.size() + n.size()));
  SymPoly prod = basis_poly(BasisKind::P, m, vars) * basis_poly(BasisKind::P, n, vars);
  return to_basis(BasisKind::P, prod);
}

// ============================ R-functions ===================================

namespace {

// Dense multivariate polynomial over Laurent coefficients, keyed by exponent
// vectors of fixed length; only used for the symmetrisation below.
struct MultiPoly {
  int v = 0;
  std::map<std::vector<int>, Laurent> c;

  void add(const std::vector<int>& e, const Laurent& x) {
    if (x.is_zero()) return;
    auto it = c.find(e);
    if (it == c.end()) c.emplace(e, x);
    else {
      it->second += x;
      if (it->second.is_zero()) c.erase(it);
    }
  }
};

MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  out.v = a.v;
  std::vector<int> e(a.v);
  for (const auto& [ea, ca] : a.c)
    for (const auto& [eb, cb] : b.c) {
      for (int i = 0; i < a.v; ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  return out;
}

// Exact division by (x_i - x_j), i < j; the leading lex term is always
// divisible by x_i, and exactness forces a zero remainder.
MultiPoly mp_div_linear(MultiPoly f, int i, int j) {
  MultiPoly q;
  q.v = f.v;
  while (!f.c.empty()) {
    auto it = std::prev(f.c.end());
    std::vector<int> e = it->first;
    Laurent cl = it->second;
    if (e[i] == 0) throw std::logic_error("division by x_i - x_j not exact");
    --e[i];
    q.add(e, cl);
    // subtract cl * x^e * (x_i - x_j)
    std::vector<int> ei = e, ej = e;
    ++ei[i];
    ++ej[j];
    f.add(ei, -cl);
    f.add(ej, cl);
  }
  return q;
}

int perm_parity(const std::vector<int>& p) {
  int inv = 0;
  for (size_t a = 0; a < p.size(); ++a)
    for (size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inv;
  return inv % 2;
}

}  // namespace

SymPoly R_function(const std::vector<int>& mu) {
  int v = static_cast<int>(mu.size());
  if (v < 1) throw std::invalid_argument("composition must be nonempty");
  for (int x : mu)
    if (x < 0) throw std::invalid_argument("composition entries must be >= 0");

  // A = prod_{i<j} (x_i - t x_j)
  MultiPoly A;
  A.v = v;
  A.add(std::vector<int>(v, 0), Laurent(1));
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) {
      MultiPoly bin;
      bin.v = v;
      std::vector<int> e(v, 0);
      e[i] = 1;
      bin.add(e, Laurent(1));
      e[i] = 0;
      e[j] = 1;
      bin.add(e, -Laurent::t());
      A = mp_mul(A, bin);
    }

  // N = sum_w sgn(w) w(x^mu A); then R = N / Delta.
  MultiPoly N;
  N.v = v;
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> e(v);
  do {
    int sgn = perm_parity(perm);
    for (const auto& [ea, ca] : A.c) {
      for (int i = 0; i < v; ++i) e[perm[i]] = ea[i] + mu[i];
      N.add(e, sgn ? -ca : ca);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) N = mp_div_linear(std::move(N), i, j);

  SymPoly out(v);
  for (const auto& [ee, cc] : N.c) {
    bool sorted = true;
    for (int i = 0; i + 1 < v; ++i)
      if (ee[i] < ee[i + 1]) { sorted = false; break; }
    if (sorted) out.add_term(trimmed(ee), cc);
  }
  return out;
}

LaurentRatio r_over_p(const Partition& la, int vars) {
  Partition l = trimmed(la);
  int zeros = vars - static_cast<int>(l.size());
  if (zeros < 0) throw std::invalid_argument("partition longer than variable count");
  Laurent num = b_lambda(l) * t_pochhammer(zeros);
  Laurent den(1);
  Laurent one_minus_t = Laurent(1) - Laurent::t();
  for (int i = 0; i < vars; ++i) den *= one_minus_t;
  return LaurentRatio(num, den);
}

// ========================= Kostka-Foulkes ===================================

namespace {

long charge_standard(const std::vector<int>& sw) {
  int m = static_cast<int>(sw.size());
  std::vector<int> pos(m + 1, -1);
  for (int i = 0; i < m; ++i) pos[sw[i]] = i;
  long idx = 0, total = 0;
  for (int r = 2; r <= m; ++r) {
    if (pos[r] < pos[r - 1]) ++idx;  // r sits to the left of r-1
    total += idx;
  }
  return total;
}

long charge_word(std::vector<int> w) {
  long total = 0;
  while (!w.empty()) {
    int n = static_cast<int>(w.size());
    int maxl = *std::max_element(w.begin(), w.end());
    std::vector<int> sel;
    int cur = -1;
    for (int i = n - 1; i >= 0; --i)
      if (w[i] == 1) { cur = i; break; }
    if (cur < 0) throw std::logic_error("word content is not a partition");
    sel.push_back(cur);
    for (int letter = 2; letter <= maxl; ++letter) {
      int p = cur;
      bool found = false;
      for (int step = 0; step < n; ++step) {
        p = (p + 1) % n;  // rightwards, wrapping cyclically
        if (w[p] == letter) { cur = p; found = true; break; }
      }
      if (!found) throw std::logic_error("word content is not a partition");
      sel.push_back(cur);
    }
    std::sort(sel.begin(), sel.end());
    std::vector<int> sub;
    sub.reserve(sel.size());
    for (int i : sel) sub.push_back(w[i]);
    total += charge_standard(sub);
    std::vector<int> rest;
    rest.reserve(w.size() - sel.size());
    size_t k = 0;
    for (int i = 0; i < n; ++i) {
      if (k < sel.size() && sel[k] == i) { ++k; continue; }
      rest.push_back(w[i]);
    }
    w = std::move(rest);
  }
  return total;
}

void charge_chains(const Partition& la, const std::vector<int>& sizes, size_t step,
                   const Partition& cur, std::vector<std::vector<int>>& rows,
                   Laurent& total) {
  if (step == sizes.size()) {
    if (cur == la) {
      std::vector<int> word;
      for (const auto& row : rows)
        for (auto it = row.rbegin(); it != row.rend(); ++it) word.push_back(*it);
      total += Laurent::t(static_cast<int>(charge_word(word)));
    }
    return;
  }
  for (const Partition& nu : hstrips(cur, la, sizes[step])) {
    Partition curp = padded(cur, nu.size());
    for (size_t r = 0; r < nu.size(); ++r)
      for (int c = curp[r]; c < nu[r]; ++c) {
        if (rows.size() <= r) rows.resize(r + 1);
        rows[r].push_back(static_cast<int>(step) + 1);
      }
    charge_chains(la, sizes, step + 1, nu, rows, total);
    for (size_t r = 0; r < nu.size(); ++r) {
      int drop = nu[r] - curp[r];
      for (int c = 0; c < drop; ++c) rows[r].pop_back();
    }
  }
}

}  // namespace

Laurent charge_kostka(const Partition& la, const Partition& mu) {
  Partition l = trimmed(la), m = trimmed(mu);
  if (weight(l) != weight(m)) return Laurent();
  if (l.empty()) return Laurent(1);
  Laurent total;
  std::vector<std::vector<int>> rows;
  charge_chains(l, m, 0, {}, rows, total);
  return total;
}

namespace {

// Distribute `remaining` boxes over slots slot..k-2, subtracting from rest;
// prefix sums of the reduced vector must stay nonnegative, which prunes the
// branch as soon as one goes negative (they only decrease with more boxes).
void kostant_distribute(const std::vector<int>& rest, size_t slot, int remaining,
                        long prefix, std::vector<int>& w, Laurent& total) {
  if (slot + 1 == rest.size()) {
    w[slot] = rest[slot] - remaining;
    if (prefix + w[slot] >= 0) total += kostant_t(w);
    return;
  }
  for (int m = 0; m <= remaining; ++m) {
    w[slot] = rest[slot] - m;
    if (prefix + w[slot] < 0) break;
    kostant_distribute(rest, slot + 1, remaining - m, prefix + w[slot], w, total);
  }
}

}  // namespace

Laurent kostant_t(const std::vector<int>& v) {
  int k = static_cast<int>(v.size());
  long sum = 0;
  for (int i = 0; i < k; ++i) {
    sum += v[i];
    if (sum < 0) return Laurent();
  }
  if (sum != 0) return Laurent();
  if (k <= 1) return Laurent(1);

  static std::map<std::vector<int>, Laurent> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
  }

  int c = -v[k - 1];  // boxes drawn from the roots e_i - e_k, weight t each
  std::vector<int> rest(v.begin(), v.end() - 1);
  Laurent total;
  std::vector<int> w(k - 1, 0);
  kostant_distribute(rest, 0, c, 0, w, total);
  total = total.shifted(c);

  std::lock_guard<std::mutex> lock(mu);
  memo[v] = total;
  return total;
}

Laurent lusztig_kostka(const Partition& la, const Partition& mu, int k) {
  Partition l = trimmed(la), m = trimmed(mu);
  if (static_cast<int>(l.size()) > k || static_cast<int>(m.size()) > k)
    throw std::invalid_argument("length exceeds rank");
  if (weight(l) != weight(m)) return Laurent();
  std::vector<int> u = padded(l, k), target = padded(m, k);
  for (int i = 0; i < k; ++i) {
    u[i] += k - i;
    target[i] += k - i;
  }
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Laurent total;
  std::vector<int> w(k);
  do {
    for (int i = 0; i < k; ++i) w[i] = u[perm[i]] - target[i];
    Laurent p = kostant_t(w);
    if (p.is_zero()) continue;
    if (perm_parity(perm)) total -= p;
    else total += p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace cylfusion
