#include "cylfusion/vertex.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cylfusion {

namespace {

Laurent one_minus_t_power(int e) { return Laurent(1) - Laurent::t(e); }

}  // namespace

// =============================== row weights ===============================

RowWeight row_weight(const RowConfig& config) {
  const int n = config.sites();
  if (n <= 0 || static_cast<int>(config.horizontal.size()) != n + 1 ||
      static_cast<int>(config.bottom.size()) != n)
    throw std::invalid_argument("row_weight: field lengths");
  const RowWeight zero{Laurent(), 0};
  RowWeight w{Laurent(1), 0};
  for (int j = 0; j < n; ++j) {
    int west = config.horizontal[j], east = config.horizontal[j + 1];
    int north = config.top[j], south = config.bottom[j];
    if (west < 0 || east < 0 || north < 0 || south < 0) return zero;
    if (south != north + west - east) return zero;
    if (config.model == VertexModel::L) {
      if (west > 1 || east > 1) return zero;
      w.xexp += west;
      if (west == 1 && east == 0) w.coeff *= one_minus_t_power(south);
    } else {
      if (west > south) return zero;  // the Gaussian binomial vanishes
      w.xexp += west;
      w.coeff *= gauss_binomial(south, west);
    }
  }
  return w;
}

// ============================ lattice enumeration ==========================

namespace {

// One admissible row continuation: full edge list, resulting bottom
// multiplicities and the weight data.
struct RowStep {
  std::vector<int> horizontal;
  std::vector<int> bottom;
  Laurent coeff;
  int xexp = 0;
};

// All weight-bearing rows for the given top multiplicities and left edge.
std::vector<RowStep> expand_row(VertexModel model, const std::vector<int>& top,
                                int left) {
  const int n = static_cast<int>(top.size());
  std::vector<RowStep> out;
  std::vector<int> horiz(n + 1, 0);
  horiz[0] = left;
  std::vector<int> bottom(n, 0);

  std::function<void(int, const Laurent&, int)> rec =
      [&](int j, const Laurent& coeff, int xexp) {
        if (j == n) {
          out.push_back({horiz, bottom, coeff, xexp});
          return;
        }
        int west = horiz[j], north = top[j];
        int emax = model == VertexModel::L ? 1 : north;
        for (int east = 0; east <= emax; ++east) {
          int south = north + west - east;
          if (south < 0) continue;
          Laurent f(1);
          if (model == VertexModel::L) {
            if (west == 1 && east == 0) f = one_minus_t_power(south);
          } else {
            f = gauss_binomial(south, west);
            if (f.is_zero()) continue;
          }
          horiz[j + 1] = east;
          bottom[j] = south;
          rec(j + 1, coeff * f, xexp + west);
        }
        horiz[j + 1] = 0;
      };
  rec(0, Laurent(1), 0);
  return out;
}

void assert_symmetric(const std::map<std::vector<int>, Laurent>& mono,
                      int rows) {
  for (const auto& [e, c] : mono)
    for (int i = 0; i + 1 < rows; ++i) {
      if (e[i] == e[i + 1]) continue;
      std::vector<int> f = e;
      std::swap(f[i], f[i + 1]);
      auto it = mono.find(f);
      if (it == mono.end() || it->second != c)
        throw std::logic_error(
            "partition_function: expansion not symmetric in the row "
            "variables");
    }
}

SymPoly collect_symmetric(const std::map<std::vector<int>, Laurent>& mono,
                          int rows) {
  SymPoly p(rows);
  for (const auto& [e, c] : mono) {
    if (!std::is_sorted(e.begin(), e.end(), std::greater<int>())) continue;
    Partition key(e.begin(), e.end());
    p.add_term(trimmed(key), c);
  }
  return p;
}

}  // namespace

Boundary Boundary::open(int sigma, int tau) {
  Boundary b;
  b.kind = Kind::open;
  b.sigma = sigma;
  b.tau = tau;
  return b;
}

Boundary Boundary::periodic() {
  Boundary b;
  b.kind = Kind::periodic;
  return b;
}

SymPoly LatticeZ::at_winding(int d) const {
  if (d < 0 || d >= static_cast<int>(collected.size())) return SymPoly(rows);
  return collected[d];
}

LatticeZ partition_function(VertexModel model, const Boundary& boundary,
                            const Partition& lambda, const Partition& mu,
                            int n, int k, int rows, bool keep_configs) {
  if (n < 1 || rows < 1)
    throw std::invalid_argument("partition_function: lattice dimensions");
  const bool periodic = boundary.kind == Boundary::Kind::periodic;
  const int sigma = periodic ? 0 : boundary.sigma;
  const int tau = periodic ? 0 : boundary.tau;
  if (!periodic) {
    int vmax = model == VertexModel::L ? 1 : std::max(sigma, tau);
    if (sigma < 0 || tau < 0 || sigma > vmax || tau > vmax)
      throw std::invalid_argument("partition_function: boundary edge values");
  }
  const int klam = periodic ? k : k + rows * (sigma - tau);
  if (!in_alcove(mu, n, k) || klam < 0 || !in_alcove(lambda, n, klam))
    throw std::invalid_argument("partition_function: boundary levels");
  if (periodic && model == VertexModel::L && rows > k)
    throw std::invalid_argument("partition_function: periodic model L needs "
                                "rows <= k");
  if (periodic && model == VertexModel::Lprime && rows > n - 1)
    throw std::invalid_argument("partition_function: periodic model Lprime "
                                "needs rows <= n-1");

  LatticeZ z;
  z.model = model;
  z.boundary = boundary;
  z.n = n;
  z.rows = rows;

  const std::vector<int> target = partition_stats(lambda, n).mult;
  std::vector<int> cur = partition_stats(mu, n).mult;
  std::vector<int> exps(rows, 0);
  std::vector<RowConfig> path;
  if (keep_configs) path.reserve(rows);

  auto ensure_slot = [&z](int d) {
    if (d >= static_cast<int>(z.monomials.size())) {
      z.monomials.resize(d + 1);
      z.config_count.resize(d + 1, 0);
    }
  };

  std::function<void(int, std::vector<int>&, int, const Laurent&)> rec =
      [&](int row, std::vector<int>& top, int d, const Laurent& coeff) {
        if (row == rows) {
          if (top != target) return;
          ensure_slot(d);
          auto [it, fresh] = z.monomials[d].try_emplace(exps, coeff);
          if (!fresh) it->second += coeff;
          ++z.config_count[d];
          if (keep_configs) z.configs.emplace_back(d, path);
          return;
        }
        int wmax = 0;
        if (!periodic)
          wmax = sigma;
        else if (model == VertexModel::L)
          wmax = 1;
        else
          wmax = top[n - 1];  // periodic closure forces east_n <= top_n
        for (int w = periodic ? 0 : sigma; w <= wmax; ++w) {
          for (RowStep& step : expand_row(model, top, w)) {
            if (step.horizontal[n] != (periodic ? w : tau)) continue;
            exps[row] = step.xexp;
            if (keep_configs)
              path.push_back({model, step.horizontal, top, step.bottom});
            rec(row + 1, step.bottom, d + (periodic ? w : 0),
                coeff * step.coeff);
            if (keep_configs) path.pop_back();
          }
        }
        exps[row] = 0;
      };
  rec(0, cur, 0, Laurent(1));

  for (int d = 0; d < static_cast<int>(z.monomials.size()); ++d) {
    for (auto it = z.monomials[d].begin(); it != z.monomials[d].end();)
      it = it->second.is_zero() ? z.monomials[d].erase(it) : std::next(it);
    assert_symmetric(z.monomials[d], rows);
    z.collected.push_back(collect_symmetric(z.monomials[d], rows));
  }
  return z;
}

// ============================ Yang-Baxter checks ===========================

namespace {

// Bivariate Laurent polynomial in the spectral variables u, v with
// coefficients in Z[t, 1/t].
class UV {
 public:
  UV() = default;
  UV(const Laurent& c, int ue, int ve) {
    if (!c.is_zero()) c_[{ue, ve}] = c;
  }

  bool is_zero() const { return c_.empty(); }

  UV& operator+=(const UV& o) {
    for (const auto& [e, c] : o.c_) {
      auto [it, fresh] = c_.try_emplace(e, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
      }
    }
    return *this;
  }
  UV operator+(const UV& o) const {
    UV r = *this;
    r += o;
    return r;
  }
  UV operator-(const UV& o) const {
    UV r = *this;
    for (const auto& [e, c] : o.c_) r += UV(-c, e.first, e.second);
    return r;
  }
  UV operator*(const UV& o) const {
    UV r;
    for (const auto& [e, c] : c_)
      for (const auto& [f, d] : o.c_)
        r += UV(c * d, e.first + f.first, e.second + f.second);
    return r;
  }
  bool operator==(const UV& o) const { return c_ == o.c_; }
  bool operator!=(const UV& o) const { return !(*this == o); }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
      if (!first) os << " + ";
      first = false;
      os << "u^" << e.first << " v^" << e.second << " (" << c.str() << ")";
    }
    return os.str();
  }

 private:
  std::map<std::pair<int, int>, Laurent> c_;
};

UV uv_const(const Laurent& c) { return UV(c, 0, 0); }

// States carry two auxiliary labels and the quantum occupation; every
// operator below conserves a + b + m.
struct Sector {
  std::vector<std::array<int, 3>> states;

  int dim() const { return static_cast<int>(states.size()); }
  int index(const std::array<int, 3>& s) const {
    for (int i = 0; i < dim(); ++i)
      if (states[i] == s) return i;
    return -1;
  }
};

using Matrix = std::vector<std::vector<UV>>;

Matrix zeros(int d) { return Matrix(d, std::vector<UV>(d)); }

Matrix identity(int d) {
  Matrix m = zeros(d);
  for (int i = 0; i < d; ++i) m[i][i] = uv_const(Laurent(1));
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  int d = static_cast<int>(a.size());
  Matrix r = zeros(d);
  for (int i = 0; i < d; ++i)
    for (int l = 0; l < d; ++l) {
      if (a[i][l].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (b[l][j].is_zero()) continue;
        r[i][j] += a[i][l] * b[l][j];
      }
    }
  return r;
}

Matrix mat_scale(const Matrix& a, const UV& s) {
  Matrix r = a;
  for (auto& row : r)
    for (auto& e : row) e = e * s;
  return r;
}

// Entries of the 0/1-edge solution; aux in {0,1}, spectral power attached
// per the table (0,0)->1, (0,1)->u b*, (1,0)->b, (1,1)->u with the first
// index the outgoing auxiliary value.
UV l_entry(int aout, int ain, int mout, int min, bool on_u) {
  auto var = [on_u](const Laurent& c) {
    return on_u ? UV(c, 1, 0) : UV(c, 0, 1);
  };
  if (aout == 0 && ain == 0)
    return mout == min ? uv_const(Laurent(1)) : UV();
  if (aout == 0 && ain == 1)
    return mout == min + 1 ? var(one_minus_t_power(min + 1)) : UV();
  if (aout == 1 && ain == 0)
    return mout == min - 1 ? uv_const(Laurent(1)) : UV();
  return mout == min ? var(Laurent(1)) : UV();
}

// Entries of the Fock-auxiliary solution: x^{ain} [mout over ain]_t with
// occupation balance mout = min - aout + ain and aout <= min.
UV lp_entry(int aout, int ain, int mout, int min, bool on_u) {
  if (aout > min || mout != min - aout + ain) return UV();
  Laurent c = gauss_binomial(mout, ain);
  if (c.is_zero()) return UV();
  return on_u ? UV(c, ain, 0) : UV(c, 0, ain);
}

// L acting on auxiliary slot `slot` (0 or 1) and the quantum occupation.
Matrix build_L(const Sector& sec, int slot, bool on_u, bool prime) {
  Matrix m = zeros(sec.dim());
  for (int i = 0; i < sec.dim(); ++i)
    for (int j = 0; j < sec.dim(); ++j) {
      const auto& out = sec.states[i];
      const auto& in = sec.states[j];
      if (out[1 - slot] != in[1 - slot]) continue;
      m[i][j] = prime ? lp_entry(out[slot], in[slot], out[2], in[2], on_u)
                      : l_entry(out[slot], in[slot], out[2], in[2], on_u);
    }
  return m;
}

// (u - v) times the rational 0/1-edge R-matrix, acting on the two auxiliary
// slots.
Matrix build_R_cleared(const Sector& sec) {
  const UV u(Laurent(1), 1, 0), v(Laurent(1), 0, 1);
  const UV umtv = u - UV(Laurent::t(1), 0, 1);  // u - t v
  const UV umv = u - v;
  Matrix m = zeros(sec.dim());
  for (int i = 0; i < sec.dim(); ++i)
    for (int j = 0; j < sec.dim(); ++j) {
      const auto& o = sec.states[i];
      const auto& s = sec.states[j];
      if (o[2] != s[2]) continue;
      if (o[0] == s[0] && o[1] == s[1]) {
        if (o[0] == o[1])
          m[i][j] = umtv;  // 00,00 and 11,11
        else if (o[0] == 0)
          m[i][j] = umv * uv_const(Laurent::t(1));  // 01,01
        else
          m[i][j] = umv;  // 10,10
      } else if (o[0] == 0 && o[1] == 1 && s[0] == 1 && s[1] == 0) {
        m[i][j] = UV(one_minus_t_power(1), 1, 0);  // (1-t) u
      } else if (o[0] == 1 && o[1] == 0 && s[0] == 0 && s[1] == 1) {
        m[i][j] = UV(one_minus_t_power(1), 0, 1);  // (1-t) v
      }
    }
  return m;
}

// Fock-auxiliary R-matrix; swap=false gives R'(u,v), swap=true R'(v,u).
Matrix build_Rp(const Sector& sec, bool swap) {
  int ue = swap ? -1 : 1;  // exponent pair for the ratio u/v
  Matrix m = zeros(sec.dim());
  for (int i = 0; i < sec.dim(); ++i)
    for (int j = 0; j < sec.dim(); ++j) {
      const auto& o = sec.states[i];
      const auto& s = sec.states[j];
      if (o[2] != s[2] || o[0] + o[1] != s[0] + s[1]) continue;
      int m1 = s[0], m2p = o[1];
      if (m2p < m1) continue;
      Laurent bin = gauss_binomial(m2p, m1);
      if (bin.is_zero()) continue;
      UV e(bin, ue * m1, -ue * m1);
      for (int r = 0; r < m2p - m1; ++r)
        e = e * (uv_const(Laurent(1)) - UV(Laurent::t(r), ue, -ue));
      m[i][j] = e;
    }
  return m;
}

// Mixed R-matrix on a 0/1 slot and a Fock slot.
Matrix build_Rpp(const Sector& sec) {
  Matrix m = zeros(sec.dim());
  for (int i = 0; i < sec.dim(); ++i)
    for (int j = 0; j < sec.dim(); ++j) {
      const auto& o = sec.states[i];
      const auto& s = sec.states[j];
      if (o[2] != s[2]) continue;
      int ma = s[1], map = o[1];
      if (o[0] == 0 && s[0] == 0 && map == ma)
        m[i][j] = uv_const(Laurent(1)) + UV(Laurent::t(ma), 1, -1);
      else if (o[0] == 0 && s[0] == 1 && map == ma + 1)
        m[i][j] = UV(one_minus_t_power(ma + 1), 1, -1);
      else if (o[0] == 1 && s[0] == 0 && map == ma - 1)
        m[i][j] = uv_const(Laurent(1));
      else if (o[0] == 1 && s[0] == 1 && map == ma)
        m[i][j] = UV(Laurent(1), 1, -1);
    }
  return m;
}

// (1 + u/v) times the closed-form inverse of the mixed R-matrix.
Matrix build_Rpp_inverse_scaled(const Sector& sec) {
  Matrix m = zeros(sec.dim());
  for (int i = 0; i < sec.dim(); ++i)
    for (int j = 0; j < sec.dim(); ++j) {
      const auto& o = sec.states[i];
      const auto& s = sec.states[j];
      if (o[2] != s[2]) continue;
      int ma = s[1], map = o[1];
      if (o[0] == 0 && s[0] == 0 && map == ma)
        m[i][j] = uv_const(Laurent::t(-ma));
      else if (o[0] == 0 && s[0] == 1 && map == ma + 1)
        m[i][j] = uv_const(-(one_minus_t_power(ma + 1).shifted(-ma - 1)));
      else if (o[0] == 1 && s[0] == 0 && map == ma - 1)
        m[i][j] = UV(-Laurent::t(-ma), -1, 1);
      else if (o[0] == 1 && s[0] == 1 && map == ma)
        m[i][j] = uv_const(Laurent(1)) + UV(Laurent::t(-ma - 1), -1, 1);
    }
  return m;
}

Matrix build_flip(const Sector& sec) {
  Matrix m = zeros(sec.dim());
  for (int j = 0; j < sec.dim(); ++j) {
    auto s = sec.states[j];
    std::swap(s[0], s[1]);
    m[sec.index(s)][j] = uv_const(Laurent(1));
  }
  return m;
}

std::string state_str(const std::array<int, 3>& s) {
  std::ostringstream os;
  os << "(" << s[0] << "," << s[1] << ";" << s[2] << ")";
  return os.str();
}

void compare(const Sector& sec, const Matrix& lhs, const Matrix& rhs,
             const std::string& label, YbeReport& rep) {
  for (int i = 0; i < sec.dim(); ++i)
    for (int j = 0; j < sec.dim(); ++j) {
      ++rep.entries;
      if (lhs[i][j] == rhs[i][j]) continue;
      if (rep.pass) {
        rep.pass = false;
        rep.failure = label + ": out " + state_str(sec.states[i]) + " in " +
                      state_str(sec.states[j]) + ": lhs " + lhs[i][j].str() +
                      ", rhs " + rhs[i][j].str();
      }
    }
}

}  // namespace

YbeReport ybe_check(YbeKind which, int sector_total) {
  if (sector_total < 0)
    throw std::invalid_argument("ybe_check: sector total");
  const int M = sector_total;
  Sector sec;
  YbeReport rep;
  if (which == YbeKind::RL) {
    for (int a = 0; a <= 1; ++a)
      for (int b = 0; b <= 1; ++b)
        if (M - a - b >= 0) sec.states.push_back({a, b, M - a - b});
    Matrix l1 = build_L(sec, 0, true, false);
    Matrix l2 = build_L(sec, 1, false, false);
    Matrix r = build_R_cleared(sec);
    compare(sec, mat_mul(r, mat_mul(l1, l2)), mat_mul(mat_mul(l2, l1), r),
            "R L1 L2 = L2 L1 R", rep);
  } else if (which == YbeKind::RpLp) {
    for (int a = 0; a <= M; ++a)
      for (int b = 0; a + b <= M; ++b) sec.states.push_back({a, b, M - a - b});
    Matrix l1 = build_L(sec, 0, true, true);
    Matrix l2 = build_L(sec, 1, false, true);
    Matrix r = build_Rp(sec, false);
    compare(sec, mat_mul(r, mat_mul(l1, l2)), mat_mul(mat_mul(l2, l1), r),
            "R' L'1 L'2 = L'2 L'1 R'", rep);
    Matrix p = build_flip(sec);
    Matrix rvu = build_Rp(sec, true);
    compare(sec, mat_mul(r, mat_mul(p, mat_mul(rvu, p))), identity(sec.dim()),
            "R'(u,v) P R'(v,u) P = 1", rep);
  } else {
    for (int a = 0; a <= 1; ++a)
      for (int b = 0; a + b <= M; ++b) sec.states.push_back({a, b, M - a - b});
    Matrix l1 = build_L(sec, 0, true, false);
    Matrix l2 = build_L(sec, 1, false, true);
    Matrix r = build_Rpp(sec);
    compare(sec, mat_mul(r, mat_mul(l1, l2)), mat_mul(mat_mul(l2, l1), r),
            "R'' L1 L'2 = L'2 L1 R''", rep);
    Matrix inv = build_Rpp_inverse_scaled(sec);
    Matrix unit = mat_scale(identity(sec.dim()),
                            uv_const(Laurent(1)) + UV(Laurent(1), 1, -1));
    compare(sec, mat_mul(r, inv), unit, "R'' (R'')^{-1} = 1", rep);
    compare(sec, mat_mul(inv, r), unit, "(R'')^{-1} R'' = 1", rep);
  }
  return rep;
}

}  // namespace cylfusion
