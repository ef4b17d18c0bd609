#include "cylfusion/qboson.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "cylfusion/cylfunc.hpp"
#include "cylfusion/symfunc.hpp"

namespace cylfusion {

namespace {

const ZPoly kZeroZ{};

Laurent one_minus_t_power(int e) { return Laurent(1) - Laurent::t(e); }

Partition from_mults(const std::vector<int>& m) {
  Partition p;
  for (int v = static_cast<int>(m.size()); v >= 1; --v)
    p.insert(p.end(), m[v - 1], v);
  return p;
}

}  // namespace

// ============================== Fock basis =================================

FockBasis::FockBasis(int n_, int k_) : n(n_), k(k_) {
  if (n < 1) throw std::invalid_argument("FockBasis needs n >= 1");
  if (k >= 0) labels = alcove_enumerate(n, k);
  for (int i = 0; i < dim(); ++i) idx_[labels[i]] = i;
}

int FockBasis::index(const Partition& la) const {
  auto it = idx_.find(trimmed(la));
  if (it == idx_.end()) throw std::invalid_argument("label not in A_{k,n}^+");
  return it->second;
}

bool FockBasis::has_label(const Partition& la) const {
  return idx_.count(trimmed(la)) != 0;
}

// ================================ ZPoly =====================================

ZPoly::ZPoly(const Laurent& c) {
  if (!c.is_zero()) c_[0] = c;
}

ZPoly ZPoly::term(const Laurent& c, int d) {
  ZPoly r;
  if (!c.is_zero()) r.c_[d] = c;
  return r;
}

Laurent ZPoly::at(int d) const {
  auto it = c_.find(d);
  return it == c_.end() ? Laurent() : it->second;
}

Laurent ZPoly::at_z1() const {
  Laurent s;
  for (const auto& [d, c] : c_) s += c;
  return s;
}

int ZPoly::degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

void ZPoly::strip_zeros() {
  for (auto it = c_.begin(); it != c_.end();)
    it = it->second.is_zero() ? c_.erase(it) : std::next(it);
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  for (const auto& [d, c] : o.c_) c_[d] += c;
  strip_zeros();
  return *this;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  ZPoly r = *this;
  r += o;
  return r;
}

ZPoly ZPoly::operator-() const {
  ZPoly r;
  for (const auto& [d, c] : c_) r.c_[d] = -c;
  return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator*(const ZPoly& o) const {
  ZPoly r;
  for (const auto& [d1, c1] : c_)
    for (const auto& [d2, c2] : o.c_) r.c_[d1 + d2] += c1 * c2;
  r.strip_zeros();
  return r;
}

ZPoly ZPoly::shifted_z(int d) const {
  ZPoly r;
  for (const auto& [e, c] : c_) r.c_[e + d] = c;
  return r;
}

ZPoly ZPoly::scaled(const Laurent& c) const {
  ZPoly r;
  if (c.is_zero()) return r;
  for (const auto& [d, v] : c_) r.c_[d] = v * c;
  return r;
}

ZPoly ZPoly::divided_by(const Laurent& d) const {
  ZPoly r;
  for (const auto& [e, c] : c_) r.c_[e] = c.divided_by(d);
  return r;
}

std::string ZPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [d, c] : c_) {
    if (!s.empty()) s += " + ";
    if (d == 0) {
      s += c.str();
    } else {
      s += "z" + (d == 1 ? std::string() : "^" + std::to_string(d)) + "*(" +
           c.str() + ")";
    }
  }
  return s;
}

// ============================== OpMatrix ===================================

OpMatrix::OpMatrix(FockBasis cod, FockBasis dom)
    : cod_(std::move(cod)), dom_(std::move(dom)) {}

OpMatrix OpMatrix::identity(const FockBasis& b) {
  OpMatrix m(b, b);
  for (int i = 0; i < b.dim(); ++i) m.e_[{i, i}] = ZPoly(Laurent(1));
  return m;
}

void OpMatrix::add(int row, int col, const ZPoly& v) {
  if (v.is_zero()) return;
  if (row < 0 || row >= cod_.dim() || col < 0 || col >= dom_.dim())
    throw std::out_of_range("OpMatrix entry out of range");
  if (v.coeffs().begin()->first < 0)
    throw std::logic_error("negative winding exponent");
  auto& slot = e_[{row, col}];
  slot += v;
  if (slot.is_zero()) e_.erase({row, col});
}

const ZPoly& OpMatrix::at(int row, int col) const {
  auto it = e_.find({row, col});
  return it == e_.end() ? kZeroZ : it->second;
}

OpMatrix& OpMatrix::operator+=(const OpMatrix& o) {
  if (!cod_.same_space(o.cod_) || !dom_.same_space(o.dom_))
    throw std::invalid_argument("OpMatrix shape mismatch");
  for (const auto& [rc, v] : o.e_) add(rc.first, rc.second, v);
  return *this;
}

OpMatrix OpMatrix::operator+(const OpMatrix& o) const {
  OpMatrix r = *this;
  r += o;
  return r;
}

OpMatrix OpMatrix::operator-() const {
  OpMatrix r(cod_, dom_);
  for (const auto& [rc, v] : e_) r.e_[rc] = -v;
  return r;
}

OpMatrix OpMatrix::operator-(const OpMatrix& o) const { return *this + (-o); }

OpMatrix OpMatrix::operator*(const OpMatrix& o) const {
  if (!dom_.same_space(o.cod_))
    throw std::invalid_argument("OpMatrix composition mismatch");
  OpMatrix r(cod_, o.dom_);
  for (const auto& [rc, v] : e_) {
    auto it = o.e_.lower_bound({rc.second, 0});
    for (; it != o.e_.end() && it->first.first == rc.second; ++it) {
      auto& slot = r.e_[{rc.first, it->first.second}];
      slot += v * it->second;
    }
  }
  for (auto it = r.e_.begin(); it != r.e_.end();)
    it = it->second.is_zero() ? r.e_.erase(it) : std::next(it);
  return r;
}

bool OpMatrix::operator==(const OpMatrix& o) const {
  return cod_.same_space(o.cod_) && dom_.same_space(o.dom_) && e_ == o.e_;
}

OpMatrix OpMatrix::scaled(const Laurent& c) const {
  OpMatrix r(cod_, dom_);
  if (c.is_zero()) return r;
  for (const auto& [rc, v] : e_) r.e_[rc] = v.scaled(c);
  return r;
}

OpMatrix OpMatrix::shifted_z(int d) const {
  OpMatrix r(cod_, dom_);
  for (const auto& [rc, v] : e_) r.e_[rc] = v.shifted_z(d);
  return r;
}

OpMatrix OpMatrix::divided_by(const Laurent& d) const {
  OpMatrix r(cod_, dom_);
  for (const auto& [rc, v] : e_) r.e_[rc] = v.divided_by(d);
  return r;
}

ZPoly matrix_element(const OpMatrix& op, const Partition& row,
                     const Partition& col) {
  return op.at(op.cod().index(row), op.dom().index(col));
}

// ============================= generators ==================================

OpMatrix plactic_a(int i, const FockBasis& basis) {
  if (i < 1 || i > basis.n) throw std::invalid_argument("plactic index");
  OpMatrix m(basis, basis);
  for (int c = 0; c < basis.dim(); ++c) {
    std::vector<int> mult = partition_stats(basis.labels[c], basis.n).mult;
    if (mult[i - 1] == 0) continue;
    int j = i % basis.n;  // successor slot, a_n feeds back into slot 1
    --mult[i - 1];
    Laurent coeff = one_minus_t_power(mult[j] + 1);
    ++mult[j];
    int row = basis.index(from_mults(mult));
    m.add(row, c, ZPoly::term(coeff, i == basis.n ? 1 : 0));
  }
  return m;
}

OpMatrix monodromy_op(MonodromyKind kind, int r, const FockBasis& basis) {
  int dk = kind == MonodromyKind::B ? 1 : kind == MonodromyKind::C ? -1 : 0;
  FockBasis cod(basis.n, basis.k + dk);
  OpMatrix m(cod, basis);
  if (r < 0 || r > basis.n) return m;
  bool adds = kind == MonodromyKind::A || kind == MonodromyKind::B;
  int size = adds ? r : basis.n - r;
  for (int c = 0; c < basis.dim(); ++c) {
    const Partition& mu = basis.labels[c];
    for (int rw = 0; rw < cod.dim(); ++rw) {
      const Partition& la = cod.labels[rw];
      if (adds) {
        if (weight(la) != weight(mu) + size || !is_horizontal_strip(la, mu))
          continue;
        m.add(rw, c, ZPoly(strip_phi(la, mu)));
      } else {
        if (weight(mu) != weight(la) + size || !is_horizontal_strip(mu, la))
          continue;
        m.add(rw, c, ZPoly(strip_psi(mu, la)));
      }
    }
  }
  return m;
}

namespace {

// Maximal arcs of an r-subset of Z/nZ (r < n), each listed in decreasing
// cyclic order starting from its top element.
std::vector<std::vector<int>> cyclic_runs(const std::vector<int>& set, int n) {
  std::vector<bool> in(n + 1, false);
  for (int v : set) in[v] = true;
  auto prev = [n](int v) { return v == 1 ? n : v - 1; };
  auto next = [n](int v) { return v == n ? 1 : v + 1; };
  std::vector<std::vector<int>> runs;
  for (int v : set) {
    if (in[prev(v)]) continue;  // not the low end of its arc
    std::vector<int> run{v};
    for (int w = next(v); in[w]; w = next(w)) run.push_back(w);
    std::reverse(run.begin(), run.end());
    runs.push_back(std::move(run));
  }
  return runs;
}

OpMatrix nested_commutator(const std::vector<int>& word,
                           const std::vector<OpMatrix>& a) {
  OpMatrix acc = a[word.back() - 1];
  for (int p = static_cast<int>(word.size()) - 2; p >= 0; --p) {
    const OpMatrix& x = a[word[p] - 1];
    acc = x * acc - (acc * x).scaled(Laurent::t());
  }
  return acc;
}

void for_each_subset(int n, int r, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& f,
                     int from = 1) {
  if (static_cast<int>(cur.size()) == r) {
    f(cur);
    return;
  }
  for (int v = from; v <= n - (r - 1 - static_cast<int>(cur.size())); ++v) {
    cur.push_back(v);
    for_each_subset(n, r, cur, f, v + 1);
    cur.pop_back();
  }
}

void for_each_composition(int slots, int total, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == slots - 1) {
    cur.push_back(total);
    f(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    for_each_composition(slots, total - v, cur, f);
    cur.pop_back();
  }
}

// beta_n removes one part equal to n (level k -> k-1, coefficient 1).
OpMatrix lower_beta_n(const FockBasis& from) {
  FockBasis cod(from.n, from.k - 1);
  OpMatrix m(cod, from);
  for (int c = 0; c < from.dim(); ++c) {
    std::vector<int> mult = partition_stats(from.labels[c], from.n).mult;
    if (mult[from.n - 1] == 0) continue;
    --mult[from.n - 1];
    m.add(cod.index(from_mults(mult)), c, ZPoly(Laurent(1)));
  }
  return m;
}

// beta*_1 adds one part equal to 1 (level k -> k+1).
OpMatrix raise_beta1(const FockBasis& from) {
  FockBasis cod(from.n, from.k + 1);
  OpMatrix m(cod, from);
  for (int c = 0; c < from.dim(); ++c) {
    std::vector<int> mult = partition_stats(from.labels[c], from.n).mult;
    Laurent coeff = one_minus_t_power(mult[0] + 1);
    ++mult[0];
    m.add(cod.index(from_mults(mult)), c, ZPoly(coeff));
  }
  return m;
}

}  // namespace

OpMatrix nc_elementary(int r, const FockBasis& basis, ERoute route) {
  if (r < 0 || r > basis.n) return OpMatrix(basis, basis);
  if (route == ERoute::pieri)
    return monodromy_op(MonodromyKind::A, r, basis) +
           monodromy_op(MonodromyKind::D, r, basis).shifted_z(1);
  if (r == 0) return OpMatrix::identity(basis);
  if (r == basis.n) return OpMatrix::identity(basis).shifted_z(1);
  std::vector<OpMatrix> a;
  a.reserve(basis.n);
  for (int i = 1; i <= basis.n; ++i) a.push_back(plactic_a(i, basis));
  Laurent den = one_minus_t_power(1);
  OpMatrix sum(basis, basis);
  std::vector<int> cur;
  for_each_subset(basis.n, r, cur, [&](const std::vector<int>& set) {
    OpMatrix term = OpMatrix::identity(basis);
    for (const auto& run : cyclic_runs(set, basis.n)) {
      OpMatrix part = nested_commutator(run, a);
      for (size_t s = 1; s < run.size(); ++s) part = part.divided_by(den);
      term = term * part;
    }
    sum += term;
  });
  return sum;
}

OpMatrix nc_gprime(int r, const FockBasis& basis, GRoute route) {
  if (r < 0) return OpMatrix(basis, basis);
  if (r == 0) return OpMatrix::identity(basis);
  OpMatrix m(basis, basis);
  if (route == GRoute::strips) {
    if (basis.k == 0) return m;  // no boxes on the vacuum cylinder
    for (int c = 0; c < basis.dim(); ++c) {
      const Partition& mu = basis.labels[c];
      int dmax = std::min(r, multiplicity(mu, basis.n));
      for (int rw = 0; rw < basis.dim(); ++rw) {
        const Partition& la = basis.labels[rw];
        int num = r + weight(mu) - weight(la);
        if (num < 0 || num % basis.n != 0) continue;
        int d = num / basis.n;
        if (d > dmax) continue;
        StripInfo info = cyl_strip(CylShape(basis.n, basis.k, la, d, mu));
        if (!info.contained || !info.vertical) continue;
        Laurent w = cyl_step_weight(CylWeight::psi_prime, la, d, mu, basis.n,
                                    basis.k);
        m.add(rw, c, ZPoly::term(w, d));
      }
    }
    return m;
  }
  std::vector<int> cur;
  for_each_composition(basis.n, r, cur, [&](const std::vector<int>& alpha) {
    int wind = alpha[basis.n - 1];
    if (basis.k - wind < 0) return;
    Laurent den(1);
    for (int v : alpha) den *= t_pochhammer(v);
    FockBasis level(basis.n, basis.k - wind);
    OpMatrix term = OpMatrix::identity(basis);
    for (int s = 0; s < wind; ++s)
      term = lower_beta_n(FockBasis(basis.n, basis.k - s)) * term;
    for (int i = basis.n - 1; i >= 1; --i) {
      if (alpha[i - 1] == 0) continue;
      OpMatrix ai = plactic_a(i, level);
      for (int s = 0; s < alpha[i - 1]; ++s) term = ai * term;
    }
    for (int s = 0; s < wind; ++s)
      term = raise_beta1(FockBasis(basis.n, basis.k - wind + s)) * term;
    m += term.shifted_z(wind).divided_by(den);
  });
  return m;
}

// ======================= determinantal families ============================

namespace {

// det(gen(v_i - i + j)) over 1 <= i, j <= len(v); gen(c) may be null (zero).
// Expansion along the last row of each leading block, memoised on the column
// subset; valid because the generators commute.
OpMatrix index_det(const std::vector<int>& v,
                   const std::function<const OpMatrix*(int)>& gen,
                   const FockBasis& basis) {
  int l = static_cast<int>(v.size());
  if (l == 0) return OpMatrix::identity(basis);
  std::map<unsigned, OpMatrix> minors{{0u, OpMatrix::identity(basis)}};
  for (unsigned mask = 1; mask < (1u << l); ++mask) {
    int row = __builtin_popcount(mask) - 1;
    OpMatrix sum(basis, basis);
    int pos = 0;
    for (int j = 0; j < l; ++j) {
      if (!(mask & (1u << j))) continue;
      int here = pos++;
      const OpMatrix* f = gen(v[row] - row + j);
      if (f == nullptr || f->is_zero()) continue;
      auto it = minors.find(mask & ~(1u << j));
      if (it == minors.end()) continue;
      OpMatrix term = *f * it->second;
      sum += (row + here) % 2 ? -term : term;
    }
    if (!sum.is_zero()) minors.emplace(mask, std::move(sum));
  }
  auto it = minors.find((1u << l) - 1);
  return it == minors.end() ? OpMatrix(basis, basis) : it->second;
}

struct GprimeCache {
  const FockBasis& basis;
  std::map<int, OpMatrix> ops;
  const OpMatrix* operator()(int c) {
    if (c < 0) return nullptr;
    auto it = ops.find(c);
    if (it == ops.end())
      it = ops.emplace(c, nc_gprime(c, basis)).first;
    return &it->second;
  }
};

struct ElementaryCache {
  const FockBasis& basis;
  std::map<int, OpMatrix> ops;
  const OpMatrix* operator()(int c) {
    if (c < 0 || c > basis.n) return nullptr;
    auto it = ops.find(c);
    if (it == ops.end())
      it = ops.emplace(c, nc_elementary(c, basis)).first;
    return &it->second;
  }
};

int label_index(const std::vector<Partition>& labels, const Partition& p) {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == p) return static_cast<int>(i);
  throw std::logic_error("partition missing from transition table");
}

// Straighten an integer vector under the shifted action: beta_i = w_i - i
// must be distinct, sorting them gives the sign and the sorted vector; a
// negative trailing entry kills the term.
bool straighten(const std::vector<int>& w, Partition& out, int& sign) {
  int l = static_cast<int>(w.size());
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = w[i] - i;
  sign = 1;
  for (int i = 1; i < l; ++i)
    for (int j = i; j > 0 && beta[j - 1] < beta[j]; --j) {
      std::swap(beta[j - 1], beta[j]);
      sign = -sign;
    }
  for (int i = 1; i < l; ++i)
    if (beta[i] == beta[i - 1]) return false;
  out.assign(l, 0);
  for (int i = 0; i < l; ++i) {
    out[i] = beta[i] + i;
    if (out[i] < 0) return false;
  }
  out = trimmed(out);
  return true;
}

OpMatrix qprime_raising(const Partition& la, const FockBasis& basis,
                        GprimeCache& gp) {
  int size = weight(la);
  std::vector<int> v = padded(conjugate(la), std::max(size, 1));
  int l = static_cast<int>(v.size());
  std::map<std::vector<int>, Laurent> acc{{v, Laurent(1)}};
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      if (v[i] <= v[j]) continue;
      std::map<std::vector<int>, Laurent> next = acc;
      for (const auto& [w, c] : acc) {
        std::vector<int> moved = w;
        --moved[i];
        ++moved[j];
        auto& slot = next[moved];
        slot += c.scaled(-1).shifted(1);
        if (slot.is_zero()) next.erase(moved);
      }
      acc.swap(next);
    }
  std::map<Partition, Laurent> terms;
  for (const auto& [w, c] : acc) {
    Partition p;
    int sign = 0;
    if (!straighten(w, p, sign)) continue;
    auto& slot = terms[p];
    slot += sign < 0 ? -c : c;
    if (slot.is_zero()) terms.erase(p);
  }
  OpMatrix sum(basis, basis);
  for (const auto& [p, c] : terms) {
    Partition sub = conjugate(p);
    sum += index_det(sub, std::ref(gp), basis).scaled(c);
  }
  return sum;
}

}  // namespace

OpMatrix sprime_det(const std::vector<int>& v, const FockBasis& basis) {
  GprimeCache gp{basis};
  return index_det(v, std::ref(gp), basis);
}

OpMatrix nc_poly(NcKind kind, const Partition& la, const FockBasis& basis,
                 QpRoute route) {
  Partition sub = trimmed(la);
  if (sub.empty()) return OpMatrix::identity(basis);
  int size = weight(sub);
  switch (kind) {
    case NcKind::s: {
      ElementaryCache el{basis};
      return index_det(conjugate(sub), std::ref(el), basis);
    }
    case NcKind::Sp: {
      return sprime_det(sub, basis);
    }
    case NcKind::Qp: {
      GprimeCache gp{basis};
      if (route == QpRoute::raising) return qprime_raising(sub, basis, gp);
      KostkaTables T = kostka_matrices(size, size);
      int i0 = label_index(T.labels, conjugate(sub));
      OpMatrix sum(basis, basis);
      for (size_t j = 0; j < T.labels.size(); ++j) {
        const Laurent& c = T.Ktinv[i0][j];
        if (c.is_zero()) continue;
        sum += index_det(conjugate(T.labels[j]), std::ref(gp), basis).scaled(c);
      }
      return sum;
    }
    case NcKind::Pp: {
      ElementaryCache el{basis};
      KostkaTables T = kostka_matrices(size, size);
      Partition anchor = conjugate(sub);
      int j0 = label_index(T.labels, anchor);
      OpMatrix sum(basis, basis);
      for (size_t i = 0; i < T.labels.size(); ++i) {
        const Laurent& c = T.Kt[i][j0];
        if (c.is_zero()) continue;
        sum += index_det(T.labels[i], std::ref(el), basis).scaled(c);
      }
      return sum;
    }
  }
  throw std::logic_error("unreachable");
}

// ========================= relation test suites ============================

namespace {

void expect_equal(const OpMatrix& a, const OpMatrix& b, const std::string& what,
                  RelationReport& rep) {
  ++rep.checked;
  if (a == b) return;
  rep.ok = false;
  rep.failures.push_back(what);
}

}  // namespace

RelationReport verify_relations(RelationSuite suite, const FockBasis& basis) {
  RelationReport rep;
  int n = basis.n, k = basis.k;
  if (suite == RelationSuite::knuth) {
    std::vector<OpMatrix> a;
    for (int i = 1; i <= n; ++i) a.push_back(plactic_a(i, basis));
    Laurent t = Laurent::t();
    for (int i = 1; i <= n; ++i) {
      const OpMatrix& x = a[i - 1];
      const OpMatrix& y = a[i % n];
      OpMatrix xx = x * x, yy = y * y;
      expect_equal(y * xx + (xx * y).scaled(t),
                   (x * (y * x)).scaled(Laurent(1) + t),
                   "knuth cubic1 i=" + std::to_string(i), rep);
      expect_equal(yy * x + (x * yy).scaled(t),
                   (y * (x * y)).scaled(Laurent(1) + t),
                   "knuth cubic2 i=" + std::to_string(i), rep);
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        int dist = std::min(j - i, n - (j - i));
        if (dist <= 1) continue;
        expect_equal(a[i - 1] * a[j - 1], a[j - 1] * a[i - 1],
                     "nonlocal i=" + std::to_string(i) +
                         " j=" + std::to_string(j),
                     rep);
      }
    return rep;
  }
  int top = n + k;
  std::vector<OpMatrix> e, g;
  for (int r = 0; r <= top; ++r) {
    e.push_back(nc_elementary(r, basis));
    g.push_back(nc_gprime(r, basis));
  }
  if (suite == RelationSuite::commute) {
    for (int r = 0; r <= top; ++r)
      for (int s = r + 1; s <= top; ++s) {
        expect_equal(e[r] * e[s], e[s] * e[r],
                     "[e_" + std::to_string(r) + ",e_" + std::to_string(s) + "]",
                     rep);
        expect_equal(g[r] * g[s], g[s] * g[r],
                     "[g'_" + std::to_string(r) + ",g'_" + std::to_string(s) +
                         "]",
                     rep);
      }
    for (int r = 0; r <= top; ++r)
      for (int s = 0; s <= top; ++s)
        expect_equal(e[r] * g[s], g[s] * e[r],
                     "[e_" + std::to_string(r) + ",g'_" + std::to_string(s) +
                         "]",
                     rep);
    return rep;
  }
  if (suite == RelationSuite::tq) {
    for (int c = 0; c <= top; ++c) {
      OpMatrix lhs(basis, basis);
      for (int a = 0; a <= c; ++a) {
        if (a > n) break;
        OpMatrix term = e[a] * g[c - a];
        lhs += a % 2 ? -term : term;
      }
      OpMatrix rhs = g[c].scaled(Laurent::t(c));
      if (c >= n) {
        Laurent w = Laurent::t(n - c + k);
        if (n % 2) w = w.scaled(-1);
        rhs += g[c - n].shifted_z(1).scaled(w);
      }
      expect_equal(lhs, rhs, "tq c=" + std::to_string(c), rep);
    }
    return rep;
  }
  for (int r = 0; r <= n; ++r)
    expect_equal(e[r], nc_elementary(r, basis, ERoute::words),
                 "e_" + std::to_string(r) + " words", rep);
  for (int r = 0; r <= top; ++r)
    expect_equal(g[r], nc_gprime(r, basis, GRoute::words),
                 "g'_" + std::to_string(r) + " words", rep);
  return rep;
}

}  // namespace cylfusion
