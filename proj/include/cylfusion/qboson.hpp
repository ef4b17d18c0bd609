#pragma once

// Level-k Fock space of the cyclic q-boson algebra: canonical basis labelled
// by A_{k,n}^+, the q-plactic generators a_i, Pieri-rule monodromy operators
// A_r, B_r, C_r, D_r, the noncommutative symmetric polynomials e_r and g'_r
// with their determinantal families s, S', Q', P', and relation test suites.
// Winding numbers are kept as an explicit nonnegative z-grading per entry.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cylfusion/laurent.hpp"
#include "cylfusion/partition.hpp"

namespace cylfusion {

// ============================== Fock basis =================================

// Labels A_{k,n}^+ in alcove_enumerate order; k < 0 gives the empty basis.
struct FockBasis {
  int n = 0;
  int k = 0;
  std::vector<Partition> labels;

  FockBasis(int n, int k);

  int dim() const { return static_cast<int>(labels.size()); }
  int index(const Partition& la) const;  // throws std::invalid_argument
  bool has_label(const Partition& la) const;
  bool same_space(const FockBasis& o) const { return n == o.n && k == o.k; }

 private:
  std::map<Partition, int> idx_;
};

// ========================= polynomials in z ================================

// Finitely many powers z^d with Laurent-in-t coefficients; d >= 0 throughout
// the operator calculus, which OpMatrix asserts on insertion.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(const Laurent& c);  // z^0 * c
  static ZPoly term(const Laurent& c, int d);

  bool is_zero() const { return c_.empty(); }
  Laurent at(int d) const;
  Laurent at_z1() const;  // sum over all z-powers
  int degree() const;     // largest d; -1 for the zero polynomial
  bool is_monomial() const { return c_.size() <= 1; }
  const std::map<int, Laurent>& coeffs() const { return c_; }

  ZPoly& operator+=(const ZPoly& o);
  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-() const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  bool operator==(const ZPoly& o) const { return c_ == o.c_; }
  bool operator!=(const ZPoly& o) const { return !(*this == o); }

  ZPoly shifted_z(int d) const;
  ZPoly scaled(const Laurent& c) const;
  ZPoly divided_by(const Laurent& d) const;  // exact; throws on remainder

  std::string str() const;

 private:
  std::map<int, Laurent> c_;
  void strip_zeros();
};

// ========================== operator matrices ==============================

// Linear map dom -> cod between Fock levels, stored sparsely by (row, col).
class OpMatrix {
 public:
  OpMatrix(FockBasis cod, FockBasis dom);
  static OpMatrix identity(const FockBasis& b);

  const FockBasis& cod() const { return cod_; }
  const FockBasis& dom() const { return dom_; }
  bool is_zero() const { return e_.empty(); }

  void add(int row, int col, const ZPoly& v);
  const ZPoly& at(int row, int col) const;  // zero reference when absent
  const std::map<std::pair<int, int>, ZPoly>& entries() const { return e_; }

  OpMatrix& operator+=(const OpMatrix& o);
  OpMatrix operator+(const OpMatrix& o) const;
  OpMatrix operator-(const OpMatrix& o) const;
  OpMatrix operator-() const;
  OpMatrix operator*(const OpMatrix& o) const;  // composition, dom == o.cod
  bool operator==(const OpMatrix& o) const;
  bool operator!=(const OpMatrix& o) const { return !(*this == o); }

  OpMatrix scaled(const Laurent& c) const;
  OpMatrix shifted_z(int d) const;
  OpMatrix divided_by(const Laurent& d) const;  // exact per entry

 private:
  FockBasis cod_, dom_;
  std::map<std::pair<int, int>, ZPoly> e_;
};

// Entry at (row, col); throws std::invalid_argument on unknown labels and
// returns zero when the entry is absent.
ZPoly matrix_element(const OpMatrix& op, const Partition& row,
                     const Partition& col);

// ============================= generators ==================================

// a_i = beta*_{i+1} beta_i for i < n; a_n = z beta*_1 beta_n.
OpMatrix plactic_a(int i, const FockBasis& basis);

enum class MonodromyKind { A, B, C, D };

// Pieri coefficients of the monodromy matrix acting on level k:
//   A_r adds a horizontal strip of size r within the level,
//   B_r adds one while raising the level to k+1,
//   C_r removes a horizontal strip of size n-r, lowering the level to k-1,
//   D_r removes one within the level.
// Out-of-range r gives the zero matrix.
OpMatrix monodromy_op(MonodromyKind kind, int r, const FockBasis& basis);

enum class ERoute { pieri, words };

// e_r = A_r + z D_r; the words route evaluates nested t-commutators of the
// a_i over cyclically ordered supports. e_0 = 1 and e_n = z.
OpMatrix nc_elementary(int r, const FockBasis& basis,
                       ERoute route = ERoute::pieri);

enum class GRoute { strips, words };

// g'_r as a sum over cylindric vertical strips of size r weighted by
// Gaussian-binomial branching coefficients, or as the normalised sum of
// q-plactic monomials over all n-compositions of r. g'_0 = 1.
OpMatrix nc_gprime(int r, const FockBasis& basis,
                   GRoute route = GRoute::strips);

// ======================= determinantal families ============================

enum class NcKind { s, Sp, Qp, Pp };
enum class QpRoute { kostka, raising };

// s_la  = det(e_{la'_i - i + j}),
// S'_la = det(g'_{la_i - i + j}),
// Q'_la = sum_{mu' <= la'} Kinv_{la' mu'}(t) S'_mu,
// P'_la = sum_{mu >= la'} s_{mu'} K_{mu la'}(t)   (the subscript of P' is the
// conjugate of the partition the sum is anchored at, so the la argument is
// used directly as the operator's subscript for every kind).
// Determinants expand by minors memoised over column subsets; index < 0
// gives 0, index 0 gives 1.
// For kind Qp the raising route expands prod (1 - t R'_{ji}) S'_la instead of
// inverting the Kostka matrix; both routes agree.
OpMatrix nc_poly(NcKind kind, const Partition& la, const FockBasis& basis,
                 QpRoute route = QpRoute::kostka);

// det(g'_{v_i - i + j}) for an arbitrary integer vector v.
OpMatrix sprime_det(const std::vector<int>& v, const FockBasis& basis);

// ========================= relation test suites ============================

enum class RelationSuite { knuth, commute, tq, pieri_vs_words };

struct RelationReport {
  bool ok = true;
  int checked = 0;
  std::vector<std::string> failures;  // one witness per failed identity
};

// knuth: both cubic q-Knuth relations for every i (indices mod n) plus the
//        nonlocal commutativity of a_i, a_j at cyclic distance > 1;
// commute: [e_r, e_s] = [g'_r, g'_s] = [e_r, g'_s] = 0 for r, s <= n + k;
// tq: sum_{a+b=c} (-1)^a e_a g'_b = t^c g'_c + (-1)^n z t^{n-c+k} g'_{c-n}
//     for c <= n + k, the u^c coefficient of E(-u) G'(u) = G'(ut) + z (-u)^n
//     t^k G'(u/t) on the level-k block;
// pieri_vs_words: route equality for e_r (r <= n) and g'_r (r <= n + k).
RelationReport verify_relations(RelationSuite suite, const FockBasis& basis);

}  // namespace cylfusion
