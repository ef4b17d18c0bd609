#pragma once

// Symmetric polynomials in a fixed number of ordered variables over Z[t,1/t]:
// monomial-basis arithmetic, the classical bases (m, e, h, s, Hall-Littlewood
// P/Q, their t=0 duals P'/Q', one-row generators g, g', dual Schur S, S'),
// transition matrices, Hall structure constants, strip weights, symmetrised
// R-functions and three independent Kostka-Foulkes constructions.

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "cylfusion/laurent.hpp"
#include "cylfusion/partition.hpp"

namespace cylfusion {

// ============================== SymPoly =====================================

// Symmetric polynomial in `vars` ordered variables, stored in the monomial
// basis: sum over keys la of coeff(la) * m_la. Keys are trimmed partitions of
// length <= vars; zero coefficients are never stored.
class SymPoly {
 public:
  SymPoly() = default;
  explicit SymPoly(int vars) : v_(vars) {}
  SymPoly(int vars, const Laurent& constant);

  static SymPoly monomial(const Partition& la, int vars);

  int vars() const { return v_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<Partition, Laurent>& coeffs() const { return c_; }
  Laurent coeff(const Partition& la) const;
  bool polynomial_coeffs() const;  // true if no negative powers of t appear

  void add_term(const Partition& la, const Laurent& c);

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator-(const SymPoly& o) const;
  SymPoly operator-() const;
  SymPoly operator*(const SymPoly& o) const;
  SymPoly scaled(const Laurent& c) const;
  bool operator==(const SymPoly& o) const { return v_ == o.v_ && c_ == o.c_; }
  bool operator!=(const SymPoly& o) const { return !(*this == o); }

  // Value at a point, substituting t = t0.
  std::complex<double> eval(const std::vector<std::complex<double>>& x,
                            std::complex<double> t0) const;

  std::string str() const;

 private:
  int v_ = 0;
  std::map<Partition, Laurent> c_;
};

// A symmetric function with an overall denominator: num / den.
struct ScaledSym {
  SymPoly num;
  Laurent den{1};
};

// ============================== bases =======================================

enum class BasisKind { m, e, h, s, g, gp, P, Q, Pp, Qp, S, Sp };

BasisKind basis_kind(const std::string& name);  // "m","e",...,"g'","P'","Q'","S'"
std::string basis_name(BasisKind k);

// Monomial expansion of the basis element indexed by la in `vars` variables.
// Kinds g', Q', S' carry denominators and are rejected here; use basis_scaled.
// P/Q/P'/Q' with more parts than variables give the zero polynomial.
SymPoly basis_poly(BasisKind kind, const Partition& la, int vars);

// Same for every kind; polynomial kinds come back with den = 1.
ScaledSym basis_scaled(BasisKind kind, const Partition& la, int vars);

// Skew functions as tableau sums over horizontal-strip chains from mu to la.
enum class StripWeight { unit, hl_psi, hl_phi, qw_psi };
SymPoly tableau_poly(StripWeight w, const Partition& la, const Partition& mu,
                     int vars);

// =========================== strip weights ==================================

Laurent strip_psi(const Partition& la, const Partition& mu);   // HL P branching
Laurent strip_phi(const Partition& la, const Partition& mu);   // HL Q branching
Laurent strip_psi_prime(const Partition& la, const Partition& mu);
LaurentRatio strip_phi_prime(const Partition& la, const Partition& mu);
BiRatio strip_qt_psi(const Partition& la, const Partition& mu);
BiRatio strip_qt_phi(const Partition& la, const Partition& mu);

bool is_horizontal_strip(const Partition& la, const Partition& mu);

// b_la(q,t) evaluated at t=0 is 1/D with D polynomial in q; returns D (in the
// stored variable t).
Laurent qw_b_denominator(const Partition& la);

// ========================= basis conversions ================================

// Expansion of p in the chosen basis. Supported targets are unitriangular in
// the monomial basis along dominance order, so the elimination is exact and
// division-free. Throws std::logic_error on leftover residue.
std::map<Partition, Laurent> to_basis(BasisKind kind, const SymPoly& p);

struct KostkaTables {
  std::vector<Partition> labels;            // partitions of `size`, length <= v
  std::vector<std::vector<Int>> K, Kinv;    // SSYT counts and inverse
  std::vector<std::vector<Laurent>> Kt, Ktinv;
};

// Transition data between the Schur and Hall-Littlewood P bases in degree
// `size`: K by SSYT counting, K(t) by triangular elimination, inverses by the
// nilpotent sum of the strictly-triangular part.
KostkaTables kostka_matrices(int size, int vars);

// Structure constants P_mu P_nu = sum f_{mu nu}^la(t) P_la.
std::map<Partition, Laurent> hall_coeff(const Partition& mu, const Partition& nu);

// ============================ R-functions ===================================

// R_mu = sum over w in S_v of w(x^mu prod_{i<j} (x_i - t x_j)/(x_i - x_j)),
// for an arbitrary composition mu with nonnegative entries; v = mu.size().
SymPoly R_function(const std::vector<int>& mu);

// Scalar s with R_la = s * P_la in v variables (zero-part multiplicities count).
LaurentRatio r_over_p(const Partition& la, int vars);

// ========================= Kostka-Foulkes ===================================

// Charge-statistic route: sum of t^charge over SSYT of shape la, weight mu.
Laurent charge_kostka(const Partition& la, const Partition& mu);

// Alternating-sum route over S_k with the t-deformed Kostant function.
Laurent lusztig_kostka(const Partition& la, const Partition& mu, int k);

// Number of ways to write v as a sum of m positive roots e_i - e_j (i < j),
// weighted t^m.
Laurent kostant_t(const std::vector<int>& v);

}  // namespace cylfusion
