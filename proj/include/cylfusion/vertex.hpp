#pragma once

// Direct lattice-configuration enumerators for the two statistical models
// built from the q-boson solutions of the Yang-Baxter equation, with open
// and periodic boundaries, plus symbolic Yang-Baxter verifiers on
// occupation sectors.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cylfusion/laurent.hpp"
#include "cylfusion/partition.hpp"
#include "cylfusion/symfunc.hpp"

namespace cylfusion {

// Model L carries 0/1 horizontal edges; model Lprime lets horizontal edges
// take any nonnegative value.
enum class VertexModel { L, Lprime };

// =============================== row data ==================================

// One lattice row of n vertices: n+1 horizontal edge values left to right,
// vertical multiplicities entering from the top and leaving at the bottom.
// Conservation at vertex j (0-based):
//   bottom[j] = top[j] + horizontal[j] - horizontal[j+1] >= 0,
// with horizontal values in {0,1} for model L. Periodic rows additionally
// satisfy horizontal[n] == horizontal[0].
struct RowConfig {
  VertexModel model = VertexModel::L;
  std::vector<int> horizontal;
  std::vector<int> top;
  std::vector<int> bottom;

  int sites() const { return static_cast<int>(top.size()); }
};

// Row weight with the power of the row variable kept separate.
struct RowWeight {
  Laurent coeff;
  int xexp = 0;

  bool is_zero() const { return coeff.is_zero(); }
};

// Product of the vertex weights across the row. Per vertex, written as
// (W,E | N -> S):
//   model L:       (0,0 | m -> m)   = 1      (1,0 | m -> m+1) = x (1-t^{m+1})
//                  (0,1 | m -> m-1) = 1      (1,1 | m -> m)   = x
//   model Lprime:  (W,E | m -> m')  = x^W [m' over W]_t   when m + W = m' + E.
// Invalid edge values or broken conservation give the zero weight;
// mismatched field lengths throw std::invalid_argument.
RowWeight row_weight(const RowConfig& config);

// ========================== partition functions ============================

struct Boundary {
  enum class Kind { open, periodic };
  Kind kind = Kind::open;
  int sigma = 0;  // open: value of every left outer edge
  int tau = 0;    // open: value of every right outer edge

  static Boundary open(int sigma, int tau);
  static Boundary periodic();
};

// Weighted sum over lattice configurations, resolved by the winding number d
// (open boundaries fill slot d = 0 only). monomials[d] maps the exponent
// vector (e_1..e_rows) of x_1^{e_1} ... x_rows^{e_rows} to its coefficient;
// collected[d] is the same data as a symmetric polynomial, asserted
// symmetric during collection.
struct LatticeZ {
  VertexModel model = VertexModel::L;
  Boundary boundary;
  int n = 0;
  int rows = 0;
  std::vector<std::map<std::vector<int>, Laurent>> monomials;
  std::vector<SymPoly> collected;
  std::vector<long long> config_count;
  // winding number and per-row edge data of every contributing
  // configuration; filled only on request
  std::vector<std::pair<int, std::vector<RowConfig>>> configs;

  SymPoly at_winding(int d) const;  // zero past the stored range
};

// Exact enumeration of the lattice with mu entering at the top and lambda
// leaving at the bottom, row variables x_1..x_rows top to bottom. mu must
// have exactly k parts in [1, n]; lambda sits at level k + rows*(sigma-tau)
// for open boundaries and at level k for periodic ones. Periodic model L
// requires 1 <= rows <= k, periodic model Lprime 1 <= rows <= n-1.
LatticeZ partition_function(VertexModel model, const Boundary& boundary,
                            const Partition& lambda, const Partition& mu,
                            int n, int k, int rows, bool keep_configs = false);

// =========================== Yang-Baxter checks ============================

// RL      R(u,v) L_1(u) L_2(v) = L_2(v) L_1(u) R(u,v) on C^2 x C^2 x F,
//         with the rational R-matrix entries cleared of their (u-v)
//         denominators.
// RpLp    the same identity for L' and R' on F x F x F, plus the inverse
//         relation R'(u,v) P R'(v,u) P = 1.
// RppLLp  R''(u,v) L_1(u) L'_2(v) = L'_2(v) L_1(u) R''(u,v) on C^2 x F x F,
//         plus the closed form of (R'')^{-1} from both sides.
// Spectral variables stay symbolic. Every operator involved conserves the
// total occupation of the two auxiliary slots and the quantum space, so the
// identities restricted to a fixed-total sector are exact.
enum class YbeKind { RL, RpLp, RppLLp };

struct YbeReport {
  bool pass = true;
  int entries = 0;      // matrix entries compared across all identities
  std::string failure;  // first mismatch with state indices, empty on pass
};

YbeReport ybe_check(YbeKind which, int sector_total);

}  // namespace cylfusion
