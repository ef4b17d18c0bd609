#pragma once

#include <vector>

#include "cylfusion/laurent.hpp"
#include "cylfusion/partition.hpp"
#include "cylfusion/symfunc.hpp"

namespace cylfusion {

// ========================== cylindric branching ==============================

// Branching weight of a single cylindric strip mu -> lambda with winding d.
//
//   phi, psi            products of (1 - t^{m_i}) over the descent sets of the
//                       column profile; zero unless the step is a cylindric
//                       horizontal strip.
//   phi_prime,          products of Gaussian binomials in the column
//   psi_prime           multiplicities; zero unless the step is a cylindric
//                       vertical strip.  psi_prime * b_mu == phi_prime * b_lambda.
//
// lambda and mu must have exactly k parts, each in [1, n].
enum class CylWeight { phi, psi, phi_prime, psi_prime };

Laurent cyl_step_weight(CylWeight kind, const Partition& lambda, int d,
                        const Partition& mu, int n, int k);

// =========================== cylindric tableaux ==============================

// Chain of cylinder partitions mu = chain[0], ..., chain[r] = lambda with one
// winding increment per step; winding sums to the winding number of the shape.
struct CylTableau {
  CylShape shape;
  std::vector<Partition> chain;
  std::vector<int> winding;

  CylTableau(const CylShape& s, std::vector<Partition> c, std::vector<int> w);

  // Boxes added by each step, measured in the fundamental region.
  std::vector<int> weights() const;
};

// All decompositions of the shape into max_entry cylindric horizontal strips,
// in a fixed deterministic order (per step: winding ascending, then target
// label in alcove order).
std::vector<CylTableau> enumerate_cyl_tableaux(const CylShape& shape,
                                               int max_entry);

// Number of horizontal-strip chains whose step sizes equal theta exactly.
// theta may be any composition (zero entries allowed) summing to the box
// count of the shape.  For winding 0 this is an ordinary skew Kostka number.
long long cyl_kostka(const CylShape& shape, const std::vector<int>& theta);

// =========================== cylindric functions =============================

// hl_Q, hl_P   sums of phi / psi weights over horizontal-strip chains;
//              nonzero only for 1 <= nvars <= k.
// mac_Pp       sum of psi_prime weights over vertical-strip chains (the t = 0
//              Macdonald specialisation); nonzero only for 1 <= nvars <= n-1.
//
// The result is collected in the monomial basis; the expansion is verified to
// be symmetric across all weight compositions before being returned.
enum class CylKind { hl_Q, hl_P, mac_Pp };

SymPoly cyl_function(CylKind kind, const CylShape& shape, int nvars);

}  // namespace cylfusion
