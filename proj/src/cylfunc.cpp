#include "cylfusion/cylfunc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace cylfusion {

// ========================== cylindric branching ==============================

Laurent cyl_step_weight(CylWeight kind, const Partition& lambda, int d,
                        const Partition& mu, int n, int k) {
  const CylShape step(n, k, lambda, d, mu);
  const StripInfo info = cyl_strip(step);
  // info.theta[j-1] is the column-j gain for j = 1..n; cyclically
  // theta_{n+1} = theta_1 = d.
  auto th = [&](int j) { return info.theta[(j - 1) % n]; };

  switch (kind) {
    case CylWeight::phi: {
      if (!info.horizontal) return {};
      Laurent w{1};
      for (int j = 1; j <= n; ++j)
        if (th(j) == 1 && th(j + 1) == 0)
          w *= Laurent{1} - Laurent::term(1, multiplicity(lambda, j));
      return w;
    }
    case CylWeight::psi: {
      if (!info.horizontal) return {};
      Laurent w{1};
      for (int j = 1; j <= n; ++j)
        if (th(j) == 0 && th(j + 1) == 1)
          w *= Laurent{1} - Laurent::term(1, multiplicity(mu, j));
      return w;
    }
    case CylWeight::psi_prime: {
      // The binomials vanish exactly when the step is not a cylindric
      // vertical strip, so no separate gate is needed.
      Laurent w{1};
      for (int j = 1; j <= n && !w.is_zero(); ++j)
        w *= gauss_binomial(multiplicity(lambda, j), th(j));
      return w;
    }
    case CylWeight::phi_prime: {
      Laurent w{1};
      for (int j = 1; j <= n && !w.is_zero(); ++j)
        w *= gauss_binomial(multiplicity(mu, j), th(j + 1));
      return w;
    }
  }
  return {};
}

// =========================== chain enumeration ===============================

namespace {

using ChainSink =
    std::function<void(const std::vector<Partition>&, const std::vector<int>&)>;

// Depth-first walk over strip chains from shape.mu to shape.lambda.  A
// horizontal strip adds at most one box per column (gain <= n), a vertical
// strip at most one box per fundamental row (gain <= k); both bounds are used
// for pruning.  When sizes is given, step a must add exactly (*sizes)[a] boxes.
void chains_step(const CylShape& shape, const std::vector<Partition>& labels,
                 int steps, bool vertical, const std::vector<int>* sizes,
                 std::vector<Partition>& chain, std::vector<int>& winding,
                 int used_d, int used_boxes, const ChainSink& sink) {
  const int depth = static_cast<int>(winding.size());
  if (depth == steps) {
    if (chain.back() == shape.lambda && used_d == shape.d) sink(chain, winding);
    return;
  }
  const int need_d = shape.d - used_d;
  const int need_boxes = shape.box_count() - used_boxes;
  const int remaining = steps - depth;
  const int step_cap = vertical ? shape.k : shape.n;
  const Partition& cur = chain.back();
  const int cur_weight = weight(cur);

  auto try_step = [&](const Partition& next, int delta) {
    const int gain = weight(next) + shape.n * delta - cur_weight;
    if (gain < 0 || gain > need_boxes || gain > step_cap) return;
    if (sizes && (*sizes)[depth] != gain) return;
    if (need_boxes - gain > (remaining - 1) * step_cap) return;
    const StripInfo info = cyl_strip(CylShape(shape.n, shape.k, next, delta, cur));
    if (vertical ? !info.vertical : !info.horizontal) return;
    chain.push_back(next);
    winding.push_back(delta);
    chains_step(shape, labels, steps, vertical, sizes, chain, winding,
                used_d + delta, used_boxes + gain, sink);
    winding.pop_back();
    chain.pop_back();
  };

  const int delta_max = vertical ? need_d : std::min(1, need_d);
  for (int delta = 0; delta <= delta_max; ++delta) {
    if (remaining == 1) {
      if (delta == need_d) try_step(shape.lambda, delta);
    } else {
      for (const Partition& next : labels) try_step(next, delta);
    }
  }
}

void for_each_chain(const CylShape& shape, int steps, bool vertical,
                    const std::vector<int>* sizes, const ChainSink& sink) {
  if (steps < 0) return;
  if (steps == 0) {
    if (shape.lambda == shape.mu && shape.d == 0) {
      const std::vector<Partition> chain{shape.mu};
      const std::vector<int> winding;
      sink(chain, winding);
    }
    return;
  }
  const std::vector<Partition> labels = alcove_enumerate(shape.n, shape.k);
  std::vector<Partition> chain{shape.mu};
  std::vector<int> winding;
  chain.reserve(steps + 1);
  winding.reserve(steps);
  chains_step(shape, labels, steps, vertical, sizes, chain, winding, 0, 0, sink);
}

// Distinct rearrangements of key padded with zeros to nvars entries.
long long composition_orbit(const Partition& key, int nvars) {
  std::map<int, int> mult;
  for (int v : key) ++mult[v];
  mult[0] += nvars - static_cast<int>(key.size());
  long long orbit = 1;
  for (int i = 2; i <= nvars; ++i) orbit *= i;
  for (const auto& [value, m] : mult) {
    (void)value;
    for (int i = 2; i <= m; ++i) orbit /= i;
  }
  return orbit;
}

}  // namespace

// =========================== cylindric tableaux ==============================

CylTableau::CylTableau(const CylShape& s, std::vector<Partition> c,
                       std::vector<int> w)
    : shape(s), chain(std::move(c)), winding(std::move(w)) {
  if (chain.size() != winding.size() + 1 || chain.front() != shape.mu ||
      chain.back() != shape.lambda)
    throw std::invalid_argument("chain does not connect mu to lambda");
  int total = 0;
  for (int x : winding) total += x;
  if (total != shape.d)
    throw std::invalid_argument("winding does not sum to the shape winding");
}

std::vector<int> CylTableau::weights() const {
  std::vector<int> w(winding.size());
  for (std::size_t a = 0; a < winding.size(); ++a)
    w[a] = weight(chain[a + 1]) + shape.n * winding[a] - weight(chain[a]);
  return w;
}

std::vector<CylTableau> enumerate_cyl_tableaux(const CylShape& shape,
                                               int max_entry) {
  std::vector<CylTableau> out;
  for_each_chain(shape, max_entry, false, nullptr,
                 [&](const std::vector<Partition>& chain,
                     const std::vector<int>& winding) {
                   out.emplace_back(shape, chain, winding);
                 });
  return out;
}

long long cyl_kostka(const CylShape& shape, const std::vector<int>& theta) {
  long long sum = 0;
  for (int r : theta) {
    if (r < 0) throw std::invalid_argument("weight entries must be nonnegative");
    sum += r;
  }
  if (sum != shape.box_count())
    throw std::invalid_argument("weight must fill the shape");
  long long count = 0;
  for_each_chain(shape, static_cast<int>(theta.size()), false, &theta,
                 [&](const std::vector<Partition>&, const std::vector<int>&) {
                   ++count;
                 });
  return count;
}

// =========================== cylindric functions =============================

SymPoly cyl_function(CylKind kind, const CylShape& shape, int nvars) {
  const bool vertical = kind == CylKind::mac_Pp;
  const int cap = vertical ? shape.n - 1 : shape.k;
  if (nvars < 1 || nvars > cap) return SymPoly(std::max(nvars, 0));
  const CylWeight w = kind == CylKind::hl_Q   ? CylWeight::phi
                      : kind == CylKind::hl_P ? CylWeight::psi
                                              : CylWeight::psi_prime;

  std::map<std::vector<int>, Laurent> acc;
  for_each_chain(
      shape, nvars, vertical, nullptr,
      [&](const std::vector<Partition>& chain, const std::vector<int>& winding) {
        Laurent coeff{1};
        std::vector<int> comp(nvars);
        for (int a = 0; a < nvars; ++a) {
          coeff *= cyl_step_weight(w, chain[a + 1], winding[a], chain[a],
                                   shape.n, shape.k);
          comp[a] = weight(chain[a + 1]) + shape.n * winding[a] - weight(chain[a]);
        }
        if (!coeff.is_zero()) acc[comp] += coeff;
      });

  SymPoly out(nvars);
  std::map<Partition, long long> orbit_seen;
  for (const auto& [comp, c] : acc) {
    if (c.is_zero()) continue;
    std::vector<int> srt = comp;
    std::sort(srt.begin(), srt.end(), std::greater<int>());
    ++orbit_seen[trimmed(srt)];
    if (srt == comp) out.add_term(trimmed(srt), c);
  }
  // Every weight composition must carry the coefficient of its sorted
  // representative, and every orbit must be fully populated.
  for (const auto& [comp, c] : acc) {
    if (c.is_zero()) continue;
    std::vector<int> srt = comp;
    std::sort(srt.begin(), srt.end(), std::greater<int>());
    if (c != out.coeff(trimmed(srt)))
      throw std::logic_error("cylindric expansion is not symmetric");
  }
  for (const auto& [key, seen] : orbit_seen)
    if (seen != composition_orbit(key, nvars))
      throw std::logic_error("cylindric expansion is not symmetric");
  return out;
}

}  // namespace cylfusion
