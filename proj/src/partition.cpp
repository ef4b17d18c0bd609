#include "cylfusion/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cylfusion {

Partition trimmed(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition padded(Partition p, int len) {
  if (static_cast<int>(p.size()) < len) p.resize(len, 0);
  return p;
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int num_parts(const Partition& p) {
  int c = 0;
  for (int v : p)
    if (v > 0) ++c;
  return c;
}

Partition conjugate(const Partition& p) {
  Partition out;
  int cols = p.empty() ? 0 : p[0];
  out.reserve(cols);
  for (int j = 1; j <= cols; ++j) {
    int h = 0;
    for (int v : p)
      if (v >= j) ++h;
    out.push_back(h);
  }
  return out;
}

int multiplicity(const Partition& p, int i) {
  int c = 0;
  for (int v : p)
    if (v == i) ++c;
  return c;
}

bool dominates(const Partition& a, const Partition& b) {
  if (weight(a) != weight(b)) return false;
  int sa = 0, sb = 0;
  size_t len = std::max(a.size(), b.size());
  for (size_t i = 0; i < len; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

bool contains(const Partition& a, const Partition& b) {
  for (size_t i = 0; i < b.size(); ++i)
    if (b[i] > (i < a.size() ? a[i] : 0)) return false;
  return true;
}

std::string partition_str(const Partition& p) {
  Partition q = trimmed(p);
  if (q.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < q.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(q[i]);
  }
  return out;
}

Partition parse_partition(const std::string& s) {
  Partition out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    size_t pos = tok.find_first_not_of(" \t");
    if (pos == std::string::npos) continue;
    out.push_back(std::stoi(tok));
  }
  out = trimmed(out);
  if (!is_partition(out)) throw std::invalid_argument("not weakly decreasing: " + s);
  return out;
}

static void partitions_rec(int n, int maxlen, int maxpart, Partition& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (maxlen == 0) return;
  int cap = std::min(n, maxpart);
  for (int part = cap; part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(n - part, maxlen - 1, part, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n, int maxlen, int maxpart) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  partitions_rec(n, maxlen, maxpart, cur, out);
  return out;
}

PartitionStats partition_stats(const Partition& lambda, int n) {
  Partition l = trimmed(lambda);
  if (!is_partition(l)) throw std::invalid_argument("not a partition");
  if (!l.empty() && l[0] > n) throw std::invalid_argument("part exceeds n");
  PartitionStats st;
  st.conj = conjugate(l);
  st.mult.assign(n, 0);
  for (int v : l) ++st.mult[v - 1];
  st.weight = weight(l);
  st.length = static_cast<int>(l.size());
  return st;
}

// ----------------------------- label sets ----------------------------------

static void alcove_rec(int n, int k, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int part = 1; part <= maxpart; ++part) {
    cur.push_back(part);
    alcove_rec(n, k, part, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> alcove_enumerate(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("alcove needs n >= 1, k >= 0");
  std::vector<Partition> out;
  Partition cur;
  alcove_rec(n, k, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> alcove_enumerate_reduced(int n, int k) {
  std::vector<Partition> out;
  for (const Partition& p : alcove_enumerate(n, k))
    out.push_back(alcove_map(AlcoveMap::reduce, p, n, k));
  return out;
}

bool in_alcove(const Partition& p, int n, int k) {
  if (static_cast<int>(p.size()) != k) return false;
  if (!is_partition(p)) return false;
  for (int v : p)
    if (v < 1 || v > n) return false;
  return true;
}

bool in_reduced_alcove(const Partition& p, int n, int k) {
  Partition q = trimmed(p);
  if (!is_partition(q) || static_cast<int>(q.size()) > k) return false;
  for (int v : q)
    if (v > n - 1) return false;
  return true;
}

Partition alcove_map(AlcoveMap kind, const Partition& lambda, int n, int k) {
  switch (kind) {
    case AlcoveMap::reduce: {
      if (!in_alcove(lambda, n, k)) throw std::invalid_argument("label not in A_{k,n}^+");
      Partition out;
      for (int v : lambda)
        if (v != n) out.push_back(v);
      return out;
    }
    case AlcoveMap::unreduce: {
      Partition q = trimmed(lambda);
      if (!in_reduced_alcove(q, n, k)) throw std::invalid_argument("label not reduced");
      Partition out(static_cast<size_t>(k) - q.size(), n);
      out.insert(out.end(), q.begin(), q.end());
      return out;
    }
    case AlcoveMap::star: {
      if (!in_alcove(lambda, n, k)) throw std::invalid_argument("label not in A_{k,n}^+");
      Partition rev;
      for (int i = k - 1; i >= 0; --i)
        if (lambda[i] != n) rev.push_back(n - lambda[i]);
      return alcove_map(AlcoveMap::unreduce, rev, n, k);
    }
    case AlcoveMap::rot: {
      if (!in_alcove(lambda, n, k)) throw std::invalid_argument("label not in A_{k,n}^+");
      std::vector<int> m(n + 1, 0);
      for (int v : lambda) ++m[v];
      Partition out;
      for (int i = n; i >= 1; --i) {
        int src = i == n ? 1 : i + 1;  // m_i(rot) = m_{i+1 mod n}
        out.insert(out.end(), m[src], i);
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

// --------------------------- cylindric shapes ------------------------------

int loop_row(const Partition& p, int k, int n, int i) {
  // period k in the index, each period drops by n
  long q = i > 0 ? (i - 1) / k : (i - k) / k;  // floor((i-1)/k)
  int r = static_cast<int>(i - 1 - q * k);     // (i-1) mod k in [0, k)
  return p[r] - static_cast<int>(q) * n;
}

CylShape::CylShape(int n_, int k_, Partition lambda_, int d_, Partition mu_)
    : n(n_), k(k_), lambda(std::move(lambda_)), mu(std::move(mu_)), d(d_) {
  if (!in_alcove(lambda, n, k)) throw std::invalid_argument("lambda not in A_{k,n}^+");
  if (!in_alcove(mu, n, k)) throw std::invalid_argument("mu not in A_{k,n}^+");
  if (d < 0) throw std::invalid_argument("winding degree must be >= 0");
}

int CylShape::box_count() const { return weight(lambda) + n * d - weight(mu); }

StripInfo cyl_strip(const CylShape& s) {
  StripInfo info;
  Partition lc = padded(conjugate(s.lambda), s.n);
  Partition mc = padded(conjugate(s.mu), s.n);
  info.theta.resize(s.n);
  bool nonneg = true, colsmall = true;
  for (int j = 0; j < s.n; ++j) {
    info.theta[j] = lc[j] + s.d - mc[j];
    if (info.theta[j] < 0) nonneg = false;
    if (info.theta[j] > 1) colsmall = false;
  }
  bool rowsmall = true, rownonneg = true;
  for (int i = 1; i <= s.k; ++i) {
    int diff = loop_row(s.lambda, s.k, s.n, i - s.d) - loop_row(s.mu, s.k, s.n, i);
    if (diff < 0) rownonneg = false;
    if (diff > 1) rowsmall = false;
  }
  info.contained = nonneg && rownonneg;
  info.size = s.box_count();
  info.horizontal = info.contained && colsmall;
  info.vertical = info.contained && rowsmall;
  if (!info.contained) {
    info.cls = StripClass::neither;
    info.size = 0;
  } else if (info.size == 0) {
    info.cls = StripClass::empty;
  } else if (info.horizontal) {
    info.cls = StripClass::horizontal;
  } else if (info.vertical) {
    info.cls = StripClass::vertical;
  } else {
    info.cls = StripClass::neither;
  }
  return info;
}

const char* strip_class_name(StripClass c) {
  switch (c) {
    case StripClass::horizontal: return "horizontal";
    case StripClass::vertical: return "vertical";
    case StripClass::neither: return "neither";
    case StripClass::empty: return "empty";
  }
  return "?";
}

}  // namespace cylfusion
