#pragma once

#include <string>
#include <vector>

namespace cylfusion {

using Partition = std::vector<int>;  // weakly decreasing, nonnegative parts

// --------------------------- basic helpers ---------------------------------

Partition trimmed(Partition p);          // drop trailing zeros
bool is_partition(const Partition& p);
Partition padded(Partition p, int len);  // append zeros up to len
int weight(const Partition& p);
int num_parts(const Partition& p);       // nonzero parts
Partition conjugate(const Partition& p);
int multiplicity(const Partition& p, int i);
bool dominates(const Partition& a, const Partition& b);  // same weight, prefix sums of a >=
bool contains(const Partition& a, const Partition& b);   // b fits inside a
std::string partition_str(const Partition& p);           // "4,3,1"; empty -> "0"
Partition parse_partition(const std::string& s);

// All partitions of n with at most maxlen parts, each part <= maxpart,
// in descending lexicographic order ((n) first when allowed).
std::vector<Partition> partitions_of(int n, int maxlen, int maxpart);

struct PartitionStats {
  Partition conj;
  std::vector<int> mult;  // m_1..m_n
  int weight = 0;
  int length = 0;
};
PartitionStats partition_stats(const Partition& lambda, int n);  // needs lambda_1 <= n

// ------------------- the label sets A_{k,n}^+ and reduced ------------------

// A_{k,n}^+: exactly k parts, each in [1, n]; lexicographically increasing order.
std::vector<Partition> alcove_enumerate(int n, int k);
// Reduced labels: parts in [1, n-1], at most k of them (trimmed form).
std::vector<Partition> alcove_enumerate_reduced(int n, int k);
bool in_alcove(const Partition& p, int n, int k);
bool in_reduced_alcove(const Partition& p, int n, int k);

enum class AlcoveMap { reduce, unreduce, star, rot };
Partition alcove_map(AlcoveMap kind, const Partition& lambda, int n, int k);

// --------------------------- cylindric shapes ------------------------------

// Loop values: p[0]_i = p_i for 1 <= i <= k extended by p[0]_{i+k} = p[0]_i - n;
// the shifted loop is p[d]_i = p[0]_{i-d}. Columns obey p'[d]_j = p'_j + d.
int loop_row(const Partition& p, int k, int n, int i);  // p[0]_i, any integer i

struct CylShape {
  int n = 0, k = 0;
  Partition lambda, mu;  // members of A_{k,n}^+
  int d = 0;
  CylShape(int n, int k, Partition lambda, int d, Partition mu);
  int box_count() const;  // |lambda| + n*d - |mu|
};

enum class StripClass { horizontal, vertical, neither, empty };

struct StripInfo {
  StripClass cls = StripClass::empty;
  bool contained = false;
  bool horizontal = false;  // every column gains at most one box
  bool vertical = false;    // every row gains at most one box
  int size = 0;
  std::vector<int> theta;   // theta_j = (lambda'_j + d) - mu'_j, j = 1..n
};

StripInfo cyl_strip(const CylShape& s);

const char* strip_class_name(StripClass c);

}  // namespace cylfusion
