#pragma once

#include <map>
#include <vector>

#include "planch/halfint.hpp"

namespace planch {

// Partition with parts in non-increasing order.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int total() const;
  int length() const { return static_cast<int>(parts.size()); }
  // part value -> multiplicity
  std::map<int, int> multiplicities() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// All partitions of e in reverse-lexicographic order:
// (e), (e-1,1), ..., (1,...,1).
std::vector<Partition> partitions_of(int e);

// Data of the centralizer of a permutation of cycle type p inside the
// symmetric group on p.total() letters.
struct CentralizerData {
  // full order: prod_d d^{a_d} * a_d!
  unsigned long long order = 1;
  // order of the part that permutes equal-length blocks: prod_d a_d!
  unsigned long long effective = 1;
  // number of cycles = dimension of the fixed subtorus
  int fixed_dim = 0;
};

CentralizerData centralizer_data(const Partition& p);

// sum_{i<j} l_i l_j = (e^2 - sum l_i^2)/2
long long gamma_length(const Partition& p);

// Segment of length l; its half-width g = (l-1)/2 indexes the unramified
// twists sitting inside a generalized Steinberg representation.
struct Segment {
  int l = 1;

  explicit Segment(int length) : l(length) {
    if (l < 1) throw InputError("segment length must be >= 1");
  }
  HalfInt g() const { return HalfInt::from_twice(l - 1); }

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Overlap counts of two segments: a(k) = #{(i,j) : 0 <= i < l1, 0 <= j < l2,
// i + j - (g1 + g2) = k}, a symmetric trapezoid on k = -(g1+g2), ..., g1+g2
// stepping by 1, with maximum min(l1, l2).
std::map<HalfInt, long long> overlap_function(int l1, int l2);

}  // namespace planch
