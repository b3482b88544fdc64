#pragma once

// Character arithmetic for a marked Dynkin diagram G/P (maximal parabolic).
// Irreducible homogeneous bundles are indexed by L-dominant weights: all
// coordinates nonnegative except possibly the crossed one, which records the
// twist by the ample generator O(1).

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "gpcalc/rootdata.hpp"

namespace gpc {

// Formal Z-linear combination of irreducible bundles, keyed by L-dominant weight.
using IrrepSum = std::map<Weight, mpz_class>;

class MarkedSpace {
 public:
  // crossed is 1-based (Bourbaki node number)
  static const MarkedSpace& get(Family f, int rank, int crossed);
  // "D6/P6", "E7/P7", ...
  static const MarkedSpace& parse(const std::string& name);

  std::string name() const;

  const RootSystem& group() const { return *group_; }
  const RootSystem& levi() const { return levi_; }
  int crossed() const { return crossed_ + 1; }
  int crossed0() const { return crossed_; }
  const std::vector<int>& levi_nodes() const { return levi_nodes_; }  // 0-based
  const std::vector<PosRoot>& levi_positives() const { return levi_positives_; }

  // dimension of G/P and the index: sum of roots outside the Levi = iota * omega_c
  int dim() const { return dim_; }
  int iota() const { return iota_; }

  Weight to_levi(const Weight& w) const;
  // wl in Levi coordinates plus the crossed coordinate
  Weight from_levi(const Weight& wl, int crossed_coord) const;

  bool is_L_dominant(const Weight& w) const;

  // Reflects at negative Levi coordinates only; the crossed node is never used.
  DomResult L_dominantize(Weight w) const;

  // Highest weight of the dual bundle: L-dominant representative of -w.
  Weight dual_levi(const Weight& w) const;

  // Fiber dimension of the irreducible bundle U_w.
  mpz_class levi_rank(const Weight& L_dom) const;

  Weight twist(Weight w, int t) const;
  int twist_of(const Weight& w) const { return w[crossed_]; }

  // Type-A dictionary: partition (m1 >= m2 >= ...) -> sum m_i e_i where
  // e_1 = omega_1 and e_{i+1} = e_i - alpha_i. Requires the Levi to be the
  // chain 1..rank-1, as it is for D_n marked at node n.
  Weight partition_weight(const std::vector<int>& partition) const;

 private:
  MarkedSpace(Family f, int rank, int crossed);

  const RootSystem* group_;
  RootSystem levi_;
  Family family_;
  int crossed_;                    // 0-based
  std::vector<int> levi_nodes_;    // 0-based ambient indices, ascending
  std::vector<int> levi_pos_of_;   // ambient index -> position in levi_nodes_, or -1
  std::vector<PosRoot> levi_positives_;  // ambient-coordinate copies
  int dim_ = 0;
  int iota_ = 0;
};

// One weight line of an irreducible: nu in fundamental coordinates of rs,
// depth = root coordinates of lambda - nu, and its multiplicity.
struct WeightLine {
  Weight nu;
  std::vector<int> depth;
  mpz_class mult;
};

// Full weight multiset of the irreducible rs-module with highest weight lam.
// BFS downward from lam with the integral norm prune, Freudenthal recursion on
// the dominant subset, Weyl-invariant fill-in for the rest.
std::vector<WeightLine> weight_multiset(const RootSystem& rs, const Weight& lam);

// Tensor product decomposition of irreducible bundles U_a (x) U_b by Klimyk's
// formula, expanding the factor with the smaller fiber. No memoization here;
// Engine wraps this with the twist-normalized cache.
IrrepSum tensor_levi_raw(const MarkedSpace& sp,
                         const std::vector<WeightLine>& multiset_of_a,
                         const Weight& a, const Weight& b);

// Convenience entry that computes the multiset itself (tests, small cases).
IrrepSum tensor_levi_uncached(const MarkedSpace& sp, const Weight& a, const Weight& b);

}  // namespace gpc
