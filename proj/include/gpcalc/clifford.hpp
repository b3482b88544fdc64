#pragma once

// Fiberwise Clifford-algebra computation over the big open cell: the split
// quadratic space V = U + U^dual of dimension 2n acts on the spinor space
// S = wedge U^dual by wedging with U^dual vectors and contracting with U
// vectors, so eta(x)eta(y) + eta(y)eta(x) = <x,y>. The tensor
//   t(w (x) xi) = sum over permutations of sgn * eta-chain applied to w,
// for w in U^dual and xi in wedge^k V (k = 2 for n = 5, k = 3 for n = 6),
// is flattened to an integer matrix; ranks and kernels certify the exactness
// ledger and the semisimplification of the kernel bundle.

#include <map>
#include <vector>

#include "gpcalc/intmat.hpp"

namespace gpc {
namespace cliff {

// V basis indices: 0..n-1 are u_1..u_n, n..2n-1 are w_1..w_n.
std::vector<std::vector<int>> kv_monomials(int n, int k);

// eta(v) acting on the spinor monomial with index set `mask` (bit i = w_{i+1}).
// Returns {sign, new_mask}; sign 0 means the term dies.
std::pair<int, unsigned> eta(int n, int v, unsigned mask);

// Fully alternated action on the weight-one spinor w_{f+1}; keys are masks.
std::map<unsigned, long> t_apply(int n, int f, const std::vector<int>& mono);

// Flattened action: rows indexed by (f, spinor monomial of the target parity),
// columns by wedge^k V monomials. k and the parity are implied by n.
IntMat action_matrix(int n);

struct Ledger {
  int n = 0;
  int k = 0;
  std::vector<long> term_dims;  // complex terms, left to right, cokernel last for n=6
  long alternating_sum = 0;
  long rank_action = 0;    // rank of the flattened action
  long kernel_rows = 0;    // dim ker on the (f, spinor) side = first term
  long kernel_cols = 0;    // dim ker on the wedge^k V side
  long zero_columns = 0;   // monomial columns annihilated outright
  long rank_collapse = 0;  // rank of the collapse map (n=6: into the cokernel T)
  bool compose_zero = false;
  bool middle_exact = false;
  bool graded = false;  // no matrix entry couples mismatched torus weights
  bool pass = false;
};

Ledger verify(int n);  // n must be 5 or 6

// Torus weights (in Z^n) of a basis of ker(action^T), i.e. of the subbundle
// fiber inside U^dual (x) S^dual, with multiplicities. Grading lets each
// weight block be eliminated independently.
std::map<std::vector<int>, long> kernel_weight_multiset(int n);

}  // namespace cliff
}  // namespace gpc
