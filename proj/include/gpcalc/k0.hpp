#pragma once

// K0 classes of G/P as integer combinations of irreducible bundle classes,
// with the Euler pairing, Gram verification for candidate exceptional
// sequences, and the orthogonalization operators used to build residual
// objects.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "gpcalc/engine.hpp"

namespace gpc {

struct K0Class {
  IrrepSum terms;
};

K0Class irreducible_class(const Weight& w);
K0Class k0_add(const K0Class& a, const K0Class& b);
K0Class k0_sub(const K0Class& a, const K0Class& b);
K0Class k0_scaled(const mpz_class& c, const K0Class& a);
K0Class k0_twist(const MarkedSpace& sp, const K0Class& a, int t);
K0Class k0_dual(const MarkedSpace& sp, const K0Class& a);
mpz_class k0_rank(const MarkedSpace& sp, const K0Class& a);

mpz_class chi_classes(Engine& eng, const K0Class& e, const K0Class& f);

struct NamedObject {
  std::string label;  // base name, e.g. "P'"
  int twist = 0;      // already applied inside cls
  K0Class cls;
};
using Collection = std::vector<NamedObject>;

std::string object_label(const NamedObject& o);  // "P'(3)", "O_X"

// copy of a block with an extra twist by O(t)
Collection twisted_block(const MarkedSpace& sp, const Collection& block, int t);
// (A, A(1), B(2), ..., B(last)): the standard two-block staircase layout
Collection staircase_layout(const MarkedSpace& sp, const Collection& a,
                            const Collection& b, int last);
// (block(lo), ..., block(hi))
Collection block_range(const MarkedSpace& sp, const Collection& block, int lo, int hi);

struct GramViolation {
  int i = 0, j = 0;
  mpz_class value;
};

struct GramReport {
  int length = 0;
  unsigned long expected_rank = 0;
  bool pass = false;  // diag == 1 and strict lower triangle == 0
  std::vector<std::vector<mpz_class>> gram;  // gram[i][j] = chi(E_i, E_j)
  std::vector<GramViolation> violations;
};

GramReport verify_numerical_exceptional(Engine& eng, const Collection& col);

struct ProjStep {
  std::string label;  // base label of the object used
  int twist = 0;      // twist of the correction term, layout twist minus index
  mpz_class coeff;    // signed coefficient as it appears in the final sum
};

struct Projection {
  K0Class result;
  std::vector<ProjStep> steps;
};

// Orthogonalizes seed against the listed objects in order: each step subtracts
// (chi(E, R) / chi(E, E(-index))) * [E(-index)]. The denominator must be +-1;
// afterwards chi(E, result) == 0 is checked for every listed E. Throws if the
// denominator is not a unit or the postcondition fails.
Projection project_orthogonal(Engine& eng, const K0Class& seed,
                              const Collection& against, int index);

// Left mutation through an exceptional sequence, processed in reverse order:
// subtracts chi(E, R) * [E]. Requires chi(E, E) == 1 for each E; checks
// chi(E, result) == 0 afterwards.
K0Class mutate_left(Engine& eng, const K0Class& g, const Collection& through);

bool completely_orthogonal(Engine& eng, const K0Class& a, const K0Class& b);

// Equality test by pairing against a spanning collection; valid because the
// Euler form on K0(G/P) is unimodular.
bool k0_equal_against_basis(Engine& eng, const K0Class& a, const K0Class& b,
                            const Collection& basis);

// Named generators of the shipped collections. Cheap ones are assembled
// directly; residual objects are computed by their defining projections on
// first request. Throws on unknown names.
K0Class named_class(Engine& eng, const std::string& name);
// names available for the engine's space
std::vector<std::string> named_class_names(const MarkedSpace& sp);

}  // namespace gpc
