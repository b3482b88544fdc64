#pragma once

// Sheaf cohomology of irreducible homogeneous bundles on G/P by the
// Borel-Weil-Bott reflection walk: at most one degree survives, or nothing.

#include <gmpxx.h>

#include "gpcalc/charring.hpp"
#include "gpcalc/rootdata.hpp"

namespace gpc {

struct Cohomology {
  bool vanishes = true;
  int degree = -1;     // the single surviving degree, if any
  Weight rep;          // highest weight of H^degree as a G-module
  mpz_class dim = 0;   // its dimension
};

// lam must be L-dominant; throws otherwise.
Cohomology bbw_cohomology_raw(const MarkedSpace& sp, const Weight& lam);

}  // namespace gpc
