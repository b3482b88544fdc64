#pragma once

// Memoized computation front end for one marked space: weight multisets,
// tensor decompositions, cohomology, and Euler pairings. Tensor products and
// multisets are normalized for twist equivariance before hitting the in-memory
// memo or the persistent cache, so O(t)-shifted queries share one entry.

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "gpcalc/bbw.hpp"
#include "gpcalc/cache.hpp"
#include "gpcalc/charring.hpp"

namespace gpc {

class Engine {
 public:
  explicit Engine(const MarkedSpace& sp, CacheConfig cache = CacheConfig::disabled());

  const MarkedSpace& space() const { return sp_; }

  // weight multiset of the Levi irreducible with this highest weight
  // (crossed coordinate irrelevant and ignored)
  const std::vector<WeightLine>& levi_multiset(const Weight& L_dom);

  IrrepSum tensor(const Weight& a, const Weight& b);

  const Cohomology& bbw(const Weight& L_dom);

  mpz_class euler(const IrrepSum& s);

  // chi(U_a, U_b) = euler(U_a^vee (x) U_b)
  mpz_class chi_irr(const Weight& a, const Weight& b);

 private:
  const MarkedSpace& sp_;
  Cache cache_;
  std::map<Weight, std::vector<WeightLine>> multiset_memo_;  // key: Levi coordinates
  std::map<std::pair<Weight, Weight>, IrrepSum> tensor_memo_;  // crossed coords zeroed
  std::map<Weight, Cohomology> bbw_memo_;
  std::map<std::pair<Weight, Weight>, mpz_class> chi_memo_;
};

}  // namespace gpc
