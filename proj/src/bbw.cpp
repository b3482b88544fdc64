#include "gpcalc/bbw.hpp"

#include <stdexcept>

namespace gpc {

Cohomology bbw_cohomology_raw(const MarkedSpace& sp, const Weight& lam) {
  if (!sp.is_L_dominant(lam))
    throw std::invalid_argument("cohomology input must be L-dominant: " + weight_str(lam));
  const RootSystem& g = sp.group();
  Weight mu(lam.size());
  for (size_t j = 0; j < lam.size(); ++j) mu[j] = lam[j] + 1;  // lam + rho
  DomResult dr = dominantize(g, std::move(mu));
  Cohomology out;
  if (dr.singular) return out;  // on a wall: all cohomology vanishes
  out.vanishes = false;
  out.degree = dr.length;
  out.rep = std::move(dr.weight);
  for (size_t j = 0; j < out.rep.size(); ++j) out.rep[j] -= 1;
  out.dim = weyl_dim(g, out.rep);
  return out;
}

}  // namespace gpc
