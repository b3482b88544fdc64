#pragma once

// Finite root systems of types A-E in the Bourbaki numbering, with just enough
// structure for weight combinatorics: Cartan matrix, symmetrizers, and the full
// list of positive roots carrying both root and coroot coordinates.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gpc {

// Weights are always written in fundamental-weight coordinates.
using Weight = std::vector<int>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E' };

Family family_from_char(char c);

struct PosRoot {
  std::vector<int> root;    // coordinates in the simple-root basis
  std::vector<int> coroot;  // <x, root^vee> = sum_i coroot[i] * x[i]
  int half_norm = 1;        // (root,root)/2 with short roots at 1
  int height = 0;           // sum of root[]
};

class RootSystem {
 public:
  // Cached lookup of the irreducible systems (A1..E8 within sane rank bounds).
  static const RootSystem& simple(Family f, int rank);

  // Builds from an arbitrary (possibly decomposable) valid Cartan matrix.
  // d[i] = (alpha_i, alpha_i)/2 must symmetrize it: a[i][j]*d[j] == a[j][i]*d[i].
  static RootSystem from_cartan(std::vector<std::vector<int>> cartan,
                                std::vector<int> d);

  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<int>& symmetrizers() const { return d_; }
  const std::vector<PosRoot>& positives() const { return positives_; }

  // <w, alpha^vee> for a stored positive root
  long pairing(const Weight& w, const PosRoot& r) const;

  // simple reflection s_i in weight coordinates: w - w[i] * alpha_i
  Weight reflect(const Weight& w, int i) const;

  // fundamental coordinates of alpha_i, i.e. row i of the Cartan matrix
  Weight simple_root_weight(int i) const;

 private:
  void generate_positives();

  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<PosRoot> positives_;
};

struct DomResult {
  Weight weight;        // dominant representative of the orbit
  int length = 0;       // reflections used; equals #{alpha>0 : <w,alpha^vee> < 0}
  bool singular = false;  // dominant representative lies on a wall
};

// Repeatedly reflects at the lowest-index negative coordinate.
DomResult dominantize(const RootSystem& rs, Weight w);

// Highest weight of the dual of the irreducible with highest weight w.
Weight dual_dominant(const RootSystem& rs, const Weight& w);

// Weyl dimension formula, exact.
mpz_class weyl_dim(const RootSystem& rs, const Weight& dominant);

// Size of the Weyl orbit of w (breadth-first closure under simple reflections).
unsigned long orbit_size(const RootSystem& rs, const Weight& w);

std::string weight_str(const Weight& w);

}  // namespace gpc
