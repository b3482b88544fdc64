#include "gpcalc/rootdata.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gpc {

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    default: throw std::invalid_argument(std::string("unknown family letter: ") + c);
  }
}

namespace {

// Cartan matrix in the Bourbaki numbering, 0-based internally.
std::pair<std::vector<std::vector<int>>, std::vector<int>> cartan_of(Family f, int n) {
  auto bad = [&](const char* why) {
    std::ostringstream os;
    os << "no root system " << static_cast<char>(f) << n << " (" << why << ")";
    throw std::invalid_argument(os.str());
  };
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  std::vector<int> d(n, 1);

  switch (f) {
    case Family::A:
      if (n < 1) bad("rank must be >= 1");
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Family::B:
      if (n < 2) bad("rank must be >= 2");
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n is the short root
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Family::C:
      if (n < 2) bad("rank must be >= 2");
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n is the long root
      d[n - 1] = 2;
      break;
    case Family::D:
      if (n < 3) bad("rank must be >= 3");
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case Family::E:
      if (n < 6 || n > 8) bad("rank must be 6, 7 or 8");
      // chain 1-3-4-5-6(-7)(-8) with node 2 hanging off node 4
      edge(0, 2);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      edge(1, 3);
      break;
  }
  return {std::move(a), std::move(d)};
}

}  // namespace

RootSystem RootSystem::from_cartan(std::vector<std::vector<int>> cartan,
                                   std::vector<int> d) {
  const int n = static_cast<int>(cartan.size());
  if (static_cast<int>(d.size()) != n)
    throw std::invalid_argument("symmetrizer length does not match rank");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cartan[i].size()) != n)
      throw std::invalid_argument("Cartan matrix is not square");
    if (cartan[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
    if (d[i] <= 0) throw std::invalid_argument("symmetrizers must be positive");
    for (int j = 0; j < n; ++j) {
      if (i != j && cartan[i][j] > 0)
        throw std::invalid_argument("off-diagonal Cartan entries must be <= 0");
      if (cartan[i][j] * d[j] != cartan[j][i] * d[i])
        throw std::invalid_argument("symmetrizers do not symmetrize the Cartan matrix");
    }
  }
  RootSystem rs;
  rs.rank_ = n;
  rs.cartan_ = std::move(cartan);
  rs.d_ = std::move(d);
  rs.generate_positives();
  return rs;
}

const RootSystem& RootSystem::simple(Family f, int rank) {
  static std::map<std::pair<char, int>, RootSystem> cache;
  auto key = std::make_pair(static_cast<char>(f), rank);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto [a, d] = cartan_of(f, rank);
    it = cache.emplace(key, from_cartan(std::move(a), std::move(d))).first;
  }
  return it->second;
}

void RootSystem::generate_positives() {
  // Height-by-height closure with root strings: for alpha of height h and a
  // simple alpha_i, the string length upward is q = p - <alpha, alpha_i^vee>
  // where p counts how far alpha - k*alpha_i stays a root.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> layer;  // current height
  std::vector<std::vector<int>> all;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> c(rank_, 0);
    c[i] = 1;
    seen.insert(c);
    layer.push_back(c);
    all.push_back(c);
  }
  constexpr size_t kMaxRoots = 256;  // E8 has 120 positive roots
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : layer) {
      for (int i = 0; i < rank_; ++i) {
        long pair = 0;
        for (int j = 0; j < rank_; ++j) pair += static_cast<long>(c[j]) * cartan_[j][i];
        int p = 0;
        {
          std::vector<int> down = c;
          while (true) {
            down[i] -= 1;
            if (!seen.count(down)) break;
            ++p;
          }
        }
        long q = p - pair;
        if (q > 0) {
          std::vector<int> up = c;
          up[i] += 1;
          if (seen.insert(up).second) {
            next.push_back(up);
            all.push_back(up);
            if (all.size() > kMaxRoots)
              throw std::runtime_error("root closure does not terminate; invalid Cartan data");
          }
        }
      }
    }
    layer = std::move(next);
  }

  positives_.clear();
  positives_.reserve(all.size());
  for (const auto& c : all) {
    PosRoot r;
    r.root = c;
    long norm2 = 0;  // (alpha, alpha) = sum_ij c_i c_j a_ij d_j
    for (int i = 0; i < rank_; ++i) {
      if (c[i] == 0) continue;
      for (int j = 0; j < rank_; ++j) {
        if (c[j] == 0) continue;
        norm2 += static_cast<long>(c[i]) * c[j] * cartan_[i][j] * d_[j];
      }
    }
    if (norm2 <= 0 || norm2 % 2 != 0)
      throw std::runtime_error("root has invalid norm");
    r.half_norm = static_cast<int>(norm2 / 2);
    r.coroot.resize(rank_);
    r.height = 0;
    for (int i = 0; i < rank_; ++i) {
      long num = static_cast<long>(c[i]) * d_[i];
      if (num % r.half_norm != 0)
        throw std::runtime_error("coroot coordinates are not integral");
      r.coroot[i] = static_cast<int>(num / r.half_norm);
      r.height += c[i];
    }
    positives_.push_back(std::move(r));
  }
}

long RootSystem::pairing(const Weight& w, const PosRoot& r) const {
  long s = 0;
  for (int i = 0; i < rank_; ++i) s += static_cast<long>(r.coroot[i]) * w[i];
  return s;
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  Weight out = w;
  const int wi = w[i];
  if (wi == 0) return out;
  for (int j = 0; j < rank_; ++j) out[j] -= wi * cartan_[i][j];
  return out;
}

Weight RootSystem::simple_root_weight(int i) const {
  return Weight(cartan_[i].begin(), cartan_[i].end());
}

DomResult dominantize(const RootSystem& rs, Weight w) {
  if (static_cast<int>(w.size()) != rs.rank())
    throw std::invalid_argument("weight has wrong rank");
  DomResult res;
  res.length = 0;
  const long guard = 4 * static_cast<long>(rs.positives().size()) + 16;
  long steps = 0;
  while (true) {
    int neg = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (w[i] < 0) { neg = i; break; }
    }
    if (neg < 0) break;
    w = rs.reflect(w, neg);
    ++res.length;
    if (++steps > guard)
      throw std::runtime_error("dominantization did not terminate");
  }
  res.singular = false;
  for (int v : w) {
    if (v == 0) { res.singular = true; break; }
  }
  res.weight = std::move(w);
  return res;
}

Weight dual_dominant(const RootSystem& rs, const Weight& w) {
  Weight neg(w.size());
  for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
  return dominantize(rs, std::move(neg)).weight;
}

mpz_class weyl_dim(const RootSystem& rs, const Weight& lam) {
  mpz_class num = 1, den = 1;
  for (const PosRoot& r : rs.positives()) {
    long a = 0, b = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      a += static_cast<long>(r.coroot[i]) * (lam[i] + 1);
      b += r.coroot[i];
    }
    if (a <= 0) throw std::invalid_argument("weyl_dim requires a dominant weight");
    num *= a;
    den *= b;
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::runtime_error("Weyl dimension product was not integral");
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

unsigned long orbit_size(const RootSystem& rs, const Weight& w) {
  std::set<Weight> seen{w};
  std::vector<Weight> frontier{w};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& x : frontier) {
      for (int i = 0; i < rs.rank(); ++i) {
        Weight y = rs.reflect(x, i);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  return os.str();
}

}  // namespace gpc
