#include "gpcalc/charring.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace gpc {

MarkedSpace::MarkedSpace(Family f, int rank, int crossed)
    : group_(&RootSystem::simple(f, rank)), family_(f), crossed_(crossed - 1) {
  if (crossed < 1 || crossed > rank)
    throw std::invalid_argument("crossed node out of range");
  for (int i = 0; i < rank; ++i)
    if (i != crossed_) levi_nodes_.push_back(i);

  levi_pos_of_.assign(rank, -1);
  for (size_t p = 0; p < levi_nodes_.size(); ++p) levi_pos_of_[levi_nodes_[p]] = static_cast<int>(p);

  const int lr = static_cast<int>(levi_nodes_.size());
  std::vector<std::vector<int>> lc(lr, std::vector<int>(lr));
  std::vector<int> ld(lr);
  for (int i = 0; i < lr; ++i) {
    ld[i] = group_->symmetrizers()[levi_nodes_[i]];
    for (int j = 0; j < lr; ++j) lc[i][j] = group_->cartan()[levi_nodes_[i]][levi_nodes_[j]];
  }
  levi_ = RootSystem::from_cartan(std::move(lc), std::move(ld));

  for (const PosRoot& r : group_->positives())
    if (r.root[crossed_] == 0) levi_positives_.push_back(r);

  dim_ = static_cast<int>(group_->positives().size() - levi_positives_.size());

  // 2rho - 2rho_L is iota * omega_c; evaluate at the crossed coroot
  long s = 0;
  for (const PosRoot& r : levi_positives_) {
    for (int j = 0; j < rank; ++j)
      s += static_cast<long>(r.root[j]) * group_->cartan()[j][crossed_];
  }
  iota_ = static_cast<int>(2 - s);
}

const MarkedSpace& MarkedSpace::get(Family f, int rank, int crossed) {
  static std::map<std::tuple<char, int, int>, MarkedSpace> cache;
  auto key = std::make_tuple(static_cast<char>(f), rank, crossed);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, MarkedSpace(f, rank, crossed)).first;
  return it->second;
}

const MarkedSpace& MarkedSpace::parse(const std::string& name) {
  // accepted shape: <family><rank>/P<node>, e.g. D6/P6
  auto fail = [&]() {
    throw std::invalid_argument("cannot parse space name '" + name +
                                "' (expected e.g. D6/P6)");
  };
  if (name.size() < 5) fail();
  size_t slash = name.find('/');
  if (slash == std::string::npos || slash + 2 >= name.size() || name[slash + 1] != 'P') fail();
  Family f = Family::A;
  try {
    f = family_from_char(name[0]);
  } catch (const std::invalid_argument&) {
    fail();
  }
  auto digits = [&](const std::string& s) {
    if (s.empty()) fail();
    for (char c : s)
      if (c < '0' || c > '9') fail();
    return std::stoi(s);
  };
  int rank = digits(name.substr(1, slash - 1));
  int crossed = digits(name.substr(slash + 2));
  try {
    return get(f, rank, crossed);
  } catch (const std::invalid_argument&) {
    fail();
  }
  throw std::logic_error("unreachable");
}

std::string MarkedSpace::name() const {
  std::ostringstream os;
  os << static_cast<char>(family_) << group_->rank() << "/P" << crossed();
  return os.str();
}

Weight MarkedSpace::to_levi(const Weight& w) const {
  Weight out(levi_nodes_.size());
  for (size_t p = 0; p < levi_nodes_.size(); ++p) out[p] = w[levi_nodes_[p]];
  return out;
}

Weight MarkedSpace::from_levi(const Weight& wl, int crossed_coord) const {
  Weight out(group_->rank());
  for (size_t p = 0; p < levi_nodes_.size(); ++p) out[levi_nodes_[p]] = wl[p];
  out[crossed_] = crossed_coord;
  return out;
}

bool MarkedSpace::is_L_dominant(const Weight& w) const {
  if (static_cast<int>(w.size()) != group_->rank()) return false;
  for (int i : levi_nodes_)
    if (w[i] < 0) return false;
  return true;
}

DomResult MarkedSpace::L_dominantize(Weight w) const {
  if (static_cast<int>(w.size()) != group_->rank())
    throw std::invalid_argument("weight has wrong rank");
  DomResult res;
  const long guard = 4 * static_cast<long>(group_->positives().size()) + 16;
  long steps = 0;
  while (true) {
    int neg = -1;
    for (int i : levi_nodes_) {
      if (w[i] < 0) { neg = i; break; }
    }
    if (neg < 0) break;
    w = group_->reflect(w, neg);
    ++res.length;
    if (++steps > guard)
      throw std::runtime_error("Levi dominantization did not terminate");
  }
  res.singular = false;
  for (int i : levi_nodes_)
    if (w[i] == 0) { res.singular = true; break; }
  res.weight = std::move(w);
  return res;
}

Weight MarkedSpace::dual_levi(const Weight& w) const {
  Weight neg(w.size());
  for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
  return L_dominantize(std::move(neg)).weight;
}

mpz_class MarkedSpace::levi_rank(const Weight& lam) const {
  mpz_class num = 1, den = 1;
  for (const PosRoot& r : levi_positives_) {
    long a = 0, b = 0;
    for (int i = 0; i < group_->rank(); ++i) {
      a += static_cast<long>(r.coroot[i]) * (lam[i] + 1);
      b += r.coroot[i];
    }
    if (a <= 0) throw std::invalid_argument("levi_rank requires an L-dominant weight");
    num *= a;
    den *= b;
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::runtime_error("Levi dimension product was not integral");
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

Weight MarkedSpace::twist(Weight w, int t) const {
  w[crossed_] += t;
  return w;
}

Weight MarkedSpace::partition_weight(const std::vector<int>& partition) const {
  const int n = group_->rank();
  // the dictionary is for the chain Levi 1..n-1 (D_n marked at the last node)
  if (crossed_ != n - 1)
    throw std::invalid_argument("partition dictionary requires the last node crossed");
  for (size_t p = 0; p + 1 < levi_nodes_.size(); ++p) {
    if (levi_.cartan()[p][p + 1] != -1 || levi_.cartan()[p + 1][p] != -1)
      throw std::invalid_argument("partition dictionary requires a type A Levi");
    for (size_t q = p + 2; q < levi_nodes_.size(); ++q)
      if (levi_.cartan()[p][q] != 0)
        throw std::invalid_argument("partition dictionary requires a type A Levi");
  }
  if (static_cast<int>(partition.size()) > n)
    throw std::invalid_argument("partition is longer than the fiber rank");
  for (size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] < 0 || (i + 1 < partition.size() && partition[i] < partition[i + 1]))
      throw std::invalid_argument("partition entries must be non-increasing and >= 0");
  }
  // e_1 = omega_1, e_{i+1} = e_i - alpha_i
  Weight e(n, 0), out(n, 0);
  e[0] = 1;
  for (size_t i = 0; i < partition.size(); ++i) {
    if (i > 0) {
      Weight alpha = group_->simple_root_weight(static_cast<int>(i) - 1);
      for (int j = 0; j < n; ++j) e[j] -= alpha[j];
    }
    for (int j = 0; j < n; ++j) out[j] += partition[i] * e[j];
  }
  return out;
}

std::vector<WeightLine> weight_multiset(const RootSystem& rs, const Weight& lam) {
  const int n = rs.rank();
  if (static_cast<int>(lam.size()) != n)
    throw std::invalid_argument("weight has wrong rank");
  for (int v : lam)
    if (v < 0) throw std::invalid_argument("weight_multiset requires a dominant weight");
  const auto& d = rs.symmetrizers();

  // BFS downward from lam; keep points with (lam+nu, lam-nu) >= 0. depth_of
  // stores the root coordinates of lam - nu.
  std::map<Weight, std::vector<int>> depth_of;
  depth_of[lam] = std::vector<int>(n, 0);
  std::vector<Weight> frontier{lam};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& nu : frontier) {
      const auto& c = depth_of[nu];
      for (int i = 0; i < n; ++i) {
        Weight nu2 = nu;
        for (int j = 0; j < n; ++j) nu2[j] -= rs.cartan()[i][j];
        std::vector<int> c2 = c;
        c2[i] += 1;
        long s = 0;
        for (int j = 0; j < n; ++j) s += static_cast<long>(c2[j]) * d[j] * (lam[j] + nu2[j]);
        if (s < 0) continue;
        if (depth_of.emplace(nu2, std::move(c2)).second) next.push_back(std::move(nu2));
      }
    }
    frontier = std::move(next);
  }

  // dominant points below lam are exactly the dominant weights of the module
  struct Dom { Weight mu; std::vector<int> c; long total; };
  std::vector<Dom> doms;
  for (const auto& [nu, c] : depth_of) {
    if (std::all_of(nu.begin(), nu.end(), [](int v) { return v >= 0; })) {
      long t = 0;
      for (int v : c) t += v;
      doms.push_back({nu, c, t});
    }
  }
  std::stable_sort(doms.begin(), doms.end(),
                   [](const Dom& x, const Dom& y) { return x.total < y.total; });

  // fundamental coordinates of each positive root, for walking mu + k*alpha
  std::vector<Weight> root_fund;
  for (const PosRoot& r : rs.positives()) {
    Weight f(n, 0);
    for (int i = 0; i < n; ++i) {
      if (r.root[i] == 0) continue;
      for (int j = 0; j < n; ++j) f[j] += r.root[i] * rs.cartan()[i][j];
    }
    root_fund.push_back(std::move(f));
  }

  std::map<Weight, mpz_class> dom_mult;
  for (const Dom& dm : doms) {
    if (dm.total == 0) {
      dom_mult[dm.mu] = 1;
      continue;
    }
    // Freudenthal: ((lam+rho)^2 - (mu+rho)^2) m_mu = 2 sum_{alpha>0} sum_{k>=1}
    // m_{mu+k*alpha} (mu+k*alpha, alpha). All products reduce to integers via
    // (x, alpha) = sum_j calpha_j d_j x_j.
    long denom = 0;
    for (int j = 0; j < n; ++j)
      denom += static_cast<long>(dm.c[j]) * d[j] * (lam[j] + dm.mu[j] + 2);
    if (denom <= 0) throw std::runtime_error("Freudenthal denominator not positive");
    mpz_class rhs = 0;
    for (size_t r = 0; r < rs.positives().size(); ++r) {
      const auto& ca = rs.positives()[r].root;
      const auto& fa = root_fund[r];
      Weight xi = dm.mu;
      std::vector<int> xc = dm.c;
      for (int k = 1;; ++k) {
        bool below = true;
        for (int j = 0; j < n; ++j) {
          xi[j] += fa[j];
          xc[j] -= ca[j];
          if (xc[j] < 0) below = false;
        }
        if (!below) break;  // left the cone under lam; the string cannot return
        auto dr = dominantize(rs, xi);
        auto it = dom_mult.find(dr.weight);
        if (it == dom_mult.end()) break;  // weight strings are gap-free
        long ip = 0;
        for (int j = 0; j < n; ++j) ip += static_cast<long>(ca[j]) * d[j] * xi[j];
        rhs += it->second * ip;
      }
    }
    rhs *= 2;
    mpz_class m;
    if (!mpz_divisible_ui_p(rhs.get_mpz_t(), static_cast<unsigned long>(denom)))
      throw std::runtime_error("Freudenthal multiplicity not integral");
    mpz_divexact_ui(m.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(denom));
    if (m <= 0) throw std::runtime_error("Freudenthal multiplicity not positive");
    dom_mult[dm.mu] = std::move(m);
  }

  std::vector<WeightLine> out;
  out.reserve(depth_of.size());
  for (const auto& [nu, c] : depth_of) {
    auto dr = dominantize(rs, nu);
    auto it = dom_mult.find(dr.weight);
    if (it == dom_mult.end()) continue;  // pruned-in lattice point, not a weight
    out.push_back({nu, c, it->second});
  }
  return out;
}

IrrepSum tensor_levi_raw(const MarkedSpace& sp,
                         const std::vector<WeightLine>& multiset_of_a,
                         const Weight& a, const Weight& b) {
  const RootSystem& g = sp.group();
  const int n = g.rank();
  const int c0 = sp.crossed0();
  if (!sp.is_L_dominant(a) || !sp.is_L_dominant(b))
    throw std::invalid_argument("tensor factors must be L-dominant");

  IrrepSum out;
  for (const WeightLine& line : multiset_of_a) {
    // ambient coordinates of the weight: Levi part from the line, crossed part
    // recovered from the depth vector since nu = a - sum_j depth_j alpha_j
    long cc = a[c0];
    for (size_t p = 0; p < sp.levi_nodes().size(); ++p)
      cc -= static_cast<long>(line.depth[p]) * g.cartan()[sp.levi_nodes()[p]][c0];
    Weight nu = sp.from_levi(line.nu, static_cast<int>(cc));

    Weight mu(n);
    for (int j = 0; j < n; ++j) mu[j] = b[j] + 1 + nu[j];
    DomResult dr = sp.L_dominantize(std::move(mu));
    if (dr.singular) continue;
    Weight w = std::move(dr.weight);
    for (int j = 0; j < n; ++j) w[j] -= 1;
    if (dr.length % 2)
      out[w] -= line.mult;
    else
      out[w] += line.mult;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

IrrepSum tensor_levi_uncached(const MarkedSpace& sp, const Weight& a, const Weight& b) {
  const bool a_smaller = sp.levi_rank(a) <= sp.levi_rank(b);
  const Weight& s = a_smaller ? a : b;
  const Weight& t = a_smaller ? b : a;
  auto lines = weight_multiset(sp.levi(), sp.to_levi(s));
  return tensor_levi_raw(sp, lines, s, t);
}

}  // namespace gpc
