#include "gpcalc/engine.hpp"

#include <sstream>
#include <stdexcept>

namespace gpc {

namespace {

std::string multiset_key(const MarkedSpace& sp, const Weight& levi_coords) {
  return "v1|wmult|" + sp.name() + "|" + weight_str(levi_coords);
}

std::string tensor_key(const MarkedSpace& sp, const Weight& a0, const Weight& b0) {
  return "v1|tensor|" + sp.name() + "|" + weight_str(a0) + "|" + weight_str(b0);
}

nlohmann::json multiset_to_json(const std::vector<WeightLine>& lines) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& l : lines)
    rows.push_back({l.nu, l.depth, l.mult.get_str()});
  return rows;
}

bool multiset_from_json(const nlohmann::json& rows, size_t rank,
                        std::vector<WeightLine>& out) {
  if (!rows.is_array()) return false;
  out.clear();
  out.reserve(rows.size());
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != 3) return false;
    WeightLine l;
    if (!row[0].is_array() || row[0].size() != rank) return false;
    if (!row[1].is_array() || row[1].size() != rank) return false;
    for (const auto& v : row[0]) {
      if (!v.is_number_integer()) return false;
      l.nu.push_back(v.get<int>());
    }
    for (const auto& v : row[1]) {
      if (!v.is_number_integer()) return false;
      l.depth.push_back(v.get<int>());
    }
    if (!row[2].is_string()) return false;
    l.mult = mpz_class(row[2].get<std::string>());
    if (l.mult <= 0) return false;
    out.push_back(std::move(l));
  }
  return !out.empty();
}

nlohmann::json sum_to_json(const IrrepSum& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [w, c] : s) rows.push_back({w, c.get_str()});
  return rows;
}

bool sum_from_json(const nlohmann::json& rows, size_t rank, IrrepSum& out) {
  if (!rows.is_array()) return false;
  out.clear();
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != 2) return false;
    if (!row[0].is_array() || row[0].size() != rank) return false;
    Weight w;
    for (const auto& v : row[0]) {
      if (!v.is_number_integer()) return false;
      w.push_back(v.get<int>());
    }
    if (!row[1].is_string()) return false;
    mpz_class c(row[1].get<std::string>());
    if (c == 0) return false;
    out.emplace(std::move(w), std::move(c));
  }
  return true;
}

}  // namespace

Engine::Engine(const MarkedSpace& sp, CacheConfig cache)
    : sp_(sp), cache_(std::move(cache)) {}

const std::vector<WeightLine>& Engine::levi_multiset(const Weight& L_dom) {
  Weight key = sp_.to_levi(L_dom);
  auto it = multiset_memo_.find(key);
  if (it != multiset_memo_.end()) return it->second;

  const std::string ckey = multiset_key(sp_, key);
  if (auto j = cache_.get(ckey)) {
    std::vector<WeightLine> lines;
    if (multiset_from_json(*j, key.size(), lines))
      return multiset_memo_.emplace(std::move(key), std::move(lines)).first->second;
  }
  auto lines = weight_multiset(sp_.levi(), key);
  cache_.put(ckey, multiset_to_json(lines));
  return multiset_memo_.emplace(std::move(key), std::move(lines)).first->second;
}

IrrepSum Engine::tensor(const Weight& a, const Weight& b) {
  if (!sp_.is_L_dominant(a) || !sp_.is_L_dominant(b))
    throw std::invalid_argument("tensor factors must be L-dominant");
  const int c0 = sp_.crossed0();
  Weight a0 = a, b0 = b;
  a0[c0] = 0;
  b0[c0] = 0;
  const int shift = a[c0] + b[c0];
  if (b0 < a0) std::swap(a0, b0);

  auto key = std::make_pair(a0, b0);
  auto it = tensor_memo_.find(key);
  if (it == tensor_memo_.end()) {
    const std::string ckey = tensor_key(sp_, a0, b0);
    IrrepSum result;
    bool loaded = false;
    if (auto j = cache_.get(ckey)) loaded = sum_from_json(*j, a0.size(), result);
    if (!loaded) {
      const bool first_smaller = sp_.levi_rank(a0) <= sp_.levi_rank(b0);
      const Weight& s = first_smaller ? a0 : b0;
      const Weight& t = first_smaller ? b0 : a0;
      result = tensor_levi_raw(sp_, levi_multiset(s), s, t);
      cache_.put(ckey, sum_to_json(result));
    }
    it = tensor_memo_.emplace(std::move(key), std::move(result)).first;
  }

  if (shift == 0) return it->second;
  IrrepSum out;
  for (const auto& [w, c] : it->second) {
    Weight ws = w;
    ws[c0] += shift;
    out.emplace(std::move(ws), c);
  }
  return out;
}

const Cohomology& Engine::bbw(const Weight& L_dom) {
  auto it = bbw_memo_.find(L_dom);
  if (it != bbw_memo_.end()) return it->second;
  return bbw_memo_.emplace(L_dom, bbw_cohomology_raw(sp_, L_dom)).first->second;
}

mpz_class Engine::euler(const IrrepSum& s) {
  mpz_class out = 0;
  for (const auto& [w, c] : s) {
    const Cohomology& h = bbw(w);
    if (h.vanishes) continue;
    if (h.degree % 2)
      out -= c * h.dim;
    else
      out += c * h.dim;
  }
  return out;
}

mpz_class Engine::chi_irr(const Weight& a, const Weight& b) {
  // chi(U_a, U_b) is invariant under twisting both sides, so shift a's crossed
  // coordinate to zero before memoizing
  const int c0 = sp_.crossed0();
  Weight a0 = a, bs = b;
  a0[c0] = 0;
  bs[c0] -= a[c0];
  auto key = std::make_pair(a0, bs);
  auto it = chi_memo_.find(key);
  if (it != chi_memo_.end()) return it->second;
  mpz_class v = euler(tensor(sp_.dual_levi(a0), bs));
  chi_memo_.emplace(std::move(key), v);
  return v;
}

}  // namespace gpc
