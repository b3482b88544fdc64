#include "gpcalc/collection_io.hpp"

#include <fstream>

namespace gpc {

const Collection* CollectionFile::block(const std::string& name) const {
  for (const auto& [n, b] : blocks)
    if (n == name) return &b;
  return nullptr;
}

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& ptr, const std::string& what) {
  throw SchemaError(ptr, what);
}

const json& need(const json& j, const char* key, const std::string& ptr) {
  if (!j.is_object()) fail(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(ptr, std::string("missing key '") + key + "'");
  return *it;
}

int need_int(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) fail(ptr, "expected an integer");
  return j.get<int>();
}

mpz_class need_coeff(const json& j, const std::string& ptr) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::exception&) {
      fail(ptr, "string is not a decimal integer");
    }
  }
  fail(ptr, "expected an integer or a decimal string");
}

Weight need_weight(const json& j, int rank, const MarkedSpace& sp, const std::string& ptr) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    fail(ptr, "expected an array of " + std::to_string(rank) + " integers");
  Weight w;
  for (size_t i = 0; i < j.size(); ++i)
    w.push_back(need_int(j[i], ptr + "/" + std::to_string(i)));
  if (!sp.is_L_dominant(w)) fail(ptr, "weight is not L-dominant: " + weight_str(w));
  return w;
}

}  // namespace

CollectionFile parse_collection(const json& j) {
  CollectionFile out;
  if (!j.is_object()) fail("", "top level must be an object");

  {
    const json& s = need(j, "space", "/space");
    const json& fam = need(s, "family", "/space");
    if (!fam.is_string() || fam.get<std::string>().size() != 1)
      fail("/space/family", "expected a one-letter string");
    int rank = need_int(need(s, "rank", "/space"), "/space/rank");
    int crossed = need_int(need(s, "crossed", "/space"), "/space/crossed");
    try {
      out.space = &MarkedSpace::get(family_from_char(fam.get<std::string>()[0]), rank, crossed);
    } catch (const SchemaError&) {
      throw;
    } catch (const std::exception& e) {
      fail("/space", e.what());
    }
  }
  const MarkedSpace& sp = *out.space;
  const int rank = sp.group().rank();

  {
    const json& bs = need(j, "blocks", "/blocks");
    if (!bs.is_object() || bs.empty()) fail("/blocks", "expected a non-empty object");
    for (auto it = bs.begin(); it != bs.end(); ++it) {
      const std::string bptr = "/blocks/" + it.key();
      if (!it->is_array() || it->empty()) fail(bptr, "expected a non-empty array");
      Collection block;
      for (size_t oi = 0; oi < it->size(); ++oi) {
        const std::string optr = bptr + "/" + std::to_string(oi);
        const json& o = (*it)[oi];
        const json& lab = need(o, "label", optr);
        if (!lab.is_string() || lab.get<std::string>().empty())
          fail(optr + "/label", "expected a non-empty string");
        const json& terms = need(o, "terms", optr);
        if (!terms.is_array() || terms.empty())
          fail(optr + "/terms", "expected a non-empty array");
        K0Class cls;
        for (size_t ti = 0; ti < terms.size(); ++ti) {
          const std::string tptr = optr + "/terms/" + std::to_string(ti);
          const json& t = terms[ti];
          mpz_class c = need_coeff(need(t, "coeff", tptr), tptr + "/coeff");
          if (c == 0) fail(tptr + "/coeff", "zero coefficient");
          Weight w = need_weight(need(t, "weight", tptr), rank, sp, tptr + "/weight");
          auto [wit, fresh] = cls.terms.emplace(std::move(w), std::move(c));
          if (!fresh) fail(tptr + "/weight", "duplicate weight in one class");
        }
        block.push_back({lab.get<std::string>(), 0, std::move(cls)});
      }
      out.blocks.emplace_back(it.key(), std::move(block));
    }
  }

  {
    const json& lay = need(j, "layout", "/layout");
    if (lay.is_object()) {
      const json& a = need(lay, "A", "/layout");
      const json& b = need(lay, "B", "/layout");
      const json& rng = need(lay, "range", "/layout");
      if (!a.is_string() || !b.is_string()) fail("/layout", "A and B must be block names");
      if (!rng.is_array() || rng.size() != 2) fail("/layout/range", "expected [first, last]");
      int lo = need_int(rng[0], "/layout/range/0");
      int hi = need_int(rng[1], "/layout/range/1");
      if (lo != 0) fail("/layout/range/0", "staircase layouts must start at twist 0");
      if (hi < 1) fail("/layout/range/1", "last twist must be >= 1");
      const Collection* ab = out.block(a.get<std::string>());
      if (!ab) fail("/layout/A", "unknown block '" + a.get<std::string>() + "'");
      const Collection* bb = out.block(b.get<std::string>());
      if (!bb) fail("/layout/B", "unknown block '" + b.get<std::string>() + "'");
      out.objects = staircase_layout(sp, *ab, *bb, hi);
    } else if (lay.is_array()) {
      if (lay.empty()) fail("/layout", "expected a non-empty array");
      for (size_t i = 0; i < lay.size(); ++i) {
        const std::string lptr = "/layout/" + std::to_string(i);
        const json& e = lay[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_string())
          fail(lptr, "expected [block name, twist]");
        const Collection* blk = out.block(e[0].get<std::string>());
        if (!blk) fail(lptr + "/0", "unknown block '" + e[0].get<std::string>() + "'");
        int t = need_int(e[1], lptr + "/1");
        for (const auto& o : twisted_block(sp, *blk, t)) out.objects.push_back(o);
      }
    } else {
      fail("/layout", "expected an object {A, B, range} or an array of [block, twist]");
    }
  }

  return out;
}

CollectionFile load_collection(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open collection file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw SchemaError("", "file is not valid JSON: " + path);
  return parse_collection(j);
}

}  // namespace gpc
