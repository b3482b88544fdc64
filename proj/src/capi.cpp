#include "gpcalc.h"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpcalc/clifford.hpp"
#include "gpcalc/collection_io.hpp"
#include "gpcalc/engine.hpp"
#include "gpcalc/k0.hpp"
#include "json.hpp"

using nlohmann::json;

struct gpc_ctx {
  gpc::CacheConfig cache;
  std::map<std::string, std::unique_ptr<gpc::Engine>> engines;
  std::string err;
};

namespace {

gpc::Engine& engine_for(gpc_ctx* ctx, const std::string& space_name) {
  const gpc::MarkedSpace& sp = gpc::MarkedSpace::parse(space_name);
  auto it = ctx->engines.find(sp.name());
  if (it == ctx->engines.end())
    it = ctx->engines
             .emplace(sp.name(), std::make_unique<gpc::Engine>(sp, ctx->cache))
             .first;
  return *it->second;
}

json mpz_json(const mpz_class& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

mpz_class json_to_mpz(const json& v, const char* what) {
  if (v.is_number_integer()) return mpz_class(v.get<long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      return mpz_class(s);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": not an integer: " + s);
    }
  }
  throw std::invalid_argument(std::string(what) + ": expected an integer");
}

std::string strip_space(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return s;
}

long parse_long(const std::string& tok, const std::string& context) {
  try {
    size_t used = 0;
    const long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse integer '" + tok + "' in '" +
                                context + "'");
  }
}

// Accepts "0", coordinate lists "1,0,0,0,0,-2" (optionally bracketed), and
// symbolic combinations of fundamental weights like "w2", "w4-2w6", "2w1+w5"
// (the Greek letter works too).  Coordinates are in Bourbaki numbering; the
// crossed-node coordinate carries the twist.
gpc::Weight parse_weight(const gpc::MarkedSpace& sp, const std::string& text) {
  const std::string s = strip_space(text);
  const int rank = sp.group().rank();
  if (s.empty()) throw std::invalid_argument("empty weight");
  if (s == "0") return gpc::Weight(rank, 0);

  const bool coords = s.find(',') != std::string::npos ||
                      s.find('[') != std::string::npos;
  if (coords) {
    std::string body = s;
    if (!body.empty() && body.front() == '[') body.erase(0, 1);
    if (!body.empty() && body.back() == ']') body.pop_back();
    gpc::Weight w;
    size_t pos = 0;
    while (true) {
      const size_t comma = body.find(',', pos);
      const std::string tok =
          body.substr(pos, comma == std::string::npos ? std::string::npos
                                                      : comma - pos);
      w.push_back(static_cast<int>(parse_long(tok, text)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (static_cast<int>(w.size()) != rank)
      throw std::invalid_argument("expected " + std::to_string(rank) +
                                  " coordinates in '" + text + "'");
    return w;
  }

  gpc::Weight w(rank, 0);
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+') {
      ++i;
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    size_t d0 = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    long coeff = 1;
    if (i > d0) coeff = parse_long(s.substr(d0, i - d0), text);
    if (i < s.size() && (s[i] == 'w' || s[i] == 'W')) {
      ++i;
    } else if (i + 1 < s.size() &&
               static_cast<unsigned char>(s[i]) == 0xCF &&
               static_cast<unsigned char>(s[i + 1]) == 0x89) {
      i += 2;  // UTF-8 omega
    } else {
      throw std::invalid_argument("cannot parse weight '" + text + "'");
    }
    const size_t n0 = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == n0)
      throw std::invalid_argument("missing node index in '" + text + "'");
    const long idx = parse_long(s.substr(n0, i - n0), text);
    if (idx < 1 || idx > rank)
      throw std::invalid_argument("node index " + std::to_string(idx) +
                                  " out of range in '" + text + "'");
    w[static_cast<size_t>(idx - 1)] += sign * static_cast<int>(coeff);
  }
  return w;
}

gpc::Weight parse_L_dominant(const gpc::MarkedSpace& sp,
                             const std::string& text) {
  gpc::Weight w = parse_weight(sp, text);
  if (!sp.is_L_dominant(w))
    throw std::invalid_argument("weight '" + text +
                                "' is not dominant for the Levi");
  return w;
}

gpc::K0Class class_from_json(const gpc::MarkedSpace& sp, const json& j) {
  const json* terms = &j;
  if (j.is_object()) {
    auto it = j.find("terms");
    if (it == j.end())
      throw std::invalid_argument("inline class: missing 'terms'");
    terms = &*it;
  }
  if (!terms->is_array() || terms->empty())
    throw std::invalid_argument("inline class: expected a nonempty term array");
  gpc::K0Class cls;
  const int rank = sp.group().rank();
  for (const json& t : *terms) {
    if (!t.is_object() || !t.contains("weight") || !t.contains("coeff"))
      throw std::invalid_argument(
          "inline class: each term needs 'weight' and 'coeff'");
    const json& jw = t["weight"];
    if (!jw.is_array() || static_cast<int>(jw.size()) != rank)
      throw std::invalid_argument("inline class: weight needs " +
                                  std::to_string(rank) + " coordinates");
    gpc::Weight w;
    for (const json& c : jw) {
      if (!c.is_number_integer())
        throw std::invalid_argument("inline class: weight coordinates must be "
                                    "integers");
      w.push_back(c.get<int>());
    }
    if (!sp.is_L_dominant(w))
      throw std::invalid_argument(
          "inline class: weight is not dominant for the Levi");
    cls.terms[w] += json_to_mpz(t["coeff"], "inline class coeff");
  }
  return cls;
}

// A class argument is tried as a builtin name (optionally "Name(t)" for a
// twist), then as a weight, then as inline JSON.
gpc::K0Class parse_class(gpc::Engine& eng, const std::string& text) {
  const gpc::MarkedSpace& sp = eng.space();
  const std::string s = strip_space(text);
  if (s.empty()) throw std::invalid_argument("empty class");
  if (s.front() == '{' || s.front() == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(std::string("inline class: ") + e.what());
    }
    return class_from_json(sp, j);
  }
  if (s.back() == ')') {
    const size_t open = s.rfind('(');
    if (open == std::string::npos || open == 0)
      throw std::invalid_argument("cannot parse class '" + text + "'");
    const std::string base = s.substr(0, open);
    const long t = parse_long(s.substr(open + 1, s.size() - open - 2), text);
    return gpc::k0_twist(sp, gpc::named_class(eng, base),
                         static_cast<int>(t));
  }
  try {
    return gpc::named_class(eng, s);
  } catch (const std::invalid_argument&) {
  }
  return gpc::irreducible_class(parse_L_dominant(sp, s));
}

json weight_json(const gpc::Weight& w) {
  json a = json::array();
  for (int c : w) a.push_back(c);
  return a;
}

// Terms sorted by twist, then lexicographically by weight.
json class_terms_json(const gpc::MarkedSpace& sp, const gpc::K0Class& cls) {
  std::vector<std::pair<gpc::Weight, const mpz_class*>> order;
  order.reserve(cls.terms.size());
  for (const auto& [w, c] : cls.terms) order.emplace_back(w, &c);
  std::stable_sort(order.begin(), order.end(),
                   [&sp](const auto& a, const auto& b) {
                     const int ta = sp.twist_of(a.first);
                     const int tb = sp.twist_of(b.first);
                     if (ta != tb) return ta < tb;
                     return a.first < b.first;
                   });
  json a = json::array();
  for (const auto& [w, c] : order) {
    json t;
    t["coeff"] = mpz_json(*c);
    t["twist"] = sp.twist_of(w);
    t["weight"] = weight_json(w);
    a.push_back(std::move(t));
  }
  return a;
}

gpc::CollectionFile load_collection_arg(const std::string& text) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  if (i < text.size() && text[i] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw gpc::SchemaError("", e.what());
    }
    return gpc::parse_collection(j);
  }
  return gpc::load_collection(text);
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
int guarded(gpc_ctx* ctx, char** out, F&& body) {
  if (!ctx) return GPC_E_USAGE;
  ctx->err.clear();
  if (!out) {
    ctx->err = "null output parameter";
    return GPC_E_USAGE;
  }
  *out = nullptr;
  try {
    json doc;
    const int rc = body(doc);
    if (!doc.is_null()) {
      *out = dup_string(doc.dump(2));
      if (!*out) {
        ctx->err = "out of memory";
        return GPC_E_INTERNAL;
      }
    }
    return rc;
  } catch (const gpc::SchemaError& e) {
    ctx->err = e.what();
    return GPC_E_USAGE;
  } catch (const std::invalid_argument& e) {
    ctx->err = e.what();
    return GPC_E_USAGE;
  } catch (const std::exception& e) {
    ctx->err = e.what();
    return GPC_E_INTERNAL;
  }
}

const char* require(const char* arg, const char* what) {
  if (!arg) throw std::invalid_argument(std::string("null ") + what);
  return arg;
}

}  // namespace

extern "C" {

gpc_ctx* gpc_ctx_new(const char* cache_dir, int enable_cache) {
  auto* ctx = new (std::nothrow) gpc_ctx;
  if (!ctx) return nullptr;
  if (!enable_cache) {
    ctx->cache = gpc::CacheConfig::disabled();
  } else if (cache_dir && *cache_dir) {
    ctx->cache.enabled = true;
    ctx->cache.dir = cache_dir;
  } else {
    ctx->cache = gpc::CacheConfig::from_env();
  }
  return ctx;
}

void gpc_ctx_free(gpc_ctx* ctx) { delete ctx; }

const char* gpc_last_error(const gpc_ctx* ctx) {
  return ctx ? ctx->err.c_str() : "null context";
}

void gpc_string_free(char* s) { std::free(s); }

int gpc_bbw(gpc_ctx* ctx, const char* space, const char* weight, int twist_lo,
            int twist_hi, char** out_json) {
  return guarded(ctx, out_json, [&](json& doc) {
    gpc::Engine& eng = engine_for(ctx, require(space, "space"));
    const gpc::MarkedSpace& sp = eng.space();
    const gpc::Weight w = parse_L_dominant(sp, require(weight, "weight"));
    if (twist_lo > twist_hi)
      throw std::invalid_argument("empty twist range");
    json rows = json::array();
    for (int t = twist_lo; t <= twist_hi; ++t) {
      const gpc::Cohomology& c = eng.bbw(sp.twist(w, t));
      json row;
      row["twist"] = t;
      row["vanishes"] = c.vanishes;
      if (!c.vanishes) {
        row["degree"] = c.degree;
        row["dim"] = mpz_json(c.dim);
        row["rep"] = weight_json(c.rep);
      }
      rows.push_back(std::move(row));
    }
    doc["space"] = sp.name();
    doc["weight"] = weight_json(w);
    doc["rows"] = std::move(rows);
    return GPC_OK;
  });
}

int gpc_chi(gpc_ctx* ctx, const char* space, const char* class_a,
            const char* class_b, char** out_json) {
  return guarded(ctx, out_json, [&](json& doc) {
    gpc::Engine& eng = engine_for(ctx, require(space, "space"));
    const gpc::K0Class a = parse_class(eng, require(class_a, "class"));
    const gpc::K0Class b = parse_class(eng, require(class_b, "class"));
    doc["space"] = eng.space().name();
    doc["a"] = class_a;
    doc["b"] = class_b;
    doc["chi"] = mpz_json(gpc::chi_classes(eng, a, b));
    return GPC_OK;
  });
}

int gpc_tensor(gpc_ctx* ctx, const char* space, const char* weight_a,
               const char* weight_b, char** out_json) {
  return guarded(ctx, out_json, [&](json& doc) {
    gpc::Engine& eng = engine_for(ctx, require(space, "space"));
    const gpc::MarkedSpace& sp = eng.space();
    const gpc::Weight a = parse_L_dominant(sp, require(weight_a, "weight"));
    const gpc::Weight b = parse_L_dominant(sp, require(weight_b, "weight"));
    const gpc::IrrepSum prod = eng.tensor(a, b);
    gpc::K0Class cls;
    cls.terms = prod;
    mpz_class rank_sum = 0;
    for (const auto& [w, c] : prod) rank_sum += c * sp.levi_rank(w);
    const mpz_class rank_product = sp.levi_rank(a) * sp.levi_rank(b);
    doc["space"] = sp.name();
    doc["a"] = weight_json(a);
    doc["b"] = weight_json(b);
    doc["terms"] = class_terms_json(sp, cls);
    doc["rank_product"] = mpz_json(rank_product);
    doc["rank_sum"] = mpz_json(rank_sum);
    const bool ok = rank_sum == rank_product;
    doc["conserved"] = ok;
    if (!ok) {
      ctx->err = "tensor decomposition lost fiber dimension";
      return GPC_E_INTERNAL;
    }
    return GPC_OK;
  });
}

int gpc_verify(gpc_ctx* ctx, const char* collection, char** out_json) {
  return guarded(ctx, out_json, [&](json& doc) {
    const gpc::CollectionFile cf =
        load_collection_arg(require(collection, "collection"));
    gpc::Engine& eng = engine_for(ctx, cf.space->name());
    const gpc::GramReport rep =
        gpc::verify_numerical_exceptional(eng, cf.objects);
    const bool rank_matches =
        rep.length == static_cast<long>(rep.expected_rank);
    const bool pass = rep.pass && rank_matches;
    json labels = json::array();
    for (const auto& o : cf.objects) labels.push_back(gpc::object_label(o));
    json gram = json::array();
    for (const auto& row : rep.gram) {
      json r = json::array();
      for (const auto& v : row) r.push_back(mpz_json(v));
      gram.push_back(std::move(r));
    }
    json viols = json::array();
    for (const auto& v : rep.violations) {
      json jv;
      jv["i"] = v.i;
      jv["j"] = v.j;
      jv["value"] = mpz_json(v.value);
      viols.push_back(std::move(jv));
    }
    doc["space"] = cf.space->name();
    doc["length"] = rep.length;
    doc["expected_rank"] = static_cast<long>(rep.expected_rank);
    doc["gram_pass"] = rep.pass;
    doc["rank_matches"] = rank_matches;
    doc["pass"] = pass;
    doc["objects"] = std::move(labels);
    doc["gram"] = std::move(gram);
    doc["violations"] = std::move(viols);
    if (!pass) {
      ctx->err = rep.pass ? "collection length does not match the K0 rank"
                          : "Gram matrix is not unit upper triangular";
      return GPC_E_VERIFY;
    }
    return GPC_OK;
  });
}

int gpc_project(gpc_ctx* ctx, const char* space, const char* seed_weight,
                const char* collection, int index, char** out_json) {
  return guarded(ctx, out_json, [&](json& doc) {
    gpc::Engine& eng = engine_for(ctx, require(space, "space"));
    const gpc::MarkedSpace& sp = eng.space();
    const gpc::Weight w =
        parse_L_dominant(sp, require(seed_weight, "seed weight"));
    const gpc::CollectionFile cf =
        load_collection_arg(require(collection, "collection"));
    if (cf.space != &sp)
      throw std::invalid_argument("collection is for " + cf.space->name() +
                                  ", not " + sp.name());
    gpc::Projection proj;
    try {
      proj = gpc::project_orthogonal(eng, gpc::irreducible_class(w),
                                     cf.objects, index);
    } catch (const std::runtime_error& e) {
      ctx->err = e.what();
      return GPC_E_VERIFY;
    }
    json steps = json::array();
    for (const auto& s : proj.steps) {
      json js;
      js["label"] = s.label;
      js["twist"] = s.twist;
      js["coeff"] = mpz_json(s.coeff);
      steps.push_back(std::move(js));
    }
    doc["space"] = sp.name();
    doc["seed"] = weight_json(w);
    doc["index"] = index;
    doc["result"] = class_terms_json(sp, proj.result);
    doc["rank"] = mpz_json(gpc::k0_rank(sp, proj.result));
    doc["steps"] = std::move(steps);
    return GPC_OK;
  });
}

int gpc_clifford(gpc_ctx* ctx, int n, char** out_json) {
  return guarded(ctx, out_json, [&](json& doc) {
    const gpc::cliff::Ledger led = gpc::cliff::verify(n);
    const auto kw = gpc::cliff::kernel_weight_multiset(n);
    doc["n"] = led.n;
    doc["k"] = led.k;
    doc["term_dims"] = led.term_dims;
    doc["alternating_sum"] = led.alternating_sum;
    doc["rank_action"] = led.rank_action;
    doc["kernel_rows"] = led.kernel_rows;
    doc["kernel_cols"] = led.kernel_cols;
    doc["zero_columns"] = led.zero_columns;
    doc["rank_collapse"] = led.rank_collapse;
    doc["compose_zero"] = led.compose_zero;
    doc["middle_exact"] = led.middle_exact;
    doc["graded"] = led.graded;
    doc["pass"] = led.pass;
    json weights = json::array();
    for (const auto& [w, m] : kw) {
      json jw;
      jw["mult"] = m;
      jw["weight"] = w;
      weights.push_back(std::move(jw));
    }
    doc["kernel_weights"] = std::move(weights);
    if (!led.pass) {
      ctx->err = "fiber complex certificates failed";
      return GPC_E_VERIFY;
    }
    return GPC_OK;
  });
}

}  // extern "C"
