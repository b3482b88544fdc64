// Command-line front end over the C interface: cohomology tables, tensor
// decompositions, Euler pairings, collection verification, orthogonal
// projection, and the fiber complex certificates.
//
// Exit codes: 0 success / all checks passed, 1 a verification failed,
// 2 usage or schema error, 3 internal failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "gpcalc.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Out {
  int rc = GPC_E_INTERNAL;
  std::string text;
  std::string err;
};

template <typename F>
Out call(gpc_ctx* ctx, F&& f) {
  Out o;
  char* raw = nullptr;
  o.rc = f(&raw);
  if (raw) {
    o.text = raw;
    gpc_string_free(raw);
  }
  o.err = gpc_last_error(ctx);
  return o;
}

// "w1+2w3-w6", or "0" for the zero weight; never contains a comma
std::string weight_str(const json& coords) {
  std::string s;
  for (size_t i = 0; i < coords.size(); ++i) {
    const long c = coords[i].get<long>();
    if (c == 0) continue;
    if (c > 0 && !s.empty()) s += '+';
    if (c == -1)
      s += '-';
    else if (c != 1)
      s += std::to_string(c);
    s += 'w';
    s += std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

// big integers arrive as decimal strings, small ones as numbers
std::string num_str(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return std::to_string(v.get<long long>());
}

bool parse_twists(const std::string& range, int& lo, int& hi) {
  const size_t dots = range.find("..", 1);  // allow a leading minus sign
  try {
    size_t used = 0;
    if (dots == std::string::npos) {
      lo = hi = std::stoi(range, &used);
      return used == range.size();
    }
    const std::string a = range.substr(0, dots);
    const std::string b = range.substr(dots + 2);
    lo = std::stoi(a, &used);
    if (used != a.size()) return false;
    hi = std::stoi(b, &used);
    return used == b.size();
  } catch (const std::exception&) {
    return false;
  }
}

int fail(const Out& o) {
  std::fprintf(stderr, "error: %s\n", o.err.c_str());
  return o.rc;
}

int emit_bbw(const Out& o, bool as_json, bool as_csv) {
  if (o.rc != GPC_OK) return fail(o);
  if (as_json) {
    std::printf("%s\n", o.text.c_str());
    return 0;
  }
  const json doc = json::parse(o.text);
  if (as_csv) {
    std::printf("twist,degree,dim,rep\n");
    for (const json& r : doc["rows"]) {
      if (r["vanishes"].get<bool>())
        std::printf("%d,,,\n", r["twist"].get<int>());
      else
        std::printf("%d,%d,%s,%s\n", r["twist"].get<int>(),
                    r["degree"].get<int>(), num_str(r["dim"]).c_str(),
                    weight_str(r["rep"]).c_str());
    }
    return 0;
  }
  std::printf("%s  U(%s)\n", doc["space"].get<std::string>().c_str(),
              weight_str(doc["weight"]).c_str());
  for (const json& r : doc["rows"]) {
    if (r["vanishes"].get<bool>())
      std::printf("%6d  vanishes\n", r["twist"].get<int>());
    else
      std::printf("%6d  H^%d = rep %s, dim %s\n", r["twist"].get<int>(),
                  r["degree"].get<int>(), weight_str(r["rep"]).c_str(),
                  num_str(r["dim"]).c_str());
  }
  return 0;
}

int emit_tensor(const Out& o, bool as_json, bool as_csv) {
  if (o.rc != GPC_OK) return fail(o);
  if (as_json) {
    std::printf("%s\n", o.text.c_str());
    return 0;
  }
  const json doc = json::parse(o.text);
  if (as_csv) {
    std::printf("coeff,weight\n");
    for (const json& t : doc["terms"])
      std::printf("%s,%s\n", num_str(t["coeff"]).c_str(),
                  weight_str(t["weight"]).c_str());
    return 0;
  }
  std::printf("U(%s) * U(%s) =\n", weight_str(doc["a"]).c_str(),
              weight_str(doc["b"]).c_str());
  for (const json& t : doc["terms"])
    std::printf("%6s  U(%s)\n", num_str(t["coeff"]).c_str(),
                weight_str(t["weight"]).c_str());
  std::printf("fiber ranks: %s = %s\n", num_str(doc["rank_product"]).c_str(),
              num_str(doc["rank_sum"]).c_str());
  return 0;
}

int emit_verify(const Out& o, bool as_json, const std::string& out_dir) {
  if (o.rc != GPC_OK && o.text.empty()) return fail(o);
  const json doc = json::parse(o.text);

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  {
    std::ofstream csv(fs::path(out_dir) / "gram.csv");
    for (const json& row : doc["gram"]) {
      for (size_t j = 0; j < row.size(); ++j)
        csv << (j ? "," : "") << num_str(row[j]);
      csv << '\n';
    }
  }
  {
    std::ofstream rep(fs::path(out_dir) / "report.json");
    rep << o.text << '\n';
  }

  if (as_json) {
    std::printf("%s\n", o.text.c_str());
  } else {
    std::printf("%s: %d objects, expected K0 rank %s\n",
                doc["space"].get<std::string>().c_str(),
                doc["length"].get<int>(),
                num_str(doc["expected_rank"]).c_str());
    for (const json& v : doc["violations"])
      std::printf("  gram[%d][%d] = %s\n", v["i"].get<int>(),
                  v["j"].get<int>(), num_str(v["value"]).c_str());
    if (!doc["rank_matches"].get<bool>())
      std::printf("  length does not match the expected K0 rank\n");
    std::printf("%s\n", doc["pass"].get<bool>() ? "PASS" : "FAIL");
  }
  return o.rc;
}

int emit_project(const Out& o, bool as_json) {
  if (o.rc != GPC_OK) return fail(o);
  if (as_json) {
    std::printf("%s\n", o.text.c_str());
    return 0;
  }
  const json doc = json::parse(o.text);
  std::printf("projection of U(%s) at index %d:\n",
              weight_str(doc["seed"]).c_str(), doc["index"].get<int>());
  for (const json& t : doc["result"])
    std::printf("%8s  U(%s)\n", num_str(t["coeff"]).c_str(),
                weight_str(t["weight"]).c_str());
  std::printf("rank %s, corrections:\n", num_str(doc["rank"]).c_str());
  if (doc["steps"].empty()) std::printf("  none (seed already orthogonal)\n");
  for (const json& s : doc["steps"])
    std::printf("  %s(%d) x %s\n", s["label"].get<std::string>().c_str(),
                s["twist"].get<int>(), num_str(s["coeff"]).c_str());
  return 0;
}

int emit_clifford(const Out& o, bool as_json) {
  if (o.rc != GPC_OK && o.text.empty()) return fail(o);
  if (as_json) {
    std::printf("%s\n", o.text.c_str());
    return o.rc;
  }
  const json doc = json::parse(o.text);
  std::printf("fiber complex, n = %d (wedge power %d):\n  terms:",
              doc["n"].get<int>(), doc["k"].get<int>());
  for (const json& d : doc["term_dims"]) std::printf(" %lld", d.get<long long>());
  std::printf("  (alternating sum %lld)\n",
              doc["alternating_sum"].get<long long>());
  std::printf(
      "  action rank %lld, kernel %lld x %lld, zero columns %lld, collapse "
      "rank %lld\n",
      doc["rank_action"].get<long long>(), doc["kernel_rows"].get<long long>(),
      doc["kernel_cols"].get<long long>(), doc["zero_columns"].get<long long>(),
      doc["rank_collapse"].get<long long>());
  std::printf("  compositions vanish: %s; middle exactness: %s; graded: %s\n",
              doc["compose_zero"].get<bool>() ? "yes" : "no",
              doc["middle_exact"].get<bool>() ? "yes" : "no",
              doc["graded"].get<bool>() ? "yes" : "no");
  std::printf("%s\n", doc["pass"].get<bool>() ? "PASS" : "FAIL");
  return o.rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for homogeneous bundles on marked flag spaces"};
  app.require_subcommand(1);
  bool no_cache = false;
  app.add_flag("--no-cache", no_cache, "disable the persistent cache");

  std::string space, weight, class_a, class_b, weight_b, collection, seed;
  std::string twists, out_dir = ".";
  int index = 0, cliff_n = 0;
  bool j_bbw = false, c_bbw = false, j_chi = false, j_ten = false,
       c_ten = false, j_ver = false, j_pro = false, j_cli = false;

  CLI::App* bbw = app.add_subcommand("bbw", "cohomology over a twist window");
  bbw->add_option("space", space)->required();
  bbw->add_option("weight", weight)->required();
  bbw->add_option("--twists", twists, "window A..B (default 0..0)");
  bbw->add_flag("--json", j_bbw);
  bbw->add_flag("--csv", c_bbw);

  CLI::App* chi = app.add_subcommand("chi", "Euler pairing of two classes");
  chi->add_option("space", space)->required();
  chi->add_option("classA", class_a)->required();
  chi->add_option("classB", class_b)->required();
  chi->add_flag("--json", j_chi);

  CLI::App* ten = app.add_subcommand("tensor", "tensor product decomposition");
  ten->add_option("space", space)->required();
  ten->add_option("weightA", weight)->required();
  ten->add_option("weightB", weight_b)->required();
  ten->add_flag("--json", j_ten);
  ten->add_flag("--csv", c_ten);

  CLI::App* ver = app.add_subcommand("verify", "Gram verification of a collection");
  ver->add_option("collection", collection, "collection file or inline JSON")
      ->required();
  ver->add_option("--out", out_dir, "directory for gram.csv and report.json");
  ver->add_flag("--json", j_ver);

  CLI::App* pro = app.add_subcommand("project", "orthogonalize a seed class");
  pro->add_option("space", space)->required();
  pro->add_option("seed", seed, "seed weight")->required();
  pro->add_option("collection", collection)->required();
  pro->add_option("--index", index, "twist applied to correction objects")
      ->required();
  pro->add_flag("--json", j_pro);

  CLI::App* cli = app.add_subcommand("clifford", "fiber complex certificates");
  cli->add_option("n", cliff_n)->required();
  cli->add_flag("--json", j_cli);

  // lets global flags like --no-cache appear after the subcommand name
  for (CLI::App* s : {bbw, chi, ten, ver, pro, cli}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  int lo = 0, hi = 0;
  if (bbw->parsed() && !twists.empty() && !parse_twists(twists, lo, hi)) {
    std::fprintf(stderr, "error: cannot parse twist window '%s'\n",
                 twists.c_str());
    return 2;
  }

  gpc_ctx* ctx = gpc_ctx_new(nullptr, no_cache ? 0 : 1);
  if (!ctx) {
    std::fprintf(stderr, "error: out of memory\n");
    return 3;
  }
  int rc = 3;
  if (bbw->parsed()) {
    rc = emit_bbw(call(ctx,
                       [&](char** out) {
                         return gpc_bbw(ctx, space.c_str(), weight.c_str(), lo,
                                        hi, out);
                       }),
                  j_bbw, c_bbw);
  } else if (chi->parsed()) {
    const Out o = call(ctx, [&](char** out) {
      return gpc_chi(ctx, space.c_str(), class_a.c_str(), class_b.c_str(), out);
    });
    if (o.rc != GPC_OK) {
      rc = fail(o);
    } else if (j_chi) {
      std::printf("%s\n", o.text.c_str());
      rc = 0;
    } else {
      std::printf("%s\n", num_str(json::parse(o.text)["chi"]).c_str());
      rc = 0;
    }
  } else if (ten->parsed()) {
    rc = emit_tensor(call(ctx,
                          [&](char** out) {
                            return gpc_tensor(ctx, space.c_str(),
                                              weight.c_str(), weight_b.c_str(),
                                              out);
                          }),
                     j_ten, c_ten);
  } else if (ver->parsed()) {
    rc = emit_verify(call(ctx,
                          [&](char** out) {
                            return gpc_verify(ctx, collection.c_str(), out);
                          }),
                     j_ver, out_dir);
  } else if (pro->parsed()) {
    rc = emit_project(call(ctx,
                           [&](char** out) {
                             return gpc_project(ctx, space.c_str(),
                                                seed.c_str(),
                                                collection.c_str(), index, out);
                           }),
                      j_pro);
  } else if (cli->parsed()) {
    rc = emit_clifford(call(ctx,
                            [&](char** out) {
                              return gpc_clifford(ctx, cliff_n, out);
                            }),
                       j_cli);
  }
  gpc_ctx_free(ctx);
  return rc;
}
