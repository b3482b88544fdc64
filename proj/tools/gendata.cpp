// Regenerates the shipped collection files in data/. Each file stores the
// base blocks as explicit K0 classes (residual objects inlined as their
// irreducible expansions) plus the staircase layout that expands them.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "gpcalc/collection_io.hpp"
#include "gpcalc/k0.hpp"
#include "json.hpp"

using gpc::Engine;
using gpc::MarkedSpace;
using nlohmann::json;

namespace {

json class_terms(const gpc::K0Class& cls) {
  json terms = json::array();
  for (const auto& [w, c] : cls.terms) {
    json coeff;
    if (c.fits_slong_p())
      coeff = static_cast<long>(c.get_si());
    else
      coeff = c.get_str();
    terms.push_back({{"weight", w}, {"coeff", coeff}});
  }
  return terms;
}

json block_json(Engine& eng, const std::vector<std::string>& names) {
  json b = json::array();
  for (const auto& n : names)
    b.push_back({{"label", n}, {"terms", class_terms(gpc::named_class(eng, n))}});
  return b;
}

json file_json(const std::string& space, const std::vector<std::string>& a,
               const std::vector<std::string>& b, int last) {
  const MarkedSpace& sp = MarkedSpace::parse(space);
  Engine eng(sp);
  json j;
  j["space"] = {{"family", std::string(1, sp.name()[0])},
                {"rank", sp.group().rank()},
                {"crossed", sp.crossed()}};
  j["blocks"] = {{"A", block_json(eng, a)}, {"B", block_json(eng, b)}};
  j["layout"] = {{"A", "A"}, {"B", "B"}, {"range", {0, last}}};
  return j;
}

void emit(const std::string& path, const json& j) {
  // round-trip through the parser so a broken file can never ship
  gpc::CollectionFile parsed = gpc::parse_collection(j);
  std::ofstream out(path);
  out << j.dump(2) << "\n";
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    std::exit(1);
  }
  std::cout << path << ": " << parsed.objects.size() << " objects on "
            << parsed.space->name() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = (argc > 1) ? argv[1] : "data";
  emit(dir + "/og5_10.json", file_json("D5/P5", {"O_X", "Uw1"}, {"O_X", "Uw1"}, 7));
  emit(dir + "/og6_12.json",
       file_json("D6/P6", {"O_X", "Uw1", "P", "Q"}, {"O_X", "Uw1", "P"}, 9));
  emit(dir + "/e7_first.json",
       file_json("E7/P7", {"Qprime", "O_X", "O", "Pprime"}, {"O_X", "O", "Pprime"}, 17));
  return 0;
}
