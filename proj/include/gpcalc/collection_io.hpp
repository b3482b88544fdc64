#pragma once

// Reader for the shipped collection files: a marked space, named blocks of
// K0 classes, and a layout that expands the blocks into a twisted sequence.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpcalc/k0.hpp"
#include "json.hpp"

namespace gpc {

struct SchemaError : std::runtime_error {
  SchemaError(std::string ptr, const std::string& what)
      : std::runtime_error(ptr + ": " + what), pointer(std::move(ptr)) {}
  std::string pointer;  // JSON-pointer-style location of the offending value
};

struct CollectionFile {
  const MarkedSpace* space = nullptr;
  // base blocks at twist zero, in file order
  std::vector<std::pair<std::string, Collection>> blocks;
  // expanded layout
  Collection objects;

  const Collection* block(const std::string& name) const;
};

CollectionFile parse_collection(const nlohmann::json& j);
CollectionFile load_collection(const std::string& path);

}  // namespace gpc
