#pragma once

#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "setlab/cohomology/classes.hpp"
#include "setlab/cohomology/cochain.hpp"

namespace setlab::cohomology {

class SchemaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Cochain file:
///   { "group": "z2z2" | {"table": [[...]], "names": [...]},
///     "labels": [...], "action": [[...]] (optional, default trivial),
///     "values": { "<label>": [[ "num/den", ...], ...] } }
/// values[label][g][h]; a 1-cochain file uses values[label][g].
struct CochainFile {
  GModule module;
  std::optional<Cochain2> cochain2;
  std::optional<Cochain1> cochain1;
};

FiniteGroup group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroup& g);

CochainFile cochain_file_from_json(const nlohmann::json& j);
CochainFile read_cochain_file(const std::filesystem::path& path);

nlohmann::json to_json(const Cochain2& c, const GModule& m);
nlohmann::json to_json(const Cochain1& c, const GModule& m);
/// Full file form including group, labels and action.
nlohmann::json cochain_file_json(const Cochain2& c, const GModule& m);

nlohmann::json to_json(const CocycleCheck& r, const GModule& m);
nlohmann::json to_json(const ClassComparison& r, const GModule& m);

/// Reads a JSON document from a file, throwing SchemaError on parse failure.
nlohmann::json read_json_file(const std::filesystem::path& path);

} // namespace setlab::cohomology
