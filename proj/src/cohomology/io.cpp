#include "setlab/cohomology/io.hpp"

#include <algorithm>
#include <fstream>

namespace setlab::cohomology {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Phase phase_from_json(const json& j) {
  try {
    if (j.is_string()) return Phase::parse(j.get<std::string>());
    if (j.is_number_integer()) return {j.get<std::int64_t>(), 1};
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  throw SchemaError("phase must be a \"num/den\" string, got " + j.dump());
}

std::vector<Phase> phase_row(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw SchemaError("expected an array of " + std::to_string(n) + " phases");
  std::vector<Phase> row;
  for (const auto& x : j) row.push_back(phase_from_json(x));
  return row;
}

json phase_row_json(const std::vector<Phase>& row) {
  json out = json::array();
  for (const Phase& p : row) out.push_back(p.to_string());
  return out;
}

} // namespace

FiniteGroup group_from_json(const json& j) {
  try {
    if (j.is_string()) return FiniteGroup::by_name(j.get<std::string>());
    const auto table = field(j, "table").get<std::vector<std::vector<std::size_t>>>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return FiniteGroup(table, names);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("bad group: ") + e.what());
  } catch (const InvalidGroup& e) {
    throw SchemaError(std::string("bad group: ") + e.what());
  }
}

json group_to_json(const FiniteGroup& g) {
  json names = json::array();
  for (std::size_t x = 0; x < g.order(); ++x) names.push_back(g.name(x));
  return {{"table", g.table()}, {"names", names}};
}

CochainFile cochain_file_from_json(const json& j) {
  const FiniteGroup group = group_from_json(field(j, "group"));
  std::vector<std::string> labels;
  try {
    labels = field(j, "labels").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw SchemaError(std::string("bad labels: ") + e.what());
  }
  std::optional<GModule> module;
  try {
    if (j.contains("action")) {
      module.emplace(group, labels, j.at("action").get<std::vector<std::vector<std::size_t>>>());
    } else {
      module.emplace(GModule::trivial(group, labels));
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("bad action: ") + e.what());
  } catch (const InvalidModule& e) {
    throw SchemaError(std::string("bad action: ") + e.what());
  }

  const json& values = field(j, "values");
  if (!values.is_object()) throw SchemaError("'values' must map labels to tables");
  const std::size_t n = group.order();
  bool one_dim = false;
  bool decided = false;
  Cochain1 c1 = Cochain1::constant(labels.size(), n);
  Cochain2 c2 = Cochain2::constant(labels.size(), n);
  for (std::size_t a = 0; a < labels.size(); ++a) {
    if (!values.contains(labels[a])) throw SchemaError("no values for label '" + labels[a] + "'");
    const json& t = values.at(labels[a]);
    if (!t.is_array() || t.size() != n) throw SchemaError("values for '" + labels[a] + "' must have |G| rows");
    const bool flat = n > 0 && !t[0].is_array();
    if (decided && flat != one_dim) throw SchemaError("labels mix 1- and 2-cochain shapes");
    one_dim = flat;
    decided = true;
    if (flat) {
      c1.values[a] = phase_row(t, n);
    } else {
      for (std::size_t g = 0; g < n; ++g) c2.values[a][g] = phase_row(t[g], n);
    }
  }
  for (const auto& [key, unused] : values.items()) {
    (void)unused;
    if (std::find(labels.begin(), labels.end(), key) == labels.end()) {
      throw SchemaError("values given for unknown label '" + key + "'");
    }
  }
  CochainFile out{*module, std::nullopt, std::nullopt};
  if (one_dim) {
    out.cochain1 = std::move(c1);
  } else {
    out.cochain2 = std::move(c2);
  }
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

CochainFile read_cochain_file(const std::filesystem::path& path) {
  try {
    return cochain_file_from_json(read_json_file(path));
  } catch (const InvalidModule& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

json to_json(const Cochain2& c, const GModule& m) {
  require_shape(c, m);
  json out = json::object();
  for (std::size_t a = 0; a < m.num_labels(); ++a) {
    json t = json::array();
    for (const auto& row : c.values[a]) t.push_back(phase_row_json(row));
    out[m.labels()[a]] = t;
  }
  return out;
}

json to_json(const Cochain1& c, const GModule& m) {
  require_shape(c, m);
  json out = json::object();
  for (std::size_t a = 0; a < m.num_labels(); ++a) out[m.labels()[a]] = phase_row_json(c.values[a]);
  return out;
}

json cochain_file_json(const Cochain2& c, const GModule& m) {
  return {{"group", group_to_json(m.group())},
          {"labels", m.labels()},
          {"action", m.action()},
          {"values", to_json(c, m)}};
}

json to_json(const CocycleCheck& r, const GModule& m) {
  json out = {{"pass", r.pass}, {"instances", r.instances}};
  if (r.witness) {
    const auto& w = *r.witness;
    const auto& G = m.group();
    out["witness"] = {{"label", m.labels()[w.a]}, {"g", G.name(w.g)}, {"h", G.name(w.h)}, {"k", G.name(w.k)},
                      {"lhs", w.lhs.to_string()}, {"rhs", w.rhs.to_string()}};
  }
  return out;
}

json to_json(const ClassComparison& r, const GModule& m) {
  json out = {{"answer", to_string(r.answer)}, {"modulus", r.modulus},    {"searched", r.searched},
              {"candidates", r.candidates},    {"solved", r.solved},      {"detail", r.detail}};
  if (r.witness) out["witness"] = to_json(*r.witness, m);
  return out;
}

} // namespace setlab::cohomology
