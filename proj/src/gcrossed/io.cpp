#include <algorithm>

#include "setlab/cohomology/io.hpp"
#include "setlab/gcrossed/data.hpp"

namespace setlab::gcrossed {

using cohomology::SchemaError;
using nlohmann::json;

std::size_t AbelianAnyonData::unit() const {
  for (std::size_t u = 0; u < size(); ++u) {
    bool ok = true;
    for (std::size_t a = 0; a < size() && ok; ++a) ok = fusion[u][a] == a && fusion[a][u] == a;
    if (ok) return u;
  }
  throw InvalidData("fusion table has no unit");
}

std::size_t AbelianAnyonData::index(const std::string& name) const {
  const auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) throw InvalidData("unknown anyon label '" + name + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

void SetCategoryData::validate_shape() const {
  const std::size_t n = anyons.size();
  const std::size_t order = group.order();
  if (n == 0) throw InvalidData("no anyon labels");
  auto square = [n](const auto& m, const char* what) {
    if (m.size() != n) throw InvalidData(std::string(what) + " has the wrong number of rows");
    for (const auto& r : m) {
      if (r.size() != n) throw InvalidData(std::string(what) + " has a row of the wrong length");
    }
  };
  square(anyons.fusion, "fusion table");
  square(anyons.braid, "braid table");
  for (const auto& r : anyons.fusion) {
    for (std::size_t c : r) {
      if (c >= n) throw InvalidData("fusion result out of range");
    }
  }
  if (anyons.twist && anyons.twist->size() != n) throw InvalidData("twist has the wrong length");
  if (theta.size() != n) throw InvalidData("action has the wrong number of rows");
  for (const auto& r : theta) {
    if (r.size() != order) throw InvalidData("action row does not match the group order");
    for (std::size_t c : r) {
      if (c >= n) throw InvalidData("action result out of range");
    }
  }
  if (grading) {
    if (grading->size() != n) throw InvalidData("grading has the wrong length");
    for (std::size_t g : *grading) {
      if (g >= order) throw InvalidData("grading value out of range");
    }
  }
  if (omega.num_labels() != n || omega.order() != order) throw InvalidData("omega has the wrong shape");
  for (const auto& a : omega.values) {
    for (const auto& r : a) {
      if (r.size() != order) throw InvalidData("omega has the wrong shape");
    }
  }
  if (y) {
    if (y->size() != n) throw InvalidData("y has the wrong shape");
    for (const auto& a : *y) {
      if (a.size() != n) throw InvalidData("y has the wrong shape");
      for (const auto& b : a) {
        if (b.size() != order) throw InvalidData("y has the wrong shape");
      }
    }
  }
  if (twisted_braid) {
    if (twisted_braid->size() != n) throw InvalidData("twisted braid has the wrong shape");
    for (const auto& r : *twisted_braid) {
      if (r.size() != order) throw InvalidData("twisted braid has the wrong shape");
    }
  }
}

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

std::vector<Phase> phase_row(const json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) {
    throw SchemaError(what + ": expected an array of " + std::to_string(n) + " phases");
  }
  std::vector<Phase> row;
  for (const auto& x : j) row.push_back(phase_from_json(x));
  return row;
}

json row_json(const std::vector<Phase>& row) {
  json out = json::array();
  for (const Phase& p : row) out.push_back(p.to_string());
  return out;
}

std::size_t label_of(const AbelianAnyonData& a, const json& j) {
  try {
    if (j.is_string()) return a.index(j.get<std::string>());
    if (j.is_number_unsigned() && j.get<std::size_t>() < a.size()) return j.get<std::size_t>();
  } catch (const InvalidData& e) {
    throw SchemaError(e.what());
  }
  throw SchemaError("bad anyon label " + j.dump());
}

/// {label: value} with every label present exactly once.
template <class F>
void for_each_label(const AbelianAnyonData& a, const json& obj, const std::string& what, F&& f) {
  if (!obj.is_object()) throw SchemaError(what + " must be an object keyed by label");
  for (const auto& [key, _] : obj.items()) {
    if (std::find(a.labels.begin(), a.labels.end(), key) == a.labels.end()) {
      throw SchemaError(what + ": unknown label '" + key + "'");
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!obj.contains(a.labels[i])) throw SchemaError(what + ": missing label '" + a.labels[i] + "'");
    f(i, obj.at(a.labels[i]));
  }
}

} // namespace

SetCategoryData data_from_json(const json& j) {
  AbelianAnyonData an;
  try {
    an.labels = field(j, "labels").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw SchemaError(std::string("bad labels: ") + e.what());
  }
  const std::size_t n = an.labels.size();
  if (n == 0) throw SchemaError("labels must not be empty");
  {
    const json& f = field(j, "fusion");
    if (!f.is_array() || f.size() != n) throw SchemaError("fusion must have one row per label");
    for (const auto& row : f) {
      if (!row.is_array() || row.size() != n) throw SchemaError("fusion row has the wrong length");
      std::vector<std::size_t> r;
      for (const auto& c : row) r.push_back(label_of(an, c));
      an.fusion.push_back(std::move(r));
    }
  }
  {
    const json& b = field(j, "braid");
    if (!b.is_array() || b.size() != n) throw SchemaError("braid must have one row per label");
    for (const auto& row : b) an.braid.push_back(phase_row(row, n, "braid"));
  }
  if (j.contains("twist")) an.twist = phase_row(j.at("twist"), n, "twist");

  const FiniteGroup group = cohomology::group_from_json(field(j, "group"));
  const std::size_t order = group.order();
  std::vector<std::vector<std::size_t>> theta(n, std::vector<std::size_t>(order));
  if (j.contains("action")) {
    for_each_label(an, j.at("action"), "action", [&](std::size_t a, const json& row) {
      if (!row.is_array() || row.size() != order) throw SchemaError("action row does not match the group order");
      for (std::size_t g = 0; g < order; ++g) theta[a][g] = label_of(an, row[g]);
    });
  } else {
    for (std::size_t a = 0; a < n; ++a) std::fill(theta[a].begin(), theta[a].end(), a);
  }

  std::optional<std::vector<std::size_t>> grading;
  if (j.contains("grading")) {
    grading.emplace(n);
    for_each_label(an, j.at("grading"), "grading", [&](std::size_t a, const json& g) {
      if (!g.is_number_unsigned() || g.get<std::size_t>() >= order) throw SchemaError("bad grading value " + g.dump());
      (*grading)[a] = g.get<std::size_t>();
    });
  }

  auto omega = cohomology::OmegaTable::constant(n, order);
  for_each_label(an, field(j, "omega"), "omega", [&](std::size_t a, const json& rows) {
    if (!rows.is_array() || rows.size() != order) throw SchemaError("omega rows do not match the group order");
    for (std::size_t g = 0; g < order; ++g) omega.values[a][g] = phase_row(rows[g], order, "omega");
  });

  std::optional<std::vector<std::vector<std::vector<Phase>>>> y;
  if (j.contains("y")) {
    y.emplace(n, std::vector<std::vector<Phase>>(n, std::vector<Phase>(order)));
    for_each_label(an, j.at("y"), "y", [&](std::size_t a, const json& inner) {
      for_each_label(an, inner, "y", [&](std::size_t b, const json& row) { (*y)[a][b] = phase_row(row, order, "y"); });
    });
  }

  std::optional<PhaseMatrix> twisted;
  if (j.contains("twisted_braid")) {
    twisted.emplace(n);
    for_each_label(an, j.at("twisted_braid"), "twisted_braid",
                   [&](std::size_t a, const json& row) { (*twisted)[a] = phase_row(row, order, "twisted_braid"); });
  }

  SetCategoryData d{std::move(an), group, std::move(theta), std::move(grading), std::move(omega), std::move(y),
                    std::move(twisted)};
  try {
    d.validate_shape();
  } catch (const InvalidData& e) {
    throw SchemaError(e.what());
  }
  return d;
}

json data_to_json(const SetCategoryData& d) {
  const auto& an = d.anyons;
  json j;
  j["labels"] = an.labels;
  json fusion = json::array();
  for (const auto& row : an.fusion) {
    json r = json::array();
    for (std::size_t c : row) r.push_back(an.labels[c]);
    fusion.push_back(r);
  }
  j["fusion"] = fusion;
  json braid = json::array();
  for (const auto& row : an.braid) braid.push_back(row_json(row));
  j["braid"] = braid;
  if (an.twist) j["twist"] = row_json(*an.twist);
  j["group"] = cohomology::group_to_json(d.group);
  json action = json::object();
  for (std::size_t a = 0; a < an.size(); ++a) {
    json r = json::array();
    for (std::size_t c : d.theta[a]) r.push_back(an.labels[c]);
    action[an.labels[a]] = r;
  }
  j["action"] = action;
  if (d.grading) {
    json g = json::object();
    for (std::size_t a = 0; a < an.size(); ++a) g[an.labels[a]] = (*d.grading)[a];
    j["grading"] = g;
  }
  json omega = json::object();
  for (std::size_t a = 0; a < an.size(); ++a) {
    json rows = json::array();
    for (const auto& row : d.omega.values[a]) rows.push_back(row_json(row));
    omega[an.labels[a]] = rows;
  }
  j["omega"] = omega;
  if (d.y) {
    json y = json::object();
    for (std::size_t a = 0; a < an.size(); ++a) {
      json inner = json::object();
      for (std::size_t b = 0; b < an.size(); ++b) inner[an.labels[b]] = row_json((*d.y)[a][b]);
      y[an.labels[a]] = inner;
    }
    j["y"] = y;
  }
  if (d.twisted_braid) {
    json t = json::object();
    for (std::size_t a = 0; a < an.size(); ++a) t[an.labels[a]] = row_json((*d.twisted_braid)[a]);
    j["twisted_braid"] = t;
  }
  return j;
}

SetCategoryData read_data_file(const std::string& path) {
  return data_from_json(cohomology::read_json_file(path));
}

} // namespace setlab::gcrossed
