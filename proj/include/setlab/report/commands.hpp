#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "setlab/oracle/state_vector.hpp"
#include "setlab/report/lattice_spec.hpp"
#include "setlab/report/report.hpp"

namespace setlab::report {

struct Options {
  std::optional<LatticeSpec> lattice;
  std::uint64_t seed = 0;
  std::size_t max_qubits = oracle::kDefaultMaxQubits;
  std::optional<std::string> group;
  std::optional<std::int64_t> coeff;
  bool h2 = false;
  std::vector<std::string> files;
  /// Bond letters such as "ZX" for the X string of the omega command.
  std::optional<std::string> path;
  /// Where the oracle command writes the vacuum state, if anywhere.
  std::optional<std::string> dump;

  /// The given lattice, or a 2x2 torus.
  [[nodiscard]] LatticeSpec lattice_or_default() const { return lattice.value_or(LatticeSpec{}); }
};

/// Expected omega table of the dressed X-string anyon, rows g, columns h,
/// both in the order (0,0), (1,0), (0,1), (1,1).
extern const int kExpectedOmegaEX[4][4];

Report cmd_verify_algebra(const Options& o);
Report cmd_verify_model(const Options& o);
Report cmd_omega(const Options& o);
Report cmd_cohomology(const Options& o);
Report cmd_checkdata(const Options& o);
Report cmd_oracle(const Options& o);
/// The category data of the model as a data file (not a report).
nlohmann::json cmd_export_data(const Options& o);

} // namespace setlab::report
