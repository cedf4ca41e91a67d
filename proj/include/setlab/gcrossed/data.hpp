#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "setlab/cohomology/cochain.hpp"
#include "setlab/cohomology/finite_group.hpp"
#include "setlab/cohomology/phase.hpp"

namespace setlab::gcrossed {

using cohomology::FiniteGroup;
using cohomology::Phase;
using PhaseMatrix = std::vector<std::vector<Phase>>;

class InvalidData : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Abelian anyons: fusion is a group law on the labels, braid[a][b] = eps(a,b).
struct AbelianAnyonData {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> fusion;
  PhaseMatrix braid;
  std::optional<std::vector<Phase>> twist;

  [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }
  /// Label index acting as the fusion unit. Throws InvalidData if none.
  [[nodiscard]] std::size_t unit() const;
  [[nodiscard]] std::size_t fuse(std::size_t a, std::size_t b) const { return fusion[a][b]; }
  [[nodiscard]] std::size_t index(const std::string& name) const;
};

/// Label a^(g) at theta[a][g]; grading[a] = partial(a); omega[a][g][h];
/// y[a][b][g] the scalar part of Y_{a,b}^(g) relative to W_{ab}^(g);
/// twisted_braid[a][g] a phase per (anyon, defect) pair.
struct SetCategoryData {
  AbelianAnyonData anyons;
  FiniteGroup group;
  std::vector<std::vector<std::size_t>> theta;
  std::optional<std::vector<std::size_t>> grading;
  cohomology::OmegaTable omega;
  std::optional<std::vector<std::vector<std::vector<Phase>>>> y;
  std::optional<PhaseMatrix> twisted_braid;

  /// Shape and range checks only; the algebraic laws are the checks' job.
  void validate_shape() const;
};

SetCategoryData data_from_json(const nlohmann::json& j);
nlohmann::json data_to_json(const SetCategoryData& d);
SetCategoryData read_data_file(const std::string& path);

} // namespace setlab::gcrossed
