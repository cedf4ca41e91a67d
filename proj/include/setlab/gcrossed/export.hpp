#pragma once

#include "setlab/gcrossed/data.hpp"
#include "setlab/model/wtable.hpp"

namespace setlab::gcrossed {

/// eps(a,b) = commutator sign of the X string of a with the Z string of b,
/// for the representatives' strings (they cross once). twist[a] = eps(a,a).
AbelianAnyonData anyon_data_from_strings(const AnyonRepresentatives& reps);

/// y_{a,b}(g) with (W_a^(g) T_a(W_b^(g)))^* = y_{a,b}(g) (W_{ab}^(g))^*.
/// Throws NonScalarOperator when the ratio is not a phase.
std::vector<std::vector<std::vector<Phase>>> y_from_w_table(const AnyonRepresentatives& reps, const WTable& w);

/// Klein group, trivial label action, trivial grading, omega and y from the
/// W table of the default representatives. No defect braiding.
SetCategoryData export_model_data(const HoneycombLattice& lat);

} // namespace setlab::gcrossed
