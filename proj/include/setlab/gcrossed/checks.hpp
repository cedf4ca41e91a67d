#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "setlab/gcrossed/data.hpp"

namespace setlab::gcrossed {

enum class Status { Pass, Fail, NotEvaluated };
std::string to_string(Status s);

struct CheckOutcome {
  std::string id;
  Status status = Status::NotEvaluated;
  std::string detail;
  std::size_t instances = 0;
  /// First violated instance, when there is one.
  nlohmann::json witness;

  [[nodiscard]] bool pass() const { return status == Status::Pass; }
};

/// a^(e) = a, (a^(h))^(g) = a^(gh), and each g acts by a fusion automorphism.
CheckOutcome check_theta_action(const SetCategoryData& d);
/// partial(1) = e and partial(a b) = partial(a) partial(b). Not evaluated without a grading.
CheckOutcome check_grading(const SetCategoryData& d);
/// eps(ab,c) = eps(a,c) eps(b,c), eps(a,bc) = eps(a,b) eps(a,c), eps(1,.) = eps(.,1) = 1.
CheckOutcome check_braid_bilinear(const AbelianAnyonData& d);
CheckOutcome check_braid_bilinear(const SetCategoryData& d);
/// eps(a,b) = eps(a^(k), b^(k)) for all k.
CheckOutcome check_theta_covariance(const SetCategoryData& d);
/// omega^(a)(g,h) omega^(b)(g,h) = omega^(ab)(g,h).
CheckOutcome check_fusion_compat(const SetCategoryData& d);
/// y_{a^(h),b^(h)}(g) y_{a,b}(h) y_{a,b}(gh)^* omega^(ab)(g,h) = omega^(a)(g,h) omega^(b)(g,h).
/// Missing y is taken as 1 (Y_{a,b}^(g) = (W_{ab}^(g))^*).
CheckOutcome check_y_identity(const SetCategoryData& d);
/// Normalization eps_G(1,g) = eps_G(a,e) = 1 and multiplicativity in the
/// anyon slot. Not evaluated when no twisted braiding is supplied.
CheckOutcome check_twisted_braid(const SetCategoryData& d);

/// All of the above in a fixed order.
std::vector<CheckOutcome> run_all_checks(const SetCategoryData& d);

nlohmann::json to_json(const CheckOutcome& c);

} // namespace setlab::gcrossed
