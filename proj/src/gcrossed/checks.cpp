#include "setlab/gcrossed/checks.hpp"

#include <algorithm>
#include <functional>

namespace setlab::gcrossed {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotEvaluated: return "not evaluated";
  }
  return "?";
}

namespace {

/// Accumulates instances and keeps the first failure.
class Tally {
public:
  Tally(std::string id, std::string what) : out_{std::move(id), Status::Pass, std::move(what), 0, nullptr} {}

  void check(bool ok, const std::function<json()>& witness) {
    ++out_.instances;
    if (!ok && out_.status == Status::Pass) {
      out_.status = Status::Fail;
      out_.witness = witness();
    }
    if (!ok) ++failures_;
  }

  CheckOutcome finish() {
    out_.detail += ": " + std::to_string(out_.instances) + " instances";
    if (failures_) out_.detail += ", " + std::to_string(failures_) + " violated";
    return out_;
  }

private:
  CheckOutcome out_;
  std::size_t failures_ = 0;
};

CheckOutcome not_evaluated(std::string id, std::string why) {
  return {std::move(id), Status::NotEvaluated, std::move(why), 0, nullptr};
}

} // namespace

CheckOutcome check_theta_action(const SetCategoryData& d) {
  const auto& an = d.anyons;
  const auto& G = d.group;
  const auto& L = an.labels;
  Tally t("theta-action", "label action is a homomorphism into fusion automorphisms");
  for (std::size_t a = 0; a < an.size(); ++a) {
    t.check(d.theta[a][G.identity()] == a, [&] { return json{{"law", "a^(e) = a"}, {"a", L[a]}}; });
  }
  for (std::size_t g = 0; g < G.order(); ++g) {
    std::vector<bool> hit(an.size(), false);
    for (std::size_t a = 0; a < an.size(); ++a) hit[d.theta[a][g]] = true;
    const bool bijective = std::find(hit.begin(), hit.end(), false) == hit.end();
    t.check(bijective, [&] { return json{{"law", "a -> a^(g) is a bijection"}, {"g", G.name(g)}}; });
    for (std::size_t h = 0; h < G.order(); ++h) {
      for (std::size_t a = 0; a < an.size(); ++a) {
        const std::size_t lhs = d.theta[d.theta[a][h]][g];
        const std::size_t rhs = d.theta[a][G.mul(g, h)];
        t.check(lhs == rhs, [&] {
          return json{{"law", "(a^(h))^(g) = a^(gh)"}, {"a", L[a]}, {"g", G.name(g)}, {"h", G.name(h)},
                      {"lhs", L[lhs]}, {"rhs", L[rhs]}};
        });
      }
    }
    for (std::size_t a = 0; a < an.size(); ++a) {
      for (std::size_t b = 0; b < an.size(); ++b) {
        const std::size_t lhs = d.theta[an.fuse(a, b)][g];
        const std::size_t rhs = an.fuse(d.theta[a][g], d.theta[b][g]);
        t.check(lhs == rhs, [&] {
          return json{{"law", "(ab)^(g) = a^(g) b^(g)"}, {"a", L[a]}, {"b", L[b]}, {"g", G.name(g)},
                      {"lhs", L[lhs]}, {"rhs", L[rhs]}};
        });
      }
    }
  }
  return t.finish();
}

CheckOutcome check_grading(const SetCategoryData& d) {
  if (!d.grading) return not_evaluated("grading", "no grading supplied");
  const auto& an = d.anyons;
  const auto& G = d.group;
  const auto& gr = *d.grading;
  Tally t("grading", "grading is multiplicative");
  const std::size_t u = an.unit();
  t.check(gr[u] == G.identity(), [&] { return json{{"law", "partial(1) = e"}, {"got", G.name(gr[u])}}; });
  for (std::size_t a = 0; a < an.size(); ++a) {
    for (std::size_t b = 0; b < an.size(); ++b) {
      const std::size_t lhs = gr[an.fuse(a, b)];
      const std::size_t rhs = G.mul(gr[a], gr[b]);
      t.check(lhs == rhs, [&] {
        return json{{"law", "partial(ab) = partial(a) partial(b)"}, {"a", an.labels[a]}, {"b", an.labels[b]},
                    {"lhs", G.name(lhs)}, {"rhs", G.name(rhs)}};
      });
    }
  }
  return t.finish();
}

CheckOutcome check_braid_bilinear(const AbelianAnyonData& an) {
  const auto& L = an.labels;
  const auto& eps = an.braid;
  Tally t("braid-bilinear", "braiding is a bicharacter");
  const std::size_t u = an.unit();
  for (std::size_t a = 0; a < an.size(); ++a) {
    t.check(eps[u][a].is_one() && eps[a][u].is_one(),
            [&] { return json{{"law", "eps(1,a) = eps(a,1) = 1"}, {"a", L[a]}}; });
  }
  for (std::size_t a = 0; a < an.size(); ++a) {
    for (std::size_t b = 0; b < an.size(); ++b) {
      for (std::size_t c = 0; c < an.size(); ++c) {
        const Phase l1 = eps[an.fuse(a, b)][c];
        const Phase r1 = eps[a][c] + eps[b][c];
        t.check(l1 == r1, [&] {
          return json{{"law", "eps(ab,c) = eps(a,c) eps(b,c)"}, {"a", L[a]}, {"b", L[b]}, {"c", L[c]},
                      {"lhs", l1.to_string()}, {"rhs", r1.to_string()}};
        });
        const Phase l2 = eps[a][an.fuse(b, c)];
        const Phase r2 = eps[a][b] + eps[a][c];
        t.check(l2 == r2, [&] {
          return json{{"law", "eps(a,bc) = eps(a,b) eps(a,c)"}, {"a", L[a]}, {"b", L[b]}, {"c", L[c]},
                      {"lhs", l2.to_string()}, {"rhs", r2.to_string()}};
        });
      }
    }
  }
  return t.finish();
}

CheckOutcome check_braid_bilinear(const SetCategoryData& d) { return check_braid_bilinear(d.anyons); }

CheckOutcome check_theta_covariance(const SetCategoryData& d) {
  const auto& an = d.anyons;
  const auto& L = an.labels;
  Tally t("theta-covariance", "braiding is invariant under the label action");
  for (std::size_t k = 0; k < d.group.order(); ++k) {
    for (std::size_t a = 0; a < an.size(); ++a) {
      for (std::size_t b = 0; b < an.size(); ++b) {
        const Phase lhs = an.braid[a][b];
        const Phase rhs = an.braid[d.theta[a][k]][d.theta[b][k]];
        t.check(lhs == rhs, [&] {
          return json{{"law", "eps(a,b) = eps(a^(k),b^(k))"}, {"a", L[a]}, {"b", L[b]}, {"k", d.group.name(k)},
                      {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
        });
      }
    }
  }
  return t.finish();
}

CheckOutcome check_fusion_compat(const SetCategoryData& d) {
  const auto& an = d.anyons;
  const auto& G = d.group;
  const auto& L = an.labels;
  Tally t("fusion-compat", "omega is multiplicative under fusion");
  for (std::size_t a = 0; a < an.size(); ++a) {
    for (std::size_t b = 0; b < an.size(); ++b) {
      for (std::size_t g = 0; g < G.order(); ++g) {
        for (std::size_t h = 0; h < G.order(); ++h) {
          const Phase lhs = d.omega(a, g, h) + d.omega(b, g, h);
          const Phase rhs = d.omega(an.fuse(a, b), g, h);
          t.check(lhs == rhs, [&] {
            return json{{"law", "omega^(a) omega^(b) = omega^(ab)"}, {"a", L[a]}, {"b", L[b]}, {"g", G.name(g)},
                        {"h", G.name(h)}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
          });
        }
      }
    }
  }
  return t.finish();
}

CheckOutcome check_y_identity(const SetCategoryData& d) {
  const auto& an = d.anyons;
  const auto& G = d.group;
  const auto& L = an.labels;
  auto y = [&](std::size_t a, std::size_t b, std::size_t g) { return d.y ? (*d.y)[a][b][g] : Phase{}; };
  Tally t("y-identity", std::string("fusion-splitting phases satisfy the twisted cocycle identity") +
                            (d.y ? "" : " (y = 1)"));
  for (std::size_t a = 0; a < an.size(); ++a) {
    for (std::size_t b = 0; b < an.size(); ++b) {
      for (std::size_t g = 0; g < G.order(); ++g) {
        for (std::size_t h = 0; h < G.order(); ++h) {
          const std::size_t gh = G.mul(g, h);
          const Phase lhs = y(d.theta[a][h], d.theta[b][h], g) + y(a, b, h) - y(a, b, gh) +
                            d.omega(an.fuse(a, b), g, h);
          const Phase rhs = d.omega(a, g, h) + d.omega(b, g, h);
          t.check(lhs == rhs, [&] {
            return json{{"law", "y_{a^h,b^h}(g) y_{a,b}(h) y_{a,b}(gh)^* omega^(ab)(g,h) = omega^(a) omega^(b)"},
                        {"a", L[a]},
                        {"b", L[b]},
                        {"g", G.name(g)},
                        {"h", G.name(h)},
                        {"lhs", lhs.to_string()},
                        {"rhs", rhs.to_string()}};
          });
        }
      }
    }
  }
  return t.finish();
}

CheckOutcome check_twisted_braid(const SetCategoryData& d) {
  if (!d.twisted_braid) return not_evaluated("twisted-braid", "no defect braiding supplied");
  const auto& an = d.anyons;
  const auto& G = d.group;
  const auto& L = an.labels;
  const auto& e = *d.twisted_braid;
  Tally t("twisted-braid", "defect braiding is normalized and multiplicative in the anyon");
  const std::size_t u = an.unit();
  for (std::size_t g = 0; g < G.order(); ++g) {
    t.check(e[u][g].is_one(), [&] { return json{{"law", "eps_G(1,g) = 1"}, {"g", G.name(g)}}; });
  }
  for (std::size_t a = 0; a < an.size(); ++a) {
    t.check(e[a][G.identity()].is_one(), [&] { return json{{"law", "eps_G(a,e) = 1"}, {"a", L[a]}}; });
    for (std::size_t b = 0; b < an.size(); ++b) {
      for (std::size_t g = 0; g < G.order(); ++g) {
        const Phase lhs = e[an.fuse(a, b)][g];
        const Phase rhs = e[a][g] + e[b][g];
        t.check(lhs == rhs, [&] {
          return json{{"law", "eps_G(ab,g) = eps_G(a,g) eps_G(b,g)"}, {"a", L[a]}, {"b", L[b]}, {"g", G.name(g)},
                      {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
        });
      }
    }
  }
  return t.finish();
}

std::vector<CheckOutcome> run_all_checks(const SetCategoryData& d) {
  d.validate_shape();
  return {check_theta_action(d),     check_grading(d),       check_braid_bilinear(d), check_theta_covariance(d),
          check_fusion_compat(d),    check_y_identity(d),    check_twisted_braid(d)};
}

json to_json(const CheckOutcome& c) {
  json j{{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}, {"instances", c.instances}};
  if (!c.witness.is_null()) j["witness"] = c.witness;
  return j;
}

} // namespace setlab::gcrossed
