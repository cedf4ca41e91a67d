#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "setlab/cohomology/finite_group.hpp"
#include "setlab/cohomology/phase.hpp"

namespace setlab::cohomology {

class InvalidModule : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Permutation module: G acts on a finite label set, U(1) in every slot.
/// act(a, g) is a^(g); the law (a^(h))^(g) = a^(gh) is checked on construction.
class GModule {
public:
  GModule(const FiniteGroup& group, std::vector<std::string> labels,
          std::vector<std::vector<std::size_t>> action);
  static GModule trivial(const FiniteGroup& group, std::vector<std::string> labels);

  [[nodiscard]] const FiniteGroup& group() const noexcept { return group_; }
  [[nodiscard]] std::size_t num_labels() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] std::size_t label_index(const std::string& name) const;
  [[nodiscard]] std::size_t act(std::size_t a, std::size_t g) const { return action_[a][g]; }
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& action() const noexcept { return action_; }
  [[nodiscard]] bool is_trivial() const;

private:
  FiniteGroup group_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> action_;
};

/// values[a][g]
struct Cochain1 {
  std::vector<std::vector<Phase>> values;

  static Cochain1 constant(std::size_t labels, std::size_t order, Phase p = {});
  [[nodiscard]] Phase operator()(std::size_t a, std::size_t g) const { return values[a][g]; }
  Phase& at(std::size_t a, std::size_t g) { return values[a][g]; }
  friend bool operator==(const Cochain1&, const Cochain1&) = default;
};

/// values[a][g][h]. Also used for omega tables, which share the shape.
struct Cochain2 {
  std::vector<std::vector<std::vector<Phase>>> values;

  static Cochain2 constant(std::size_t labels, std::size_t order, Phase p = {});
  [[nodiscard]] std::size_t num_labels() const noexcept { return values.size(); }
  [[nodiscard]] std::size_t order() const noexcept { return values.empty() ? 0 : values[0].size(); }
  [[nodiscard]] Phase operator()(std::size_t a, std::size_t g, std::size_t h) const { return values[a][g][h]; }
  Phase& at(std::size_t a, std::size_t g, std::size_t h) { return values[a][g][h]; }
  /// Pointwise product in U(1).
  [[nodiscard]] Cochain2 operator+(const Cochain2& o) const;
  [[nodiscard]] Cochain2 operator-(const Cochain2& o) const;
  [[nodiscard]] bool is_trivial() const;
  friend bool operator==(const Cochain2&, const Cochain2&) = default;
};

using OmegaTable = Cochain2;

/// Throws InvalidModule unless c is total on labels x G x G.
void require_shape(const Cochain2& c, const GModule& m);
void require_shape(const Cochain1& c, const GModule& m);

/// eta_a(g,h) = omega^(a^((gh)^-1))(g,h)
Cochain2 eta_from_omega(const OmegaTable& omega, const GModule& m);

struct CocycleWitness {
  std::size_t a, g, h, k;
  Phase lhs, rhs;
};

struct CocycleCheck {
  bool pass = true;
  std::size_t instances = 0;
  std::optional<CocycleWitness> witness;
};

/// eta_{a^(g^-1)}(h,k) + eta_a(g,hk) = eta_a(gh,k) + eta_a(g,h) for all a,g,h,k.
/// Reports the first violated quadruple in (a,g,h,k) lexicographic order.
CocycleCheck cocycle2_check(const Cochain2& eta, const GModule& m);

/// Change of omega when W_a^(g) is multiplied by lambda_a(g):
/// omega'^(a)(g,h) - omega^(a)(g,h) = lambda_a(gh) - lambda_{a^(h)}(g) - lambda_a(h).
Cochain2 omega_rephasing(const Cochain1& lambda, const GModule& m);

/// The same change expressed on eta:
/// (d lambda)_a(g,h) = lambda_b(gh) - lambda_{a^(g^-1)}(g) - lambda_b(h), b = a^((gh)^-1).
Cochain2 coboundary(const Cochain1& lambda, const GModule& m);

/// Least common multiple of the denominators of all entries.
std::int64_t value_order(const Cochain2& c);

} // namespace setlab::cohomology
