#include "setlab/cohomology/cochain.hpp"

#include <algorithm>
#include <numeric>

namespace setlab::cohomology {

GModule::GModule(const FiniteGroup& group, std::vector<std::string> labels,
                 std::vector<std::vector<std::size_t>> action)
    : group_(group), labels_(std::move(labels)), action_(std::move(action)) {
  const std::size_t n = labels_.size();
  const std::size_t order = group_.order();
  if (action_.size() != n) throw InvalidModule("action table has wrong number of labels");
  for (std::size_t a = 0; a < n; ++a) {
    if (action_[a].size() != order) throw InvalidModule("action table row has wrong length");
    for (std::size_t x : action_[a]) {
      if (x >= n) throw InvalidModule("action maps outside the label set");
    }
  }
  for (std::size_t g = 0; g < order; ++g) {
    std::vector<bool> hit(n, false);
    for (std::size_t a = 0; a < n; ++a) hit[action_[a][g]] = true;
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
      throw InvalidModule("action of element " + group_.name(g) + " is not a permutation");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (action_[a][group_.identity()] != a) throw InvalidModule("identity acts nontrivially on " + labels_[a]);
    for (std::size_t g = 0; g < order; ++g) {
      for (std::size_t h = 0; h < order; ++h) {
        if (action_[action_[a][h]][g] != action_[a][group_.mul(g, h)]) {
          throw InvalidModule("action violates (a^h)^g = a^(gh) at a=" + labels_[a] + ", g=" +
                              group_.name(g) + ", h=" + group_.name(h));
        }
      }
    }
  }
}

GModule GModule::trivial(const FiniteGroup& group, std::vector<std::string> labels) {
  std::vector<std::vector<std::size_t>> action(labels.size());
  for (std::size_t a = 0; a < labels.size(); ++a) action[a].assign(group.order(), a);
  return GModule(group, std::move(labels), std::move(action));
}

std::size_t GModule::label_index(const std::string& name) const {
  auto it = std::find(labels_.begin(), labels_.end(), name);
  if (it == labels_.end()) throw InvalidModule("unknown label '" + name + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

bool GModule::is_trivial() const {
  for (std::size_t a = 0; a < action_.size(); ++a) {
    for (std::size_t x : action_[a]) {
      if (x != a) return false;
    }
  }
  return true;
}

Cochain1 Cochain1::constant(std::size_t labels, std::size_t order, Phase p) {
  return {std::vector<std::vector<Phase>>(labels, std::vector<Phase>(order, p))};
}

Cochain2 Cochain2::constant(std::size_t labels, std::size_t order, Phase p) {
  return {std::vector<std::vector<std::vector<Phase>>>(
      labels, std::vector<std::vector<Phase>>(order, std::vector<Phase>(order, p)))};
}

namespace {

template <class F>
Cochain2 zip(const Cochain2& x, const Cochain2& y, F f) {
  if (x.num_labels() != y.num_labels() || x.order() != y.order()) {
    throw std::invalid_argument("cochain shapes differ");
  }
  Cochain2 r = x;
  for (std::size_t a = 0; a < x.num_labels(); ++a) {
    for (std::size_t g = 0; g < x.order(); ++g) {
      for (std::size_t h = 0; h < x.order(); ++h) r.at(a, g, h) = f(x(a, g, h), y(a, g, h));
    }
  }
  return r;
}

} // namespace

Cochain2 Cochain2::operator+(const Cochain2& o) const {
  return zip(*this, o, [](Phase p, Phase q) { return p + q; });
}

Cochain2 Cochain2::operator-(const Cochain2& o) const {
  return zip(*this, o, [](Phase p, Phase q) { return p - q; });
}

bool Cochain2::is_trivial() const {
  for (const auto& plane : values) {
    for (const auto& row : plane) {
      for (const Phase& p : row) {
        if (!p.is_one()) return false;
      }
    }
  }
  return true;
}

void require_shape(const Cochain2& c, const GModule& m) {
  const std::size_t n = m.group().order();
  if (c.values.size() != m.num_labels()) {
    throw InvalidModule("2-cochain has " + std::to_string(c.values.size()) + " labels, module has " +
                        std::to_string(m.num_labels()));
  }
  for (const auto& plane : c.values) {
    if (plane.size() != n) throw InvalidModule("2-cochain is not total on G x G");
    for (const auto& row : plane) {
      if (row.size() != n) throw InvalidModule("2-cochain is not total on G x G");
    }
  }
}

void require_shape(const Cochain1& c, const GModule& m) {
  if (c.values.size() != m.num_labels()) throw InvalidModule("1-cochain has the wrong number of labels");
  for (const auto& row : c.values) {
    if (row.size() != m.group().order()) throw InvalidModule("1-cochain is not total on G");
  }
}

Cochain2 eta_from_omega(const OmegaTable& omega, const GModule& m) {
  require_shape(omega, m);
  const FiniteGroup& G = m.group();
  Cochain2 eta = Cochain2::constant(m.num_labels(), G.order());
  for (std::size_t a = 0; a < m.num_labels(); ++a) {
    for (std::size_t g = 0; g < G.order(); ++g) {
      for (std::size_t h = 0; h < G.order(); ++h) {
        eta.at(a, g, h) = omega(m.act(a, G.inv(G.mul(g, h))), g, h);
      }
    }
  }
  return eta;
}

CocycleCheck cocycle2_check(const Cochain2& eta, const GModule& m) {
  require_shape(eta, m);
  const FiniteGroup& G = m.group();
  CocycleCheck out;
  for (std::size_t a = 0; a < m.num_labels(); ++a) {
    for (std::size_t g = 0; g < G.order(); ++g) {
      const std::size_t ag = m.act(a, G.inv(g));
      for (std::size_t h = 0; h < G.order(); ++h) {
        for (std::size_t k = 0; k < G.order(); ++k) {
          ++out.instances;
          const Phase lhs = eta(ag, h, k) + eta(a, g, G.mul(h, k));
          const Phase rhs = eta(a, G.mul(g, h), k) + eta(a, g, h);
          if (lhs != rhs && out.pass) {
            out.pass = false;
            out.witness = CocycleWitness{a, g, h, k, lhs, rhs};
          }
        }
      }
    }
  }
  return out;
}

Cochain2 omega_rephasing(const Cochain1& lambda, const GModule& m) {
  require_shape(lambda, m);
  const FiniteGroup& G = m.group();
  Cochain2 d = Cochain2::constant(m.num_labels(), G.order());
  for (std::size_t a = 0; a < m.num_labels(); ++a) {
    for (std::size_t g = 0; g < G.order(); ++g) {
      for (std::size_t h = 0; h < G.order(); ++h) {
        d.at(a, g, h) = lambda(a, G.mul(g, h)) - lambda(m.act(a, h), g) - lambda(a, h);
      }
    }
  }
  return d;
}

Cochain2 coboundary(const Cochain1& lambda, const GModule& m) {
  require_shape(lambda, m);
  const FiniteGroup& G = m.group();
  Cochain2 d = Cochain2::constant(m.num_labels(), G.order());
  for (std::size_t a = 0; a < m.num_labels(); ++a) {
    for (std::size_t g = 0; g < G.order(); ++g) {
      for (std::size_t h = 0; h < G.order(); ++h) {
        const std::size_t gh = G.mul(g, h);
        const std::size_t b = m.act(a, G.inv(gh));
        d.at(a, g, h) = lambda(b, gh) - lambda(m.act(a, G.inv(g)), g) - lambda(b, h);
      }
    }
  }
  return d;
}

std::int64_t value_order(const Cochain2& c) {
  std::int64_t n = 1;
  for (const auto& plane : c.values) {
    for (const auto& row : plane) {
      for (const Phase& p : row) n = std::lcm(n, p.den());
    }
  }
  return n;
}

} // namespace setlab::cohomology
