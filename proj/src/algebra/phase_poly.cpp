#include "setlab/algebra/phase_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace setlab {

namespace {

// Sort and cancel equal neighbours pairwise.
template <typename T>
void cancel_pairs(std::vector<T>& items) {
  std::sort(items.begin(), items.end());
  std::vector<T> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i;
    while (j < items.size() && items[j] == items[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(items[i]));
    i = j;
  }
  items = std::move(out);
}

} // namespace

Monomial::Monomial(std::vector<SiteId> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  // z_v^2 = z_v over Boolean variables.
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

Monomial::Monomial(std::initializer_list<SiteId> vars) : Monomial(std::vector<SiteId>(vars)) {}

bool Monomial::contains(SiteId v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

std::string to_string(const Monomial& m) {
  if (m.is_constant()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.vars().size(); ++i) {
    if (i) out += '*';
    out += 'z';
    out += std::to_string(m.vars()[i]);
  }
  return out;
}

PhasePoly::PhasePoly(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  cancel_pairs(monomials_);
}

PhasePoly::PhasePoly(std::initializer_list<Monomial> monomials)
    : PhasePoly(std::vector<Monomial>(monomials)) {}

PhasePoly PhasePoly::constant_one() { return PhasePoly{Monomial{}}; }

PhasePoly PhasePoly::variable(SiteId v) { return PhasePoly{Monomial{v}}; }

bool PhasePoly::has_constant() const {
  return !monomials_.empty() && monomials_.front().is_constant();
}

bool PhasePoly::is_constant() const {
  return monomials_.empty() || (monomials_.size() == 1 && monomials_.front().is_constant());
}

std::size_t PhasePoly::degree() const {
  std::size_t d = 0;
  for (const auto& m : monomials_) d = std::max(d, m.degree());
  return d;
}

std::vector<SiteId> PhasePoly::variables() const {
  std::vector<SiteId> out;
  for (const auto& m : monomials_) out.insert(out.end(), m.vars().begin(), m.vars().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool PhasePoly::evaluate(std::span<const std::uint8_t> bits) const {
  bool acc = false;
  for (const auto& m : monomials_) {
    bool term = true;
    for (SiteId v : m.vars()) {
      if (v >= bits.size() || bits[v] == 0) {
        term = false;
        break;
      }
    }
    acc ^= term;
  }
  return acc;
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& other) {
  std::vector<Monomial> merged;
  merged.reserve(monomials_.size() + other.monomials_.size());
  auto a = monomials_.begin();
  auto b = other.monomials_.begin();
  while (a != monomials_.end() && b != other.monomials_.end()) {
    if (*a < *b) {
      merged.push_back(*a++);
    } else if (*b < *a) {
      merged.push_back(*b++);
    } else {
      ++a;
      ++b;
    }
  }
  merged.insert(merged.end(), a, monomials_.end());
  merged.insert(merged.end(), b, other.monomials_.end());
  monomials_ = std::move(merged);
  return *this;
}

PhasePoly poly_add(const PhasePoly& p, const PhasePoly& q) { return p + q; }

PhasePoly poly_substitute(const PhasePoly& p, std::span<const SiteId> flips) {
  if (flips.empty()) return p;
  std::vector<SiteId> x(flips.begin(), flips.end());
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());

  std::vector<Monomial> terms;
  for (const auto& m : p.monomials()) {
    std::vector<SiteId> fixed;
    std::vector<SiteId> flipped;
    for (SiteId v : m.vars()) {
      (std::binary_search(x.begin(), x.end(), v) ? flipped : fixed).push_back(v);
    }
    if (flipped.empty()) {
      terms.push_back(m);
      continue;
    }
    if (flipped.size() > 20) throw std::length_error("poly_substitute: monomial degree too large");
    // prod_{v in flipped} (z_v + 1) = sum over subsets T of prod_{v in T} z_v
    const std::size_t count = std::size_t{1} << flipped.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      std::vector<SiteId> vars = fixed;
      for (std::size_t k = 0; k < flipped.size(); ++k) {
        if (mask & (std::size_t{1} << k)) vars.push_back(flipped[k]);
      }
      terms.emplace_back(std::move(vars));
    }
  }
  return PhasePoly(std::move(terms));
}

std::vector<SiteId> symmetric_difference(std::span<const SiteId> a, std::span<const SiteId> b) {
  std::vector<SiteId> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<SiteId> reduce_mod2(std::vector<SiteId> ids) {
  cancel_pairs(ids);
  return ids;
}

} // namespace setlab
