#include "setlab/algebra/xd_operator.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace setlab {

XdOperator::XdOperator(std::vector<SiteId> xsupport, PhasePoly poly)
    : xsupport_(reduce_mod2(std::move(xsupport))), poly_(std::move(poly)) {}

XdOperator XdOperator::minus_identity() { return {{}, PhasePoly::constant_one()}; }

XdOperator XdOperator::pauli_x(SiteId v) { return {{v}, {}}; }

XdOperator XdOperator::pauli_z(SiteId v) { return {{}, PhasePoly::variable(v)}; }

XdOperator XdOperator::cz(SiteId u, SiteId v) {
  if (u == v) throw std::invalid_argument("cz: sites must differ");
  return {{}, PhasePoly{Monomial{u, v}}};
}

XdOperator XdOperator::ccz(SiteId u, SiteId v, SiteId w) {
  if (u == v || v == w || u == w) throw std::invalid_argument("ccz: sites must differ");
  return {{}, PhasePoly{Monomial{u, v, w}}};
}

XdOperator XdOperator::diagonal(PhasePoly p) { return {{}, std::move(p)}; }

XdOperator XdOperator::x_product(std::span<const SiteId> sites) {
  return {std::vector<SiteId>(sites.begin(), sites.end()), {}};
}

XdOperator XdOperator::z_product(std::span<const SiteId> sites) {
  std::vector<Monomial> terms;
  terms.reserve(sites.size());
  for (SiteId v : sites) terms.push_back(Monomial{v});
  return {{}, PhasePoly(std::move(terms))};
}

int XdOperator::scalar_sign() const noexcept {
  if (!xsupport_.empty() || !poly_.is_constant()) return 0;
  return poly_.is_zero() ? 1 : -1;
}

std::vector<SiteId> XdOperator::support() const {
  std::vector<SiteId> out = poly_.variables();
  out.insert(out.end(), xsupport_.begin(), xsupport_.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t XdOperator::min_universe() const {
  const auto s = support();
  return s.empty() ? 0 : static_cast<std::size_t>(s.back()) + 1;
}

bool XdOperator::is_involution() const { return poly_substitute(poly_, xsupport_) == poly_; }

XdOperator XdOperator::inverse() const { return {xsupport_, poly_substitute(poly_, xsupport_)}; }

XdOperator XdOperator::negated() const { return {xsupport_, poly_ + PhasePoly::constant_one()}; }

XdOperator operator*(const XdOperator& a, const XdOperator& b) {
  // (x1,p1)(x2,p2) = (x1+x2, p2 + p1 o tau_{x2})
  PhasePoly p = poly_substitute(a.poly_, b.xsupport_);
  p += b.poly_;
  return {symmetric_difference(a.xsupport_, b.xsupport_), std::move(p)};
}

std::string XdOperator::to_string() const {
  std::string out = "X{";
  for (std::size_t i = 0; i < xsupport_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xsupport_[i]);
  }
  out += "}; P{";
  const auto& ms = poly_.monomials();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += ';';
    out += setlab::to_string(ms[i]);
  }
  out += '}';
  return out;
}

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  SiteId number() {
    skip_ws();
    SiteId v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("expected site id");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("XdOperator::parse: " + what + " at offset " +
                                std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

XdOperator XdOperator::parse(std::string_view text) {
  Cursor c(text);
  c.expect('X');
  c.expect('{');
  std::vector<SiteId> xs;
  if (!c.peek('}')) {
    xs.push_back(c.number());
    while (c.peek(',')) {
      c.expect(',');
      xs.push_back(c.number());
    }
  }
  c.expect('}');
  c.expect(';');
  c.expect('P');
  c.expect('{');
  std::vector<Monomial> terms;
  if (!c.peek('}')) {
    do {
      if (c.peek(';')) c.expect(';');
      if (c.peek('1')) {
        c.expect('1');
        terms.emplace_back();
        continue;
      }
      std::vector<SiteId> vars;
      c.expect('z');
      vars.push_back(c.number());
      while (c.peek('*')) {
        c.expect('*');
        c.expect('z');
        vars.push_back(c.number());
      }
      terms.emplace_back(std::move(vars));
    } while (c.peek(';'));
  }
  c.expect('}');
  if (!c.at_end()) c.fail("trailing characters");
  return {std::move(xs), PhasePoly(std::move(terms))};
}

NonScalarCommutator::NonScalarCommutator(XdOperator residual)
    : std::runtime_error("commutator is not a scalar: " + residual.to_string()),
      residual_(std::move(residual)) {}

XdOperator op_multiply(const XdOperator& a, const XdOperator& b) { return a * b; }

XdOperator op_inverse(const XdOperator& a) { return a.inverse(); }

XdOperator op_conjugate(const XdOperator& a, const XdOperator& b) { return a * b * a.inverse(); }

XdOperator group_commutator(const XdOperator& a, const XdOperator& b) {
  return a * b * a.inverse() * b.inverse();
}

int commutator_phase(const XdOperator& a, const XdOperator& b) {
  XdOperator c = group_commutator(a, b);
  const int s = c.scalar_sign();
  if (s == 0) throw NonScalarCommutator(std::move(c));
  return s;
}

std::pair<std::vector<std::uint8_t>, int> apply_to_basis(const XdOperator& a,
                                                         std::span<const std::uint8_t> z) {
  if (a.min_universe() > z.size()) {
    throw std::invalid_argument("apply_to_basis: operator acts on site " +
                                std::to_string(a.min_universe() - 1) + " but bitstring has length " +
                                std::to_string(z.size()));
  }
  const int sign = a.poly().evaluate(z) ? -1 : 1;
  std::vector<std::uint8_t> out(z.begin(), z.end());
  for (SiteId v : a.xsupport()) out[v] ^= 1;
  return {std::move(out), sign};
}

} // namespace setlab
