#include "alopc/alo_group.hpp"

#include <cmath>
#include <sstream>

#include "alopc/errors.hpp"

namespace alopc {

namespace {

// Values this close to the open ends of ]0,1[ are rejected rather than
// clamped; clamping would silently corrupt inconsistency indices.
constexpr double kUnitIntervalEdge = 1e-12;

std::string describe(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string_view to_string(GroupId id) {
  switch (id) {
    case GroupId::additive: return "additive";
    case GroupId::multiplicative: return "multiplicative";
    case GroupId::fuzzy_additive: return "fuzzy-additive";
    case GroupId::fuzzy_multiplicative: return "fuzzy-multiplicative";
  }
  return "?";
}

GroupId group_id_from_string(std::string_view name) {
  if (name == "additive") return GroupId::additive;
  if (name == "multiplicative") return GroupId::multiplicative;
  if (name == "fuzzy-additive") return GroupId::fuzzy_additive;
  if (name == "fuzzy-multiplicative") return GroupId::fuzzy_multiplicative;
  throw ParseError("unknown group id \"" + std::string(name) +
                   "\" (expected additive, multiplicative, fuzzy-additive or "
                   "fuzzy-multiplicative)");
}

const AloGroup& AloGroup::additive() {
  static const AloGroup g(GroupId::additive);
  return g;
}

const AloGroup& AloGroup::multiplicative() {
  static const AloGroup g(GroupId::multiplicative);
  return g;
}

const AloGroup& AloGroup::fuzzy_additive() {
  static const AloGroup g(GroupId::fuzzy_additive);
  return g;
}

const AloGroup& AloGroup::fuzzy_multiplicative() {
  static const AloGroup g(GroupId::fuzzy_multiplicative);
  return g;
}

const AloGroup& AloGroup::of(GroupId id) {
  switch (id) {
    case GroupId::additive: return additive();
    case GroupId::multiplicative: return multiplicative();
    case GroupId::fuzzy_additive: return fuzzy_additive();
    case GroupId::fuzzy_multiplicative: return fuzzy_multiplicative();
  }
  throw MismatchError("invalid group id");
}

const AloGroup& AloGroup::of(std::string_view name) {
  return of(group_id_from_string(name));
}

double AloGroup::identity() const {
  switch (id_) {
    case GroupId::additive: return 0.0;
    case GroupId::multiplicative: return 1.0;
    case GroupId::fuzzy_additive: return 0.5;
    case GroupId::fuzzy_multiplicative: return 0.5;
  }
  return 0.0;
}

bool AloGroup::contains(double a) const {
  if (!std::isfinite(a)) return false;
  switch (id_) {
    case GroupId::additive:
    case GroupId::fuzzy_additive:
      return true;
    case GroupId::multiplicative:
      return a > 0.0;
    case GroupId::fuzzy_multiplicative:
      return a > kUnitIntervalEdge && a < 1.0 - kUnitIntervalEdge;
  }
  return false;
}

void AloGroup::require(double a) const {
  if (!contains(a)) {
    throw DomainError("value " + describe(a) + " is outside the domain of the " +
                      std::string(name()) + " group");
  }
}

double AloGroup::combine(double a, double b) const {
  require(a);
  require(b);
  double r = 0.0;
  switch (id_) {
    case GroupId::additive:
      r = a + b;
      break;
    case GroupId::multiplicative:
      r = a * b;
      break;
    case GroupId::fuzzy_additive:
      r = a + b - 0.5;
      break;
    case GroupId::fuzzy_multiplicative:
      r = a * b / (a * b + (1.0 - a) * (1.0 - b));
      break;
  }
  if (!contains(r)) {
    throw DomainError("combination of " + describe(a) + " and " + describe(b) +
                      " left the domain of the " + std::string(name()) + " group");
  }
  return r;
}

double AloGroup::inverse(double a) const {
  require(a);
  switch (id_) {
    case GroupId::additive: return -a;
    case GroupId::multiplicative: return 1.0 / a;
    case GroupId::fuzzy_additive: return 1.0 - a;
    case GroupId::fuzzy_multiplicative: return 1.0 - a;
  }
  return a;
}

double AloGroup::divide(double a, double b) const {
  return combine(a, inverse(b));
}

double AloGroup::power(double a, long long n) const {
  require(a);
  if (n == 0) return identity();
  if (n < 0) return power(inverse(a), -n);
  double r = 0.0;
  switch (id_) {
    case GroupId::additive:
      r = static_cast<double>(n) * a;
      break;
    case GroupId::multiplicative:
      r = std::pow(a, static_cast<double>(n));
      break;
    case GroupId::fuzzy_additive:
      r = static_cast<double>(n) * a - (static_cast<double>(n) - 1.0) / 2.0;
      break;
    case GroupId::fuzzy_multiplicative:
      r = from_param(static_cast<double>(n) * to_param(a));
      break;
  }
  if (!contains(r)) {
    throw DomainError("power " + describe(a) + "^(" + std::to_string(n) +
                      ") left the domain of the " + std::string(name()) + " group");
  }
  return r;
}

double AloGroup::root(double a, long long n) const {
  require(a);
  if (n < 1) {
    throw Error("root index must be >= 1, got " + std::to_string(n));
  }
  if (n == 1) return a;
  double r = 0.0;
  switch (id_) {
    case GroupId::additive:
      r = a / static_cast<double>(n);
      break;
    case GroupId::multiplicative:
      r = std::pow(a, 1.0 / static_cast<double>(n));
      break;
    case GroupId::fuzzy_additive:
      r = (a + (static_cast<double>(n) - 1.0) / 2.0) / static_cast<double>(n);
      break;
    case GroupId::fuzzy_multiplicative:
      r = from_param(to_param(a) / static_cast<double>(n));
      break;
  }
  if (!contains(r)) {
    throw DomainError("root " + describe(a) + "^(1/" + std::to_string(n) +
                      ") left the domain of the " + std::string(name()) + " group");
  }
  return r;
}

double AloGroup::norm(double a) const {
  require(a);
  return std::max(a, inverse(a));
}

double AloGroup::distance(double a, double b) const {
  return norm(divide(a, b));
}

double AloGroup::fold(std::span<const double> values) const {
  double acc = identity();
  for (double v : values) acc = combine(acc, v);
  return acc;
}

double AloGroup::to_param(double a) const {
  require(a);
  switch (id_) {
    case GroupId::additive: return a;
    case GroupId::multiplicative: return std::log(a);
    case GroupId::fuzzy_additive: return a - 0.5;
    case GroupId::fuzzy_multiplicative: return std::log(a / (1.0 - a));
  }
  return a;
}

double AloGroup::from_param(double t) const {
  double r = 0.0;
  switch (id_) {
    case GroupId::additive:
      r = t;
      break;
    case GroupId::multiplicative:
      r = std::exp(t);
      break;
    case GroupId::fuzzy_additive:
      r = t + 0.5;
      break;
    case GroupId::fuzzy_multiplicative:
      r = 1.0 / (1.0 + std::exp(-t));
      break;
  }
  if (!contains(r)) {
    throw DomainError("parameter " + describe(t) + " maps outside the domain of the " +
                      std::string(name()) + " group");
  }
  return r;
}

}  // namespace alopc
