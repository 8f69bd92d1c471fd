#pragma once

#include <span>
#include <string_view>

namespace alopc {

enum class GroupId { additive, multiplicative, fuzzy_additive, fuzzy_multiplicative };

std::string_view to_string(GroupId id);

/// Parses "additive" | "multiplicative" | "fuzzy-additive" | "fuzzy-multiplicative".
/// Throws ParseError for anything else.
GroupId group_id_from_string(std::string_view name);

/// An abelian linearly ordered group over a subset of the reals.
///
/// Four instances are provided:
///   additive              (R, +, <=)            e = 0
///   multiplicative        (R+, *, <=)           e = 1
///   fuzzy-additive        (R, a+b-0.5, <=)      e = 0.5
///   fuzzy-multiplicative  (]0,1[, ab/(ab+(1-a)(1-b)), <=)  e = 0.5
///
/// All four order elements by the natural < on double; what varies is the
/// operation, the identity, and the domain. Every operation validates its
/// inputs against the domain and throws DomainError on violation. All
/// operations are pure; instances are stateless singletons safe to share
/// across threads.
class AloGroup {
 public:
  static const AloGroup& additive();
  static const AloGroup& multiplicative();
  static const AloGroup& fuzzy_additive();
  static const AloGroup& fuzzy_multiplicative();
  static const AloGroup& of(GroupId id);
  static const AloGroup& of(std::string_view name);

  GroupId id() const { return id_; }
  std::string_view name() const { return to_string(id_); }

  double identity() const;
  bool contains(double a) const;
  /// Throws DomainError naming `a` if it is outside the domain.
  void require(double a) const;

  double combine(double a, double b) const;
  double inverse(double a) const;
  /// a (+) inverse(b)
  double divide(double a, double b) const;
  /// n-fold combination of a with itself. n = 0 yields the identity,
  /// negative n acts on inverse(a).
  double power(double a, long long n) const;
  /// The unique x with power(x, n) = a. Requires n >= 1.
  double root(double a, long long n) const;
  /// max{a, inverse(a)}; never below the identity.
  double norm(double a) const;
  /// norm(a (+) inverse(b)); the group-valued distance between a and b.
  double distance(double a, double b) const;
  /// Combination over a sequence, identity for an empty one.
  double fold(std::span<const double> values) const;

  /// Order isomorphism onto the additive reals and its inverse. Used for
  /// uniform sampling in a group's natural parameter space and for the
  /// n-ary fuzzy-multiplicative formulas.
  double to_param(double a) const;
  double from_param(double t) const;

  AloGroup(const AloGroup&) = delete;
  AloGroup& operator=(const AloGroup&) = delete;

 private:
  explicit AloGroup(GroupId id) : id_(id) {}
  GroupId id_;
};

}  // namespace alopc
