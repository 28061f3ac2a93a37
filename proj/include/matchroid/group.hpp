#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "matchroid/errors.hpp"

namespace matchroid {

enum class GroupKind { FreeAbelian, FiniteProduct };

/// An abelian group: either Z^k (torsion-free, k >= 1) or a finite product
/// Z/n_1 x ... x Z/n_t with every n_i >= 2.
class GroupCtx {
 public:
  static GroupCtx free_abelian(std::size_t rank);
  static GroupCtx finite_product(std::vector<std::int64_t> moduli);

  GroupKind kind() const noexcept { return kind_; }
  bool torsion_free() const noexcept { return kind_ == GroupKind::FreeAbelian; }
  std::size_t arity() const noexcept { return arity_; }

  /// Rank of a free abelian context; Domain error on finite products.
  std::size_t rank() const;
  /// Moduli of a finite product context; Domain error on free abelian.
  const std::vector<std::int64_t>& moduli() const;

  friend bool operator==(const GroupCtx&, const GroupCtx&) = default;

 private:
  GroupCtx(GroupKind kind, std::size_t arity, std::vector<std::int64_t> moduli)
      : kind_(kind), arity_(arity), moduli_(std::move(moduli)) {}

  GroupKind kind_;
  std::size_t arity_;
  std::vector<std::int64_t> moduli_;  // empty for free abelian
};

/// Group element as a coordinate vector of length ctx.arity().
/// Finite-product coordinates are always stored reduced to [0, n_i), so
/// equality and container ordering are plain vector comparisons.
struct GroupElement {
  std::vector<std::int64_t> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

using ElementSet = std::set<GroupElement>;

/// Canonical element from raw coordinates (reduces finite-product coords).
GroupElement element(const GroupCtx& ctx, std::vector<std::int64_t> coords);
GroupElement zero(const GroupCtx& ctx);
bool is_zero(const GroupElement& x);

GroupElement add(const GroupCtx& ctx, const GroupElement& x, const GroupElement& y);
GroupElement negate(const GroupCtx& ctx, const GroupElement& x);

/// m-fold sum x + ... + x; requires m >= 1.
GroupElement scalar_mul(const GroupCtx& ctx, std::int64_t m, const GroupElement& x);

/// Order of x as a group element; nullopt means infinite. Values are clamped
/// to INT64_MAX when the true order does not fit.
std::optional<std::int64_t> element_order(const GroupCtx& ctx, const GroupElement& x);

/// Lexicographic comparison of coordinate vectors. Only free abelian contexts
/// carry this as a group-compatible total order; finite products raise
/// UnsupportedOrder.
std::strong_ordering lex_compare(const GroupCtx& ctx, const GroupElement& x,
                                 const GroupElement& y);

/// {a + b : a in A, b in B}, deduplicated.
ElementSet sumset(const GroupCtx& ctx, const ElementSet& a, const ElementSet& b);

/// Size of the smallest nonzero finite subgroup; infinite for torsion-free
/// groups, and the least prime dividing any modulus for finite products.
class MinSubgroupSize {
 public:
  static MinSubgroupSize infinite() noexcept { return MinSubgroupSize(std::nullopt); }
  static MinSubgroupSize of(std::int64_t value);

  bool is_finite() const noexcept { return value_.has_value(); }
  std::int64_t value() const;
  std::int64_t ceil_log2() const;

  friend bool operator==(const MinSubgroupSize&, const MinSubgroupSize&) = default;

 private:
  explicit MinSubgroupSize(std::optional<std::int64_t> v) : value_(v) {}
  std::optional<std::int64_t> value_;
};

MinSubgroupSize min_subgroup_size(const GroupCtx& ctx);

std::int64_t least_prime_factor(std::int64_t n);  // n >= 2
std::int64_t ceil_log2(std::int64_t v);           // v >= 1

/// How the total order attached to an OrderedSubset arises.
enum class OrderKind {
  Lex,            // ambient lexicographic order of a free abelian context
  MultipleIndex,  // i |-> i*a position order on {a, 2a, ..., ma} in a torsion group
  Explicit,       // permutation found by brute-force search
};

/// A finite subset together with a total order, stored as the list of
/// elements in strictly ascending order.
class OrderedSubset {
 public:
  OrderedSubset(GroupCtx ctx, std::vector<GroupElement> ascending, OrderKind kind);

  const GroupCtx& ctx() const noexcept { return ctx_; }
  const std::vector<GroupElement>& elements() const noexcept { return elems_; }
  OrderKind order_kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }

  bool contains(const GroupElement& x) const;
  /// Position of x in the order, if present.
  std::optional<std::size_t> position(const GroupElement& x) const;

  const GroupElement& min() const;  // Domain error when empty
  const GroupElement& max() const;

 private:
  GroupCtx ctx_;
  std::vector<GroupElement> elems_;
  OrderKind kind_;
  std::map<GroupElement, std::size_t> pos_;
};

/// (min, max) under the subset's order; Domain error when empty.
std::pair<GroupElement, GroupElement> extrema(const OrderedSubset& a);

/// True when every element lies strictly above 0 in the subset's ambient
/// order. Explicit orders can only answer this when 0 is a member.
bool is_positive(const OrderedSubset& a);

/// The multiples {a, 2a, ..., ma} of a nonzero element, carrying the order in
/// which a lexicographic (or rectified) ambient order lists them. Torsion
/// elements whose order is <= m are rejected: the m multiples must be
/// distinct and nonzero.
OrderedSubset multiples_of(const GroupCtx& ctx, const GroupElement& a, std::int64_t m);

/// Brute-force search for a total order on A compatible with addition: for
/// a, b, c in A with a+c and b+c also in A, a <= b forces a+c <= b+c. Free
/// abelian contexts return the lexicographic order directly; finite products
/// are limited to |A| <= 8 and return nullopt when no permutation works.
std::optional<OrderedSubset> find_compatible_order(const GroupCtx& ctx, const ElementSet& a);

/// m is small enough that {0, a, ..., 2ma} can be ordered compatibly:
/// 2m < ceil(log2(p(G))). Always true for torsion-free groups.
bool sufficiently_small(const GroupCtx& ctx, std::int64_t m);

/// |EM u EN u (EM+EN) u {n*y : y in EN} u {0}| < ceil(log2(p(G)));
/// always true for torsion-free groups.
bool total_small_condition(const GroupCtx& ctx, const ElementSet& em,
                           const ElementSet& en, std::int64_t n);

}  // namespace matchroid
