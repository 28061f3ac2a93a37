#pragma once

#include <cstdint>
#include <vector>

#include "matchroid/group.hpp"

namespace matchroid {

/// Index subsets of the ground list are bitmasks; bit i stands for ground[i].
using BasisMask = std::uint32_t;

std::vector<std::size_t> mask_to_indices(BasisMask mask);
BasisMask indices_to_mask(const std::vector<std::size_t>& indices, std::size_t ground_size);

/// Orders masks as their ascending index lists compare lexicographically,
/// e.g. {0,3} before {1,2}.
bool lex_mask_less(BasisMask a, BasisMask b);

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// A matroid over a group, given by its ground list and explicit basis
/// system. Bases are stored as deduplicated masks sorted by lex_mask_less;
/// all queries are pure. Ground size is capped at 20 (desk scale).
class Matroid {
 public:
  static constexpr std::size_t kMaxGround = 20;

  const GroupCtx& ctx() const noexcept { return ctx_; }
  const std::vector<GroupElement>& ground() const noexcept { return ground_; }
  const std::vector<BasisMask>& bases() const noexcept { return bases_; }
  int rank() const noexcept { return rank_; }
  std::size_t ground_size() const noexcept { return ground_.size(); }
  BasisMask full_mask() const noexcept {
    return static_cast<BasisMask>((1u << ground_.size()) - 1);
  }

  std::optional<std::size_t> index_of(const GroupElement& x) const;
  bool in_ground(const GroupElement& x) const { return index_of(x).has_value(); }

  bool is_basis(BasisMask mask) const;
  /// rank(X) = max |X n B| over bases B.
  int rank_of(BasisMask subset) const;
  bool is_independent(BasisMask subset) const;

  /// Indices of elements belonging to no basis.
  std::vector<std::size_t> loops() const;
  bool loopless() const { return loops().empty(); }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(GroupCtx ctx, std::vector<GroupElement> ground, std::vector<BasisMask> bases,
          int rank);

  GroupCtx ctx_;
  std::vector<GroupElement> ground_;
  std::vector<BasisMask> bases_;
  int rank_;
  std::map<GroupElement, std::size_t> index_;

  friend Matroid make_from_bases(const GroupCtx&, std::vector<GroupElement>,
                                 std::vector<BasisMask>);
  friend Matroid make_uniform(const GroupCtx&, std::vector<GroupElement>, std::int64_t);
  friend Matroid make_panhandle(const GroupCtx&, const struct PanhandleParams&);
  friend Matroid make_schubert(const GroupCtx&, const struct SchubertParams&);
  friend Matroid dual(const Matroid&);
  friend Matroid direct_sum(const Matroid&, const Matroid&);
};

/// Rank n on the multiples {a, ..., ma}: bases are the n-subsets meeting
/// {a, ..., sa} in at least n-1 elements. Requires n <= s < m.
struct PanhandleParams {
  std::int64_t n = 0;
  std::int64_t s = 0;
  std::int64_t m = 0;
  GroupElement generator;
};

/// Ground {a, ..., ma}; bases are the n-subsets whose i-th smallest element
/// stays at or below the i-th smallest element of `bound` for every i.
struct SchubertParams {
  std::int64_t m = 0;
  GroupElement generator;
  ElementSet bound;
};

/// Validating constructor: checks equal basis size, the exchange axiom and
/// looplessness. Rejects systems larger than a desk-scale validation bound.
Matroid make_from_bases(const GroupCtx& ctx, std::vector<GroupElement> ground,
                        std::vector<BasisMask> bases);
Matroid make_from_bases(const GroupCtx& ctx, std::vector<GroupElement> ground,
                        const std::vector<std::vector<std::size_t>>& bases);

Matroid make_uniform(const GroupCtx& ctx, std::vector<GroupElement> ground, std::int64_t n);
Matroid make_panhandle(const GroupCtx& ctx, const PanhandleParams& params);
Matroid make_schubert(const GroupCtx& ctx, const SchubertParams& params);

/// Bases of the dual are the complements of the bases. Rejects matroids of
/// full rank, whose dual would have rank zero.
Matroid dual(const Matroid& m);

/// Disjoint union of grounds; bases are unions of one basis from each side.
Matroid direct_sum(const Matroid& m, const Matroid& n);

int rank_of(const Matroid& m, BasisMask subset);

/// Minimal dependent sets, sorted by lex_mask_less.
std::vector<BasisMask> circuits(const Matroid& m);

/// Flats of rank r(M)-1, computed as closures of independent (r-1)-subsets.
std::vector<BasisMask> hyperplanes(const Matroid& m);

/// Every circuit has size >= rank, equivalently every (rank-1)-subset is
/// independent.
bool is_paving(const Matroid& m);
bool is_sparse_paving(const Matroid& m);

/// For a paving matroid of rank n >= 2: every (n-1)-subset of the ground
/// lies in exactly one hyperplane.
bool check_d_partition(const Matroid& m);

/// The bound set consists of the top n multiples {(m-n+1)a, ..., ma}, which
/// is exactly when the construction yields a uniform matroid.
bool is_uniform_schubert(const GroupCtx& ctx, const SchubertParams& params);

/// Every n-subset of the ground is a basis.
bool is_uniform(const Matroid& m);

/// Exhaustive bijection search; limited to grounds of size <= 8.
bool are_isomorphic(const Matroid& m, const Matroid& n);

/// Exhaustive re-check of the basis exchange axiom.
bool validate_basis_exchange(const Matroid& m);

}  // namespace matchroid
