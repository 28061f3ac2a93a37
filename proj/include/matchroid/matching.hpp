#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "matchroid/matroid.hpp"

namespace matchroid {

/// Certificate that one basis of M matches into a basis of N: a bijection
/// between the two index sets with every elementwise sum outside E(M).
struct MatchWitness {
  BasisMask source_basis = 0;
  BasisMask target_basis = 0;
  /// (index into E(M), index into E(N)) pairs, ascending by source index.
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const MatchWitness&, const MatchWitness&) = default;
};

struct BasisOutcome {
  BasisMask basis = 0;
  std::optional<MatchWitness> witness;
};

/// Outcome of checking "M matched to N": every basis of M must carry a
/// witness; the first basis without one is recorded as the counterexample
/// and the scan stops there.
struct MatchReport {
  bool matched = false;
  std::vector<BasisOutcome> per_basis;
  std::optional<BasisMask> counterexample;
};

enum class MatchEngine { Auto, BruteForce, Intersection };

struct MatchOptions {
  MatchEngine engine = MatchEngine::Auto;
  /// Auto switches from brute force to the intersection solver once the
  /// target matroid has at least this many bases.
  std::size_t brute_force_threshold = 64;
};

/// A bijection f: A -> B with a + f(a) outside A for every a, found as a
/// perfect matching of the bipartite graph joining a to b when a + b is not
/// in A. Requires |A| = |B|; nullopt when no such bijection exists.
std::optional<std::vector<std::pair<GroupElement, GroupElement>>> group_matching(
    const GroupCtx& ctx, const ElementSet& a, const ElementSet& b);

/// Pairing between two equal-rank bases with all sums outside E(M), as
/// ground-index pairs; nullopt when no perfect matching exists.
std::optional<std::vector<std::pair<int, int>>> basis_pair_matched(const Matroid& m,
                                                                   BasisMask basis_m,
                                                                   const Matroid& n,
                                                                   BasisMask basis_n);

/// Witness that `basis_m` matches into some basis of N. Brute force scans
/// N's bases in lex order (so the lexicographically smallest valid target
/// wins); the intersection engine finds a size-n common independent set of
/// N and the transversal matroid induced on E(N) by the sum-avoidance graph.
std::optional<MatchWitness> basis_matched_into(const Matroid& m, BasisMask basis_m,
                                               const Matroid& n,
                                               const MatchOptions& options = {});

/// Checks every basis of M in lex order; requires equal ranks.
MatchReport matroid_matched(const Matroid& m, const Matroid& n,
                            const MatchOptions& options = {});

/// A common independent set of the given size for two matroids sharing one
/// ground list, via shortest augmenting paths in the exchange graph;
/// nullopt when the maximum common independent set is smaller.
std::optional<BasisMask> matroid_intersection(const Matroid& m1, const Matroid& m2, int k);

/// Generic engine behind matroid_intersection, over independence oracles.
std::optional<BasisMask> max_common_independent(
    const std::function<bool(BasisMask)>& indep1, const std::function<bool(BasisMask)>& indep2,
    std::size_t ground_size, int target);

/// Independence in the transversal matroid induced by slot adjacency:
/// subset bits (right side) must match injectively into the slots.
bool transversal_independence(const std::vector<BasisMask>& slot_adjacency, BasisMask subset);

/// Re-checks a witness: bijective pairing covering both masks, target a
/// basis of N, every sum outside E(M).
bool validate_witness(const Matroid& m, const Matroid& n, const MatchWitness& w);

}  // namespace matchroid
