#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchroid/matching.hpp"

namespace matchroid {

/// Outcome of one verification campaign. Failure descriptors carry the full
/// constructor parameters of the offending instance so it can be replayed;
/// the digest fingerprints every instance visited, so equal (seed, bounds)
/// runs produce equal digests.
struct CampaignResult {
  std::string campaign;
  std::int64_t instances = 0;
  std::vector<nlohmann::json> failures;
  std::vector<std::string> notes;
  std::uint64_t instance_digest = 0;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

/// Sampled sweep: torsion-free rank-n matroids M on n+1 positive integers,
/// N sparse paving on n+1 positive integers, with max E(M) <= n * min E(N);
/// each valid instance must satisfy "M matched to N".
CampaignResult verify_paving_theorem(std::int64_t trials, std::uint64_t seed);

/// Same sweep over Z/p with a large prime p, with the rank additionally
/// bounded by (2n+5)^2 < 5 + 4*ceil(log2(p)); sampled windows stay small
/// enough that the natural representative order is compatible.
CampaignResult verify_paving_general(std::int64_t trials, std::uint64_t seed, std::int64_t p);

/// Exhaustive sweep of panhandle targets: for a = 1 in Z and a = (2,-1,0) in
/// Z^3, every source (panhandle or any Schubert bound) of rank n >= 2 is
/// matched to P(n, s', m) exactly when s' = m-1. Rank-1 targets collapse to
/// one uniform matroid for every s', so rank-1 instances are checked against
/// that degenerate expectation instead (matched for every s').
CampaignResult verify_asy_panhandle(std::int64_t max_m);

/// Exhaustive sweep of Schubert targets: sources as above are matched to
/// the Schubert matroid with bound S' exactly when S' is the top segment.
CampaignResult verify_asymmetric_schubert(std::int64_t max_m);

/// Exhaustive check over subsets A of the universe (of size <= max_size,
/// or all when max_size < 0): A has a matching to itself exactly when it
/// avoids 0.
CampaignResult verify_losonczy(const GroupCtx& ctx, const std::vector<GroupElement>& universe,
                               std::int64_t max_size);

/// Random equal-size pairs A, B in Z/p with |A| = |B| < p and 0 outside B
/// always admit a matching.
CampaignResult verify_small_sets(std::int64_t p, std::int64_t trials, std::uint64_t seed);

/// Reproduces the worked rank-3 examples on the multiples of (2,-1,0) in
/// Z^3 bit-exactly: the 10-basis panhandle, the 3-basis Schubert matroid,
/// and all matchability verdicts between them.
CampaignResult verify_examples();

/// Structural sweep of every uniform/panhandle/Schubert instance with
/// m <= max_m over both reference contexts: the exchange axiom holds,
/// uniform and panhandle instances are loopless, the panhandle basis count
/// matches its closed form, and every paving instance of rank >= 2 has
/// hyperplanes partitioning the (rank-1)-subsets.
CampaignResult verify_structure(std::int64_t max_m);

struct CampaignOptions {
  std::uint64_t seed = 0;
  std::int64_t trials = 1000;
  std::int64_t max_m = -1;    // campaign default when < 0
  std::int64_t modulus = -1;  // losonczy: cyclic universe Z/modulus
  std::int64_t window = -1;   // losonczy: integer universe {-window..window}
  std::int64_t prime = -1;    // small-sets / paving-general prime
  std::int64_t max_size = -1;
};

std::vector<std::string> campaign_ids();
CampaignResult run_campaign(const std::string& id, const CampaignOptions& options = {});

/// Re-runs one instance from its descriptor; true when the instance passes
/// its campaign predicate, so replaying a recorded failure returns false.
bool replay_instance(const std::string& id, const nlohmann::json& descriptor);

}  // namespace matchroid
