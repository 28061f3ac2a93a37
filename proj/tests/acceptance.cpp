// Acceptance suite: every release criterion, one pass/fail line each.
// Exits nonzero when any criterion fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "matchroid/campaigns.hpp"
#include "matchroid/io.hpp"

using namespace matchroid;

namespace {

std::int64_t rand_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

GroupElement el(const GroupCtx& ctx, std::vector<std::int64_t> coords) {
  return element(ctx, std::move(coords));
}

// --------------------------------------------------------------------------
// Criterion 1: the two worked basis systems, bit-exact.

bool basis_systems_reproduce(std::string& detail) {
  GroupCtx z3 = GroupCtx::free_abelian(3);
  GroupElement a = el(z3, {2, -1, 0});

  auto triple = [&](std::int64_t i, std::int64_t j, std::int64_t k) {
    return std::set<GroupElement>{scalar_mul(z3, i, a), scalar_mul(z3, j, a),
                                  scalar_mul(z3, k, a)};
  };
  // The ten bases as printed, each a set of coordinate triples.
  std::set<std::set<GroupElement>> pan_expected{
      triple(1, 2, 3), triple(1, 3, 4), triple(1, 2, 4), triple(2, 3, 4), triple(1, 2, 5),
      triple(1, 3, 5), triple(1, 4, 5), triple(2, 3, 5), triple(2, 4, 5), triple(3, 4, 5)};

  Matroid pan = make_panhandle(z3, PanhandleParams{3, 4, 5, a});
  std::set<std::set<GroupElement>> pan_actual;
  for (BasisMask b : pan.bases()) {
    std::set<GroupElement> basis;
    for (auto i : mask_to_indices(b)) basis.insert(pan.ground()[i]);
    pan_actual.insert(basis);
  }

  SchubertParams sp{5, a, {scalar_mul(z3, 1, a), scalar_mul(z3, 2, a), scalar_mul(z3, 5, a)}};
  Matroid sm = make_schubert(z3, sp);
  std::set<std::set<GroupElement>> sm_expected{triple(1, 2, 3), triple(1, 2, 4), triple(1, 2, 5)};
  std::set<std::set<GroupElement>> sm_actual;
  for (BasisMask b : sm.bases()) {
    std::set<GroupElement> basis;
    for (auto i : mask_to_indices(b)) basis.insert(sm.ground()[i]);
    sm_actual.insert(basis);
  }

  std::vector<GroupElement> ground_expected{el(z3, {2, -1, 0}), el(z3, {4, -2, 0}),
                                            el(z3, {6, -3, 0}), el(z3, {8, -4, 0}),
                                            el(z3, {10, -5, 0})};
  detail = "panhandle " + std::to_string(pan_actual.size()) + "/10 bases, schubert " +
           std::to_string(sm_actual.size()) + "/3 bases";
  return pan.ground() == ground_expected && pan_actual == pan_expected &&
         sm_actual == sm_expected;
}

// --------------------------------------------------------------------------
// Criteria 2, 3, 8: full sweeps.

std::int64_t expected_panhandle_instances(std::int64_t max_m) {
  std::int64_t total = 0;
  for (std::int64_t m = 2; m <= max_m; ++m) {
    for (std::int64_t n = 1; n < m; ++n) {
      total += (m - n + binomial(m, n)) * (m - n);
    }
  }
  return 2 * total;  // both reference contexts
}

std::int64_t expected_schubert_instances(std::int64_t max_m) {
  std::int64_t total = 0;
  for (std::int64_t m = 2; m <= max_m; ++m) {
    for (std::int64_t n = 1; n < m; ++n) {
      total += (m - n + binomial(m, n)) * binomial(m, n);
    }
  }
  return 2 * total;
}

CampaignResult g_panhandle_sweep;  // shared between criteria 2 and 9
CampaignResult g_schubert_sweep;

bool panhandle_sweep(std::string& detail) {
  g_panhandle_sweep = verify_asy_panhandle(7);
  detail = std::to_string(g_panhandle_sweep.instances) + " instances, " +
           std::to_string(g_panhandle_sweep.failures.size()) + " exceptions";
  return g_panhandle_sweep.passed();
}

bool schubert_sweep(std::string& detail) {
  g_schubert_sweep = verify_asymmetric_schubert(6);
  detail = std::to_string(g_schubert_sweep.instances) + " instances, " +
           std::to_string(g_schubert_sweep.failures.size()) + " exceptions";
  return g_schubert_sweep.passed();
}

bool structural_sweep(std::string& detail) {
  CampaignResult r = verify_structure(7);
  detail = std::to_string(r.instances) + " instances validated";
  return r.passed();
}

// --------------------------------------------------------------------------
// Criteria 4, 5, 6: sampled and exhaustive matching campaigns.

bool paving_sample(std::string& detail) {
  CampaignResult r = verify_paving_theorem(1000, 0);
  detail = std::to_string(r.instances) + " valid instances, " +
           std::to_string(r.failures.size()) + " failures";
  return r.passed() && r.instances == 1000;
}

bool losonczy_exhaustive(std::string& detail) {
  GroupCtx z9 = GroupCtx::finite_product({9});
  std::vector<GroupElement> cyclic;
  for (std::int64_t v = 0; v < 9; ++v) cyclic.push_back(el(z9, {v}));
  CampaignResult a = verify_losonczy(z9, cyclic, -1);

  GroupCtx z = GroupCtx::free_abelian(1);
  std::vector<GroupElement> window;
  for (std::int64_t v = -4; v <= 4; ++v) window.push_back(el(z, {v}));
  CampaignResult b = verify_losonczy(z, window, -1);

  detail = std::to_string(a.instances) + " + " + std::to_string(b.instances) + " subsets";
  return a.passed() && b.passed() && a.instances == 512 && b.instances == 512;
}

bool small_sets_random(std::string& detail) {
  CampaignResult r = verify_small_sets(13, 1000, 0);
  detail = std::to_string(r.instances) + " random pairs";
  return r.passed() && r.instances == 1000;
}

// --------------------------------------------------------------------------
// Criterion 7: the two matchability engines agree on random pairs.

Matroid random_matroid(std::mt19937_64& rng, const GroupCtx& ctx, std::int64_t n) {
  const bool torsion = !ctx.torsion_free();
  auto random_ground = [&](std::int64_t count) {
    std::set<GroupElement> s;
    while (static_cast<std::int64_t>(s.size()) < count) {
      s.insert(el(ctx, {torsion ? rand_in(rng, 1, 100) : rand_in(rng, -10, 20)}));
    }
    return std::vector<GroupElement>(s.begin(), s.end());
  };
  auto random_generator = [&] {
    std::int64_t v = 0;
    while (v == 0) v = torsion ? rand_in(rng, 1, 50) : rand_in(rng, -3, 3);
    return el(ctx, {v});
  };
  switch (rand_in(rng, 0, 4)) {
    case 0:
      return make_uniform(ctx, random_ground(rand_in(rng, n, std::min<std::int64_t>(8, n + 4))),
                          n);
    case 1: {
      std::int64_t m = rand_in(rng, n + 1, std::min<std::int64_t>(8, n + 4));
      std::int64_t s = rand_in(rng, n, m - 1);
      return make_panhandle(ctx, PanhandleParams{n, s, m, random_generator()});
    }
    case 2: {
      std::int64_t m = rand_in(rng, n, std::min<std::int64_t>(8, n + 4));
      GroupElement a = random_generator();
      std::set<std::int64_t> picks;
      while (static_cast<std::int64_t>(picks.size()) < n) picks.insert(rand_in(rng, 1, m));
      SchubertParams sp;
      sp.m = m;
      sp.generator = a;
      for (std::int64_t i : picks) sp.bound.insert(scalar_mul(ctx, i, a));
      return make_schubert(ctx, sp);
    }
    case 3: {
      // dual of a uniform matroid has the complementary rank
      std::int64_t m = rand_in(rng, n + 1, std::min<std::int64_t>(8, n + 4));
      return dual(make_uniform(ctx, random_ground(m), m - n));
    }
    default: {
      // random basis system of rank n on n+1 elements, validated with rejection
      auto ground = random_ground(n + 1);
      const BasisMask full = static_cast<BasisMask>((1u << (n + 1)) - 1);
      while (true) {
        std::vector<BasisMask> bases;
        for (std::int64_t x = 0; x <= n; ++x) {
          if (rand_in(rng, 0, 1)) bases.push_back(full ^ static_cast<BasisMask>(1u << x));
        }
        if (bases.size() < 2) continue;
        return make_from_bases(ctx, ground, bases);
      }
    }
  }
}

bool engines_agree(std::string& detail) {
  std::mt19937_64 rng(2024);
  GroupCtx z = GroupCtx::free_abelian(1);
  GroupCtx zp = GroupCtx::finite_product({65537});
  MatchOptions brute{MatchEngine::BruteForce, 64};
  MatchOptions inter{MatchEngine::Intersection, 64};
  int agreements = 0;
  for (int t = 0; t < 500; ++t) {
    const GroupCtx& ctx = t % 2 == 0 ? z : zp;
    std::int64_t n = rand_in(rng, 1, 4);
    Matroid m = random_matroid(rng, ctx, n);
    Matroid target = random_matroid(rng, ctx, n);
    if (matroid_matched(m, target, brute).matched == matroid_matched(m, target, inter).matched) {
      ++agreements;
    }
  }
  detail = std::to_string(agreements) + "/500 agreements";
  return agreements == 500;
}

// --------------------------------------------------------------------------
// Criterion 9: the sweeps covered the whole bounded parameter space.

bool sweeps_exhaustive(std::string& detail) {
  const std::int64_t pan_expected = expected_panhandle_instances(7);
  const std::int64_t sch_expected = expected_schubert_instances(6);
  detail = "panhandle " + std::to_string(g_panhandle_sweep.instances) + "/" +
           std::to_string(pan_expected) + ", schubert " +
           std::to_string(g_schubert_sweep.instances) + "/" + std::to_string(sch_expected);
  return g_panhandle_sweep.instances == pan_expected &&
         g_schubert_sweep.instances == sch_expected;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "worked basis systems reproduce bit-exactly", basis_systems_reproduce},
      {2, "panhandle target sweep (m <= 7, both contexts)", panhandle_sweep},
      {3, "schubert target sweep (m <= 6, all bounds)", schubert_sweep},
      {4, "sampled sparse paving matchability (1000 instances)", paving_sample},
      {5, "exhaustive self-matching census (Z/9 and {-4..4})", losonczy_exhaustive},
      {6, "random small-set matchings in Z/13 (1000 pairs)", small_sets_random},
      {7, "brute-force and intersection engines agree (500 pairs)", engines_agree},
      {8, "structural sweep: exchange axiom and hyperplane partitions", structural_sweep},
      {9, "sweeps enumerate the full bounded parameter space", sweeps_exhaustive},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::printf("[%s] criterion %d: %s (%s, %lld ms)\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.name, detail.c_str(), static_cast<long long>(ms));
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
