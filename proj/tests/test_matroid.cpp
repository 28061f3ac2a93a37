#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>

#include "matchroid/matroid.hpp"
#include "test_util.hpp"

using namespace matchroid;
using testutil::el;

namespace {

std::vector<GroupElement> int_ground(const GroupCtx& ctx, std::vector<std::int64_t> values) {
  std::vector<GroupElement> out;
  for (std::int64_t v : values) out.push_back(el(ctx, {v}));
  return out;
}

using IndexBases = std::vector<std::vector<std::size_t>>;

std::set<std::set<std::size_t>> basis_sets(const Matroid& m) {
  std::set<std::set<std::size_t>> out;
  for (BasisMask b : m.bases()) {
    auto idx = mask_to_indices(b);
    out.insert(std::set<std::size_t>(idx.begin(), idx.end()));
  }
  return out;
}

}  // namespace

TEST_CASE("explicit basis systems are validated") {
  GroupCtx z = GroupCtx::free_abelian(1);
  Matroid u23 = make_from_bases(z, int_ground(z, {1, 2, 3}), IndexBases{{0, 1}, {0, 2}, {1, 2}});
  CHECK(u23.rank() == 2);
  CHECK(u23.bases().size() == 3);
  CHECK(u23.loopless());

  CHECK_THROWS_AS(make_from_bases(z, int_ground(z, {1, 2, 3}), IndexBases{{0, 1}, {2}}), Error);
  try {
    make_from_bases(z, int_ground(z, {1, 2, 3}), IndexBases{{0, 1}, {2}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidBasisSystem);
  }

  try {
    make_from_bases(z, int_ground(z, {1, 2, 3}), IndexBases{{0, 1}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Loop);
  }

  CHECK_THROWS_AS(make_from_bases(z, int_ground(z, {1, 2, 3}), IndexBases{}), Error);

  // {12, 34} on four points swaps no element of {3,4} into {1,2}.
  try {
    make_from_bases(z, int_ground(z, {1, 2, 3, 4}), IndexBases{{0, 1}, {2, 3}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidBasisSystem);
  }
}

TEST_CASE("uniform matroids") {
  GroupCtx z = GroupCtx::free_abelian(1);
  CHECK(make_uniform(z, int_ground(z, {1, 2, 3, 4, 5}), 3).bases().size() == 10);
  CHECK(make_uniform(z, int_ground(z, {1, 2, 3}), 3).bases().size() == 1);
  CHECK(make_uniform(z, int_ground(z, {4}), 1).bases().size() == 1);
  CHECK_THROWS_AS(make_uniform(z, int_ground(z, {1, 2}), 3), Error);
  CHECK_THROWS_AS(make_uniform(z, int_ground(z, {1, 2}), 0), Error);
}

TEST_CASE("panhandle construction") {
  GroupCtx z3 = GroupCtx::free_abelian(3);
  GroupElement a = el(z3, {2, -1, 0});
  Matroid pan = make_panhandle(z3, PanhandleParams{3, 4, 5, a});
  CHECK(pan.rank() == 3);
  CHECK(pan.bases().size() == 10);
  CHECK(pan.loopless());

  // s = m-1 leaves at most one ground element outside the handle.
  GroupCtx z = GroupCtx::free_abelian(1);
  Matroid top = make_panhandle(z, PanhandleParams{2, 4, 5, el(z, {1})});
  CHECK(top == make_uniform(z, top.ground(), 2));

  Matroid p224 = make_panhandle(z, PanhandleParams{2, 2, 4, el(z, {1})});
  std::set<std::set<std::size_t>> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  CHECK(basis_sets(p224) == expected);

  CHECK_THROWS_AS(make_panhandle(z, PanhandleParams{3, 2, 5, el(z, {1})}), Error);
  CHECK_THROWS_AS(make_panhandle(z, PanhandleParams{2, 5, 5, el(z, {1})}), Error);
}

TEST_CASE("panhandle on torsion groups needs the smallness bound") {
  GroupCtx big = GroupCtx::finite_product({65537});  // ceil(log2) = 17
  Matroid pan = make_panhandle(big, PanhandleParams{2, 3, 5, el(big, {1})});
  CHECK(pan.bases().size() == binomial(3, 2) + 2 * binomial(3, 1));

  GroupCtx z11 = GroupCtx::finite_product({11});  // ceil(log2 11) = 4, need 2m < 4
  try {
    make_panhandle(z11, PanhandleParams{1, 2, 3, el(z11, {1})});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedOrder);
  }
}

TEST_CASE("schubert construction") {
  GroupCtx z3 = GroupCtx::free_abelian(3);
  GroupElement a = el(z3, {2, -1, 0});
  SchubertParams sp{5, a, {el(z3, {2, -1, 0}), el(z3, {4, -2, 0}), el(z3, {10, -5, 0})}};
  Matroid sm = make_schubert(z3, sp);
  CHECK(sm.rank() == 3);
  std::set<std::set<std::size_t>> expected{{0, 1, 2}, {0, 1, 3}, {0, 1, 4}};
  CHECK(basis_sets(sm) == expected);
  CHECK(sm.loopless());

  // Top segment: every 3-subset qualifies.
  SchubertParams top{5, a, {el(z3, {6, -3, 0}), el(z3, {8, -4, 0}), el(z3, {10, -5, 0})}};
  CHECK(make_schubert(z3, top).bases().size() == 10);
  CHECK(is_uniform(make_schubert(z3, top)));

  // Minimal bound: the single basis {a, 2a, 3a}; higher multiples are loops.
  SchubertParams minimal{5, a, {el(z3, {2, -1, 0}), el(z3, {4, -2, 0}), el(z3, {6, -3, 0})}};
  Matroid single = make_schubert(z3, minimal);
  CHECK(single.bases().size() == 1);
  CHECK(single.loops() == std::vector<std::size_t>{3, 4});

  SchubertParams bad{5, a, {el(z3, {1, 1, 1})}};
  CHECK_THROWS_AS(make_schubert(z3, bad), Error);
}

TEST_CASE("uniform schubert recognition") {
  GroupCtx z3 = GroupCtx::free_abelian(3);
  GroupElement a = el(z3, {2, -1, 0});
  SchubertParams top{5, a, {el(z3, {6, -3, 0}), el(z3, {8, -4, 0}), el(z3, {10, -5, 0})}};
  CHECK(is_uniform_schubert(z3, top));

  SchubertParams mid{5, a, {el(z3, {2, -1, 0}), el(z3, {4, -2, 0}), el(z3, {10, -5, 0})}};
  CHECK(!is_uniform_schubert(z3, mid));

  GroupCtx z = GroupCtx::free_abelian(1);
  SchubertParams all{4, el(z, {1}), {el(z, {1}), el(z, {2}), el(z, {3}), el(z, {4})}};
  CHECK(is_uniform_schubert(z, all));
}

TEST_CASE("duality") {
  GroupCtx z = GroupCtx::free_abelian(1);
  Matroid u25 = make_uniform(z, int_ground(z, {1, 2, 3, 4, 5}), 2);
  Matroid d = dual(u25);
  CHECK(d.rank() == 3);
  CHECK(d == make_uniform(z, int_ground(z, {1, 2, 3, 4, 5}), 3));
  CHECK(dual(d) == u25);

  Matroid p224 = make_panhandle(z, PanhandleParams{2, 2, 4, el(z, {1})});
  std::set<std::set<std::size_t>> expected{{2, 3}, {1, 3}, {1, 2}, {0, 3}, {0, 2}};
  CHECK(basis_sets(dual(p224)) == expected);

  Matroid full = make_uniform(z, int_ground(z, {1, 2}), 2);
  CHECK_THROWS_AS(dual(full), Error);
}

TEST_CASE("direct sums") {
  GroupCtx z = GroupCtx::free_abelian(1);
  Matroid a = make_uniform(z, int_ground(z, {1}), 1);
  Matroid b = make_uniform(z, int_ground(z, {2}), 1);
  Matroid ab = direct_sum(a, b);
  CHECK(ab.rank() == 2);
  CHECK(ab.bases().size() == 1);

  Matroid u12 = make_uniform(z, int_ground(z, {1, 2}), 1);
  Matroid c = make_uniform(z, int_ground(z, {3}), 1);
  CHECK(basis_sets(direct_sum(u12, c)) == std::set<std::set<std::size_t>>{{0, 2}, {1, 2}});

  Matroid u23 = make_uniform(z, int_ground(z, {1, 2, 3}), 2);
  Matroid u12b = make_uniform(z, int_ground(z, {4, 5}), 1);
  CHECK(direct_sum(u23, u12b).bases().size() == 6);

  CHECK_THROWS_AS(direct_sum(u23, u12), Error);
  try {
    direct_sum(u23, u12);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Disjointness);
  }
}

TEST_CASE("rank, circuits and hyperplanes") {
  GroupCtx z = GroupCtx::free_abelian(1);
  Matroid u23 = make_uniform(z, int_ground(z, {1, 2, 3}), 2);
  CHECK(u23.rank_of(0) == 0);
  CHECK(u23.rank_of(u23.full_mask()) == 2);
  CHECK(circuits(u23) == std::vector<BasisMask>{0b111});

  // All (n-1)-subsets are hyperplanes of the uniform matroid on n+1 points.
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::int64_t> vals;
    for (int v = 1; v <= n + 1; ++v) vals.push_back(v);
    Matroid u = make_uniform(z, int_ground(z, vals), n);
    std::set<BasisMask> expected;
    for (BasisMask mask = 0; mask < (1u << (n + 1)); ++mask) {
      if (std::popcount(mask) == n - 1) expected.insert(mask);
    }
    auto hs = hyperplanes(u);
    CHECK(std::set<BasisMask>(hs.begin(), hs.end()) == expected);
  }

  Matroid p224 = make_panhandle(z, PanhandleParams{2, 2, 4, el(z, {1})});
  auto cs = circuits(p224);
  CHECK(std::find(cs.begin(), cs.end(), 0b1100u) != cs.end());  // {3, 4}
  CHECK(p224.rank_of(0b1100) == 1);
}

TEST_CASE("paving and sparse paving predicates") {
  GroupCtx z = GroupCtx::free_abelian(1);
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::int64_t> vals;
    for (int v = 1; v <= n + 2; ++v) vals.push_back(v);
    CHECK(is_sparse_paving(make_uniform(z, int_ground(z, vals), n)));
  }

  Matroid two_pairs = direct_sum(make_uniform(z, int_ground(z, {1, 2}), 1),
                                 make_uniform(z, int_ground(z, {3, 4}), 1));
  CHECK(is_paving(two_pairs));
  CHECK(is_sparse_paving(two_pairs));
  CHECK(dual(two_pairs) == two_pairs);

  Matroid p335 = make_panhandle(z, PanhandleParams{3, 3, 5, el(z, {1})});
  CHECK(!is_paving(p335));

  // Full-rank uniform matroids have a rank-zero dual, vacuously paving.
  CHECK(is_sparse_paving(make_uniform(z, int_ground(z, {1, 2, 3}), 3)));
}

TEST_CASE("hyperplane partition of (rank-1)-subsets") {
  GroupCtx z = GroupCtx::free_abelian(1);
  Matroid u24 = make_uniform(z, int_ground(z, {1, 2, 3, 4}), 2);
  CHECK(check_d_partition(u24));

  // Every rank-n sparse paving matroid on n+1 points qualifies: the uniform
  // one and the coloop extension U_{n-1,n} + U_{1,1}.
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::int64_t> vals;
    for (int v = 1; v <= n + 1; ++v) vals.push_back(v);
    Matroid u = make_uniform(z, int_ground(z, vals), n);
    CHECK(check_d_partition(u));
    std::vector<std::int64_t> first_n(vals.begin(), vals.end() - 1);
    Matroid coloop = direct_sum(make_uniform(z, int_ground(z, first_n), n - 1),
                                make_uniform(z, int_ground(z, {99}), 1));
    REQUIRE(is_sparse_paving(coloop));
    CHECK(check_d_partition(coloop));
  }

  Matroid p335 = make_panhandle(z, PanhandleParams{3, 3, 5, el(z, {1})});
  CHECK_THROWS_AS(check_d_partition(p335), Error);
}

TEST_CASE("exchange axiom holds for every constructed family at small sizes") {
  for (std::size_t variant = 0; variant < 2; ++variant) {
    GroupCtx ctx = variant == 0 ? GroupCtx::free_abelian(1) : GroupCtx::free_abelian(3);
    GroupElement a = variant == 0 ? el(ctx, {1}) : el(ctx, {2, -1, 0});
    for (std::int64_t m = 1; m <= 6; ++m) {
      auto ground = multiples_of(ctx, a, m).elements();
      for (std::int64_t n = 1; n <= m; ++n) {
        Matroid u = make_uniform(ctx, ground, n);
        CHECK(validate_basis_exchange(u));
        CHECK(u.rank_of(u.full_mask()) == u.rank());
        CHECK(u.rank_of(0) == 0);
        if (n < m) CHECK(validate_basis_exchange(dual(u)));
        for (std::int64_t s = n; s < m; ++s) {
          Matroid p = make_panhandle(ctx, PanhandleParams{n, s, m, a});
          CHECK(validate_basis_exchange(p));
          CHECK(p.loopless());
          CHECK(p.rank_of(p.full_mask()) == p.rank());
          CHECK(p.rank_of(0) == 0);
          if (p.rank() < static_cast<int>(p.ground_size())) {
            CHECK(validate_basis_exchange(dual(p)));
          }
          Matroid shifted = make_uniform(ctx, {scalar_mul(ctx, m + s + 2, a)}, 1);
          Matroid summed = direct_sum(p, shifted);
          CHECK(validate_basis_exchange(summed));
          CHECK(summed.rank() == p.rank() + 1);
        }
        for (BasisMask mask = 0; mask < (1u << m); ++mask) {
          if (std::popcount(mask) != n) continue;
          SchubertParams sp;
          sp.m = m;
          sp.generator = a;
          for (auto i : mask_to_indices(mask)) {
            sp.bound.insert(scalar_mul(ctx, static_cast<std::int64_t>(i) + 1, a));
          }
          CHECK(validate_basis_exchange(make_schubert(ctx, sp)));
        }
      }
    }
  }
}

TEST_CASE("panhandle basis count matches its closed form") {
  GroupCtx z = GroupCtx::free_abelian(1);
  for (std::int64_t m = 2; m <= 7; ++m) {
    for (std::int64_t n = 1; n < m; ++n) {
      for (std::int64_t s = n; s < m; ++s) {
        Matroid p = make_panhandle(z, PanhandleParams{n, s, m, el(z, {1})});
        CHECK(static_cast<std::int64_t>(p.bases().size()) ==
              binomial(s, n) + (m - s) * binomial(s, n - 1));
      }
    }
  }
}

TEST_CASE("schubert basis systems are down-sets in the componentwise order") {
  GroupCtx z = GroupCtx::free_abelian(1);
  std::mt19937_64 rng(29);
  for (int t = 0; t < 60; ++t) {
    std::int64_t m = testutil::rand_in(rng, 2, 7);
    std::int64_t n = testutil::rand_in(rng, 1, m);
    std::set<std::int64_t> picks;
    while (static_cast<std::int64_t>(picks.size()) < n) picks.insert(testutil::rand_in(rng, 1, m));
    SchubertParams sp;
    sp.m = m;
    sp.generator = el(z, {1});
    for (std::int64_t i : picks) sp.bound.insert(el(z, {i}));
    Matroid sm = make_schubert(z, sp);
    for (BasisMask b : sm.bases()) {
      auto idx = mask_to_indices(b);
      // every componentwise-smaller index tuple is again a basis
      for (BasisMask other = 0; other < (1u << m); ++other) {
        if (std::popcount(other) != static_cast<int>(n)) continue;
        auto oidx = mask_to_indices(other);
        bool below = true;
        for (std::size_t i = 0; i < oidx.size(); ++i) below = below && oidx[i] <= idx[i];
        if (below) CHECK(sm.is_basis(other));
      }
    }
  }
}

TEST_CASE("sparse paving hyperplanes meet in at most rank-2 elements") {
  GroupCtx z = GroupCtx::free_abelian(1);
  std::vector<Matroid> instances;
  instances.push_back(make_uniform(z, int_ground(z, {1, 2, 3, 4, 5}), 3));
  instances.push_back(make_uniform(z, int_ground(z, {1, 2, 3, 4}), 2));
  instances.push_back(direct_sum(make_uniform(z, int_ground(z, {1, 2, 3}), 2),
                                 make_uniform(z, int_ground(z, {7}), 1)));
  for (const auto& m : instances) {
    REQUIRE(is_sparse_paving(m));
    if (m.rank() < 2) continue;
    auto hs = hyperplanes(m);
    for (std::size_t i = 0; i < hs.size(); ++i) {
      for (std::size_t j = i + 1; j < hs.size(); ++j) {
        CHECK(std::popcount(hs[i] & hs[j]) <= m.rank() - 2);
      }
    }
  }
}

TEST_CASE("isomorphism by exhaustive bijection") {
  GroupCtx z = GroupCtx::free_abelian(1);
  Matroid u23a = make_uniform(z, int_ground(z, {1, 2, 3}), 2);
  Matroid u23b = make_uniform(z, int_ground(z, {7, 8, 9}), 2);
  CHECK(are_isomorphic(u23a, u23b));

  Matroid p224 = make_panhandle(z, PanhandleParams{2, 2, 4, el(z, {1})});
  Matroid u24 = make_uniform(z, int_ground(z, {1, 2, 3, 4}), 2);
  CHECK(!are_isomorphic(p224, u24));

  Matroid top = make_panhandle(z, PanhandleParams{2, 3, 4, el(z, {1})});
  CHECK(are_isomorphic(top, u24));
}

TEST_CASE("ground sets beyond the cap are rejected") {
  GroupCtx z = GroupCtx::free_abelian(1);
  std::vector<std::int64_t> vals;
  for (std::int64_t v = 1; v <= 21; ++v) vals.push_back(v);
  CHECK_THROWS_AS(make_uniform(z, int_ground(z, vals), 2), Error);
}
