#include "matchroid/matroid.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace matchroid {

namespace {

constexpr std::size_t kMaxValidatedBases = 2000;

// Next mask with the same popcount (Gosper); 0 when exhausted over `bits`.
BasisMask next_subset(BasisMask v, std::size_t bits) {
  BasisMask c = v & static_cast<BasisMask>(-static_cast<std::int32_t>(v));
  BasisMask r = v + c;
  BasisMask next = (((r ^ v) >> 2) / c) | r;
  if (next >= (1u << bits)) return 0;
  return next;
}

template <typename F>
void for_each_subset_of_size(std::size_t bits, int k, F&& f) {
  if (k == 0) {
    f(BasisMask{0});
    return;
  }
  if (k < 0 || static_cast<std::size_t>(k) > bits) return;
  BasisMask v = static_cast<BasisMask>((1u << k) - 1);
  while (v != 0) {
    f(v);
    v = next_subset(v, bits);
  }
}

void sort_bases(std::vector<BasisMask>& bases) {
  std::sort(bases.begin(), bases.end(), lex_mask_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
}

std::vector<GroupElement> canonical_ground(const GroupCtx& ctx,
                                           std::vector<GroupElement> ground) {
  if (ground.empty()) raise(ErrorKind::Domain, "matroid: ground set must be nonempty");
  if (ground.size() > Matroid::kMaxGround) {
    raise(ErrorKind::SizeLimit, "matroid: ground sets are limited to " +
                                    std::to_string(Matroid::kMaxGround) + " elements");
  }
  std::set<GroupElement> seen;
  for (auto& x : ground) {
    x = element(ctx, std::move(x.coords));
    if (!seen.insert(x).second) {
      raise(ErrorKind::Domain, "matroid: duplicate ground element");
    }
  }
  return ground;
}

// Exchange axiom over an already sorted, deduplicated basis list.
bool exchange_holds(const std::vector<BasisMask>& bases) {
  for (BasisMask b1 : bases) {
    for (BasisMask b2 : bases) {
      if (b1 == b2) continue;
      BasisMask only1 = b1 & ~b2;
      for (BasisMask xs = only1; xs != 0; xs &= xs - 1) {
        BasisMask x = xs & static_cast<BasisMask>(-static_cast<std::int32_t>(xs));
        bool found = false;
        for (BasisMask ys = b2 & ~b1; ys != 0; ys &= ys - 1) {
          BasisMask y = ys & static_cast<BasisMask>(-static_cast<std::int32_t>(ys));
          if (std::binary_search(bases.begin(), bases.end(), (b1 ^ x) | y, lex_mask_less)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<std::size_t> mask_to_indices(BasisMask mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

BasisMask indices_to_mask(const std::vector<std::size_t>& indices, std::size_t ground_size) {
  BasisMask mask = 0;
  for (std::size_t i : indices) {
    if (i >= ground_size) raise(ErrorKind::Domain, "basis index out of range");
    BasisMask bit = static_cast<BasisMask>(1u << i);
    if (mask & bit) raise(ErrorKind::Domain, "repeated basis index");
    mask |= bit;
  }
  return mask;
}

bool lex_mask_less(BasisMask a, BasisMask b) {
  if (a == b) return false;
  BasisMask diff = a ^ b;
  BasisMask low = diff & static_cast<BasisMask>(-static_cast<std::int32_t>(diff));
  // They agree below the lowest differing index; the set holding that index
  // starts earlier.
  if ((a & low) && (b & low) == 0) return true;
  if ((b & low) && (a & low) == 0) return false;
  return a < b;  // unreachable for distinct masks
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

Matroid::Matroid(GroupCtx ctx, std::vector<GroupElement> ground, std::vector<BasisMask> bases,
                 int rank)
    : ctx_(std::move(ctx)), ground_(std::move(ground)), bases_(std::move(bases)), rank_(rank) {
  for (std::size_t i = 0; i < ground_.size(); ++i) index_[ground_[i]] = i;
}

std::optional<std::size_t> Matroid::index_of(const GroupElement& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Matroid::is_basis(BasisMask mask) const {
  return std::binary_search(bases_.begin(), bases_.end(), mask, lex_mask_less);
}

int Matroid::rank_of(BasisMask subset) const {
  if ((subset & ~full_mask()) != 0) raise(ErrorKind::Domain, "rank_of: subset out of range");
  int best = 0;
  for (BasisMask b : bases_) {
    best = std::max(best, std::popcount(subset & b));
  }
  return best;
}

bool Matroid::is_independent(BasisMask subset) const {
  return rank_of(subset) == std::popcount(subset);
}

std::vector<std::size_t> Matroid::loops() const {
  BasisMask covered = 0;
  for (BasisMask b : bases_) covered |= b;
  return mask_to_indices(full_mask() & ~covered);
}

Matroid make_from_bases(const GroupCtx& ctx, std::vector<GroupElement> ground,
                        std::vector<BasisMask> bases) {
  ground = canonical_ground(ctx, std::move(ground));
  if (bases.empty()) raise(ErrorKind::Domain, "make_from_bases: empty basis list");
  sort_bases(bases);
  if (bases.size() > kMaxValidatedBases) {
    raise(ErrorKind::SizeLimit,
          "make_from_bases: basis system too large to validate; use a constructor shorthand");
  }
  const int n = std::popcount(bases.front());
  if (n < 1) raise(ErrorKind::Domain, "make_from_bases: rank must be at least 1");
  BasisMask full = static_cast<BasisMask>((1u << ground.size()) - 1);
  BasisMask covered = 0;
  for (BasisMask b : bases) {
    if ((b & ~full) != 0) raise(ErrorKind::Domain, "make_from_bases: basis index out of range");
    if (std::popcount(b) != n) {
      raise(ErrorKind::InvalidBasisSystem, "make_from_bases: bases of unequal size");
    }
    covered |= b;
  }
  if (!exchange_holds(bases)) {
    raise(ErrorKind::InvalidBasisSystem, "make_from_bases: exchange axiom fails");
  }
  if (covered != full) {
    raise(ErrorKind::Loop, "make_from_bases: element " +
                               std::to_string(mask_to_indices(full & ~covered).front()) +
                               " lies in no basis");
  }
  return Matroid(ctx, std::move(ground), std::move(bases), n);
}

Matroid make_from_bases(const GroupCtx& ctx, std::vector<GroupElement> ground,
                        const std::vector<std::vector<std::size_t>>& bases) {
  std::vector<BasisMask> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) masks.push_back(indices_to_mask(b, ground.size()));
  return make_from_bases(ctx, std::move(ground), std::move(masks));
}

Matroid make_uniform(const GroupCtx& ctx, std::vector<GroupElement> ground, std::int64_t n) {
  ground = canonical_ground(ctx, std::move(ground));
  if (n < 1 || n > static_cast<std::int64_t>(ground.size())) {
    raise(ErrorKind::Domain, "make_uniform: rank out of range");
  }
  std::vector<BasisMask> bases;
  for_each_subset_of_size(ground.size(), static_cast<int>(n),
                          [&](BasisMask b) { bases.push_back(b); });
  sort_bases(bases);
  return Matroid(ctx, std::move(ground), std::move(bases), static_cast<int>(n));
}

namespace {

// Shared ground construction for the two families on {a, 2a, ..., ma}.
std::vector<GroupElement> family_ground(const GroupCtx& ctx, const GroupElement& a,
                                        std::int64_t m, const char* what) {
  if (m < 1 || m > static_cast<std::int64_t>(Matroid::kMaxGround)) {
    raise(ErrorKind::SizeLimit, std::string(what) + ": m out of desk-scale range");
  }
  if (!ctx.torsion_free() && !sufficiently_small(ctx, m)) {
    raise(ErrorKind::UnsupportedOrder,
          std::string(what) + ": no compatible order available, m fails 2m < ceil(log2(p))");
  }
  return multiples_of(ctx, a, m).elements();
}

}  // namespace

Matroid make_panhandle(const GroupCtx& ctx, const PanhandleParams& p) {
  if (!(1 <= p.n && p.n <= p.s && p.s < p.m)) {
    raise(ErrorKind::Domain, "make_panhandle: need 1 <= n <= s < m");
  }
  std::vector<GroupElement> ground = family_ground(ctx, p.generator, p.m, "make_panhandle");
  std::map<GroupElement, std::size_t> where;
  for (std::size_t i = 0; i < ground.size(); ++i) where[ground[i]] = i;
  BasisMask handle = 0;  // positions of {a, ..., sa} in the ground order
  for (std::int64_t i = 1; i <= p.s; ++i) {
    handle |= static_cast<BasisMask>(1u << where.at(scalar_mul(ctx, i, p.generator)));
  }
  std::vector<BasisMask> bases;
  for_each_subset_of_size(ground.size(), static_cast<int>(p.n), [&](BasisMask b) {
    if (std::popcount(b & handle) >= p.n - 1) bases.push_back(b);
  });
  sort_bases(bases);
  return Matroid(ctx, std::move(ground), std::move(bases), static_cast<int>(p.n));
}

namespace {

// Sorted ground positions of the bound set; Domain error when it is not an
// n-subset of {a, ..., ma}.
std::vector<int> bound_positions(const GroupCtx& ctx, const SchubertParams& p,
                                 const std::vector<GroupElement>& ground) {
  if (p.bound.empty()) raise(ErrorKind::Domain, "make_schubert: bound set must be nonempty");
  if (p.bound.size() > ground.size()) {
    raise(ErrorKind::Domain, "make_schubert: bound set larger than the ground");
  }
  std::map<GroupElement, int> where;
  for (std::size_t i = 0; i < ground.size(); ++i) where[ground[i]] = static_cast<int>(i);
  std::vector<int> pos;
  for (const auto& x : p.bound) {
    auto it = where.find(element(ctx, x.coords));
    if (it == where.end()) {
      raise(ErrorKind::Domain, "make_schubert: bound set is not a subset of the multiples");
    }
    pos.push_back(it->second);
  }
  std::sort(pos.begin(), pos.end());
  return pos;
}

}  // namespace

Matroid make_schubert(const GroupCtx& ctx, const SchubertParams& p) {
  std::vector<GroupElement> ground = family_ground(ctx, p.generator, p.m, "make_schubert");
  std::vector<int> bound_pos = bound_positions(ctx, p, ground);
  const int n = static_cast<int>(bound_pos.size());
  std::vector<BasisMask> bases;
  for_each_subset_of_size(ground.size(), n, [&](BasisMask b) {
    auto idx = mask_to_indices(b);  // ascending = increasing in the ground order
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(idx[i]) > bound_pos[i]) return;
    }
    bases.push_back(b);
  });
  sort_bases(bases);
  return Matroid(ctx, std::move(ground), std::move(bases), n);
}

Matroid dual(const Matroid& m) {
  if (m.rank() == static_cast<int>(m.ground_size())) {
    raise(ErrorKind::Domain, "dual: matroid of full rank has a rank-zero dual");
  }
  std::vector<BasisMask> bases;
  bases.reserve(m.bases().size());
  for (BasisMask b : m.bases()) bases.push_back(m.full_mask() & ~b);
  sort_bases(bases);
  return Matroid(m.ctx(), m.ground(), std::move(bases),
                 static_cast<int>(m.ground_size()) - m.rank());
}

Matroid direct_sum(const Matroid& m, const Matroid& n) {
  if (!(m.ctx() == n.ctx())) {
    raise(ErrorKind::Structural, "direct_sum: summands over different groups");
  }
  if (m.ground_size() + n.ground_size() > Matroid::kMaxGround) {
    raise(ErrorKind::SizeLimit, "direct_sum: combined ground exceeds the size cap");
  }
  std::vector<GroupElement> ground = m.ground();
  for (const auto& x : n.ground()) {
    if (m.in_ground(x)) raise(ErrorKind::Disjointness, "direct_sum: ground sets overlap");
    ground.push_back(x);
  }
  const int shift = static_cast<int>(m.ground_size());
  std::vector<BasisMask> bases;
  bases.reserve(m.bases().size() * n.bases().size());
  for (BasisMask bm : m.bases()) {
    for (BasisMask bn : n.bases()) {
      bases.push_back(bm | (bn << shift));
    }
  }
  sort_bases(bases);
  return Matroid(m.ctx(), std::move(ground), std::move(bases), m.rank() + n.rank());
}

int rank_of(const Matroid& m, BasisMask subset) { return m.rank_of(subset); }

std::vector<BasisMask> circuits(const Matroid& m) {
  std::vector<BasisMask> found;
  const std::size_t g = m.ground_size();
  for (int k = 1; k <= static_cast<int>(g); ++k) {
    for_each_subset_of_size(g, k, [&](BasisMask s) {
      for (BasisMask c : found) {
        if ((s & c) == c) return;  // contains a smaller circuit
      }
      if (!m.is_independent(s)) found.push_back(s);
    });
  }
  std::sort(found.begin(), found.end(), lex_mask_less);
  return found;
}

std::vector<BasisMask> hyperplanes(const Matroid& m) {
  std::set<BasisMask> flats;
  const int target = m.rank() - 1;
  for_each_subset_of_size(m.ground_size(), target, [&](BasisMask s) {
    if (!m.is_independent(s)) return;
    BasisMask closure = s;
    for (std::size_t e = 0; e < m.ground_size(); ++e) {
      BasisMask bit = static_cast<BasisMask>(1u << e);
      if ((s & bit) == 0 && m.rank_of(s | bit) == target) closure |= bit;
    }
    flats.insert(closure);
  });
  std::vector<BasisMask> out(flats.begin(), flats.end());
  std::sort(out.begin(), out.end(), lex_mask_less);
  return out;
}

bool is_paving(const Matroid& m) {
  bool paving = true;
  for_each_subset_of_size(m.ground_size(), m.rank() - 1, [&](BasisMask s) {
    if (!m.is_independent(s)) paving = false;
  });
  return paving;
}

bool is_sparse_paving(const Matroid& m) {
  if (!is_paving(m)) return false;
  if (m.rank() == static_cast<int>(m.ground_size())) {
    // The dual has rank zero and no circuits of size below zero exist.
    return true;
  }
  return is_paving(dual(m));
}

bool check_d_partition(const Matroid& m) {
  if (m.rank() < 2) raise(ErrorKind::Domain, "check_d_partition: needs rank >= 2");
  if (!is_paving(m)) raise(ErrorKind::Domain, "check_d_partition: matroid is not paving");
  std::vector<BasisMask> hs = hyperplanes(m);
  bool ok = true;
  for_each_subset_of_size(m.ground_size(), m.rank() - 1, [&](BasisMask s) {
    int count = 0;
    for (BasisMask h : hs) {
      if ((s & h) == s) ++count;
    }
    if (count != 1) ok = false;
  });
  return ok;
}

bool is_uniform_schubert(const GroupCtx& ctx, const SchubertParams& p) {
  std::vector<GroupElement> ground = family_ground(ctx, p.generator, p.m, "is_uniform_schubert");
  std::vector<int> pos = bound_positions(ctx, p, ground);
  const int n = static_cast<int>(pos.size());
  const int m = static_cast<int>(ground.size());
  for (int i = 0; i < n; ++i) {
    if (pos[i] != m - n + i) return false;
  }
  return true;
}

bool is_uniform(const Matroid& m) {
  return static_cast<std::int64_t>(m.bases().size()) ==
         binomial(static_cast<std::int64_t>(m.ground_size()), m.rank());
}

bool are_isomorphic(const Matroid& m, const Matroid& n) {
  if (m.ground_size() > 8 || n.ground_size() > 8) {
    raise(ErrorKind::SizeLimit, "are_isomorphic: exhaustive search limited to 8 elements");
  }
  if (m.ground_size() != n.ground_size() || m.rank() != n.rank() ||
      m.bases().size() != n.bases().size()) {
    return false;
  }
  const std::size_t g = m.ground_size();
  std::vector<std::size_t> perm(g);
  for (std::size_t i = 0; i < g; ++i) perm[i] = i;
  do {
    std::vector<BasisMask> mapped;
    mapped.reserve(m.bases().size());
    for (BasisMask b : m.bases()) {
      BasisMask image = 0;
      for (std::size_t i = 0; i < g; ++i) {
        if (b & (1u << i)) image |= static_cast<BasisMask>(1u << perm[i]);
      }
      mapped.push_back(image);
    }
    std::sort(mapped.begin(), mapped.end(), lex_mask_less);
    if (mapped == n.bases()) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool validate_basis_exchange(const Matroid& m) {
  if (m.bases().size() > kMaxValidatedBases) {
    raise(ErrorKind::SizeLimit, "validate_basis_exchange: basis system too large");
  }
  return exchange_holds(m.bases());
}

}  // namespace matchroid
