#include "matchroid/matching.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <limits>

namespace matchroid {

namespace {

// Hopcroft-Karp over adjacency bitmasks; deterministic for a fixed input.
struct BipartiteMatcher {
  int nl;
  int nr;
  const std::vector<BasisMask>& adj;  // adj[l] = mask of right neighbors
  std::vector<int> match_l, match_r, dist;

  BipartiteMatcher(int left, int right, const std::vector<BasisMask>& adjacency)
      : nl(left), nr(right), adj(adjacency), match_l(left, -1), match_r(right, -1),
        dist(left, 0) {}

  bool bfs() {
    std::deque<int> q;
    bool reachable_free = false;
    for (int u = 0; u < nl; ++u) {
      if (match_l[u] < 0) {
        dist[u] = 0;
        q.push_back(u);
      } else {
        dist[u] = std::numeric_limits<int>::max();
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (BasisMask vs = adj[u]; vs != 0; vs &= vs - 1) {
        int v = std::countr_zero(vs);
        int w = match_r[v];
        if (w < 0) {
          reachable_free = true;
        } else if (dist[w] == std::numeric_limits<int>::max()) {
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(int u) {
    for (BasisMask vs = adj[u]; vs != 0; vs &= vs - 1) {
      int v = std::countr_zero(vs);
      int w = match_r[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    dist[u] = std::numeric_limits<int>::max();
    return false;
  }

  int solve() {
    int size = 0;
    while (bfs()) {
      for (int u = 0; u < nl; ++u) {
        if (match_l[u] < 0 && dfs(u)) ++size;
      }
    }
    return size;
  }
};

// adj[i] = mask over E(N) of the j with ground_m[i] + ground_n[j] not in E(M).
std::vector<BasisMask> sum_avoidance_table(const Matroid& m, const Matroid& n) {
  std::vector<BasisMask> table(m.ground_size(), 0);
  for (std::size_t i = 0; i < m.ground_size(); ++i) {
    for (std::size_t j = 0; j < n.ground_size(); ++j) {
      if (!m.in_ground(add(m.ctx(), m.ground()[i], n.ground()[j]))) {
        table[i] |= static_cast<BasisMask>(1u << j);
      }
    }
  }
  return table;
}

// Compact a mask over the full right side to positions within dst_mask.
BasisMask compact_row(BasisMask row, const std::vector<int>& dst_index) {
  BasisMask out = 0;
  for (std::size_t k = 0; k < dst_index.size(); ++k) {
    if (row & (1u << dst_index[k])) out |= static_cast<BasisMask>(1u << k);
  }
  return out;
}

std::optional<std::vector<std::pair<int, int>>> pair_bases(
    const std::vector<BasisMask>& table, BasisMask basis_m, BasisMask basis_n) {
  std::vector<int> src = [&] {
    std::vector<int> v;
    for (auto i : mask_to_indices(basis_m)) v.push_back(static_cast<int>(i));
    return v;
  }();
  std::vector<int> dst = [&] {
    std::vector<int> v;
    for (auto j : mask_to_indices(basis_n)) v.push_back(static_cast<int>(j));
    return v;
  }();
  const int k = static_cast<int>(src.size());
  std::vector<BasisMask> adj(k);
  for (int i = 0; i < k; ++i) adj[i] = compact_row(table[src[i]], dst);
  BipartiteMatcher matcher(k, k, adj);
  if (matcher.solve() != k) return std::nullopt;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(k);
  for (int i = 0; i < k; ++i) pairs.emplace_back(src[i], dst[matcher.match_l[i]]);
  return pairs;
}

std::optional<MatchWitness> matched_into_brute(const std::vector<BasisMask>& table,
                                               BasisMask basis_m, const Matroid& n) {
  for (BasisMask bn : n.bases()) {
    if (auto pairs = pair_bases(table, basis_m, bn)) {
      return MatchWitness{basis_m, bn, std::move(*pairs)};
    }
  }
  return std::nullopt;
}

std::optional<MatchWitness> matched_into_intersection(const std::vector<BasisMask>& table,
                                                      BasisMask basis_m, const Matroid& n) {
  std::vector<int> slots;
  for (auto i : mask_to_indices(basis_m)) slots.push_back(static_cast<int>(i));
  std::vector<BasisMask> slot_adj(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) slot_adj[s] = table[slots[s]];

  auto transversal = [&](BasisMask subset) {
    return transversal_independence(slot_adj, subset);
  };
  auto in_n = [&](BasisMask subset) { return n.is_independent(subset); };
  auto common =
      max_common_independent(transversal, in_n, n.ground_size(), static_cast<int>(slots.size()));
  if (!common) return std::nullopt;
  auto pairs = pair_bases(table, basis_m, *common);
  if (!pairs) raise(ErrorKind::Internal, "intersection produced an unmatchable target basis");
  return MatchWitness{basis_m, *common, std::move(*pairs)};
}

std::optional<MatchWitness> matched_into(const std::vector<BasisMask>& table, const Matroid& m,
                                         BasisMask basis_m, const Matroid& n,
                                         const MatchOptions& options) {
  MatchEngine engine = options.engine;
  if (engine == MatchEngine::Auto) {
    engine = n.bases().size() < options.brute_force_threshold ? MatchEngine::BruteForce
                                                              : MatchEngine::Intersection;
  }
  std::optional<MatchWitness> w = engine == MatchEngine::BruteForce
                                      ? matched_into_brute(table, basis_m, n)
                                      : matched_into_intersection(table, basis_m, n);
  if (w && !validate_witness(m, n, *w)) {
    raise(ErrorKind::Internal, "matching engine produced an invalid witness");
  }
  return w;
}

}  // namespace

std::optional<std::vector<std::pair<GroupElement, GroupElement>>> group_matching(
    const GroupCtx& ctx, const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) {
    raise(ErrorKind::Domain, "group_matching: sets must have equal size");
  }
  std::vector<GroupElement> av(a.begin(), a.end());
  std::vector<GroupElement> bv(b.begin(), b.end());
  const int k = static_cast<int>(av.size());
  if (k > 31) raise(ErrorKind::SizeLimit, "group_matching: sets limited to 31 elements");
  std::vector<BasisMask> adj(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (a.count(add(ctx, av[i], bv[j])) == 0) adj[i] |= static_cast<BasisMask>(1u << j);
    }
  }
  BipartiteMatcher matcher(k, k, adj);
  if (matcher.solve() != k) return std::nullopt;
  std::vector<std::pair<GroupElement, GroupElement>> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) out.emplace_back(av[i], bv[matcher.match_l[i]]);
  return out;
}

std::optional<std::vector<std::pair<int, int>>> basis_pair_matched(const Matroid& m,
                                                                   BasisMask basis_m,
                                                                   const Matroid& n,
                                                                   BasisMask basis_n) {
  if (std::popcount(basis_m) != std::popcount(basis_n)) {
    raise(ErrorKind::Domain, "basis_pair_matched: bases of different rank");
  }
  if (!m.is_basis(basis_m)) raise(ErrorKind::Domain, "basis_pair_matched: not a basis of M");
  if (!n.is_basis(basis_n)) raise(ErrorKind::Domain, "basis_pair_matched: not a basis of N");
  return pair_bases(sum_avoidance_table(m, n), basis_m, basis_n);
}

std::optional<MatchWitness> basis_matched_into(const Matroid& m, BasisMask basis_m,
                                               const Matroid& n, const MatchOptions& options) {
  if (m.rank() != n.rank()) raise(ErrorKind::Domain, "basis_matched_into: rank mismatch");
  if (!m.is_basis(basis_m)) raise(ErrorKind::Domain, "basis_matched_into: not a basis of M");
  return matched_into(sum_avoidance_table(m, n), m, basis_m, n, options);
}

MatchReport matroid_matched(const Matroid& m, const Matroid& n, const MatchOptions& options) {
  if (m.rank() != n.rank()) raise(ErrorKind::Domain, "matroid_matched: rank mismatch");
  const std::vector<BasisMask> table = sum_avoidance_table(m, n);
  MatchReport report;
  for (BasisMask bm : m.bases()) {
    auto w = matched_into(table, m, bm, n, options);
    const bool found = w.has_value();
    report.per_basis.push_back(BasisOutcome{bm, std::move(w)});
    if (!found) {
      report.matched = false;
      report.counterexample = bm;
      return report;
    }
  }
  report.matched = true;
  return report;
}

std::optional<BasisMask> matroid_intersection(const Matroid& m1, const Matroid& m2, int k) {
  if (!(m1.ctx() == m2.ctx()) || m1.ground() != m2.ground()) {
    raise(ErrorKind::Structural, "matroid_intersection: matroids share no ground list");
  }
  if (k < 0) raise(ErrorKind::Domain, "matroid_intersection: target size must be >= 0");
  auto in1 = [&](BasisMask s) { return m1.is_independent(s); };
  auto in2 = [&](BasisMask s) { return m2.is_independent(s); };
  return max_common_independent(in1, in2, m1.ground_size(), k);
}

std::optional<BasisMask> max_common_independent(const std::function<bool(BasisMask)>& indep1,
                                                const std::function<bool(BasisMask)>& indep2,
                                                std::size_t ground_size, int target) {
  const int g = static_cast<int>(ground_size);
  BasisMask current = 0;
  while (std::popcount(current) < target) {
    // Exchange graph: sources are elements addable under indep1, sinks those
    // addable under indep2; augment along a shortest source-to-sink path.
    std::vector<int> parent(g, -2);  // -2 unvisited, -1 root
    std::deque<int> queue;
    for (int y = 0; y < g; ++y) {
      BasisMask bit = static_cast<BasisMask>(1u << y);
      if ((current & bit) == 0 && indep1(current | bit)) {
        parent[y] = -1;
        queue.push_back(y);
      }
    }
    int goal = -1;
    while (!queue.empty() && goal < 0) {
      int v = queue.front();
      queue.pop_front();
      BasisMask vbit = static_cast<BasisMask>(1u << v);
      if ((current & vbit) == 0 && indep2(current | vbit)) {
        goal = v;
        break;
      }
      if (current & vbit) {
        // v in the set: arcs to outside elements y with set - v + y in M1.
        for (int y = 0; y < g; ++y) {
          BasisMask ybit = static_cast<BasisMask>(1u << y);
          if ((current & ybit) || parent[y] != -2) continue;
          if (indep1((current ^ vbit) | ybit)) {
            parent[y] = v;
            queue.push_back(y);
          }
        }
      } else {
        // v outside: arcs to members x with set - x + v in M2.
        for (BasisMask xs = current; xs != 0; xs &= xs - 1) {
          int x = std::countr_zero(xs);
          if (parent[x] != -2) continue;
          if (indep2((current ^ (1u << x)) | vbit)) {
            parent[x] = v;
            queue.push_back(x);
          }
        }
      }
    }
    if (goal < 0) return std::nullopt;
    for (int v = goal; v >= 0; v = parent[v]) {
      current ^= static_cast<BasisMask>(1u << v);
    }
  }
  return current;
}

bool transversal_independence(const std::vector<BasisMask>& slot_adjacency, BasisMask subset) {
  if (subset == 0) return true;
  std::vector<int> members;
  for (auto j : mask_to_indices(subset)) members.push_back(static_cast<int>(j));
  const int k = static_cast<int>(members.size());
  if (k > static_cast<int>(slot_adjacency.size())) return false;
  std::vector<BasisMask> adj(slot_adjacency.size());
  for (std::size_t s = 0; s < slot_adjacency.size(); ++s) {
    adj[s] = compact_row(slot_adjacency[s], members);
  }
  BipartiteMatcher matcher(static_cast<int>(slot_adjacency.size()), k, adj);
  return matcher.solve() == k;
}

bool validate_witness(const Matroid& m, const Matroid& n, const MatchWitness& w) {
  if (!m.is_basis(w.source_basis) || !n.is_basis(w.target_basis)) return false;
  if (std::popcount(w.source_basis) != static_cast<int>(w.pairs.size())) return false;
  BasisMask src_seen = 0, dst_seen = 0;
  for (auto [i, j] : w.pairs) {
    if (i < 0 || j < 0 || i >= static_cast<int>(m.ground_size()) ||
        j >= static_cast<int>(n.ground_size())) {
      return false;
    }
    BasisMask ib = static_cast<BasisMask>(1u << i);
    BasisMask jb = static_cast<BasisMask>(1u << j);
    if ((src_seen & ib) || (dst_seen & jb)) return false;
    src_seen |= ib;
    dst_seen |= jb;
    if (m.in_ground(add(m.ctx(), m.ground()[i], n.ground()[j]))) return false;
  }
  return src_seen == w.source_basis && dst_seen == w.target_basis;
}

}  // namespace matchroid
