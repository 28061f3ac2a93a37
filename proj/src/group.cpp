#include "matchroid/group.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace matchroid {

namespace {

std::int64_t mod_reduce(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  if (r < 0) r += n;
  return r;
}

std::int64_t checked_narrow(__int128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    raise(ErrorKind::Domain, std::string(what) + ": coordinate overflow");
  }
  return static_cast<std::int64_t>(v);
}

void check_arity(const GroupCtx& ctx, const GroupElement& x, const char* what) {
  if (x.coords.size() != ctx.arity()) {
    raise(ErrorKind::Structural,
          std::string(what) + ": element arity " + std::to_string(x.coords.size()) +
              " does not match context arity " + std::to_string(ctx.arity()));
  }
}

}  // namespace

GroupCtx GroupCtx::free_abelian(std::size_t rank) {
  if (rank < 1) raise(ErrorKind::Domain, "free_abelian: rank must be >= 1");
  return GroupCtx(GroupKind::FreeAbelian, rank, {});
}

GroupCtx GroupCtx::finite_product(std::vector<std::int64_t> moduli) {
  if (moduli.empty()) raise(ErrorKind::Domain, "finite_product: needs at least one modulus");
  for (std::int64_t n : moduli) {
    if (n < 2) raise(ErrorKind::Domain, "finite_product: moduli must be >= 2");
  }
  std::size_t arity = moduli.size();
  return GroupCtx(GroupKind::FiniteProduct, arity, std::move(moduli));
}

std::size_t GroupCtx::rank() const {
  if (kind_ != GroupKind::FreeAbelian)
    raise(ErrorKind::Domain, "rank: context is not free abelian");
  return arity_;
}

const std::vector<std::int64_t>& GroupCtx::moduli() const {
  if (kind_ != GroupKind::FiniteProduct)
    raise(ErrorKind::Domain, "moduli: context is not a finite product");
  return moduli_;
}

GroupElement element(const GroupCtx& ctx, std::vector<std::int64_t> coords) {
  GroupElement x{std::move(coords)};
  check_arity(ctx, x, "element");
  if (ctx.kind() == GroupKind::FiniteProduct) {
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
      x.coords[i] = mod_reduce(x.coords[i], ctx.moduli()[i]);
    }
  }
  return x;
}

GroupElement zero(const GroupCtx& ctx) {
  return GroupElement{std::vector<std::int64_t>(ctx.arity(), 0)};
}

bool is_zero(const GroupElement& x) {
  return std::all_of(x.coords.begin(), x.coords.end(), [](std::int64_t c) { return c == 0; });
}

GroupElement add(const GroupCtx& ctx, const GroupElement& x, const GroupElement& y) {
  check_arity(ctx, x, "add");
  check_arity(ctx, y, "add");
  GroupElement out{std::vector<std::int64_t>(ctx.arity())};
  for (std::size_t i = 0; i < ctx.arity(); ++i) {
    __int128 v = static_cast<__int128>(x.coords[i]) + y.coords[i];
    if (ctx.kind() == GroupKind::FiniteProduct) {
      out.coords[i] = mod_reduce(static_cast<std::int64_t>(v % ctx.moduli()[i]), ctx.moduli()[i]);
    } else {
      out.coords[i] = checked_narrow(v, "add");
    }
  }
  return out;
}

GroupElement negate(const GroupCtx& ctx, const GroupElement& x) {
  check_arity(ctx, x, "negate");
  GroupElement out{std::vector<std::int64_t>(ctx.arity())};
  for (std::size_t i = 0; i < ctx.arity(); ++i) {
    if (ctx.kind() == GroupKind::FiniteProduct) {
      out.coords[i] = mod_reduce(-x.coords[i], ctx.moduli()[i]);
    } else {
      out.coords[i] = -x.coords[i];
    }
  }
  return out;
}

GroupElement scalar_mul(const GroupCtx& ctx, std::int64_t m, const GroupElement& x) {
  if (m < 1) raise(ErrorKind::Domain, "scalar_mul: multiplier must be >= 1");
  check_arity(ctx, x, "scalar_mul");
  GroupElement out{std::vector<std::int64_t>(ctx.arity())};
  for (std::size_t i = 0; i < ctx.arity(); ++i) {
    __int128 v = static_cast<__int128>(x.coords[i]) * m;
    if (ctx.kind() == GroupKind::FiniteProduct) {
      std::int64_t n = ctx.moduli()[i];
      out.coords[i] = mod_reduce(static_cast<std::int64_t>(v % n), n);
    } else {
      out.coords[i] = checked_narrow(v, "scalar_mul");
    }
  }
  return out;
}

std::optional<std::int64_t> element_order(const GroupCtx& ctx, const GroupElement& x) {
  check_arity(ctx, x, "element_order");
  if (is_zero(x)) return 1;
  if (ctx.kind() == GroupKind::FreeAbelian) return std::nullopt;
  // lcm over coordinate orders, clamped to int64.
  const __int128 cap = std::numeric_limits<std::int64_t>::max();
  __int128 l = 1;
  for (std::size_t i = 0; i < ctx.arity(); ++i) {
    std::int64_t n = ctx.moduli()[i];
    std::int64_t ord = n / std::gcd(n, x.coords[i]);
    std::int64_t g = std::gcd(static_cast<std::int64_t>(l), ord);
    l = (l / g) * ord;
    if (l > cap) return std::numeric_limits<std::int64_t>::max();
  }
  return static_cast<std::int64_t>(l);
}

std::strong_ordering lex_compare(const GroupCtx& ctx, const GroupElement& x,
                                 const GroupElement& y) {
  if (ctx.kind() != GroupKind::FreeAbelian) {
    raise(ErrorKind::UnsupportedOrder,
          "lex_compare: torsion groups carry no global compatible order");
  }
  check_arity(ctx, x, "lex_compare");
  check_arity(ctx, y, "lex_compare");
  return x.coords <=> y.coords;
}

ElementSet sumset(const GroupCtx& ctx, const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      out.insert(add(ctx, x, y));
    }
  }
  return out;
}

MinSubgroupSize MinSubgroupSize::of(std::int64_t value) {
  if (value < 2) raise(ErrorKind::Domain, "MinSubgroupSize: value must be >= 2");
  return MinSubgroupSize(value);
}

std::int64_t MinSubgroupSize::value() const {
  if (!value_) raise(ErrorKind::Domain, "MinSubgroupSize: value is infinite");
  return *value_;
}

std::int64_t MinSubgroupSize::ceil_log2() const {
  return matchroid::ceil_log2(value());
}

std::int64_t least_prime_factor(std::int64_t n) {
  if (n < 2) raise(ErrorKind::Domain, "least_prime_factor: needs n >= 2");
  if (n % 2 == 0) return 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return d;
  }
  return n;
}

std::int64_t ceil_log2(std::int64_t v) {
  if (v < 1) raise(ErrorKind::Domain, "ceil_log2: needs v >= 1");
  return std::bit_width(static_cast<std::uint64_t>(v - 1));
}

MinSubgroupSize min_subgroup_size(const GroupCtx& ctx) {
  if (ctx.kind() == GroupKind::FreeAbelian) return MinSubgroupSize::infinite();
  // Minimal nonzero subgroups are cyclic of prime order, so the answer is the
  // least prime dividing any modulus.
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t n : ctx.moduli()) {
    best = std::min(best, least_prime_factor(n));
  }
  return MinSubgroupSize::of(best);
}

OrderedSubset::OrderedSubset(GroupCtx ctx, std::vector<GroupElement> ascending, OrderKind kind)
    : ctx_(std::move(ctx)), elems_(std::move(ascending)), kind_(kind) {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    check_arity(ctx_, elems_[i], "OrderedSubset");
    auto [it, inserted] = pos_.emplace(elems_[i], i);
    if (!inserted) raise(ErrorKind::Domain, "OrderedSubset: duplicate element");
  }
}

bool OrderedSubset::contains(const GroupElement& x) const { return pos_.count(x) > 0; }

std::optional<std::size_t> OrderedSubset::position(const GroupElement& x) const {
  auto it = pos_.find(x);
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

const GroupElement& OrderedSubset::min() const {
  if (elems_.empty()) raise(ErrorKind::Domain, "min: empty subset");
  return elems_.front();
}

const GroupElement& OrderedSubset::max() const {
  if (elems_.empty()) raise(ErrorKind::Domain, "max: empty subset");
  return elems_.back();
}

std::pair<GroupElement, GroupElement> extrema(const OrderedSubset& a) {
  return {a.min(), a.max()};
}

bool is_positive(const OrderedSubset& a) {
  const GroupElement z = zero(a.ctx());
  if (a.contains(z)) return false;
  switch (a.order_kind()) {
    case OrderKind::Lex: {
      for (const auto& x : a.elements()) {
        if (lex_compare(a.ctx(), x, z) != std::strong_ordering::greater) return false;
      }
      return true;
    }
    case OrderKind::MultipleIndex:
      // Multiples {a, 2a, ...} of a generator declared positive by the
      // rectified order; zero was excluded at construction.
      return true;
    case OrderKind::Explicit:
      raise(ErrorKind::UnsupportedOrder,
            "is_positive: explicit order does not relate members to 0");
  }
  return false;
}

OrderedSubset multiples_of(const GroupCtx& ctx, const GroupElement& a, std::int64_t m) {
  check_arity(ctx, a, "multiples_of");
  if (is_zero(a)) raise(ErrorKind::Domain, "multiples_of: generator must be nonzero");
  if (m < 1) raise(ErrorKind::Domain, "multiples_of: m must be >= 1");
  if (ctx.kind() == GroupKind::FiniteProduct) {
    auto ord = element_order(ctx, a);
    if (ord && *ord <= m) {
      raise(ErrorKind::TorsionCollision,
            "multiples_of: element order " + std::to_string(*ord) +
                " does not exceed m = " + std::to_string(m));
    }
  }
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 1; i <= m; ++i) {
    elems.push_back(scalar_mul(ctx, i, a));
  }
  if (ctx.kind() == GroupKind::FreeAbelian) {
    // Ascending lexicographic order: multiple index order for a positive
    // generator, reversed for a negative one.
    if (lex_compare(ctx, a, zero(ctx)) == std::strong_ordering::less) {
      std::reverse(elems.begin(), elems.end());
    }
    return OrderedSubset(ctx, std::move(elems), OrderKind::Lex);
  }
  return OrderedSubset(ctx, std::move(elems), OrderKind::MultipleIndex);
}

std::optional<OrderedSubset> find_compatible_order(const GroupCtx& ctx, const ElementSet& a) {
  if (ctx.kind() == GroupKind::FreeAbelian) {
    std::vector<GroupElement> sorted(a.begin(), a.end());
    return OrderedSubset(ctx, std::move(sorted), OrderKind::Lex);
  }
  if (a.size() > 8) {
    raise(ErrorKind::SizeLimit, "find_compatible_order: brute force limited to 8 elements");
  }
  std::vector<GroupElement> elems(a.begin(), a.end());
  const int k = static_cast<int>(elems.size());
  if (k == 0) return OrderedSubset(ctx, {}, OrderKind::Explicit);

  // sum_idx[i][c] = index of elems[i] + elems[c] within A, or -1.
  std::vector<std::vector<int>> sum_idx(k, std::vector<int>(k, -1));
  std::map<GroupElement, int> where;
  for (int i = 0; i < k; ++i) where[elems[i]] = i;
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < k; ++c) {
      auto it = where.find(add(ctx, elems[i], elems[c]));
      if (it != where.end()) sum_idx[i][c] = it->second;
    }
  }

  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  std::vector<int> pos(k);
  do {
    for (int r = 0; r < k; ++r) pos[perm[r]] = r;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      for (int j = 0; j < k && ok; ++j) {
        if (pos[i] > pos[j]) continue;
        for (int c = 0; c < k; ++c) {
          int ic = sum_idx[i][c];
          int jc = sum_idx[j][c];
          if (ic >= 0 && jc >= 0 && pos[ic] > pos[jc]) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) {
      std::vector<GroupElement> ordered(k);
      for (int i = 0; i < k; ++i) ordered[pos[i]] = elems[i];
      return OrderedSubset(ctx, std::move(ordered), OrderKind::Explicit);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool sufficiently_small(const GroupCtx& ctx, std::int64_t m) {
  if (ctx.kind() == GroupKind::FreeAbelian) return true;
  return 2 * m < min_subgroup_size(ctx).ceil_log2();
}

bool total_small_condition(const GroupCtx& ctx, const ElementSet& em, const ElementSet& en,
                           std::int64_t n) {
  if (n < 1) raise(ErrorKind::Domain, "total_small_condition: rank must be >= 1");
  if (ctx.kind() == GroupKind::FreeAbelian) return true;
  ElementSet all = em;
  all.insert(en.begin(), en.end());
  ElementSet sums = sumset(ctx, em, en);
  all.insert(sums.begin(), sums.end());
  for (const auto& y : en) all.insert(scalar_mul(ctx, n, y));
  all.insert(zero(ctx));
  return static_cast<std::int64_t>(all.size()) < min_subgroup_size(ctx).ceil_log2();
}

}  // namespace matchroid
