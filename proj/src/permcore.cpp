#include "ptl/permcore.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "ptl/errors.hpp"

namespace ptl {

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out += char('0' + int(v % 10));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

u128 factorial(std::uint32_t n) {
  if (n > 34) fail(errc::too_large, "factorial overflows 128 bits");
  u128 f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

WordRef word_leaf(std::int32_t letter) {
  auto node = std::make_shared<WordNode>();
  node->kind = WordNode::Kind::leaf;
  node->letter = letter;
  return node;
}

WordRef word_concat(const WordRef& a, const WordRef& b) {
  if (!a) return b;
  if (!b) return a;
  auto node = std::make_shared<WordNode>();
  node->kind = WordNode::Kind::concat;
  node->left = a;
  node->right = b;
  return node;
}

WordRef word_inverse(const WordRef& a) {
  if (!a) return nullptr;
  auto node = std::make_shared<WordNode>();
  node->kind = WordNode::Kind::inv;
  node->child = a;
  return node;
}

std::vector<std::int32_t> expand(const WordRef& w) {
  std::vector<std::int32_t> out;
  // (node, inverted); inverted traversal flips order and negates leaves
  std::vector<std::pair<const WordNode*, bool>> stack;
  if (w) stack.emplace_back(w.get(), false);
  while (!stack.empty()) {
    auto [node, inv] = stack.back();
    stack.pop_back();
    switch (node->kind) {
      case WordNode::Kind::leaf:
        out.push_back(inv ? -node->letter : node->letter);
        break;
      case WordNode::Kind::concat:
        if (!inv) {
          if (node->right) stack.emplace_back(node->right.get(), false);
          if (node->left) stack.emplace_back(node->left.get(), false);
        } else {
          if (node->left) stack.emplace_back(node->left.get(), true);
          if (node->right) stack.emplace_back(node->right.get(), true);
        }
        break;
      case WordNode::Kind::inv:
        if (node->child) stack.emplace_back(node->child.get(), !inv);
        break;
    }
  }
  return out;
}

Perm eval_letters(std::span<const std::int32_t> letters, std::span<const Perm> alphabet,
                  std::size_t degree) {
  Perm acc(degree);
  for (std::int32_t letter : letters) {
    std::size_t idx = std::size_t(letter > 0 ? letter : -letter) - 1;
    if (idx >= alphabet.size()) fail(errc::bad_query, "word letter out of range");
    acc = letter > 0 ? compose(acc, alphabet[idx]) : compose(acc, inverse(alphabet[idx]));
  }
  return acc;
}

WPerm wcompose(const WPerm& a, const WPerm& b) {
  return WPerm{compose(a.p, b.p), word_concat(a.w, b.w)};
}

WPerm winverse(const WPerm& a) { return WPerm{inverse(a.p), word_inverse(a.w)}; }

std::vector<WPerm> tag_generators(const std::vector<Perm>& gens) {
  std::vector<WPerm> out;
  out.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    out.push_back(WPerm{gens[i], word_leaf(std::int32_t(i + 1))});
  return out;
}

void StabChain::ensure_level(std::uint32_t beta) {
  Level lvl;
  lvl.beta = beta;
  lvl.transversal.assign(degree_, std::nullopt);
  lvl.transversal[beta] = WPerm{Perm(degree_), nullptr};
  lvl.orbit = {beta};
  base_.push_back(beta);
  levels_.push_back(std::move(lvl));
}

void StabChain::update_orbit(std::size_t i) {
  Level& lvl = levels_[i];
  lvl.transversal.assign(degree_, std::nullopt);
  lvl.transversal[lvl.beta] = WPerm{Perm(degree_), nullptr};
  lvl.orbit = {lvl.beta};
  for (std::size_t head = 0; head < lvl.orbit.size(); ++head) {
    std::uint32_t x = lvl.orbit[head];
    for (const WPerm& s : lvl.gens) {
      std::uint32_t y = s.p(x);
      if (!lvl.transversal[y]) {
        lvl.transversal[y] = wcompose(*lvl.transversal[x], s);
        lvl.orbit.push_back(y);
      }
    }
  }
}

std::pair<WPerm, std::size_t> StabChain::strip(WPerm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    std::uint32_t x = g.p(levels_[i].beta);
    if (!levels_[i].transversal[x]) return {std::move(g), i};
    g = wcompose(g, winverse(*levels_[i].transversal[x]));
  }
  return {std::move(g), levels_.size()};
}

void StabChain::complete_level(std::size_t i) {
  update_orbit(i);
  // index-based scan: levels_ may grow (and reallocate) when a Schreier
  // generator fails to strip and the base gets extended
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t oi = 0; oi < levels_[i].orbit.size() && !dirty; ++oi) {
      for (std::size_t si = 0; si < levels_[i].gens.size() && !dirty; ++si) {
        std::uint32_t x = levels_[i].orbit[oi];
        WPerm s = levels_[i].gens[si];
        std::uint32_t y = s.p(x);
        WPerm schreier = wcompose(wcompose(*levels_[i].transversal[x], s),
                                  winverse(*levels_[i].transversal[y]));
        if (schreier.p.is_identity()) continue;
        auto [h, j] = strip(std::move(schreier), i + 1);
        if (h.p.is_identity()) continue;
        if (j == levels_.size()) {
          std::uint32_t moved = 0;
          while (h.p(moved) == moved) ++moved;
          ensure_level(moved);
        }
        bool added = false;
        for (std::size_t k = i + 1; k <= j && k < levels_.size(); ++k) {
          auto& gk = levels_[k].gens;
          if (std::find_if(gk.begin(), gk.end(),
                           [&](const WPerm& w) { return w.p == h.p; }) == gk.end()) {
            gk.push_back(h);
            added = true;
          }
        }
        if (!added) continue;
        for (std::size_t k = std::min(j, levels_.size() - 1); k >= i + 1; --k) {
          complete_level(k);
          if (k == i + 1) break;
        }
        dirty = true;  // restart the full scan of this level
      }
    }
  }
}

StabChain StabChain::build(std::vector<WPerm> gens, std::size_t degree,
                           std::vector<std::uint32_t> base_hint) {
  if (degree > 1024) fail(errc::too_large, "degree beyond engine scale");
  StabChain c;
  c.degree_ = degree;
  c.originals_ = gens;
  for (const WPerm& g : gens)
    if (g.p.degree() != degree) fail(errc::degree_mismatch, "generator degree mismatch");
  for (std::uint32_t b : base_hint) {
    if (b >= degree) fail(errc::degree_mismatch, "base point out of range");
    if (std::find(c.base_.begin(), c.base_.end(), b) == c.base_.end()) c.ensure_level(b);
  }
  bool any = false;
  for (const WPerm& g : gens) any = any || !g.p.is_identity();
  if (!any) return c;  // trivial group; hinted levels keep singleton orbits
  if (c.base_.empty()) {
    const Perm& g0 = std::find_if(gens.begin(), gens.end(), [](const WPerm& g) {
                       return !g.p.is_identity();
                     })->p;
    std::uint32_t moved = 0;
    while (g0(moved) == moved) ++moved;
    c.ensure_level(moved);
  }
  for (const WPerm& g : gens)
    if (!g.p.is_identity()) c.levels_[0].gens.push_back(g);
  // every generator also belongs to the deepest base prefix it fixes
  for (const WPerm& g : gens) {
    if (g.p.is_identity()) continue;
    for (std::size_t k = 1; k < c.levels_.size(); ++k) {
      if (g.p(c.base_[k - 1]) != c.base_[k - 1]) break;
      auto& gk = c.levels_[k].gens;
      if (std::find_if(gk.begin(), gk.end(), [&](const WPerm& w) { return w.p == g.p; }) ==
          gk.end())
        gk.push_back(g);
    }
  }
  for (std::size_t i = c.levels_.size(); i-- > 0;) c.complete_level(i);
  return c;
}

u128 StabChain::order() const {
  u128 n = 1;
  for (const Level& lvl : levels_) {
    u128 next = n * u128(lvl.orbit.size());
    if (next / u128(lvl.orbit.size()) != n) fail(errc::too_large, "order overflows 128 bits");
    n = next;
  }
  return n;
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) fail(errc::degree_mismatch, "membership degree mismatch");
  auto [h, j] = strip(WPerm{g, nullptr}, 0);
  return j == levels_.size() && h.p.is_identity();
}

std::optional<WordRef> StabChain::factor(const Perm& g) const {
  if (g.degree() != degree_) fail(errc::degree_mismatch, "factor degree mismatch");
  WPerm cur{g, nullptr};
  std::vector<const WPerm*> used;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    std::uint32_t x = cur.p(levels_[i].beta);
    if (!levels_[i].transversal[x]) return std::nullopt;
    used.push_back(&*levels_[i].transversal[x]);
    cur = WPerm{compose(cur.p, inverse(used.back()->p)), nullptr};
  }
  if (!cur.p.is_identity()) return std::nullopt;
  // g = t_last then ... then t_first
  WordRef w;
  for (std::size_t i = used.size(); i-- > 0;) w = word_concat(w, used[i]->w);
  return w;
}

std::vector<std::uint32_t> StabChain::orbit_of(std::uint32_t x) const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::uint32_t> queue = {x};
  seen[x] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const WPerm& g : originals_) {
      std::uint32_t y = g.p(queue[head]);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

const std::vector<std::uint32_t>& StabChain::orbit_labels(std::size_t level) const {
  if (orbit_label_cache_.empty()) orbit_label_cache_.resize(levels_.size() + 1);
  auto& cache = orbit_label_cache_[level];
  if (!cache.empty() || degree_ == 0) return cache;
  cache.resize(degree_);
  for (std::size_t i = 0; i < degree_; ++i) cache[i] = std::uint32_t(i);
  if (level >= levels_.size()) return cache;  // trivial group: singletons
  // union of generator moves, resolved to least orbit element
  const auto& gens = levels_[level].gens;
  std::vector<std::uint32_t> parent(degree_);
  for (std::size_t i = 0; i < degree_; ++i) parent[i] = std::uint32_t(i);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const WPerm& g : gens)
    for (std::uint32_t x = 0; x < degree_; ++x) {
      std::uint32_t a = find(x), b = find(g.p(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  for (std::uint32_t x = 0; x < degree_; ++x) cache[x] = find(x);
  return cache;
}

StabChain StabChain::pointwise_stabilizer(std::span<const std::uint32_t> pts) const {
  std::vector<std::uint32_t> hint(pts.begin(), pts.end());
  StabChain rebased = build(originals_, degree_, hint);
  // generators at the level past the stabilized prefix
  std::size_t cut = 0;
  std::set<std::uint32_t> wanted(pts.begin(), pts.end());
  while (cut < rebased.levels_.size() && wanted.count(rebased.base_[cut])) ++cut;
  std::vector<WPerm> gens;
  if (cut < rebased.levels_.size()) gens = rebased.levels_[cut].gens;
  return build(std::move(gens), degree_);
}

std::vector<std::vector<std::uint32_t>> StabChain::orbit_on_tuples(
    std::span<const std::uint32_t> tuple) const {
  std::vector<std::uint32_t> start(tuple.begin(), tuple.end());
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> queue = {start};
  seen.insert(start);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const WPerm& g : originals_) {
      std::vector<std::uint32_t> next(queue[head].size());
      for (std::size_t i = 0; i < next.size(); ++i) next[i] = g.p(queue[head][i]);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return queue;
}

void StabChain::for_each_element(const std::function<void(const Perm&)>& fn,
                                 std::uint64_t max_count) const {
  if (order() > u128(max_count)) fail(errc::too_large, "group too large to enumerate");
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t level,
                                                          const Perm& acc) {
    if (level == levels_.size()) {
      fn(acc);
      return;
    }
    // deepest level first: element = t_last then ... then t_level
    for (std::uint32_t x : levels_[level].orbit)
      rec(level + 1, compose(levels_[level].transversal[x]->p, acc));
  };
  rec(0, Perm(degree_));
}

namespace {

struct MapperSearch {
  const StabChain& chain;
  const MapperSpec& spec;
  std::vector<WPerm> partial;      // P_l for each level prefix
  std::optional<WPerm> found;

  bool feasible(std::size_t next_level, const Perm& p, const Perm& pinv) const {
    const auto& labels = chain.orbit_labels(next_level);
    for (const auto& [x, y] : spec.require_eq)
      if (labels[pinv(y)] != labels[x]) return false;
    for (const auto& [x, set] : spec.require_in) {
      bool ok = false;
      for (std::uint32_t w : set)
        if (labels[pinv(w)] == labels[x]) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    for (const auto& [x, set] : spec.forbid_in) {
      // need some reachable image outside the forbidden set
      bool ok = false;
      for (std::uint32_t z = 0; z < chain.degree(); ++z) {
        if (labels[z] != labels[x]) continue;
        if (std::find(set.begin(), set.end(), p(z)) == set.end()) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  bool leaf_ok(const Perm& p) const {
    for (const auto& [x, y] : spec.require_eq)
      if (p(x) != y) return false;
    for (const auto& [x, set] : spec.require_in)
      if (std::find(set.begin(), set.end(), p(x)) == set.end()) return false;
    for (const auto& [x, set] : spec.forbid_in)
      if (std::find(set.begin(), set.end(), p(x)) != set.end()) return false;
    return true;
  }

  bool dfs(std::size_t level, const WPerm& acc) {
    if (level == chain.levels()) {
      if (leaf_ok(acc.p)) {
        found = acc;
        return true;
      }
      return false;
    }
    const auto& lvl = chain.level(level);
    std::vector<std::uint32_t> candidates = lvl.orbit;
    std::sort(candidates.begin(), candidates.end());
    for (std::uint32_t x : candidates) {
      WPerm next = wcompose(*lvl.transversal[x], acc);
      Perm next_inv = inverse(next.p);
      if (!feasible(level + 1, next.p, next_inv)) continue;
      if (dfs(level + 1, next)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<WPerm> exists_mapper(const StabChain& g, const MapperSpec& spec) {
  for (const auto& [x, set] : spec.require_in) {
    if (set.empty()) fail(errc::infeasible_degree, "empty require_in target set");
    if (x >= g.degree()) fail(errc::degree_mismatch, "constraint point out of range");
    for (std::uint32_t w : set)
      if (w >= g.degree()) fail(errc::degree_mismatch, "constraint target out of range");
  }
  std::set<std::uint32_t> eq_pts;
  for (const auto& [x, y] : spec.require_eq) {
    if (x >= g.degree() || y >= g.degree())
      fail(errc::degree_mismatch, "constraint point out of range");
    if (!eq_pts.insert(x).second)
      fail(errc::bad_query, "require_eq points must be pairwise distinct");
  }
  for (const auto& [x, set] : spec.forbid_in)
    if (x >= g.degree()) fail(errc::degree_mismatch, "constraint point out of range");

  // base starts with the constrained points so pruning bites early
  std::vector<std::uint32_t> hint;
  for (const auto& [x, y] : spec.require_eq) hint.push_back(x);
  for (const auto& [x, s] : spec.require_in) hint.push_back(x);
  for (const auto& [x, s] : spec.forbid_in) hint.push_back(x);
  StabChain rebased = StabChain::build(g.originals(), g.degree(), hint);
  MapperSearch search{rebased, spec, {}, std::nullopt};
  WPerm id{Perm(g.degree()), nullptr};
  if (!search.feasible(0, id.p, id.p)) return std::nullopt;
  search.dfs(0, id);
  return search.found;
}

std::optional<WPerm> tuple_transporter(const StabChain& g,
                                       std::span<const std::uint32_t> from,
                                       std::span<const std::uint32_t> to) {
  if (from.size() != to.size()) fail(errc::degree_mismatch, "transporter tuple sizes differ");
  MapperSpec spec;
  for (std::size_t i = 0; i < from.size(); ++i)
    spec.require_eq.emplace_back(from[i], to[i]);
  return exists_mapper(g, spec);
}

namespace {

// orbit count/size recursion: orbits on (k+1)-tuples extend orbits on
// k-tuples by orbits of the pointwise stabilizer
void tuple_orbit_rec(const StabChain& chain, std::vector<std::uint32_t>& prefix,
                     std::uint64_t orbit_size, std::uint32_t k_left,
                     std::vector<std::vector<std::uint64_t>>& out, std::size_t depth) {
  if (k_left == 0) return;
  const auto& labels = chain.orbit_labels(0);
  std::set<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < chain.degree(); ++x) {
    if (std::find(prefix.begin(), prefix.end(), x) != prefix.end()) continue;
    reps.insert(labels[x]);
  }
  for (std::uint32_t r : reps) {
    std::uint64_t osize = 0;
    for (std::uint32_t x = 0; x < chain.degree(); ++x)
      if (labels[x] == r) ++osize;
    std::uint64_t size = orbit_size * osize;
    out[depth].push_back(size);
    if (k_left > 1) {
      prefix.push_back(r);
      std::uint32_t pt = r;
      StabChain stab = chain.pointwise_stabilizer(std::span<const std::uint32_t>(&pt, 1));
      tuple_orbit_rec(stab, prefix, size, k_left - 1, out, depth + 1);
      prefix.pop_back();
    }
  }
}

}  // namespace

TransitivityReport transitivity_degree(const StabChain& g, std::uint32_t max_k) {
  if (max_k > g.degree()) fail(errc::bad_query, "max_k exceeds degree");
  TransitivityReport report;
  report.orbit_sizes.resize(max_k);
  std::vector<std::uint32_t> prefix;
  tuple_orbit_rec(g, prefix, 1, max_k, report.orbit_sizes, 0);
  for (auto& sizes : report.orbit_sizes) std::sort(sizes.begin(), sizes.end());
  report.max_transitive = 0;
  for (std::uint32_t k = 1; k <= max_k; ++k) {
    if (report.orbit_sizes[k - 1].size() == 1)
      report.max_transitive = k;
    else
      break;
  }
  // cross-check via chain orbit sizes on a rebased chain
  std::vector<std::uint32_t> hint;
  for (std::uint32_t i = 0; i < max_k; ++i) hint.push_back(i);
  StabChain rebased = StabChain::build(g.originals(), g.degree(), hint);
  std::uint32_t ladder = 0;
  for (std::uint32_t k = 0; k < max_k; ++k) {
    if (rebased.level(k).orbit.size() == g.degree() - k)
      ladder = k + 1;
    else
      break;
  }
  assert(ladder == report.max_transitive);
  (void)ladder;
  return report;
}

AltVerdict alt_verdict(const StabChain& g) {
  if (g.degree() < 3) fail(errc::bad_query, "alternating verdict needs degree >= 3");
  u128 n = g.order();
  u128 full = factorial(std::uint32_t(g.degree()));
  if (n == full) return AltVerdict::symmetric;
  if (n * 2 == full) {
    for (const WPerm& gen : g.originals()) assert(sign(gen.p) == 1);
    return AltVerdict::alternating;
  }
  return AltVerdict::neither;
}

const char* to_string(AltVerdict v) {
  switch (v) {
    case AltVerdict::symmetric: return "Symmetric";
    case AltVerdict::alternating: return "Alternating";
    case AltVerdict::neither: return "Neither";
  }
  return "?";
}

}  // namespace ptl
