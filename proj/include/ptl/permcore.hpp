#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ptl/perm.hpp"

namespace ptl {

using u128 = unsigned __int128;
std::string u128_to_string(u128 v);
/// n! as u128; throws errc::too_large past 34!.
u128 factorial(std::uint32_t n);

/// Words over an external generator alphabet. Letters are +-(index+1):
/// +(i+1) is generator i, -(i+1) its inverse. Stored as a structural DAG so
/// chain-internal products stay cheap; expand() materializes the letters.
struct WordNode {
  enum class Kind { leaf, concat, inv } kind = Kind::leaf;
  std::int32_t letter = 0;
  std::shared_ptr<const WordNode> left, right, child;
};
using WordRef = std::shared_ptr<const WordNode>;  // nullptr = empty word

WordRef word_leaf(std::int32_t letter);
WordRef word_concat(const WordRef& a, const WordRef& b);  // a then b
WordRef word_inverse(const WordRef& a);
std::vector<std::int32_t> expand(const WordRef& w);
/// Evaluates an expanded word over the alphabet; letters index alphabet.
Perm eval_letters(std::span<const std::int32_t> letters, std::span<const Perm> alphabet,
                  std::size_t degree);

/// Permutation bundled with a word over the generator alphabet evaluating to it.
struct WPerm {
  Perm p;
  WordRef w;
};

WPerm wcompose(const WPerm& a, const WPerm& b);  // a then b
WPerm winverse(const WPerm& a);
/// Wraps plain generators, assigning letter i+1 to gens[i].
std::vector<WPerm> tag_generators(const std::vector<Perm>& gens);

/// Base and strong generating set with explicit transversals, built by a
/// deterministic (non-randomized) Schreier-Sims with first-moved-point base
/// extension. Immutable after build; queries are pure.
class StabChain {
public:
  /// base_hint points are seeded as the base prefix in order (used by the
  /// backtrack search to put constrained points first).
  static StabChain build(std::vector<WPerm> gens, std::size_t degree,
                         std::vector<std::uint32_t> base_hint = {});

  std::size_t degree() const { return degree_; }
  const std::vector<std::uint32_t>& base() const { return base_; }
  std::size_t levels() const { return base_.size(); }
  const std::vector<WPerm>& originals() const { return originals_; }

  u128 order() const;
  bool contains(const Perm& g) const;
  /// Word over the original alphabet evaluating to g, or nullopt if g is not
  /// in the group.
  std::optional<WordRef> factor(const Perm& g) const;

  /// Orbit of x under the whole group, ascending.
  std::vector<std::uint32_t> orbit_of(std::uint32_t x) const;
  /// Orbit partition at chain level l (group fixing base[0..l-1]): labels[x]
  /// is the smallest point of x's orbit.
  const std::vector<std::uint32_t>& orbit_labels(std::size_t level) const;

  /// Chain for the pointwise stabilizer of pts within this group. Generator
  /// words remain over this chain's original alphabet.
  StabChain pointwise_stabilizer(std::span<const std::uint32_t> pts) const;

  /// Orbit of an ordered tuple under the componentwise action, BFS order.
  std::vector<std::vector<std::uint32_t>> orbit_on_tuples(
      std::span<const std::uint32_t> tuple) const;

  /// Walks every group element (transversal products); guarded by max_count.
  void for_each_element(const std::function<void(const Perm&)>& fn,
                        std::uint64_t max_count = 1000000) const;

  struct Level {
    std::uint32_t beta = 0;
    std::vector<WPerm> gens;                     // generators fixing base[0..i-1]
    std::vector<std::optional<WPerm>> transversal;  // [point] -> u with u(beta)=point
    std::vector<std::uint32_t> orbit;            // BFS order
  };
  const Level& level(std::size_t i) const { return levels_[i]; }

private:
  void update_orbit(std::size_t i);
  void complete_level(std::size_t i);
  std::pair<WPerm, std::size_t> strip(WPerm g, std::size_t from) const;
  void ensure_level(std::uint32_t beta);

  std::size_t degree_ = 0;
  std::vector<std::uint32_t> base_;
  std::vector<Level> levels_;
  std::vector<WPerm> originals_;
  mutable std::vector<std::vector<std::uint32_t>> orbit_label_cache_;
};

/// Constraint set for the backtrack search. All listed points must be < degree.
struct MapperSpec {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> require_eq;  // g(x) = y
  std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> require_in;  // g(x) in S
  std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> forbid_in;   // g(x) not in F
};

/// Exact depth-first backtrack over the stabilizer chain; NotFound (nullopt)
/// means no group element satisfies the constraints.
std::optional<WPerm> exists_mapper(const StabChain& g, const MapperSpec& spec);

/// Element mapping tuple `from` onto `to` componentwise, or nullopt.
std::optional<WPerm> tuple_transporter(const StabChain& g,
                                       std::span<const std::uint32_t> from,
                                       std::span<const std::uint32_t> to);

struct TransitivityReport {
  std::uint32_t max_transitive = 0;  // largest k <= max_k with k-transitivity
  /// orbit_sizes[k-1] lists the orbit sizes on ordered k-configurations,
  /// ascending; its length is the orbit count.
  std::vector<std::vector<std::uint64_t>> orbit_sizes;
};

TransitivityReport transitivity_degree(const StabChain& g, std::uint32_t max_k);

enum class AltVerdict { symmetric, alternating, neither };
AltVerdict alt_verdict(const StabChain& g);
const char* to_string(AltVerdict v);

}  // namespace ptl
