#ifndef KIRWAN_TREES_HPP
#define KIRWAN_TREES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace kirwan {

/// Rooted tree with a non-negative charge on every vertex. Vertices are
/// indices; the root has no parent.
struct WeightedTree {
  std::vector<std::optional<std::size_t>> parent;
  std::vector<int> charge;

  std::size_t size() const { return parent.size(); }
  std::vector<std::vector<std::size_t>> children() const;

  /// Builds a tree from nested charges, e.g. chain({0, 2}) is 0 -> 2.
  static WeightedTree trivial(int charge);
  static WeightedTree chain(const std::vector<int>& charges);
  /// Root with the given charge and one leaf per entry of leaves.
  static WeightedTree star(int root_charge, const std::vector<int>& leaves);
  /// Chain root -> middle whose last vertex gets the given leaves.
  static WeightedTree chain_then_star(const std::vector<int>& chain_charges, const std::vector<int>& leaves);
};

struct TreeViolation {
  std::optional<std::size_t> vertex;
  std::string message;
};

/// Every broken axiom, naming the offending vertex where there is one.
std::vector<TreeViolation> validate(const WeightedTree& t);
inline bool is_valid(const WeightedTree& t) { return validate(t).empty(); }

int total_charge(const WeightedTree& t);

/// Sorted recursive encoding "(c(..)(..))"; equal iff the trees are isomorphic
/// as rooted charged trees.
std::string canonical_encoding(const WeightedTree& t);
/// The same encoding with charges forgotten.
std::string shape_encoding(const WeightedTree& t);
bool tree_iso(const WeightedTree& a, const WeightedTree& b);

/// Tree shape together with one admissible weighting.
struct TreeShape {
  std::string encoding;
  WeightedTree witness;
};

struct TreeEnumeration {
  std::vector<WeightedTree> weighted;
  std::vector<TreeShape> shapes;
};

inline constexpr int kDefaultChargeBound = 4;

/// All valid weighted trees of total charge n up to isomorphism, sorted by
/// canonical encoding, and the distinct shapes among them. Throws
/// PreconditionError unless 1 <= n <= bound.
TreeEnumeration enumerate_trees(int n, int bound = kDefaultChargeBound);

/// Relabels vertices: vertex i of the input becomes perm[i].
WeightedTree relabel(const WeightedTree& t, const std::vector<std::size_t>& perm);

}  // namespace kirwan

#endif
