#include "kirwan/trees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "kirwan/errors.hpp"

namespace kirwan {

namespace {

struct Node {
  int charge = 0;
  std::vector<Node> children;
};

std::string encode(const Node& n, bool with_charges) {
  std::vector<std::string> parts;
  for (const auto& c : n.children) parts.push_back(encode(c, with_charges));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  if (with_charges) out += std::to_string(n.charge);
  for (const auto& p : parts) out += p;
  return out + ")";
}

void flatten(const Node& n, std::optional<std::size_t> parent, WeightedTree& out) {
  const std::size_t self = out.size();
  out.parent.push_back(parent);
  out.charge.push_back(n.charge);
  for (const auto& c : n.children) flatten(c, self, out);
}

WeightedTree to_tree(const Node& root) {
  WeightedTree t;
  flatten(root, std::nullopt, t);
  return t;
}

/// Assumes a valid tree: unique root, no cycles.
Node to_node(const WeightedTree& t, std::size_t v, const std::vector<std::vector<std::size_t>>& kids) {
  Node n;
  n.charge = t.charge[v];
  for (std::size_t c : kids[v]) n.children.push_back(to_node(t, c, kids));
  return n;
}

std::optional<std::size_t> root_of(const WeightedTree& t) {
  std::optional<std::size_t> root;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (t.parent[v]) continue;
    if (root) return std::nullopt;
    root = v;
  }
  return root;
}

Node as_node(const WeightedTree& t) {
  if (!is_valid(t)) throw PreconditionError("tree is not valid");
  return to_node(t, *root_of(t), t.children());
}

/// Memoized generation of the subtrees hanging below the root.
class Generator {
 public:
  /// Non-root subtrees of total charge m >= 1, canonical and duplicate free.
  const std::vector<Node>& subtrees(int m) {
    auto it = subtrees_.find(m);
    if (it != subtrees_.end()) return it->second;
    std::vector<Node> out;
    for (int c = 0; c <= m; ++c) {
      for (auto& forest : forests(m - c, m - 1)) {
        if (c == 0 && forest.size() < 2) continue;
        out.push_back(Node{c, std::move(forest)});
      }
    }
    return subtrees_[m] = std::move(out);
  }

  /// Multisets of subtrees, each of charge at most cap, with total m.
  std::vector<std::vector<Node>> forests(int m, int cap) {
    std::vector<std::vector<Node>> out;
    std::vector<Node> current;
    extend(m, std::min(cap, m), 0, current, out);
    return out;
  }

 private:
  /// Picks subtrees in order of non-increasing charge, and non-decreasing
  /// pool index within one charge.
  void extend(int remaining, int prev_charge, std::size_t prev_index, std::vector<Node>& current,
              std::vector<std::vector<Node>>& out) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int k = std::min(prev_charge, remaining); k >= 1; --k) {
      const std::vector<Node>& pool = subtrees(k);
      for (std::size_t i = k == prev_charge ? prev_index : 0; i < pool.size(); ++i) {
        current.push_back(pool[i]);
        extend(remaining - k, k, i, current, out);
        current.pop_back();
      }
    }
  }

  std::map<int, std::vector<Node>> subtrees_;
};

}  // namespace

std::vector<std::vector<std::size_t>> WeightedTree::children() const {
  std::vector<std::vector<std::size_t>> out(size());
  for (std::size_t v = 0; v < size(); ++v)
    if (parent[v] && *parent[v] < size()) out[*parent[v]].push_back(v);
  return out;
}

WeightedTree WeightedTree::trivial(int charge) { return chain({charge}); }

WeightedTree WeightedTree::chain(const std::vector<int>& charges) { return chain_then_star(charges, {}); }

WeightedTree WeightedTree::star(int root_charge, const std::vector<int>& leaves) {
  return chain_then_star({root_charge}, leaves);
}

WeightedTree WeightedTree::chain_then_star(const std::vector<int>& chain_charges, const std::vector<int>& leaves) {
  WeightedTree t;
  for (std::size_t i = 0; i < chain_charges.size(); ++i) {
    t.parent.push_back(i == 0 ? std::nullopt : std::optional<std::size_t>(i - 1));
    t.charge.push_back(chain_charges[i]);
  }
  for (int c : leaves) {
    t.parent.push_back(chain_charges.size() - 1);
    t.charge.push_back(c);
  }
  return t;
}

std::vector<TreeViolation> validate(const WeightedTree& t) {
  std::vector<TreeViolation> out;
  if (t.size() == 0) return {{std::nullopt, "tree has no vertices"}};
  if (t.charge.size() != t.size()) return {{std::nullopt, "charge list does not match the vertex list"}};

  std::size_t roots = 0;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (!t.parent[v]) {
      ++roots;
    } else if (*t.parent[v] >= t.size() || *t.parent[v] == v) {
      out.push_back({v, "parent is not another vertex"});
    }
    if (t.charge[v] < 0) out.push_back({v, "negative charge"});
  }
  if (roots != 1) out.push_back({std::nullopt, "expected exactly one root, found " + std::to_string(roots)});
  if (!out.empty()) return out;

  for (std::size_t v = 0; v < t.size(); ++v) {
    std::size_t cur = v, steps = 0;
    while (t.parent[cur] && steps <= t.size()) {
      cur = *t.parent[cur];
      ++steps;
    }
    if (steps > t.size()) out.push_back({v, "vertex does not descend from the root"});
  }
  if (!out.empty()) return out;

  auto kids = t.children();
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (!t.parent[v] || t.charge[v] != 0) continue;
    if (kids[v].empty()) {
      out.push_back({v, "top vertex with charge 0"});
    } else if (kids[v].size() < 2) {
      out.push_back({v, "charge 0 vertex with fewer than two successors"});
    }
  }
  return out;
}

int total_charge(const WeightedTree& t) { return std::accumulate(t.charge.begin(), t.charge.end(), 0); }

std::string canonical_encoding(const WeightedTree& t) { return encode(as_node(t), true); }

std::string shape_encoding(const WeightedTree& t) { return encode(as_node(t), false); }

bool tree_iso(const WeightedTree& a, const WeightedTree& b) {
  return a.size() == b.size() && canonical_encoding(a) == canonical_encoding(b);
}

TreeEnumeration enumerate_trees(int n, int bound) {
  if (n < 1) throw PreconditionError("total charge must be positive");
  if (n > bound) {
    throw PreconditionError("total charge " + std::to_string(n) + " exceeds the bound " + std::to_string(bound));
  }
  Generator gen;
  std::map<std::string, WeightedTree> weighted;
  for (int c = 0; c <= n; ++c)
    for (auto& forest : gen.forests(n - c, n)) {
      Node root{c, std::move(forest)};
      if (!weighted.emplace(encode(root, true), to_tree(root)).second) {
        throw std::logic_error("tree generator produced a duplicate");
      }
    }
  TreeEnumeration out;
  std::map<std::string, WeightedTree> shapes;
  for (auto& [code, tree] : weighted) {
    shapes.emplace(shape_encoding(tree), tree);
    out.weighted.push_back(tree);
  }
  for (auto& [code, tree] : shapes) out.shapes.push_back({code, tree});
  return out;
}

WeightedTree relabel(const WeightedTree& t, const std::vector<std::size_t>& perm) {
  WeightedTree out;
  out.parent.resize(t.size());
  out.charge.resize(t.size());
  for (std::size_t v = 0; v < t.size(); ++v) {
    out.charge[perm[v]] = t.charge[v];
    out.parent[perm[v]] = t.parent[v] ? std::optional<std::size_t>(perm[*t.parent[v]]) : std::nullopt;
  }
  return out;
}

}  // namespace kirwan
