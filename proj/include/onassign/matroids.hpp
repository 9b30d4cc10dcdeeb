#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "onassign/core.hpp"

namespace onassign {

/// Matroid oracle. Rank is derived from independence via the matroid greedy.
class Matroid : public IndependenceSystem {
 public:
  /// Size of a maximum independent subset of `set`, computed greedily (valid
  /// by the matroid exchange property).
  int rank(std::span<const Element> set) const;
  int rank(const std::vector<Element>& set) const { return rank(std::span<const Element>(set)); }
  int rank() const;  // rank of the full ground set
};

/// Unitary partition matroid: disjoint nonempty parts covering the ground
/// set; independent iff at most one element per part.
class PartitionMatroid : public Matroid {
 public:
  explicit PartitionMatroid(std::vector<std::vector<Element>> parts);

  int ground_size() const override { return static_cast<int>(part_of_.size()); }
  bool is_independent(std::span<const Element> set) const override;

  int part_of(Element e) const;
  int num_parts() const { return static_cast<int>(parts_.size()); }
  const std::vector<std::vector<Element>>& parts() const { return parts_; }

 private:
  std::vector<std::vector<Element>> parts_;
  std::vector<int> part_of_;
};

/// Graphic matroid of a loopless multigraph: edge subsets independent iff
/// acyclic. Cycle detection by union-find per query; queries are stateless.
class GraphicMatroid : public Matroid {
 public:
  GraphicMatroid(int n_vertices, std::vector<std::pair<int, int>> endpoints);

  int ground_size() const override { return static_cast<int>(endpoints_.size()); }
  bool is_independent(std::span<const Element> set) const override;

  int n_vertices() const { return n_vertices_; }
  std::pair<int, int> endpoints(Element e) const;

 private:
  int n_vertices_;
  std::vector<std::pair<int, int>> endpoints_;
};

/// Transversal matroid of a bipartite graph (L ∪ R, E); ground set L, a set
/// independent iff some matching covers it.
class TransversalMatroid : public Matroid {
 public:
  TransversalMatroid(int n_left, int n_right, std::vector<std::vector<int>> adj);

  int ground_size() const override { return n_left_; }
  bool is_independent(std::span<const Element> set) const override;

  int n_left() const { return n_left_; }
  int n_right() const { return n_right_; }
  const std::vector<int>& neighbors(Element v) const;

  /// Canonical covering matching of an independent set X: left vertices
  /// processed in ascending id, right neighbors tried in ascending id with
  /// augmenting paths. Returns right match per left vertex of X, or nullopt
  /// if X is dependent. Deterministic, so equal X gives equal matching.
  std::optional<std::vector<std::pair<Element, int>>> canonical_matching(
      std::span<const Element> set) const;

 private:
  int n_left_;
  int n_right_;
  std::vector<std::vector<int>> adj_;  // per left vertex, sorted right ids
};

/// Matchoid: matroids on overlapping subsets of a global ground set;
/// independent iff independent inside every component.
class Matchoid : public IndependenceSystem {
 public:
  struct Component {
    std::shared_ptr<const Matroid> matroid;
    std::vector<Element> active;  // sorted global ids; local id i <-> active[i]
  };

  Matchoid(int ground_size, std::vector<Component> components);

  int ground_size() const override { return ground_size_; }
  bool is_independent(std::span<const Element> set) const override;

  int num_components() const { return static_cast<int>(components_.size()); }
  const Component& component(int i) const { return components_[static_cast<std::size_t>(i)]; }

  /// Number of components whose active set contains e.
  int multiplicity(Element e) const;
  /// ell of the ell-matchoid: max multiplicity over the ground set.
  int ell() const;

  bool active_in(Element e, int comp) const { return local_id(e, comp) >= 0; }
  /// Local id of global element e inside component comp, or -1.
  int local_id(Element e, int comp) const;
  Element global_id(int local, int comp) const;

  std::vector<Element> to_local(std::span<const Element> global_set, int comp) const;

 private:
  int ground_size_;
  std::vector<Component> components_;
  std::vector<std::vector<int>> comps_of_;  // element -> component ids
};

/// One rank-1 unitary matroid per incident node: independence agrees with
/// hypergraph matching on every edge subset.
Matchoid hypergraph_as_matchoid(const Hypergraph& hg);

bool matchoid_is_independent(const Matchoid& mc, std::span<const Element> set);

}  // namespace onassign
