#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "onassign/errors.hpp"
#include "onassign/rational.hpp"
#include "onassign/rng.hpp"

namespace onassign {

/// Index into the ground set of an independence system.
using Element = int;
using AgentId = int;

/// The bottom symbol. Never a ground-set element; every weight function maps
/// it to 0.
inline constexpr Element kBottom = -1;

/// Sparse nonnegative weight function over a ground set; absent keys and the
/// bottom symbol weigh 0.
template <typename T>
class WeightFunction {
 public:
  WeightFunction() = default;

  void set(Element e, T w) {
    if (e < 0) throw InvalidInstanceError("weight on bottom or negative element id");
    if (w < scalar_traits<T>::zero()) throw InvalidInstanceError("negative weight");
    if (w == scalar_traits<T>::zero()) {
      entries_.erase(e);
    } else {
      entries_[e] = std::move(w);
    }
  }

  T at(Element e) const {
    if (e == kBottom) return scalar_traits<T>::zero();
    auto it = entries_.find(e);
    return it == entries_.end() ? scalar_traits<T>::zero() : it->second;
  }

  const std::map<Element, T>& entries() const { return entries_; }

  std::vector<Element> support() const {
    std::vector<Element> s;
    s.reserve(entries_.size());
    for (const auto& [e, w] : entries_) s.push_back(e);
    return s;
  }

  bool operator==(const WeightFunction&) const = default;

 private:
  std::map<Element, T> entries_;
};

/// Weight profile: one weight function per agent. Profiles over agent subsets
/// (arrival prefixes) are first-class.
template <typename T>
class WeightProfile {
 public:
  WeightProfile() = default;

  void set(AgentId a, WeightFunction<T> wf) { per_agent_[a] = std::move(wf); }

  const WeightFunction<T>& at(AgentId a) const {
    auto it = per_agent_.find(a);
    if (it == per_agent_.end()) throw InvalidInstanceError("agent not in profile");
    return it->second;
  }

  bool contains(AgentId a) const { return per_agent_.count(a) > 0; }

  std::vector<AgentId> agents() const {
    std::vector<AgentId> v;
    v.reserve(per_agent_.size());
    for (const auto& [a, wf] : per_agent_) v.push_back(a);
    return v;
  }

  int size() const { return static_cast<int>(per_agent_.size()); }

  WeightProfile restricted_to(std::span<const AgentId> subset) const {
    WeightProfile out;
    for (AgentId a : subset) out.set(a, at(a));
    return out;
  }

  const std::map<AgentId, WeightFunction<T>>& map() const { return per_agent_; }

  bool operator==(const WeightProfile&) const = default;

 private:
  std::map<AgentId, WeightFunction<T>> per_agent_;
};

/// Finite-support distribution over weight functions. Atom probabilities are
/// exact rationals and must sum to exactly 1.
template <typename T>
class WeightDistribution {
 public:
  struct Atom {
    Rational p;
    WeightFunction<T> wf;
  };

  WeightDistribution() = default;

  explicit WeightDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) { validate(); }

  void validate() const {
    if (atoms_.empty()) throw InvalidDistributionError("distribution has no atoms");
    Rational total(0);
    for (const auto& a : atoms_) {
      if (a.p < 0) throw InvalidDistributionError("negative atom probability");
      total += a.p;
    }
    if (total != 1) throw InvalidDistributionError("atom probabilities do not sum to 1");
  }

  const std::vector<Atom>& atoms() const { return atoms_; }

  const WeightFunction<T>& sample(Rng& rng) const {
    double u = rng.uniform01();
    double acc = 0.0;
    for (const auto& a : atoms_) {
      acc += rat_to_double(a.p);
      if (u < acc) return a.wf;
    }
    return atoms_.back().wf;
  }

 private:
  std::vector<Atom> atoms_;
};

/// Agent -> element-or-bottom map. Feasibility is a property of the pair
/// (system, assignment), checked by is_feasible.
class Assignment {
 public:
  Assignment() = default;

  void set(AgentId a, Element e) {
    if (e == kBottom) {
      map_.erase(a);
    } else {
      map_[a] = e;
    }
  }

  Element at(AgentId a) const {
    auto it = map_.find(a);
    return it == map_.end() ? kBottom : it->second;
  }

  /// Non-bottom assigned elements, in agent order (possibly with repeats if
  /// the assignment is infeasible).
  std::vector<Element> assigned_elements() const {
    std::vector<Element> v;
    v.reserve(map_.size());
    for (const auto& [a, e] : map_) v.push_back(e);
    return v;
  }

  const std::map<AgentId, Element>& map() const { return map_; }

  bool operator==(const Assignment&) const = default;

 private:
  std::map<AgentId, Element> map_;  // bottom kept implicit
};

/// Downward-closed independence oracle over ground set {0, ..., ground_size-1}.
class IndependenceSystem {
 public:
  virtual ~IndependenceSystem() = default;

  virtual int ground_size() const = 0;

  /// `set` must contain distinct in-range elements.
  virtual bool is_independent(std::span<const Element> set) const = 0;

  bool is_independent(const std::vector<Element>& set) const {
    return is_independent(std::span<const Element>(set));
  }
};

/// Hypergraph whose matchings (pairwise node-disjoint edge subsets) form the
/// independence system. Ground-set elements are edge ids.
class Hypergraph : public IndependenceSystem {
 public:
  Hypergraph(int n_nodes, std::vector<std::vector<int>> edges, int max_edge_size);

  int ground_size() const override { return static_cast<int>(edges_.size()); }
  bool is_independent(std::span<const Element> edge_ids) const override;

  int n_nodes() const { return n_nodes_; }
  int max_edge_size() const { return k_; }
  const std::vector<int>& edge(Element e) const;
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  /// delta(v): ids of edges incident to node v.
  const std::vector<Element>& incident(int node) const;

  bool edges_intersect(Element e, Element f) const;

 private:
  int n_nodes_ = 0;
  int k_ = 0;
  std::vector<std::vector<int>> edges_;      // each sorted ascending
  std::vector<std::vector<Element>> delta_;  // node -> incident edge ids
};

/// Conditions (I) and (II): injective on non-bottom values and independent
/// image. Out-of-range elements raise InvalidInstanceError.
bool is_feasible(const IndependenceSystem& system, const Assignment& asg);

/// Total weight sum_a w_a(M(a)); bottom contributes 0.
template <typename T>
T assignment_value(const WeightProfile<T>& profile, const Assignment& asg) {
  T total = scalar_traits<T>::zero();
  for (const auto& [a, e] : asg.map()) {
    if (!profile.contains(a)) throw InvalidInstanceError("assignment agent not in profile");
    total += profile.at(a).at(e);
  }
  return total;
}

/// Draws each agent's weight function independently from its distribution.
/// Agents are visited in ascending id order, so the result is deterministic
/// given the rng state.
template <typename T>
WeightProfile<T> sample_profile(const std::map<AgentId, WeightDistribution<T>>& dists, Rng& rng) {
  WeightProfile<T> profile;
  for (const auto& [a, d] : dists) {
    d.validate();
    profile.set(a, d.sample(rng));
  }
  return profile;
}

/// Enumeration helper: all subsets of `universe` (|universe| <= 30) passed to
/// `fn` as sorted vectors, in mask order.
template <typename Fn>
void for_each_subset(std::span<const Element> universe, Fn&& fn) {
  const int n = static_cast<int>(universe.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Element> subset;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(universe[i]);
    }
    fn(subset);
  }
}

}  // namespace onassign
