#pragma once

#include <map>
#include <utility>

#include "onassign/matroids.hpp"
#include "onassign/simplex.hpp"

namespace onassign {

inline constexpr long kDefaultBruteForceBudget = 20000;
inline constexpr int kDefaultSubsetLimit = 14;

/// Solution of HM(w) or Matchoid(w). x keys include (a, kBottom); y is
/// populated for the matchoid LP only.
template <typename T>
struct LpSolution {
  std::map<std::pair<AgentId, Element>, T> x;
  std::map<Element, T> y;
  T objective;
  long pivots = 0;

  T x_at(AgentId a, Element e) const {
    auto it = x.find({a, e});
    return it == x.end() ? scalar_traits<T>::zero() : it->second;
  }
};

struct ConvexDecomposition {
  // (lambda_I, I) pairs; lambdas positive and summing to 1.
  std::vector<std::pair<Rational, std::vector<Element>>> atoms;
};

namespace detail {

/// Per-agent candidate lists: positive-support elements in ascending order.
template <typename T>
std::vector<std::pair<AgentId, std::vector<Element>>> candidate_lists(const WeightProfile<T>& profile) {
  std::vector<std::pair<AgentId, std::vector<Element>>> out;
  for (const auto& [a, wf] : profile.map()) out.push_back({a, wf.support()});
  return out;
}

template <typename T>
struct BruteForceState {
  const IndependenceSystem* system;
  const WeightProfile<T>* profile;
  std::vector<std::pair<AgentId, std::vector<Element>>> candidates;
  std::vector<T> suffix_max;  // suffix_max[i] = sum over agents >= i of their max weight
  Assignment best;
  T best_value;
  bool found = false;
  std::vector<Element> chosen;  // non-bottom picks so far
  Assignment current;

  void search(std::size_t i, T value) {
    if (i == candidates.size()) {
      // Explored in bottom-first element-ascending order, so the first
      // maximizer found is the lexicographically smallest one.
      if (!found || value > best_value) {
        found = true;
        best_value = value;
        best = current;
      }
      return;
    }
    if (found && value + suffix_max[i] <= best_value) return;  // cannot strictly improve
    const auto& [agent, elems] = candidates[i];
    // bottom first
    search(i + 1, value);
    for (Element e : elems) {
      bool taken = false;
      for (Element c : chosen) {
        if (c == e) {
          taken = true;
          break;
        }
      }
      if (taken) continue;
      chosen.push_back(e);
      std::vector<Element> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      if (system->is_independent(sorted)) {
        current.set(agent, e);
        search(i + 1, value + profile->at(agent).at(e));
        current.set(agent, kBottom);
      }
      chosen.pop_back();
    }
  }
};

}  // namespace detail

/// Exhaustive maximizer of the assignment problem. Deterministic tie break:
/// the lexicographically smallest assignment among maximizers, with bottom
/// ordered before every element and agents in ascending id.
template <typename T>
std::pair<Assignment, T> offline_opt_bruteforce(const IndependenceSystem& system, const WeightProfile<T>& profile,
                                                long budget = kDefaultBruteForceBudget) {
  detail::BruteForceState<T> st;
  st.system = &system;
  st.profile = &profile;
  st.candidates = detail::candidate_lists(profile);
  std::size_t max_support = 0;
  for (const auto& [a, elems] : st.candidates) {
    max_support = std::max(max_support, elems.size() + 1);
    for (Element e : elems) {
      if (e < 0 || e >= system.ground_size()) throw InvalidInstanceError("profile element out of range");
    }
  }
  if (static_cast<long>(st.candidates.size() * max_support) > budget)
    throw ResourceLimitError("instance too large for exhaustive search");

  st.suffix_max.assign(st.candidates.size() + 1, scalar_traits<T>::zero());
  for (std::size_t i = st.candidates.size(); i-- > 0;) {
    T mx = scalar_traits<T>::zero();
    for (Element e : st.candidates[i].second) mx = std::max(mx, profile.at(st.candidates[i].first).at(e));
    st.suffix_max[i] = st.suffix_max[i + 1] + mx;
  }
  st.best_value = scalar_traits<T>::zero();
  st.search(0, scalar_traits<T>::zero());
  return {st.best, st.best_value};
}

/// Named wrapper over the brute-force oracle for matroid systems.
template <typename T>
std::pair<Assignment, T> offline_opt_matroid(const Matroid& matroid, const WeightProfile<T>& profile,
                                             long budget = kDefaultBruteForceBudget) {
  return offline_opt_bruteforce<T>(matroid, profile, budget);
}

namespace detail {

/// Shared LP scaffolding: a variable per positive-weight (agent, element)
/// pair plus one bottom variable per agent; per-agent mass rows with the
/// bottom variable as the starting basis. Lexicographic ranks follow
/// (agent id, element id) order.
template <typename T>
struct AssignmentLpBase {
  LpProblem<T> lp;
  std::vector<std::pair<AgentId, Element>> var_key;  // per structural var
  std::map<std::pair<AgentId, Element>, int> var_id;

  explicit AssignmentLpBase(const WeightProfile<T>& profile, bool lex_unique) {
    int next = 0;
    int rank = 1;
    for (const auto& [a, wf] : profile.map()) {
      for (const auto& [e, w] : wf.entries()) {
        var_key.push_back({a, e});
        var_id[{a, e}] = next;
        lp.objective.push_back(w);
        lp.lex_rank.push_back(lex_unique ? rank : 0);
        ++next;
        ++rank;
      }
      var_key.push_back({a, kBottom});
      var_id[{a, kBottom}] = next;
      lp.objective.push_back(scalar_traits<T>::zero());
      lp.lex_rank.push_back(0);
      ++next;
    }
    lp.num_vars = next;
    for (const auto& [a, wf] : profile.map()) {
      typename LpProblem<T>::Row row;
      for (const auto& [e, w] : wf.entries()) row.coeffs.push_back({var_id.at({a, e}), T(1)});
      row.coeffs.push_back({var_id.at({a, kBottom}), T(1)});
      row.rhs = T(1);
      row.sense = 'E';
      row.basic_hint = var_id.at({a, kBottom});
      lp.rows.push_back(std::move(row));
    }
  }

  LpSolution<T> extract(const LpResult<T>& res) const {
    LpSolution<T> sol;
    for (std::size_t j = 0; j < var_key.size(); ++j) {
      T v = res.x[j];
      if (!scalar_traits<T>::exact && v < scalar_traits<T>::zero()) v = scalar_traits<T>::zero();
      sol.x[var_key[j]] = v;
    }
    sol.objective = res.objective;
    sol.pivots = res.pivots;
    return sol;
  }
};

}  // namespace detail

/// Optimal solution of the hypergraph-matching relaxation HM(w): per-node
/// fractional load at most one, per-agent mass exactly one. With exact
/// arithmetic and lex_unique the optimum is the unique lexicographically
/// perturbed one, independent of the pivot rule.
template <typename T>
LpSolution<T> solve_hm_lp(const Hypergraph& hg, const WeightProfile<T>& profile, bool lex_unique = true,
                          PivotRule rule = PivotRule::dantzig) {
  detail::AssignmentLpBase<T> base(profile, lex_unique);
  for (const auto& [a, wf] : profile.map()) {
    for (const auto& [e, w] : wf.entries()) {
      if (e < 0 || e >= hg.ground_size()) throw InvalidInstanceError("profile references unknown edge");
    }
  }
  for (int v = 0; v < hg.n_nodes(); ++v) {
    typename LpProblem<T>::Row row;
    for (const auto& [a, wf] : profile.map()) {
      for (Element e : hg.incident(v)) {
        auto it = base.var_id.find({a, e});
        if (it != base.var_id.end()) row.coeffs.push_back({it->second, T(1)});
      }
    }
    if (row.coeffs.empty()) continue;
    row.rhs = T(1);
    row.sense = 'L';
    base.lp.rows.push_back(std::move(row));
  }
  return base.extract(solve_lp(base.lp, rule));
}

/// Optimal solution of Matchoid(w): y(e) = sum_a x_a(e) restricted to each
/// component's independence polytope, with rank constraints enumerated
/// explicitly over subsets of the supported part of each component.
template <typename T>
LpSolution<T> solve_matchoid_lp(const Matchoid& mc, const WeightProfile<T>& profile, bool lex_unique = true,
                                PivotRule rule = PivotRule::dantzig, int subset_limit = kDefaultSubsetLimit) {
  detail::AssignmentLpBase<T> base(profile, lex_unique);
  std::vector<char> supported(static_cast<std::size_t>(mc.ground_size()), 0);
  for (const auto& [a, wf] : profile.map()) {
    for (const auto& [e, w] : wf.entries()) {
      if (e < 0 || e >= mc.ground_size()) throw InvalidInstanceError("profile references unknown element");
      supported[static_cast<std::size_t>(e)] = 1;
    }
  }

  for (int i = 0; i < mc.num_components(); ++i) {
    const auto& comp = mc.component(i);
    std::vector<Element> active_supported;
    for (Element e : comp.active) {
      if (supported[static_cast<std::size_t>(e)]) active_supported.push_back(e);
    }
    if (active_supported.empty()) continue;
    if (static_cast<int>(active_supported.size()) > subset_limit)
      throw ResourceLimitError("component support too large for explicit rank constraints");
    for_each_subset(std::span<const Element>(active_supported), [&](const std::vector<Element>& S) {
      if (S.empty()) return;
      typename LpProblem<T>::Row row;
      for (Element e : S) {
        for (const auto& [a, wf] : profile.map()) {
          auto it = base.var_id.find({a, e});
          if (it != base.var_id.end()) row.coeffs.push_back({it->second, T(1)});
        }
      }
      auto local = mc.to_local(S, i);
      row.rhs = T(comp.matroid->rank(local));
      row.sense = 'L';
      base.lp.rows.push_back(std::move(row));
    });
  }

  LpSolution<T> sol = base.extract(solve_lp(base.lp, rule));
  for (Element e = 0; e < mc.ground_size(); ++e) {
    if (!supported[static_cast<std::size_t>(e)]) continue;
    T y = scalar_traits<T>::zero();
    for (const auto& [a, wf] : profile.map()) y += sol.x_at(a, e);
    sol.y[e] = y;
  }
  return sol;
}

/// Exact convex decomposition of a point of the independence polytope into
/// indicator vectors: z = sum lambda_I chi^I with sum lambda_I = 1. Primary
/// path is the iterative greedy (largest feasible multiple of a maximal
/// independent subset of the support); an exact LP over all independent
/// subsets of the support backs it up if the greedy stalls or produces more
/// than ground_size + 1 atoms. The reconstruction is checked exactly.
ConvexDecomposition decompose_polytope_point(const Matroid& matroid, const std::map<Element, Rational>& z,
                                             int subset_limit = kDefaultSubsetLimit);

}  // namespace onassign
