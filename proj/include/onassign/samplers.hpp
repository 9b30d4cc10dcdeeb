#pragma once

#include <string>

#include "onassign/certifiers.hpp"
#include "onassign/offline.hpp"

namespace onassign {

/// One certificate per agent, possibly the sentinel. The element multiset is
/// not required to be independent or repetition-free.
template <typename T>
struct SamplerOutput {
  std::map<AgentId, Certificate> per_agent;

  const Certificate& at(AgentId a) const {
    auto it = per_agent.find(a);
    if (it == per_agent.end()) throw InvalidInstanceError("agent missing from sampler output");
    return it->second;
  }
};

template <typename T>
class CertificateSampler {
 public:
  virtual ~CertificateSampler() = default;
  virtual SamplerOutput<T> sample(const WeightProfile<T>& profile, Rng& rng) const = 0;
  virtual std::string name() const = 0;
};

namespace detail {

/// Draw index from cumulative weights against u; remaining mass means "none"
/// (-1). Exact thresholds when T is rational.
template <typename T>
int draw_from_marginal(const std::vector<T>& probs, double u) {
  T uu = scalar_traits<T>::from_rational(rat_from_double(u));
  T acc = scalar_traits<T>::zero();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (uu < acc) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace detail

/// LP-marginal sampler for hypergraph matchings: each agent's edge is drawn
/// independently from its row of the unique optimal solution of HM(w).
template <typename T>
class HmSampler : public CertificateSampler<T> {
 public:
  explicit HmSampler(const Hypergraph& hg) : hg_(&hg) {}

  std::string name() const override { return "hm"; }

  SamplerOutput<T> sample(const WeightProfile<T>& profile, Rng& rng) const override {
    LpSolution<T> lp = solve_hm_lp<T>(*hg_, profile, /*lex_unique=*/scalar_traits<T>::exact);
    SamplerOutput<T> out;
    for (const auto& [a, wf] : profile.map()) {
      std::vector<Element> elems = wf.support();
      std::vector<T> probs;
      probs.reserve(elems.size());
      for (Element e : elems) probs.push_back(lp.x_at(a, e));
      int pick = detail::draw_from_marginal(probs, rng.uniform01());
      out.per_agent[a] = pick < 0 ? Certificate::sentinel() : Certificate::edge(elems[static_cast<std::size_t>(pick)]);
    }
    return out;
  }

  LpSolution<T> marginals(const WeightProfile<T>& profile) const {
    return solve_hm_lp<T>(*hg_, profile, /*lex_unique=*/scalar_traits<T>::exact);
  }

 private:
  const Hypergraph* hg_;
};

/// Deterministic sampler for k-directed certifiers: computes an optimal
/// offline assignment and hands every assigned agent the certificate
/// (I(w), M*(a)) with the shared optimal independent set as payload.
template <typename T>
class DirectedSampler : public CertificateSampler<T> {
 public:
  explicit DirectedSampler(const Matroid& matroid, long budget = kDefaultBruteForceBudget)
      : matroid_(&matroid), budget_(budget) {}

  std::string name() const override { return "directed"; }

  SamplerOutput<T> sample(const WeightProfile<T>& profile, Rng& /*rng*/) const override {
    auto [asg, value] = offline_opt_bruteforce<T>(*matroid_, profile, budget_);
    std::vector<Element> I = asg.assigned_elements();
    std::sort(I.begin(), I.end());
    SamplerOutput<T> out;
    for (const auto& [a, wf] : profile.map()) {
      Element e = asg.at(a);
      out.per_agent[a] = e == kBottom ? Certificate::sentinel() : Certificate::independent_set(I, e);
    }
    return out;
  }

 private:
  const Matroid* matroid_;
  long budget_;
};

/// Per-component convex decompositions of y*|_{E_i} (atoms in local ids).
struct MatchoidDecomposition {
  std::vector<ConvexDecomposition> per_component;
};

inline MatchoidDecomposition decompose_matchoid_solution(const Matchoid& mc, const LpSolution<Rational>& lp,
                                                         int subset_limit = kDefaultSubsetLimit) {
  MatchoidDecomposition out;
  for (int i = 0; i < mc.num_components(); ++i) {
    const auto& comp = mc.component(i);
    std::map<Element, Rational> z;
    for (std::size_t local = 0; local < comp.active.size(); ++local) {
      auto it = lp.y.find(comp.active[local]);
      if (it != lp.y.end() && it->second > 0) z[static_cast<Element>(local)] = it->second;
    }
    out.per_component.push_back(decompose_polytope_point(*comp.matroid, z, subset_limit));
  }
  return out;
}

/// LP + decomposition sampler for matchoids. Elements are drawn from the
/// exact LP marginals; each active component then draws an independent set
/// containing the element from the decomposition conditioned on membership.
/// Internally exact for both scalar backends: the profile is rationalized,
/// so the decomposition step never leaves the polytope.
template <typename T>
class MatchoidSampler : public CertificateSampler<T> {
 public:
  MatchoidSampler(const Matchoid& mc, const MatchoidCertifier& certifier, int subset_limit = kDefaultSubsetLimit)
      : mc_(&mc), certifier_(&certifier), subset_limit_(subset_limit) {}

  std::string name() const override { return "matchoid"; }

  SamplerOutput<T> sample(const WeightProfile<T>& profile, Rng& rng) const override {
    WeightProfile<Rational> exact = rationalize(profile);
    LpSolution<Rational> lp = solve_matchoid_lp<Rational>(*mc_, exact, true, PivotRule::dantzig, subset_limit_);
    MatchoidDecomposition decomp = decompose_matchoid_solution(*mc_, lp, subset_limit_);
    SamplerOutput<T> out;
    for (const auto& [a, wf] : exact.map()) {
      std::vector<Element> elems = wf.support();
      std::vector<Rational> probs;
      probs.reserve(elems.size());
      for (Element e : elems) probs.push_back(lp.x_at(a, e));
      int pick = detail::draw_from_marginal(probs, rng.uniform01());
      if (pick < 0) {
        out.per_agent[a] = Certificate::sentinel();
        continue;
      }
      Element e = elems[static_cast<std::size_t>(pick)];
      out.per_agent[a] = draw_bundle(lp, decomp, e, rng);
    }
    return out;
  }

  /// Bundle for element e: per active component, an atom containing e drawn
  /// from the membership-conditioned decomposition weights.
  Certificate draw_bundle(const LpSolution<Rational>& lp, const MatchoidDecomposition& decomp, Element e,
                          Rng& rng) const {
    std::vector<std::vector<Element>> parts(static_cast<std::size_t>(mc_->num_components()));
    for (int i = 0; i < mc_->num_components(); ++i) {
      int local = mc_->local_id(e, i);
      if (local < 0) continue;
      const auto& atoms = decomp.per_component[static_cast<std::size_t>(i)].atoms;
      std::vector<Rational> weights;
      std::vector<int> idx;
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        if (std::binary_search(atoms[j].second.begin(), atoms[j].second.end(), local)) {
          weights.push_back(atoms[j].first);
          idx.push_back(static_cast<int>(j));
        }
      }
      if (weights.empty())
        throw InternalConsistencyError("positive marginal with no decomposition atom containing the element");
      Rational total(0);
      for (const auto& w : weights) total += w;
      for (auto& w : weights) w /= total;  // mu^{(i,e)}
      int pick = detail::draw_from_marginal(weights, rng.uniform01());
      if (pick < 0) pick = static_cast<int>(weights.size()) - 1;
      std::vector<Element> global;
      for (Element l : atoms[static_cast<std::size_t>(idx[static_cast<std::size_t>(pick)])].second)
        global.push_back(mc_->global_id(l, i));
      parts[static_cast<std::size_t>(i)] = std::move(global);
    }
    return certifier_->make_bundle(std::move(parts), e);
  }

  static WeightProfile<Rational> rationalize(const WeightProfile<T>& profile) {
    if constexpr (std::is_same_v<T, Rational>) {
      return profile;
    } else {
      WeightProfile<Rational> out;
      for (const auto& [a, wf] : profile.map()) {
        WeightFunction<Rational> rwf;
        for (const auto& [e, w] : wf.entries()) rwf.set(e, rat_from_double(w));
        out.set(a, rwf);
      }
      return out;
    }
  }

 private:
  const Matchoid* mc_;
  const MatchoidCertifier* certifier_;
  int subset_limit_;
};

/// Verification of the (gamma, k) sampler definition on one profile.
struct SamplerReport {
  std::string method;       // "exact" | "monte-carlo"
  double gamma_observed;    // E[value] / OPT, 1 when OPT = 0
  double k_observed;        // max over probed certificates of sum_a P[block]
  bool approximation_ok;
  bool blocking_ok;
  long probes = 0;
};

/// Exact check of Algorithm "hm": expected value equals the LP objective and
/// dominates OPT; for every edge f the blocking mass sums to at most k.
SamplerReport verify_hm_exact(const Hypergraph& hg, const WeightProfile<Rational>& profile, int k_required);

/// Exact check of the directed sampler against a k-directed certifier;
/// probes (J, f) exhaustively for ground sets of at most `exhaustive_limit`
/// elements and by sampling otherwise.
SamplerReport verify_directed_exact(const Matroid& matroid, const Certifier& certifier,
                                    const WeightProfile<Rational>& profile, int k_required, Rng& rng,
                                    int probe_trials = 200, int exhaustive_limit = 6,
                                    long budget = kDefaultBruteForceBudget);

/// Exact check of the matchoid sampler: probes bundles assembled from
/// decomposition atoms (plus singleton fallbacks) for every ground element.
SamplerReport verify_matchoid_exact(const Matchoid& mc, const MatchoidCertifier& certifier,
                                    const WeightProfile<Rational>& profile, long probe_cap = 4000,
                                    int subset_limit = kDefaultSubsetLimit);

/// Monte Carlo fallback: empirical expected value against gamma * OPT and
/// empirical blocking frequencies against k over the given probes, each with
/// a 3-standard-error allowance.
template <typename T>
SamplerReport verify_sampler_mc(const CertificateSampler<T>& sampler, const Certifier& certifier,
                                const WeightProfile<T>& profile, double opt_value,
                                const std::vector<Certificate>& probes, int k_required, double gamma_required,
                                int trials, Rng& rng) {
  if (trials < 1) throw InvalidParameterError("mc verification needs at least one trial");
  double sum_value = 0.0, sum_sq = 0.0;
  std::vector<long> block_counts(probes.size(), 0);
  for (int t = 0; t < trials; ++t) {
    SamplerOutput<T> out = sampler.sample(profile, rng);
    double value = 0.0;
    for (const auto& [a, cert] : out.per_agent) {
      value += scalar_traits<T>::to_double(profile.at(a).at(cert.element));
      for (std::size_t p = 0; p < probes.size(); ++p) {
        if (certifier.blocks(cert, probes[p])) ++block_counts[p];
      }
    }
    sum_value += value;
    sum_sq += value * value;
  }
  double mean = sum_value / trials;
  double var = std::max(0.0, sum_sq / trials - mean * mean);
  double se = std::sqrt(var / trials);

  SamplerReport report;
  report.method = "monte-carlo";
  report.gamma_observed = opt_value > 0 ? mean / opt_value : 1.0;
  report.probes = static_cast<long>(probes.size());
  double max_block = 0.0;
  for (long c : block_counts) max_block = std::max(max_block, static_cast<double>(c) / trials);
  report.k_observed = max_block;
  report.approximation_ok = mean + 3 * se >= gamma_required * opt_value;
  // crude per-probe binomial-style allowance
  double block_se = std::sqrt(0.25 / trials) * 3;
  report.blocking_ok = max_block <= k_required + block_se;
  return report;
}

/// Probe certificates for MC verification.
std::vector<Certificate> probes_for_hypergraph(const Hypergraph& hg);
std::vector<Certificate> probes_for_matroid(const Matroid& matroid, int trials, Rng& rng,
                                            int exhaustive_limit = 6);
std::vector<Certificate> probes_for_matchoid(const Matchoid& mc, const MatchoidCertifier& certifier,
                                             long probe_cap, Rng& rng);

}  // namespace onassign
