#pragma once

#include <cmath>
#include <functional>
#include <numeric>

#include "onassign/samplers.hpp"

namespace onassign {

/// Running certification plus the partial assignment it induces.
struct OnlineState {
  std::vector<Certificate> chain;
  Assignment asg;
};

/// Accepts the proposal iff it is not the sentinel and no certificate
/// accepted so far blocks it; on acceptance the proposal joins the chain and
/// the agent is assigned its element.
inline bool accept_step(OnlineState& state, const Certifier& certifier, AgentId agent,
                        const Certificate& proposal) {
  if (proposal.is_sentinel()) return false;
  for (const auto& c : state.chain) {
    if (certifier.blocks(c, proposal)) return false;
  }
  state.chain.push_back(proposal);
  state.asg.set(agent, proposal.element);
  return true;
}

/// Sampling probability and guaranteed ratio of the secretary schedule:
/// (1/e, 1/e) for k = 1 and (k^{-1/(k-1)}, k^{-k/(k-1)}) for k >= 2.
inline std::pair<double, double> p_alpha(int k) {
  if (k < 1) throw InvalidParameterError("schedule parameter k must be positive");
  if (k == 1) return {std::exp(-1.0), std::exp(-1.0)};
  double kk = static_cast<double>(k);
  return {std::pow(kk, -1.0 / (kk - 1.0)), std::pow(kk, -kk / (kk - 1.0))};
}

struct SecretarySchedule {
  int k = 1;
  double p = 0.0;
  double alpha = 0.0;
  int tau = 0;  // realized Binomial(m, p) cutoff

  static SecretarySchedule make(int k, int m, Rng& rng) {
    auto [p, alpha] = p_alpha(k);
    return {k, p, alpha, rng.binomial(m, p)};
  }
  static SecretarySchedule with_p(int k, double p, int m, Rng& rng) {
    auto [p_def, alpha] = p_alpha(k);
    (void)p_def;
    return {k, p, alpha, rng.binomial(m, p)};
  }
};

template <typename T>
struct OnlineRun {
  Assignment asg;
  WeightProfile<T> realized;  // the revealed weight functions
  T alg_value;
  int tau = 0;  // secretary only
};

namespace detail {

template <typename T>
void check_run(const IndependenceSystem& system, const Certifier& certifier, const OnlineState& state,
               bool debug_verify) {
  if (debug_verify && !verify_certification(certifier, system, state.chain))
    throw InternalConsistencyError("online chain is not a certification");
  if (!is_feasible(system, state.asg)) throw InternalConsistencyError("online assignment infeasible");
}

}  // namespace detail

/// Prophet IID template. Agents a_0..a_{m-1} arrive in fixed order; at step t
/// the revealed function r_t is planted at a uniformly random slot l_t of a
/// fresh iid profile R_t, the sampler runs on R_t, and agent a_t receives the
/// slot's proposal under the accept rule. Fresh draws each step: m*m samples
/// per run in total.
template <typename T>
OnlineRun<T> run_prophet_iid(const IndependenceSystem& system, const Certifier& certifier,
                             const CertificateSampler<T>& sampler,
                             const std::function<WeightFunction<T>(Rng&)>& draw, int m, Rng& rng,
                             bool debug_verify = false) {
  if (m < 1) throw InvalidParameterError("need at least one agent");
  OnlineState state;
  OnlineRun<T> run;
  run.alg_value = scalar_traits<T>::zero();
  for (AgentId t = 0; t < m; ++t) {
    WeightFunction<T> revealed = draw(rng);
    int slot = rng.uniform_int(m);
    WeightProfile<T> fresh;
    for (AgentId j = 0; j < m; ++j) fresh.set(j, j == slot ? revealed : draw(rng));
    SamplerOutput<T> out = sampler.sample(fresh, rng);
    const Certificate& proposal = out.at(slot);
    if (accept_step(state, certifier, t, proposal)) {
      run.alg_value += revealed.at(proposal.element);
      if (debug_verify) detail::check_run<T>(system, certifier, state, true);
    }
    run.realized.set(t, std::move(revealed));
  }
  detail::check_run<T>(system, certifier, state, debug_verify);
  run.asg = state.asg;
  return run;
}

template <typename T>
OnlineRun<T> run_prophet_iid(const IndependenceSystem& system, const Certifier& certifier,
                             const CertificateSampler<T>& sampler, const WeightDistribution<T>& dist, int m,
                             Rng& rng, bool debug_verify = false) {
  std::function<WeightFunction<T>(Rng&)> draw = [&dist](Rng& r) { return dist.sample(r); };
  return run_prophet_iid<T>(system, certifier, sampler, draw, m, rng, debug_verify);
}

/// Single-sample prophet-secretary template. One upfront sample per agent;
/// agents arrive in random order; step t runs the sampler on the profile
/// that mixes revealed weights on arrived agents with samples on the rest.
template <typename T>
OnlineRun<T> run_prophet_secretary_single_sample(const IndependenceSystem& system, const Certifier& certifier,
                                                 const CertificateSampler<T>& sampler,
                                                 const std::map<AgentId, WeightDistribution<T>>& dists, Rng& rng,
                                                 bool debug_verify = false) {
  if (dists.empty()) throw InvalidParameterError("need at least one agent");
  const int m = static_cast<int>(dists.size());
  WeightProfile<T> samples = sample_profile(dists, rng);
  std::vector<AgentId> order;
  order.reserve(dists.size());
  for (const auto& [a, d] : dists) order.push_back(a);
  rng.shuffle(order);

  WeightProfile<T> mixed = samples;  // revealed weights overwrite samples as agents arrive
  OnlineState state;
  OnlineRun<T> run;
  run.alg_value = scalar_traits<T>::zero();
  for (int t = 0; t < m; ++t) {
    AgentId a = order[static_cast<std::size_t>(t)];
    WeightFunction<T> revealed = dists.at(a).sample(rng);
    mixed.set(a, revealed);
    SamplerOutput<T> out = sampler.sample(mixed, rng);
    const Certificate& proposal = out.at(a);
    if (accept_step(state, certifier, a, proposal)) {
      run.alg_value += revealed.at(proposal.element);
      if (debug_verify) detail::check_run<T>(system, certifier, state, true);
    }
    run.realized.set(a, std::move(revealed));
  }
  detail::check_run<T>(system, certifier, state, debug_verify);
  run.asg = state.asg;
  return run;
}

/// Secretary template. The adversarial profile is fixed up front; a Binomial
/// cutoff tau of the random order is observed only, then the sampler runs on
/// each growing revealed prefix under the accept rule.
template <typename T>
OnlineRun<T> run_secretary(const IndependenceSystem& system, const Certifier& certifier,
                           const CertificateSampler<T>& sampler, const WeightProfile<T>& profile, double p,
                           Rng& rng, bool debug_verify = false) {
  const int m = profile.size();
  if (m < 1) throw InvalidParameterError("need at least one agent");
  if (p < 0.0 || p > 1.0) throw InvalidParameterError("sampling probability outside [0, 1]");
  std::vector<AgentId> order = profile.agents();
  rng.shuffle(order);
  int tau = rng.binomial(m, p);

  OnlineState state;
  OnlineRun<T> run;
  run.alg_value = scalar_traits<T>::zero();
  run.tau = tau;
  run.realized = profile;
  for (int t = tau; t < m; ++t) {
    std::span<const AgentId> prefix(order.data(), static_cast<std::size_t>(t + 1));
    WeightProfile<T> revealed = profile.restricted_to(prefix);
    AgentId a = order[static_cast<std::size_t>(t)];
    SamplerOutput<T> out = sampler.sample(revealed, rng);
    const Certificate& proposal = out.at(a);
    if (accept_step(state, certifier, a, proposal)) {
      run.alg_value += profile.at(a).at(proposal.element);
      if (debug_verify) detail::check_run<T>(system, certifier, state, true);
    }
  }
  detail::check_run<T>(system, certifier, state, debug_verify);
  run.asg = state.asg;
  return run;
}

}  // namespace onassign
