#include "onassign/samplers.hpp"

#include <algorithm>

namespace onassign {

namespace {

SamplerReport make_exact_report(const Rational& expected, const Rational& opt, const Rational& max_block,
                                int k_required, long probes) {
  SamplerReport r;
  r.method = "exact";
  r.gamma_observed = opt > 0 ? rat_to_double(expected / opt) : 1.0;
  r.k_observed = rat_to_double(max_block);
  r.approximation_ok = expected >= opt;
  r.blocking_ok = max_block <= k_required;
  r.probes = probes;
  return r;
}

}  // namespace

SamplerReport verify_hm_exact(const Hypergraph& hg, const WeightProfile<Rational>& profile, int k_required) {
  LpSolution<Rational> lp = solve_hm_lp<Rational>(hg, profile, true);
  Rational expected(0);
  for (const auto& [a, wf] : profile.map()) {
    for (const auto& [e, w] : wf.entries()) expected += w * lp.x_at(a, e);
  }
  if (expected != lp.objective)
    throw InternalConsistencyError("hm sampler expected value differs from LP objective");
  auto [asg, opt] = offline_opt_bruteforce<Rational>(hg, profile);

  Rational max_block(0);
  for (Element f = 0; f < hg.ground_size(); ++f) {
    Rational total(0);
    for (const auto& [a, wf] : profile.map()) {
      for (const auto& [e, w] : wf.entries()) {
        if (hg.edges_intersect(e, f)) total += lp.x_at(a, e);
      }
    }
    max_block = std::max(max_block, total);
  }
  return make_exact_report(expected, opt, max_block, k_required, hg.ground_size());
}

SamplerReport verify_directed_exact(const Matroid& matroid, const Certifier& certifier,
                                    const WeightProfile<Rational>& profile, int k_required, Rng& rng,
                                    int probe_trials, int exhaustive_limit, long budget) {
  auto [asg, opt] = offline_opt_bruteforce<Rational>(matroid, profile, budget);
  std::vector<Element> I = asg.assigned_elements();
  std::sort(I.begin(), I.end());

  long probes = 0;
  int max_block = 0;
  auto probe = [&](const std::vector<Element>& J, Element f) {
    Certificate target = Certificate::independent_set(J, f);
    int count = 0;
    for (const auto& [a, e] : asg.map()) {
      if (certifier.blocks(Certificate::independent_set(I, e), target)) ++count;
    }
    max_block = std::max(max_block, count);
    ++probes;
  };

  if (matroid.ground_size() <= exhaustive_limit) {
    for (const auto& J : enumerate_independent_sets(matroid)) {
      for (Element f : J) probe(J, f);
    }
  } else {
    for (int t = 0; t < probe_trials; ++t) {
      auto J = random_independent_set(matroid, rng);
      if (J.empty()) continue;
      probe(J, J[static_cast<std::size_t>(rng.uniform_int(static_cast<int>(J.size())))]);
    }
  }
  return make_exact_report(opt, opt, Rational(max_block), k_required, probes);
}

namespace {

/// Candidate local payloads for element f inside one component: every
/// decomposition atom containing f, plus the singleton {f} when independent.
std::vector<std::vector<Element>> local_candidates(const Matroid& matroid, const ConvexDecomposition& decomp,
                                                   Element f_local) {
  std::vector<std::vector<Element>> out;
  for (const auto& [lambda, I] : decomp.atoms) {
    if (std::binary_search(I.begin(), I.end(), f_local)) out.push_back(I);
  }
  std::vector<Element> singleton = {f_local};
  if (matroid.is_independent(singleton) &&
      std::find(out.begin(), out.end(), singleton) == out.end())
    out.push_back(singleton);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SamplerReport verify_matchoid_exact(const Matchoid& mc, const MatchoidCertifier& certifier,
                                    const WeightProfile<Rational>& profile, long probe_cap, int subset_limit) {
  LpSolution<Rational> lp = solve_matchoid_lp<Rational>(mc, profile, true, PivotRule::dantzig, subset_limit);
  MatchoidDecomposition decomp = decompose_matchoid_solution(mc, lp, subset_limit);

  Rational expected(0);
  for (const auto& [a, wf] : profile.map()) {
    for (const auto& [e, w] : wf.entries()) expected += w * lp.x_at(a, e);
  }
  if (expected != lp.objective)
    throw InternalConsistencyError("matchoid sampler expected value differs from LP objective");
  auto [asg, opt] = offline_opt_bruteforce<Rational>(mc, profile);

  // Blocking probability per agent uses the closed-form joint
  // P[e_a = e, I_i^a = I] = x*_a(e) lambda_I / y*(e); given e_a the component
  // draws are independent, so the blocking union is an exact product.
  Rational max_block(0);
  long probes = 0;
  for (Element f = 0; f < mc.ground_size() && probes < probe_cap; ++f) {
    // assemble candidate bundles for f from decomposition atoms
    std::vector<int> active;
    std::vector<std::vector<std::vector<Element>>> cands;
    bool has_certificate = true;
    for (int i = 0; i < mc.num_components(); ++i) {
      int f_local = mc.local_id(f, i);
      if (f_local < 0) continue;
      auto c = local_candidates(*mc.component(i).matroid, decomp.per_component[static_cast<std::size_t>(i)], f_local);
      if (c.empty()) {
        has_certificate = false;  // f is a loop in component i
        break;
      }
      active.push_back(i);
      cands.push_back(std::move(c));
    }
    if (!has_certificate) continue;

    std::vector<std::size_t> pick(cands.size(), 0);
    while (probes < probe_cap) {
      std::vector<std::vector<Element>> parts(static_cast<std::size_t>(mc.num_components()));
      for (std::size_t ai = 0; ai < active.size(); ++ai) {
        std::vector<Element> global;
        for (Element l : cands[ai][pick[ai]]) global.push_back(mc.global_id(l, active[ai]));
        parts[static_cast<std::size_t>(active[ai])] = std::move(global);
      }
      Certificate bundle = certifier.make_bundle(std::move(parts), f);
      ++probes;

      Rational sum(0);
      for (const auto& [a, wf] : profile.map()) {
        Rational agent_prob(0);
        for (const auto& [e, w] : wf.entries()) {
          Rational xae = lp.x_at(a, e);
          if (xae == 0) continue;
          Rational none_block(1);
          for (std::size_t ai = 0; ai < active.size(); ++ai) {
            int i = active[ai];
            int e_local = mc.local_id(e, i);
            int f_local = mc.local_id(f, i);
            if (e_local < 0) continue;
            const auto& atoms = decomp.per_component[static_cast<std::size_t>(i)].atoms;
            Certificate target = Certificate::independent_set(cands[ai][pick[ai]], f_local);
            Rational y_e(0), blocking(0);
            for (const auto& [lambda, I] : atoms) {
              if (!std::binary_search(I.begin(), I.end(), e_local)) continue;
              y_e += lambda;
              if (certifier.component_certifier(i).blocks(Certificate::independent_set(I, e_local), target))
                blocking += lambda;
            }
            if (y_e == 0)
              throw InternalConsistencyError("positive marginal with zero decomposition mass on its element");
            none_block *= (1 - blocking / y_e);
          }
          agent_prob += xae * (1 - none_block);
        }
        sum += agent_prob;
      }
      if (sum > certifier.k_of(f))
        return make_exact_report(expected, opt, sum, certifier.k_of(f), probes);  // fails blocking_ok
      max_block = std::max(max_block, sum);

      // next combination
      std::size_t d = 0;
      while (d < pick.size()) {
        if (++pick[d] < cands[d].size()) break;
        pick[d] = 0;
        ++d;
      }
      if (d == pick.size()) break;
      if (pick.empty()) break;
    }
  }
  return make_exact_report(expected, opt, max_block, certifier.k(), probes);
}

std::vector<Certificate> probes_for_hypergraph(const Hypergraph& hg) {
  std::vector<Certificate> out;
  out.reserve(static_cast<std::size_t>(hg.ground_size()));
  for (Element e = 0; e < hg.ground_size(); ++e) out.push_back(Certificate::edge(e));
  return out;
}

std::vector<Certificate> probes_for_matroid(const Matroid& matroid, int trials, Rng& rng, int exhaustive_limit) {
  std::vector<Certificate> out;
  if (matroid.ground_size() <= exhaustive_limit) {
    for (const auto& J : enumerate_independent_sets(matroid)) {
      for (Element f : J) out.push_back(Certificate::independent_set(J, f));
    }
    return out;
  }
  for (int t = 0; t < trials; ++t) {
    auto J = random_independent_set(matroid, rng);
    if (J.empty()) continue;
    Element f = J[static_cast<std::size_t>(rng.uniform_int(static_cast<int>(J.size())))];
    out.push_back(Certificate::independent_set(J, f));
  }
  return out;
}

std::vector<Certificate> probes_for_matchoid(const Matchoid& mc, const MatchoidCertifier& certifier,
                                             long probe_cap, Rng& rng) {
  std::vector<Certificate> out;
  for (long t = 0; t < probe_cap; ++t) {
    Element f = rng.uniform_int(mc.ground_size());
    std::vector<std::vector<Element>> parts(static_cast<std::size_t>(mc.num_components()));
    bool ok = true;
    for (int i = 0; i < mc.num_components() && ok; ++i) {
      if (mc.local_id(f, i) < 0) continue;
      const Matroid& sub = *mc.component(i).matroid;
      auto J = random_independent_set(sub, rng);
      int f_local = mc.local_id(f, i);
      if (!std::binary_search(J.begin(), J.end(), f_local)) {
        J.push_back(f_local);
        std::sort(J.begin(), J.end());
        while (!sub.is_independent(J)) {
          // shed elements other than f until independent
          bool removed = false;
          for (std::size_t q = 0; q < J.size(); ++q) {
            if (J[q] == f_local) continue;
            std::vector<Element> trimmed = J;
            trimmed.erase(trimmed.begin() + static_cast<long>(q));
            J = std::move(trimmed);
            removed = true;
            break;
          }
          if (!removed) break;
        }
        if (!sub.is_independent(J)) {
          ok = false;  // f is a loop in this component
          break;
        }
      }
      std::vector<Element> global;
      for (Element l : J) global.push_back(mc.global_id(l, i));
      parts[static_cast<std::size_t>(i)] = std::move(global);
    }
    if (!ok) continue;
    out.push_back(certifier.make_bundle(std::move(parts), f));
  }
  std::sort(out.begin(), out.end(), [](const Certificate& a, const Certificate& b) {
    return std::tie(a.element, a.payload) < std::tie(b.element, b.payload);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace onassign
