#include "onassign/certifiers.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace onassign {

std::string Certificate::to_json() const {
  std::ostringstream os;
  switch (kind) {
    case CertKind::sentinel:
      os << "{\"kind\":\"sentinel\"}";
      return os.str();
    case CertKind::edge:
      os << "{\"kind\":\"edge\",\"element\":" << element << "}";
      return os.str();
    case CertKind::independent_set:
      os << "{\"kind\":\"set\",\"element\":" << element << ",\"set\":[";
      break;
    case CertKind::bundle:
      os << "{\"kind\":\"bundle\",\"element\":" << element << ",\"sets\":[";
      break;
  }
  auto dump_list = [&os](const std::vector<Element>& v) {
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
  };
  if (kind == CertKind::independent_set) {
    const auto& v = payload.at(0);
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]}";
  } else {
    for (std::size_t i = 0; i < payload.size(); ++i) {
      if (i) os << ",";
      dump_list(payload[i]);
    }
    os << "]}";
  }
  return os.str();
}

bool HypergraphCertifier::is_certificate(const Certificate& c) const {
  return c.kind == CertKind::edge && c.element >= 0 && c.element < hg_->ground_size();
}

bool HypergraphCertifier::do_blocks(const Certificate& c1, const Certificate& c2) const {
  return hg_->edges_intersect(c1.element, c2.element);
}

bool PartitionCertifier::is_certificate(const Certificate& c) const {
  if (c.kind != CertKind::independent_set) return false;
  if (c.element < 0 || c.element >= pm_->ground_size()) return false;
  const auto& I = c.set();
  if (!std::binary_search(I.begin(), I.end(), c.element)) return false;
  return pm_->is_independent(I);
}

bool PartitionCertifier::do_blocks(const Certificate& c1, const Certificate& c2) const {
  return pm_->part_of(c1.element) == pm_->part_of(c2.element);
}

std::vector<std::pair<int, int>> orient_forest(const GraphicMatroid& gm, std::span<const Element> forest) {
  if (!gm.is_independent(forest)) throw InvalidCertificateError("orient_forest: edge set has a cycle");

  // adjacency restricted to F
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(gm.n_vertices()));
  for (std::size_t i = 0; i < forest.size(); ++i) {
    auto [u, v] = gm.endpoints(forest[i]);
    adj[static_cast<std::size_t>(u)].push_back({v, i});
    adj[static_cast<std::size_t>(v)].push_back({u, i});
  }

  std::vector<std::pair<int, int>> oriented(forest.size(), {-1, -1});
  std::vector<char> seen(static_cast<std::size_t>(gm.n_vertices()), 0);
  // Components rooted at their smallest vertex: scanning roots in ascending
  // order reaches each component first through its minimum label.
  for (int root = 0; root < gm.n_vertices(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = 1;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [v, ei] : adj[static_cast<std::size_t>(u)]) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = 1;
        oriented[ei] = {u, v};  // away from the root
        stack.push_back(v);
      }
    }
  }
  return oriented;
}

int GraphicCertifier::head_of(std::span<const Element> forest, Element e) const {
  auto oriented = orient_forest(*gm_, forest);
  for (std::size_t i = 0; i < forest.size(); ++i) {
    if (forest[i] == e) return oriented[i].second;
  }
  throw InvalidCertificateError("edge not in its certificate forest");
}

bool GraphicCertifier::is_certificate(const Certificate& c) const {
  if (c.kind != CertKind::independent_set) return false;
  if (c.element < 0 || c.element >= gm_->ground_size()) return false;
  const auto& F = c.set();
  if (!std::binary_search(F.begin(), F.end(), c.element)) return false;
  return gm_->is_independent(F);
}

bool GraphicCertifier::do_blocks(const Certificate& c1, const Certificate& c2) const {
  int head = head_of(c1.set(), c1.element);
  auto [u, v] = gm_->endpoints(c2.element);
  return head == u || head == v;
}

std::pair<Element, int> TransversalCertifier::matching_edge(std::span<const Element> set, Element v) const {
  auto matching = tm_->canonical_matching(set);
  if (!matching) throw InvalidCertificateError("transversal certificate set is dependent");
  for (const auto& [l, r] : *matching) {
    if (l == v) return {l, r};
  }
  throw InvalidCertificateError("element not in its certificate set");
}

bool TransversalCertifier::is_certificate(const Certificate& c) const {
  if (c.kind != CertKind::independent_set) return false;
  if (c.element < 0 || c.element >= tm_->ground_size()) return false;
  const auto& X = c.set();
  if (!std::binary_search(X.begin(), X.end(), c.element)) return false;
  return tm_->is_independent(X);
}

bool TransversalCertifier::do_blocks(const Certificate& c1, const Certificate& c2) const {
  auto [l1, r1] = matching_edge(c1.set(), c1.element);
  auto [l2, r2] = matching_edge(c2.set(), c2.element);
  return l1 == l2 || r1 == r2;
}

MatchoidCertifier::MatchoidCertifier(const Matchoid& mc,
                                     std::vector<std::shared_ptr<const Certifier>> component_certifiers,
                                     std::vector<int> component_ks)
    : mc_(&mc), comp_certs_(std::move(component_certifiers)), comp_ks_(std::move(component_ks)) {
  if (static_cast<int>(comp_certs_.size()) != mc_->num_components() ||
      static_cast<int>(comp_ks_.size()) != mc_->num_components())
    throw InvalidInstanceError("one certifier and one k per matchoid component required");
}

Certificate MatchoidCertifier::make_bundle(std::vector<std::vector<Element>> sets, Element e) const {
  auto c = Certificate::bundle(std::move(sets), e);
  if (!is_certificate(c)) throw InvalidCertificateError("malformed bundle certificate");
  return c;
}

bool MatchoidCertifier::is_certificate(const Certificate& c) const {
  if (c.kind != CertKind::bundle) return false;
  if (c.element < 0 || c.element >= mc_->ground_size()) return false;
  if (static_cast<int>(c.payload.size()) != mc_->num_components()) return false;
  for (int i = 0; i < mc_->num_components(); ++i) {
    const auto& Ii = c.payload[static_cast<std::size_t>(i)];
    if (!mc_->active_in(c.element, i)) {
      if (!Ii.empty()) return false;
      continue;
    }
    if (!std::binary_search(Ii.begin(), Ii.end(), c.element)) return false;
    // payload is stored in global ids; component matroids live on local ids
    auto local = mc_->to_local(Ii, i);
    if (local.size() != Ii.size()) return false;  // some element inactive in i
    if (!mc_->component(i).matroid->is_independent(local)) return false;
  }
  return true;
}

Certificate MatchoidCertifier::local_certificate(const Certificate& bundle, int comp) const {
  auto local_set = mc_->to_local(bundle.payload[static_cast<std::size_t>(comp)], comp);
  return Certificate::independent_set(std::move(local_set), mc_->local_id(bundle.element, comp));
}

bool MatchoidCertifier::do_blocks(const Certificate& c1, const Certificate& c2) const {
  for (int i = 0; i < mc_->num_components(); ++i) {
    if (!mc_->active_in(c1.element, i) || !mc_->active_in(c2.element, i)) continue;
    if (comp_certs_[static_cast<std::size_t>(i)]->blocks(local_certificate(c1, i), local_certificate(c2, i)))
      return true;
  }
  return false;
}

int MatchoidCertifier::k_of(Element e) const {
  int total = 0;
  for (int i = 0; i < mc_->num_components(); ++i) {
    if (mc_->active_in(e, i)) total += comp_ks_[static_cast<std::size_t>(i)];
  }
  return total;
}

int MatchoidCertifier::k() const {
  int best = 0;
  for (Element e = 0; e < mc_->ground_size(); ++e) best = std::max(best, k_of(e));
  return best;
}

HypergraphCertifier hypergraph_certifier(const Hypergraph& hg) { return HypergraphCertifier(hg); }
PartitionCertifier partition_certifier(const PartitionMatroid& pm) { return PartitionCertifier(pm); }
GraphicCertifier graphic_certifier(const GraphicMatroid& gm) { return GraphicCertifier(gm); }
TransversalCertifier transversal_certifier(const TransversalMatroid& tm) { return TransversalCertifier(tm); }
MatchoidCertifier matchoid_certifier(const Matchoid& mc,
                                     std::vector<std::shared_ptr<const Certifier>> component_certifiers,
                                     std::vector<int> component_ks) {
  return MatchoidCertifier(mc, std::move(component_certifiers), std::move(component_ks));
}

bool verify_certification(const Certifier& cert, const IndependenceSystem& system,
                          std::span<const Certificate> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i; j < seq.size(); ++j) {
      // i == j included: a self-blocking certificate is not a certification
      // of length one followed by itself, but property (b) loops only matter
      // across positions; the definition quantifies i < j, so skip i == j.
      if (i == j) continue;
      if (cert.blocks(seq[i], seq[j])) return false;
    }
  }
  // Blocking-free: the Proposition promises an independent set of size t.
  std::set<Element> elems;
  for (const auto& c : seq) {
    if (c.is_sentinel()) throw InvalidInputError("sentinel inside a certification");
    if (!elems.insert(c.element).second)
      throw InternalConsistencyError("certification with repeated element: certifier violates (b)");
  }
  std::vector<Element> v(elems.begin(), elems.end());
  if (!system.is_independent(v))
    throw InternalConsistencyError("certification with dependent element set: certifier violates (c)");
  return true;
}

std::vector<std::vector<Element>> enumerate_independent_sets(const IndependenceSystem& sys, int max_ground) {
  if (sys.ground_size() > max_ground) throw ResourceLimitError("ground set too large to enumerate");
  std::vector<std::vector<Element>> out;
  std::vector<Element> universe(static_cast<std::size_t>(sys.ground_size()));
  std::iota(universe.begin(), universe.end(), 0);
  for_each_subset(universe, [&](const std::vector<Element>& s) {
    if (sys.is_independent(s)) out.push_back(s);
  });
  return out;
}

std::vector<Element> random_independent_set(const IndependenceSystem& sys, Rng& rng) {
  std::vector<Element> order(static_cast<std::size_t>(sys.ground_size()));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<Element> picked;
  for (Element e : order) {
    picked.push_back(e);
    std::vector<Element> sorted = picked;
    std::sort(sorted.begin(), sorted.end());
    if (!sys.is_independent(sorted)) picked.pop_back();
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

DirectednessReport check_directedness(const Certifier& cert, const Matroid& matroid, int trials, Rng& rng,
                                      int exhaustive_limit) {
  DirectednessReport report;
  auto count_blockers = [&](const std::vector<Element>& I, const std::vector<Element>& J, Element f) {
    Certificate target = Certificate::independent_set(J, f);
    int count = 0;
    for (Element e : I) {
      if (cert.blocks(Certificate::independent_set(I, e), target)) ++count;
    }
    report.max_blocking = std::max(report.max_blocking, count);
    ++report.pairs_checked;
  };

  if (matroid.ground_size() <= exhaustive_limit) {
    report.exhaustive = true;
    auto sets = enumerate_independent_sets(matroid);
    for (const auto& I : sets) {
      if (I.empty()) continue;
      for (const auto& J : sets) {
        for (Element f : J) count_blockers(I, J, f);
      }
    }
    return report;
  }

  for (int t = 0; t < trials; ++t) {
    auto I = random_independent_set(matroid, rng);
    auto J = random_independent_set(matroid, rng);
    if (I.empty() || J.empty()) continue;
    Element f = J[static_cast<std::size_t>(rng.uniform_int(static_cast<int>(J.size())))];
    count_blockers(I, J, f);
  }
  return report;
}

}  // namespace onassign
