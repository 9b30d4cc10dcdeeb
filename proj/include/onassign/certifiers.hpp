#pragma once

#include <memory>
#include <string>
#include <vector>

#include "onassign/matroids.hpp"

namespace onassign {

enum class CertKind { sentinel, edge, independent_set, bundle };

/// Node (S, e) of a blocking digraph, carried by value: S is an edge id, a
/// sorted independent set, or a per-component bundle of independent sets.
/// Equality is structural. The sentinel neither blocks nor is blocked.
struct Certificate {
  CertKind kind = CertKind::sentinel;
  Element element = kBottom;
  std::vector<std::vector<Element>> payload;

  bool is_sentinel() const { return kind == CertKind::sentinel; }

  static Certificate sentinel() { return {}; }

  static Certificate edge(Element e) { return {CertKind::edge, e, {}}; }

  static Certificate independent_set(std::vector<Element> set, Element e) {
    std::sort(set.begin(), set.end());
    return {CertKind::independent_set, e, {std::move(set)}};
  }

  static Certificate bundle(std::vector<std::vector<Element>> parts, Element e) {
    for (auto& p : parts) std::sort(p.begin(), p.end());
    return {CertKind::bundle, e, {std::move(parts)}};
  }

  const std::vector<Element>& set() const { return payload.at(0); }
  const std::vector<std::vector<Element>>& parts() const { return payload; }

  std::string to_json() const;

  bool operator==(const Certificate&) const = default;
};

/// Blocking digraph held intensionally: membership and arcs are predicates
/// over certificate payloads, never materialized.
class Certifier {
 public:
  virtual ~Certifier() = default;

  virtual bool is_certificate(const Certificate& c) const = 0;

  /// Whether c1 blocks c2. Sentinels never block and are never blocked; both
  /// arguments are otherwise assumed valid certificates of this certifier.
  bool blocks(const Certificate& c1, const Certificate& c2) const {
    if (c1.is_sentinel() || c2.is_sentinel()) return false;
    return do_blocks(c1, c2);
  }

 protected:
  virtual bool do_blocks(const Certificate& c1, const Certificate& c2) const = 0;
};

/// Certificates (e, e) per edge; blocks iff the edges share a node.
class HypergraphCertifier : public Certifier {
 public:
  explicit HypergraphCertifier(const Hypergraph& hg) : hg_(&hg) {}
  bool is_certificate(const Certificate& c) const override;

 protected:
  bool do_blocks(const Certificate& c1, const Certificate& c2) const override;

 private:
  const Hypergraph* hg_;
};

/// 1-directed: (I, v) blocks (I', v') iff v and v' share a part.
class PartitionCertifier : public Certifier {
 public:
  explicit PartitionCertifier(const PartitionMatroid& pm) : pm_(&pm) {}
  bool is_certificate(const Certificate& c) const override;

 protected:
  bool do_blocks(const Certificate& c1, const Certificate& c2) const override;

 private:
  const PartitionMatroid* pm_;
};

/// Orientation of a forest: per component, root at the smallest-label vertex
/// and orient away from it; every non-root vertex has indegree exactly 1.
/// Returns (tail, head) per edge of F, in F order. Throws
/// InvalidCertificateError when F has a cycle.
std::vector<std::pair<int, int>> orient_forest(const GraphicMatroid& gm, std::span<const Element> forest);

/// 2-directed: (F, e) blocks (F', e') iff the head of e under or(F) is an
/// endpoint of e'.
class GraphicCertifier : public Certifier {
 public:
  explicit GraphicCertifier(const GraphicMatroid& gm) : gm_(&gm) {}
  bool is_certificate(const Certificate& c) const override;

  int head_of(std::span<const Element> forest, Element e) const;

 protected:
  bool do_blocks(const Certificate& c1, const Certificate& c2) const override;

 private:
  const GraphicMatroid* gm_;
};

/// 2-directed: (X, v) blocks (X', v') iff the canonical matching edges
/// covering v and v' intersect. The canonical matching is recomputed from X,
/// so equal payloads always agree.
class TransversalCertifier : public Certifier {
 public:
  explicit TransversalCertifier(const TransversalMatroid& tm) : tm_(&tm) {}
  bool is_certificate(const Certificate& c) const override;

  /// (left, right) matching edge covering v inside X's canonical matching.
  std::pair<Element, int> matching_edge(std::span<const Element> set, Element v) const;

 protected:
  bool do_blocks(const Certificate& c1, const Certificate& c2) const override;

 private:
  const TransversalMatroid* tm_;
};

/// Bundle certifier for a matchoid built from per-component certifiers: a
/// bundle blocks another iff some component active for both elements blocks.
class MatchoidCertifier : public Certifier {
 public:
  MatchoidCertifier(const Matchoid& mc, std::vector<std::shared_ptr<const Certifier>> component_certifiers,
                    std::vector<int> component_ks);

  bool is_certificate(const Certificate& c) const override;

  /// Validates the bundle shape (I_i = empty iff e inactive in i, else
  /// e in I_i in I_i); throws InvalidCertificateError on malformed input.
  Certificate make_bundle(std::vector<std::vector<Element>> sets, Element e) const;

  /// k(e) = sum of k_i over components where e is active.
  int k_of(Element e) const;
  /// max_e k(e)
  int k() const;

  const Matchoid& matchoid() const { return *mc_; }
  const Certifier& component_certifier(int i) const { return *comp_certs_[static_cast<std::size_t>(i)]; }
  int component_k(int i) const { return comp_ks_[static_cast<std::size_t>(i)]; }

 protected:
  bool do_blocks(const Certificate& c1, const Certificate& c2) const override;

 private:
  Certificate local_certificate(const Certificate& bundle, int comp) const;

  const Matchoid* mc_;
  std::vector<std::shared_ptr<const Certifier>> comp_certs_;
  std::vector<int> comp_ks_;
};

HypergraphCertifier hypergraph_certifier(const Hypergraph& hg);
PartitionCertifier partition_certifier(const PartitionMatroid& pm);
GraphicCertifier graphic_certifier(const GraphicMatroid& gm);
TransversalCertifier transversal_certifier(const TransversalMatroid& tm);
MatchoidCertifier matchoid_certifier(const Matchoid& mc,
                                     std::vector<std::shared_ptr<const Certifier>> component_certifiers,
                                     std::vector<int> component_ks);

/// True iff no earlier entry blocks a later one. When true, additionally
/// checks that the elements form an independent set of size |seq| and throws
/// InternalConsistencyError otherwise (a valid certifier cannot fail this).
bool verify_certification(const Certifier& cert, const IndependenceSystem& system,
                          std::span<const Certificate> seq);

struct DirectednessReport {
  int max_blocking = 0;   // max over probed (J,f) of |{e in I : (I,e) blocks (J,f)}|
  long pairs_checked = 0;
  bool exhaustive = false;
};

/// Max blocking count of condition (e) over pairs of independent sets;
/// exhaustive when the ground set has at most `exhaustive_limit` elements,
/// randomized with `trials` samples otherwise.
DirectednessReport check_directedness(const Certifier& cert, const Matroid& matroid, int trials, Rng& rng,
                                      int exhaustive_limit = 6);

/// Enumerates all independent sets of a system over a small ground set.
std::vector<std::vector<Element>> enumerate_independent_sets(const IndependenceSystem& sys, int max_ground = 20);

/// Random independent set: shuffled greedy.
std::vector<Element> random_independent_set(const IndependenceSystem& sys, Rng& rng);

}  // namespace onassign
