#include "onassign/matroids.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace onassign {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// false if x and y were already connected.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

int Matroid::rank(std::span<const Element> set) const {
  std::vector<Element> picked;
  picked.reserve(set.size());
  for (Element e : set) {
    picked.push_back(e);
    if (!is_independent(picked)) picked.pop_back();
  }
  return static_cast<int>(picked.size());
}

int Matroid::rank() const {
  std::vector<Element> all(static_cast<std::size_t>(ground_size()));
  std::iota(all.begin(), all.end(), 0);
  return rank(all);
}

PartitionMatroid::PartitionMatroid(std::vector<std::vector<Element>> parts) : parts_(std::move(parts)) {
  int total = 0;
  for (const auto& p : parts_) {
    if (p.empty()) throw InvalidInstanceError("empty partition part");
    total += static_cast<int>(p.size());
  }
  part_of_.assign(static_cast<std::size_t>(total), -1);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (Element e : parts_[i]) {
      if (e < 0 || e >= total) throw InvalidInstanceError("partition element out of range: parts must cover 0..n-1");
      if (part_of_[static_cast<std::size_t>(e)] != -1) throw InvalidInstanceError("partition parts not disjoint");
      part_of_[static_cast<std::size_t>(e)] = static_cast<int>(i);
    }
  }
}

int PartitionMatroid::part_of(Element e) const {
  if (e < 0 || e >= ground_size()) throw InvalidInstanceError("element out of range");
  return part_of_[static_cast<std::size_t>(e)];
}

bool PartitionMatroid::is_independent(std::span<const Element> set) const {
  std::set<int> used;
  for (Element e : set) {
    if (!used.insert(part_of(e)).second) return false;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(int n_vertices, std::vector<std::pair<int, int>> endpoints)
    : n_vertices_(n_vertices), endpoints_(std::move(endpoints)) {
  if (n_vertices_ <= 0) throw InvalidInstanceError("graph needs at least one vertex");
  for (auto& [u, v] : endpoints_) {
    if (u < 0 || u >= n_vertices_ || v < 0 || v >= n_vertices_) throw InvalidInstanceError("edge endpoint out of range");
    if (u == v) throw InvalidInstanceError("loop edge in graphic matroid");
    if (u > v) std::swap(u, v);
  }
}

std::pair<int, int> GraphicMatroid::endpoints(Element e) const {
  if (e < 0 || e >= ground_size()) throw InvalidInstanceError("element out of range");
  return endpoints_[static_cast<std::size_t>(e)];
}

bool GraphicMatroid::is_independent(std::span<const Element> set) const {
  UnionFind uf(n_vertices_);
  for (Element e : set) {
    auto [u, v] = endpoints(e);
    if (!uf.unite(u, v)) return false;
  }
  return true;
}

TransversalMatroid::TransversalMatroid(int n_left, int n_right, std::vector<std::vector<int>> adj)
    : n_left_(n_left), n_right_(n_right), adj_(std::move(adj)) {
  if (n_left_ < 0 || n_right_ < 0) throw InvalidInstanceError("negative side size");
  if (static_cast<int>(adj_.size()) != n_left_) throw InvalidInstanceError("adjacency size mismatch");
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    for (int r : nbrs) {
      if (r < 0 || r >= n_right_) throw InvalidInstanceError("right vertex out of range");
    }
  }
}

const std::vector<int>& TransversalMatroid::neighbors(Element v) const {
  if (v < 0 || v >= n_left_) throw InvalidInstanceError("element out of range");
  return adj_[static_cast<std::size_t>(v)];
}

std::optional<std::vector<std::pair<Element, int>>> TransversalMatroid::canonical_matching(
    std::span<const Element> set) const {
  std::vector<Element> lefts(set.begin(), set.end());
  std::sort(lefts.begin(), lefts.end());
  lefts.erase(std::unique(lefts.begin(), lefts.end()), lefts.end());

  std::vector<int> match_left(static_cast<std::size_t>(lefts.size()), -1);   // per X index -> right
  std::vector<int> match_right(static_cast<std::size_t>(n_right_), -1);      // right -> X index
  std::vector<char> visited;

  // Kuhn's augmenting paths; left vertices in ascending id, right neighbors
  // in ascending id, so the matching is a deterministic function of X.
  auto augment = [&](auto&& self, int xi) -> bool {
    for (int r : neighbors(lefts[static_cast<std::size_t>(xi)])) {
      if (visited[static_cast<std::size_t>(r)]) continue;
      visited[static_cast<std::size_t>(r)] = 1;
      if (match_right[static_cast<std::size_t>(r)] == -1 ||
          self(self, match_right[static_cast<std::size_t>(r)])) {
        match_right[static_cast<std::size_t>(r)] = xi;
        match_left[static_cast<std::size_t>(xi)] = r;
        return true;
      }
    }
    return false;
  };

  for (std::size_t xi = 0; xi < lefts.size(); ++xi) {
    visited.assign(static_cast<std::size_t>(n_right_), 0);
    if (!augment(augment, static_cast<int>(xi))) return std::nullopt;
  }

  std::vector<std::pair<Element, int>> out;
  out.reserve(lefts.size());
  for (std::size_t xi = 0; xi < lefts.size(); ++xi) out.emplace_back(lefts[xi], match_left[xi]);
  return out;
}

bool TransversalMatroid::is_independent(std::span<const Element> set) const {
  return canonical_matching(set).has_value();
}

Matchoid::Matchoid(int ground_size, std::vector<Component> components)
    : ground_size_(ground_size), components_(std::move(components)) {
  if (ground_size_ < 0) throw InvalidInstanceError("negative ground size");
  comps_of_.assign(static_cast<std::size_t>(ground_size_), {});
  for (std::size_t i = 0; i < components_.size(); ++i) {
    auto& c = components_[i];
    if (!c.matroid) throw InvalidInstanceError("matchoid component without matroid");
    std::sort(c.active.begin(), c.active.end());
    if (std::adjacent_find(c.active.begin(), c.active.end()) != c.active.end())
      throw InvalidInstanceError("duplicate element in component active set");
    if (static_cast<int>(c.active.size()) != c.matroid->ground_size())
      throw InvalidInstanceError("component active set size differs from its matroid ground size");
    for (Element e : c.active) {
      if (e < 0 || e >= ground_size_) throw InvalidInstanceError("active element out of range");
      comps_of_[static_cast<std::size_t>(e)].push_back(static_cast<int>(i));
    }
  }
}

int Matchoid::local_id(Element e, int comp) const {
  const auto& act = components_[static_cast<std::size_t>(comp)].active;
  auto it = std::lower_bound(act.begin(), act.end(), e);
  if (it == act.end() || *it != e) return -1;
  return static_cast<int>(it - act.begin());
}

Element Matchoid::global_id(int local, int comp) const {
  return components_[static_cast<std::size_t>(comp)].active[static_cast<std::size_t>(local)];
}

std::vector<Element> Matchoid::to_local(std::span<const Element> global_set, int comp) const {
  std::vector<Element> out;
  for (Element e : global_set) {
    int l = local_id(e, comp);
    if (l >= 0) out.push_back(l);
  }
  return out;
}

int Matchoid::multiplicity(Element e) const {
  if (e < 0 || e >= ground_size_) throw InvalidInstanceError("element out of range");
  return static_cast<int>(comps_of_[static_cast<std::size_t>(e)].size());
}

int Matchoid::ell() const {
  int best = 0;
  for (const auto& v : comps_of_) best = std::max(best, static_cast<int>(v.size()));
  return best;
}

bool Matchoid::is_independent(std::span<const Element> set) const {
  for (int i = 0; i < num_components(); ++i) {
    auto local = to_local(set, i);
    if (!components_[static_cast<std::size_t>(i)].matroid->is_independent(local)) return false;
  }
  return true;
}

bool matchoid_is_independent(const Matchoid& mc, std::span<const Element> set) {
  return mc.is_independent(set);
}

Matchoid hypergraph_as_matchoid(const Hypergraph& hg) {
  std::vector<Matchoid::Component> comps;
  for (int v = 0; v < hg.n_nodes(); ++v) {
    const auto& inc = hg.incident(v);
    if (inc.empty()) continue;
    std::vector<Element> local(inc.size());
    std::iota(local.begin(), local.end(), 0);
    comps.push_back({std::make_shared<PartitionMatroid>(std::vector<std::vector<Element>>{local}), inc});
  }
  return Matchoid(hg.ground_size(), std::move(comps));
}

}  // namespace onassign
