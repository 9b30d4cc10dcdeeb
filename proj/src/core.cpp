#include "onassign/core.hpp"

#include <set>

namespace onassign {

Rational rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw InvalidInputError("bad rational literal: " + s);
    r.canonicalize();
    return r;
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw InvalidInputError("bad rational literal: " + s);
    return r;
  }
  // decimal: digits.digits -> integer / 10^frac_len
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+") throw InvalidInputError("bad rational literal: " + s);
  mpz_class num;
  if (num.set_str(digits, 10) != 0) throw InvalidInputError("bad rational literal: " + s);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat_pow(const Rational& r, unsigned long e) {
  Rational base = r;
  Rational acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Hypergraph::Hypergraph(int n_nodes, std::vector<std::vector<int>> edges, int max_edge_size)
    : n_nodes_(n_nodes), k_(max_edge_size), edges_(std::move(edges)) {
  if (n_nodes_ <= 0) throw InvalidInstanceError("hypergraph needs at least one node");
  if (k_ < 1) throw InvalidInstanceError("max edge size must be positive");
  delta_.assign(n_nodes_, {});
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    auto& e = edges_[id];
    if (e.empty()) throw InvalidInstanceError("empty hyperedge");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (static_cast<int>(e.size()) > k_) throw InvalidInstanceError("hyperedge larger than declared max size");
    for (int v : e) {
      if (v < 0 || v >= n_nodes_) throw InvalidInstanceError("hyperedge node out of range");
      delta_[v].push_back(static_cast<Element>(id));
    }
  }
}

const std::vector<int>& Hypergraph::edge(Element e) const {
  if (e < 0 || e >= ground_size()) throw InvalidInstanceError("edge id out of range");
  return edges_[static_cast<std::size_t>(e)];
}

const std::vector<Element>& Hypergraph::incident(int node) const {
  if (node < 0 || node >= n_nodes_) throw InvalidInstanceError("node id out of range");
  return delta_[static_cast<std::size_t>(node)];
}

bool Hypergraph::edges_intersect(Element e, Element f) const {
  const auto& a = edge(e);
  const auto& b = edge(f);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

bool Hypergraph::is_independent(std::span<const Element> edge_ids) const {
  std::set<int> used;
  for (Element id : edge_ids) {
    for (int v : edge(id)) {
      if (!used.insert(v).second) return false;
    }
  }
  return true;
}

bool is_feasible(const IndependenceSystem& system, const Assignment& asg) {
  std::set<Element> seen;
  std::vector<Element> elems;
  for (const auto& [a, e] : asg.map()) {
    if (e < 0 || e >= system.ground_size()) throw InvalidInstanceError("assigned element out of range");
    if (!seen.insert(e).second) return false;  // (I)
    elems.push_back(e);
  }
  return system.is_independent(elems);  // (II)
}

}  // namespace onassign
