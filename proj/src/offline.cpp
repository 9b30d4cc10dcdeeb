#include "onassign/offline.hpp"

#include <algorithm>

namespace onassign {

namespace {

using Atoms = std::vector<std::pair<Rational, std::vector<Element>>>;

std::vector<Element> support_of(const std::map<Element, Rational>& z) {
  std::vector<Element> s;
  for (const auto& [e, v] : z) {
    if (v > 0) s.push_back(e);
  }
  return s;
}

Rational value_of(const std::map<Element, Rational>& z, const std::vector<Element>& S) {
  Rational total(0);
  for (Element e : S) {
    auto it = z.find(e);
    if (it != z.end()) total += it->second;
  }
  return total;
}

/// Basic feasible solution of sum lambda_I chi^I = residual, sum lambda = mass
/// over all independent subsets of the residual support.
Atoms lp_decompose(const Matroid& matroid, const std::map<Element, Rational>& residual, const Rational& mass) {
  std::vector<Element> supp = support_of(residual);
  std::vector<std::vector<Element>> columns;
  for_each_subset(std::span<const Element>(supp), [&](const std::vector<Element>& S) {
    if (matroid.is_independent(S)) columns.push_back(S);
  });

  LpProblem<Rational> lp;
  lp.num_vars = static_cast<int>(columns.size());
  lp.objective.assign(columns.size(), Rational(0));
  lp.lex_rank.assign(columns.size(), 0);
  for (std::size_t si = 0; si < supp.size(); ++si) {
    LpProblem<Rational>::Row row;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (std::binary_search(columns[j].begin(), columns[j].end(), supp[si]))
        row.coeffs.push_back({static_cast<int>(j), Rational(1)});
    }
    row.rhs = residual.at(supp[si]);
    row.sense = 'E';
    lp.rows.push_back(std::move(row));
  }
  LpProblem<Rational>::Row mass_row;
  for (std::size_t j = 0; j < columns.size(); ++j) mass_row.coeffs.push_back({static_cast<int>(j), Rational(1)});
  mass_row.rhs = mass;
  mass_row.sense = 'E';
  lp.rows.push_back(std::move(mass_row));

  auto res = solve_lp(lp, PivotRule::bland);
  Atoms atoms;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (res.x[j] > 0) atoms.push_back({res.x[j], columns[j]});
  }
  return atoms;
}

}  // namespace

ConvexDecomposition decompose_polytope_point(const Matroid& matroid, const std::map<Element, Rational>& z,
                                             int subset_limit) {
  for (const auto& [e, v] : z) {
    if (e < 0 || e >= matroid.ground_size()) throw InvalidInputError("decomposition point element out of range");
    if (v < 0) throw InvalidInputError("decomposition point has a negative coordinate");
  }
  std::vector<Element> supp = support_of(z);
  if (static_cast<int>(supp.size()) > subset_limit)
    throw ResourceLimitError("support too large for explicit decomposition");
  bool in_polytope = true;
  for_each_subset(std::span<const Element>(supp), [&](const std::vector<Element>& S) {
    if (S.empty()) return;
    if (value_of(z, S) > matroid.rank(S)) in_polytope = false;
  });
  if (!in_polytope) throw InvalidInputError("point outside the independence polytope");

  Atoms atoms;
  std::map<Element, Rational> residual = z;
  Rational mass(1);
  bool stalled = false;
  int max_iters = 2 * static_cast<int>(supp.size()) + 4;
  for (int iter = 0; mass > 0 && iter < max_iters; ++iter) {
    std::vector<Element> live = support_of(residual);
    if (live.empty()) {
      atoms.push_back({mass, {}});
      mass = 0;
      break;
    }
    // maximal independent subset of the support, greedy by residual value
    std::vector<Element> order = live;
    std::sort(order.begin(), order.end(), [&](Element a, Element b) {
      const Rational& ra = residual.at(a);
      const Rational& rb = residual.at(b);
      if (ra != rb) return ra > rb;
      return a < b;
    });
    std::vector<Element> I;
    for (Element e : order) {
      I.push_back(e);
      std::vector<Element> sorted = I;
      std::sort(sorted.begin(), sorted.end());
      if (!matroid.is_independent(sorted)) I.pop_back();
    }
    std::sort(I.begin(), I.end());

    Rational lambda = mass;
    for (Element e : I) lambda = std::min(lambda, residual.at(e));
    for_each_subset(std::span<const Element>(live), [&](const std::vector<Element>& S) {
      if (S.empty()) return;
      int rS = matroid.rank(S);
      int iS = 0;
      for (Element e : S) {
        if (std::binary_search(I.begin(), I.end(), e)) ++iS;
      }
      if (rS > iS) {
        Rational cap = (mass * rS - value_of(residual, S)) / (rS - iS);
        lambda = std::min(lambda, cap);
      }
    });
    if (lambda <= 0) {
      stalled = true;
      break;
    }
    atoms.push_back({lambda, I});
    for (Element e : I) residual[e] -= lambda;
    mass -= lambda;
  }
  if (mass > 0 && !stalled) stalled = true;  // ran out of iterations

  if (stalled) {
    auto rest = lp_decompose(matroid, residual, mass);
    atoms.insert(atoms.end(), rest.begin(), rest.end());
  }
  if (static_cast<int>(atoms.size()) > matroid.ground_size() + 1) {
    atoms = lp_decompose(matroid, z, Rational(1));
  }

  // Exactness is enforced here, not by a structural argument above.
  Rational total(0);
  std::map<Element, Rational> recon;
  for (const auto& [lambda, I] : atoms) {
    if (lambda <= 0) throw InternalConsistencyError("nonpositive decomposition weight");
    if (!matroid.is_independent(I)) throw InternalConsistencyError("dependent decomposition atom");
    total += lambda;
    for (Element e : I) recon[e] += lambda;
  }
  if (total != 1) throw InternalConsistencyError("decomposition weights do not sum to 1");
  for (const auto& [e, v] : z) {
    Rational r = recon.count(e) ? recon.at(e) : Rational(0);
    if (r != v) throw InternalConsistencyError("decomposition does not reconstruct the point");
    recon.erase(e);
  }
  for (const auto& [e, v] : recon) {
    if (v != 0) throw InternalConsistencyError("decomposition puts mass outside the point support");
  }
  if (static_cast<int>(atoms.size()) > matroid.ground_size() + 1)
    throw InternalConsistencyError("decomposition atom bound exceeded");
  return ConvexDecomposition{std::move(atoms)};
}

}  // namespace onassign
