#pragma once

#include <vector>

#include "onassign/errors.hpp"
#include "onassign/rational.hpp"

namespace onassign {

/// Maximization LP in the form used by the relaxations here: rows are either
/// inequalities (<=) slacked automatically or equalities with an optional
/// "basic hint" column (a variable appearing in that row alone with
/// coefficient 1, e.g. the bottom mass), which removes the need for a
/// phase-1 start. All right-hand sides must be nonnegative.
///
/// `lex_rank` implements the symbolic lexicographic perturbation: variable j
/// with lex_rank[j] = r > 0 gets objective bonus eps^r for an infinitesimal
/// eps. Ranks must be distinct. With exact arithmetic the solver then finds
/// the unique optimum of the perturbed program, independent of pivot rule.
/// The double instantiation ignores ranks (Monte Carlo paths do not rely on
/// uniqueness).
template <typename T>
struct LpProblem {
  struct Row {
    std::vector<std::pair<int, T>> coeffs;
    T rhs;
    char sense = 'L';     // 'L' (<=) or 'E' (=)
    int basic_hint = -1;  // variable index, only for 'E' rows
  };

  int num_vars = 0;
  std::vector<T> objective;  // size num_vars
  std::vector<int> lex_rank;  // optional; size num_vars, 0 = unranked
  std::vector<Row> rows;
};

template <typename T>
struct LpResult {
  std::vector<T> x;
  T objective;
  long pivots = 0;
};

enum class PivotRule { bland, dantzig };

template <typename T>
class SimplexSolver {
 public:
  explicit SimplexSolver(const LpProblem<T>& lp, PivotRule rule = PivotRule::dantzig)
      : lp_(lp), rule_(rule) {}

  LpResult<T> solve();

 private:
  static constexpr long kMaxPivots = 200000;

  bool is_positive(const T& v) const { return v > scalar_traits<T>::tol(); }

  void build();
  void pivot(int row, int col);
  int choose_entering(const std::vector<std::vector<T>>& obj, bool bland) const;
  int choose_leaving(int col) const;
  void run_phase(std::vector<std::vector<T>>& obj);

  const LpProblem<T>& lp_;
  PivotRule rule_;

  int n_rows_ = 0;
  int n_cols_ = 0;  // structural + slack + artificial
  int rhs_col_ = 0;
  int first_artificial_ = 0;  // columns >= this are artificial
  std::vector<T> tab_;        // row-major (n_rows_) x (n_cols_ + 1)
  std::vector<int> basis_;
  std::vector<std::vector<T>> phase2_obj_;  // lex levels x (n_cols_ + 1)
  long pivots_ = 0;

  T& at(int r, int c) { return tab_[static_cast<std::size_t>(r) * (n_cols_ + 1) + c]; }
  const T& at(int r, int c) const { return tab_[static_cast<std::size_t>(r) * (n_cols_ + 1) + c]; }
};

template <typename T>
void SimplexSolver<T>::build() {
  const int n = lp_.num_vars;
  n_rows_ = static_cast<int>(lp_.rows.size());
  int slacks = 0, artificials = 0;
  for (const auto& row : lp_.rows) {
    if (row.rhs < scalar_traits<T>::zero()) throw NumericError("negative rhs in LP row");
    if (row.sense == 'L') {
      ++slacks;
    } else if (row.sense == 'E') {
      if (row.basic_hint < 0) ++artificials;
    } else {
      throw InvalidParameterError("unknown row sense");
    }
  }
  first_artificial_ = n + slacks;
  n_cols_ = n + slacks + artificials;
  rhs_col_ = n_cols_;
  tab_.assign(static_cast<std::size_t>(n_rows_) * (n_cols_ + 1), scalar_traits<T>::zero());
  basis_.assign(static_cast<std::size_t>(n_rows_), -1);

  int next_slack = n;
  int next_art = first_artificial_;
  for (int r = 0; r < n_rows_; ++r) {
    const auto& row = lp_.rows[static_cast<std::size_t>(r)];
    for (const auto& [j, coef] : row.coeffs) at(r, j) += coef;
    at(r, rhs_col_) = row.rhs;
    if (row.sense == 'L') {
      at(r, next_slack) = T(1);
      basis_[static_cast<std::size_t>(r)] = next_slack++;
    } else if (row.basic_hint >= 0) {
      if (!(at(r, row.basic_hint) == T(1)))
        throw InvalidParameterError("basic hint must have unit coefficient in its row");
      basis_[static_cast<std::size_t>(r)] = row.basic_hint;
    } else {
      at(r, next_art) = T(1);
      basis_[static_cast<std::size_t>(r)] = next_art++;
    }
  }
}

template <typename T>
void SimplexSolver<T>::pivot(int row, int col) {
  T p = at(row, col);
  for (int c = 0; c <= n_cols_; ++c) at(row, c) /= p;
  at(row, col) = T(1);
  for (int r = 0; r < n_rows_; ++r) {
    if (r == row) continue;
    T f = at(r, col);
    if (f == scalar_traits<T>::zero()) continue;
    for (int c = 0; c <= n_cols_; ++c) at(r, c) -= f * at(row, c);
    at(r, col) = scalar_traits<T>::zero();
  }
  for (auto& obj : phase2_obj_) {
    T f = obj[static_cast<std::size_t>(col)];
    if (f == scalar_traits<T>::zero()) continue;
    for (int c = 0; c <= n_cols_; ++c) obj[static_cast<std::size_t>(c)] -= f * at(row, c);
    obj[static_cast<std::size_t>(col)] = scalar_traits<T>::zero();
  }
  basis_[static_cast<std::size_t>(row)] = col;
  ++pivots_;
}

template <typename T>
int SimplexSolver<T>::choose_entering(const std::vector<std::vector<T>>& obj, bool bland) const {
  int best = -1;
  for (int c = 0; c < n_cols_; ++c) {
    if (c >= first_artificial_) continue;  // artificials never (re-)enter
    // lexicographic sign of the reduced-cost vector at column c
    int sign = 0;
    for (const auto& level : obj) {
      const T& v = level[static_cast<std::size_t>(c)];
      if (is_positive(v)) {
        sign = 1;
        break;
      }
      if (v < -scalar_traits<T>::tol()) {
        sign = -1;
        break;
      }
    }
    if (sign <= 0) continue;
    if (bland) return c;
    if (best == -1) {
      best = c;
      continue;
    }
    // Dantzig flavor: lexicographically larger reduced-cost vector wins.
    for (const auto& level : obj) {
      const T& a = level[static_cast<std::size_t>(c)];
      const T& b = level[static_cast<std::size_t>(best)];
      if (a > b) {
        best = c;
        break;
      }
      if (a < b) break;
    }
  }
  return best;
}

template <typename T>
int SimplexSolver<T>::choose_leaving(int col) const {
  int best = -1;
  T best_ratio = scalar_traits<T>::zero();
  for (int r = 0; r < n_rows_; ++r) {
    const T& a = at(r, col);
    if (!is_positive(a)) continue;
    T ratio = at(r, rhs_col_) / a;
    if (best == -1 || ratio < best_ratio ||
        (ratio == best_ratio && basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(best)])) {
      best = r;
      best_ratio = ratio;
    }
  }
  return best;
}

template <typename T>
void SimplexSolver<T>::run_phase(std::vector<std::vector<T>>& obj) {
  bool bland = rule_ == PivotRule::bland;
  long stall = 0;
  while (true) {
    if (pivots_ > kMaxPivots) throw NumericError("simplex pivot limit exceeded");
    int col = choose_entering(obj, bland);
    if (col < 0) return;
    int row = choose_leaving(col);
    if (row < 0) throw NumericError("LP is unbounded");
    // Dantzig can cycle on degenerate vertices; drop to Bland after a run of
    // non-improving pivots.
    if (!bland) {
      if (is_positive(at(row, rhs_col_))) {
        stall = 0;
      } else if (++stall > 3 * (n_rows_ + n_cols_)) {
        bland = true;
      }
    }
    if (&obj != &phase2_obj_) {
      // phase-1 objective is not registered in phase2_obj_, update by hand
      T p = at(row, col);
      T f = obj[0][static_cast<std::size_t>(col)];
      if (!(f == scalar_traits<T>::zero())) {
        for (int c = 0; c <= n_cols_; ++c) obj[0][static_cast<std::size_t>(c)] -= (f / p) * at(row, c);
        obj[0][static_cast<std::size_t>(col)] = scalar_traits<T>::zero();
      }
    }
    pivot(row, col);
  }
}

template <typename T>
LpResult<T> SimplexSolver<T>::solve() {
  build();

  // Phase 1 only when artificial columns exist.
  if (n_cols_ > first_artificial_) {
    std::vector<std::vector<T>> phase1(1, std::vector<T>(static_cast<std::size_t>(n_cols_ + 1),
                                                        scalar_traits<T>::zero()));
    // maximize -(sum of artificials): reduced costs start as the sum of rows
    // with a basic artificial.
    for (int r = 0; r < n_rows_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] >= first_artificial_) {
        for (int c = 0; c <= n_cols_; ++c) {
          if (c < first_artificial_ || c == rhs_col_) phase1[0][static_cast<std::size_t>(c)] += at(r, c);
        }
      }
    }
    run_phase(phase1);
    if (is_positive(phase1[0][static_cast<std::size_t>(rhs_col_)]))
      throw NumericError("LP infeasible (phase 1 residual)");
    // Drive surviving basic artificials out where possible.
    for (int r = 0; r < n_rows_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] < first_artificial_) continue;
      for (int c = 0; c < first_artificial_; ++c) {
        if (at(r, c) != scalar_traits<T>::zero()) {
          pivot(r, c);
          break;
        }
      }
      // A row that cannot pivot is redundant; its artificial stays basic at 0.
    }
  }

  // Phase 2 objective levels: primary then the eps^rank bonuses.
  int levels = 1;
  if (scalar_traits<T>::exact && !lp_.lex_rank.empty()) {
    for (int j = 0; j < lp_.num_vars; ++j) levels = std::max(levels, lp_.lex_rank[static_cast<std::size_t>(j)] + 1);
  }
  phase2_obj_.assign(static_cast<std::size_t>(levels),
                     std::vector<T>(static_cast<std::size_t>(n_cols_ + 1), scalar_traits<T>::zero()));
  for (int j = 0; j < lp_.num_vars; ++j) {
    phase2_obj_[0][static_cast<std::size_t>(j)] = lp_.objective[static_cast<std::size_t>(j)];
    if (levels > 1 && lp_.lex_rank[static_cast<std::size_t>(j)] > 0)
      phase2_obj_[static_cast<std::size_t>(lp_.lex_rank[static_cast<std::size_t>(j)])][static_cast<std::size_t>(j)] =
          T(1);
  }
  // Price out the current basis.
  for (int r = 0; r < n_rows_; ++r) {
    int b = basis_[static_cast<std::size_t>(r)];
    for (auto& obj : phase2_obj_) {
      T f = obj[static_cast<std::size_t>(b)];
      if (f == scalar_traits<T>::zero()) continue;
      for (int c = 0; c <= n_cols_; ++c) obj[static_cast<std::size_t>(c)] -= f * at(r, c);
      obj[static_cast<std::size_t>(b)] = scalar_traits<T>::zero();
    }
  }
  run_phase(phase2_obj_);

  LpResult<T> result;
  result.x.assign(static_cast<std::size_t>(lp_.num_vars), scalar_traits<T>::zero());
  for (int r = 0; r < n_rows_; ++r) {
    int b = basis_[static_cast<std::size_t>(r)];
    if (b < lp_.num_vars) result.x[static_cast<std::size_t>(b)] = at(r, rhs_col_);
  }
  T value = scalar_traits<T>::zero();
  for (int j = 0; j < lp_.num_vars; ++j) value += lp_.objective[static_cast<std::size_t>(j)] * result.x[static_cast<std::size_t>(j)];
  result.objective = value;
  result.pivots = pivots_;
  return result;
}

template <typename T>
LpResult<T> solve_lp(const LpProblem<T>& lp, PivotRule rule = PivotRule::dantzig) {
  return SimplexSolver<T>(lp, rule).solve();
}

}  // namespace onassign
