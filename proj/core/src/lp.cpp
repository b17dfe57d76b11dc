#include "cn/lp.hpp"

#include <optional>
#include <stdexcept>

namespace cn::lp {

namespace {

class Tableau {
 public:
  // rows: constraint rows followed by one objective row; the last column is
  // the right-hand side.
  std::vector<std::vector<Rational>> t;
  std::vector<std::size_t> basis;

  std::size_t rows() const { return basis.size(); }
  std::size_t cols() const { return t.front().size() - 1; }
  Rational& rhs(std::size_t r) { return t[r].back(); }
  std::vector<Rational>& objective() { return t.back(); }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = t[r][c];
    for (auto& v : t[r]) v /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c].sign() == 0) continue;
      Rational factor = t[i][c];
      for (std::size_t j = 0; j < t[i].size(); ++j) {
        if (t[r][j].sign() != 0) t[i][j] -= factor * t[r][j];
      }
    }
    basis[r] = c;
  }

  // Objective row holds reduced costs (minimization): a negative entry can
  // still improve. Columns >= limit never enter.
  Status run(std::size_t limit) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < limit; ++j) {
        if (objective()[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return Status::Optimal;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (t[i][*enter].sign() <= 0) continue;
        Rational ratio = rhs(i) / t[i][*enter];
        if (!leave || ratio < best ||
            (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return Status::Unbounded;
      pivot(*leave, *enter);
    }
  }

  void set_objective(const std::vector<Rational>& cost) {
    auto& obj = objective();
    std::fill(obj.begin(), obj.end(), Rational(0));
    for (std::size_t j = 0; j < cost.size(); ++j) obj[j] = cost[j];
    for (std::size_t i = 0; i < rows(); ++i) {
      const Rational& cb = basis[i] < cost.size() ? cost[basis[i]] : Rational(0);
      if (cb.sign() == 0) continue;
      for (std::size_t j = 0; j < obj.size(); ++j) obj[j] -= cb * t[i][j];
    }
  }
};

}  // namespace

Solution solve(const Problem& problem) {
  const std::size_t m = problem.a.size();
  const std::size_t n = problem.c.size();
  if (problem.b.size() != m) throw std::invalid_argument("lp: |b| != rows(A)");
  for (const auto& row : problem.a) {
    if (row.size() != n) throw std::invalid_argument("lp: ragged A");
  }

  Solution sol;
  if (m == 0) {
    for (const auto& cj : problem.c) {
      if (cj.sign() < 0) {
        sol.status = Status::Unbounded;
        return sol;
      }
    }
    sol.status = Status::Optimal;
    sol.x.assign(n, Rational(0));
    return sol;
  }

  // Phase 1: artificial column n + i for row i.
  Tableau tab;
  tab.t.assign(m + 1, std::vector<Rational>(n + m + 1, Rational(0)));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = problem.b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) {
      tab.t[i][j] = flip ? -problem.a[i][j] : problem.a[i][j];
    }
    tab.t[i][n + i] = Rational(1);
    tab.rhs(i) = flip ? -problem.b[i] : problem.b[i];
    tab.basis[i] = n + i;
  }
  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = Rational(1);
  tab.set_objective(phase1);
  tab.run(n + m);
  if (tab.objective().back().sign() != 0) {
    sol.status = Status::Infeasible;
    return sol;
  }

  // Drive zero-valued artificials out of the basis; rows where that is
  // impossible are redundant and dropped.
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basis[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j) {
      if (tab.t[i][j].sign() != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      tab.pivot(i, *col);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  tab.set_objective(problem.c);
  if (tab.run(n) == Status::Unbounded) {
    sol.status = Status::Unbounded;
    return sol;
  }
  sol.status = Status::Optimal;
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.rhs(i);
  }
  Rational value(0);
  for (std::size_t j = 0; j < n; ++j) value += problem.c[j] * sol.x[j];
  sol.objective = value;
  return sol;
}

}  // namespace cn::lp
