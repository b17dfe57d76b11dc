#include "cn/weights.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cn/error.hpp"
#include "cn/lp.hpp"

namespace cn {

std::vector<std::int64_t> BalanceEquation::coefficients(std::size_t arc_count) const {
  std::vector<std::int64_t> row(arc_count, 0);
  for (auto a : left) row[a] += 1;
  for (auto a : right) row[a] -= 1;
  return row;
}

bool BalanceSystem::satisfied_by(std::span<const std::int64_t> weights) const {
  if (weights.size() != arc_count) return false;
  for (const auto& eq : equations) {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    for (auto a : eq.left) lhs += weights[a];
    for (auto a : eq.right) rhs += weights[a];
    if (lhs != rhs) return false;
  }
  return true;
}

std::string BalanceSystem::describe(std::size_t equation) const {
  const auto& eq = equations.at(equation);
  auto side = [&](const std::vector<std::size_t>& arcs) {
    if (arcs.empty()) return std::string("0");
    std::string s;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (i) s += " + ";
      s += arc_labels[arcs[i]];
    }
    return s;
  };
  return side(eq.left) + " = " + side(eq.right) + " at (" + eq.x.str() + ", " +
         eq.y.str() + ")" + (eq.seam ? " [seam]" : "");
}

BalanceSystem balance_constraints(const PLMultimap& f) {
  BalanceSystem sys;
  sys.arc_count = f.arc_count();
  for (std::size_t a = 0; a < f.arc_count(); ++a) {
    sys.arc_labels.push_back(f.arc_label(a));
  }

  std::vector<BalanceEquation> seams;
  for (const auto& bp : branch_points(f)) {
    if (!bp.seam && !(bp.needs_left && bp.needs_right)) continue;
    BalanceEquation eq{bp.x, bp.y, bp.seam, bp.left, bp.right};
    auto row = eq.coefficients(sys.arc_count);
    if (std::all_of(row.begin(), row.end(), [](auto c) { return c == 0; })) {
      continue;
    }
    (bp.seam ? seams : sys.equations).push_back(std::move(eq));
  }
  sys.equations.insert(sys.equations.end(), seams.begin(), seams.end());

  auto xs = f.breakpoints();
  Rational probe = (xs[0] + xs[1]) / Rational(2);
  for (std::size_t a = 0; a < f.arc_count(); ++a) {
    if (f.start(a).x < probe && probe < f.end(a).x) sys.index_probe.push_back(a);
  }
  return sys;
}

namespace {

std::vector<std::vector<Rational>> rational_rows(const BalanceSystem& sys) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& eq : sys.equations) {
    auto ints = eq.coefficients(sys.arc_count);
    rows.emplace_back(ints.begin(), ints.end());
  }
  return rows;
}

// Scales a rational vector to coprime integers.
std::vector<BigInt> primitive_integers(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const auto& r : v) {
    if (r.sign() != 0) l = lcm(l, r.denominator());
  }
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& r : v) {
    out.push_back(r.numerator() * (l / r.denominator()));
    g = gcd(g, out.back());
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("weight does not fit in 64 bits: " + v.str());
  }
  return static_cast<std::int64_t>(v);
}

InfeasibilityWitness find_witness(const BalanceSystem& sys) {
  // Farkas alternative to {A w = 0, w >= 1}: some y with y^T A >= 0 and
  // y^T A != 0. Variables are [p (E) | q (E) | s (n)] with y = p - q and
  // s = y^T A; normalised by sum(s) = 1. The cost favours few equations,
  // breaking ties toward earlier ones.
  auto rows = rational_rows(sys);
  const std::size_t e = rows.size();
  const std::size_t n = sys.arc_count;
  lp::Problem prob;
  prob.c.assign(2 * e + n, Rational(0));
  Rational tilt = Rational(1) / Rational(static_cast<std::int64_t>(e * e + 1));
  for (std::size_t i = 0; i < e; ++i) {
    Rational cost = Rational(1) + tilt * Rational(static_cast<std::int64_t>(i));
    prob.c[i] = cost;
    prob.c[e + i] = cost;
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(2 * e + n, Rational(0));
    for (std::size_t i = 0; i < e; ++i) {
      row[i] = rows[i][j];
      row[e + i] = -rows[i][j];
    }
    row[2 * e + j] = Rational(-1);
    prob.a.push_back(std::move(row));
    prob.b.emplace_back(0);
  }
  std::vector<Rational> norm(2 * e + n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) norm[2 * e + j] = Rational(1);
  prob.a.push_back(std::move(norm));
  prob.b.emplace_back(1);

  auto sol = lp::solve(prob);
  if (sol.status != lp::Status::Optimal) {
    throw std::logic_error("balance system is infeasible but has no Farkas witness");
  }
  std::vector<Rational> y(e);
  for (std::size_t i = 0; i < e; ++i) y[i] = sol.x[i] - sol.x[e + i];
  auto ints = primitive_integers(y);

  InfeasibilityWitness w;
  w.combined.assign(n, BigInt(0));
  for (std::size_t i = 0; i < e; ++i) {
    if (ints[i] == 0) continue;
    w.multipliers.emplace_back(i, ints[i]);
    for (std::size_t j = 0; j < n; ++j) {
      w.combined[j] += ints[i] * BigInt(rows[i][j].numerator());
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (w.combined[j] > 0) w.forced_zero.push_back(j);
  }
  return w;
}

}  // namespace

WeightCertificate solve_positive(const BalanceSystem& sys) {
  WeightCertificate cert;
  const std::size_t n = sys.arc_count;

  // Substitute w = 1 + u with u >= 0: A u = -A 1, minimising sum(u).
  lp::Problem prob;
  prob.a = rational_rows(sys);
  for (const auto& row : prob.a) {
    Rational s(0);
    for (const auto& v : row) s += v;
    prob.b.push_back(-s);
  }
  prob.c.assign(n, Rational(1));
  auto sol = lp::solve(prob);

  if (sol.status == lp::Status::Optimal) {
    std::vector<Rational> w;
    for (const auto& u : sol.x) w.push_back(u + Rational(1));
    cert.status = WeightCertificate::Status::Feasible;
    for (const auto& v : primitive_integers(w)) cert.weights.push_back(to_int64(v));
    for (auto a : sys.index_probe) cert.index += cert.weights[a];
    return cert;
  }
  cert.status = WeightCertificate::Status::Infeasible;
  cert.witness = find_witness(sys);
  return cert;
}

bool verify_witness(const BalanceSystem& sys, const InfeasibilityWitness& w) {
  if (w.multipliers.empty() || w.combined.size() != sys.arc_count) return false;
  std::vector<BigInt> combined(sys.arc_count, BigInt(0));
  for (const auto& [eq, mult] : w.multipliers) {
    if (eq >= sys.equations.size() || mult == 0) return false;
    auto row = sys.equations[eq].coefficients(sys.arc_count);
    for (std::size_t j = 0; j < sys.arc_count; ++j) combined[j] += mult * row[j];
  }
  if (combined != w.combined) return false;
  bool positive = false;
  for (const auto& c : combined) {
    if (c < 0) return false;
    positive = positive || c > 0;
  }
  return positive;
}

std::map<CirclePoint, std::int64_t> point_weights(const PLMultimap& f,
                                                  const Rational& x) {
  std::map<CirclePoint, std::int64_t> from_left;
  std::map<CirclePoint, std::int64_t> from_right;
  for (std::size_t a = 0; a < f.arc_count(); ++a) {
    const auto& s = f.start(a);
    const auto& e = f.end(a);
    if (s.x < x && x <= e.x) from_left[f.y_at(a, x)] += f.weight(a);
    if (s.x <= x && x < e.x) from_right[f.y_at(a, x)] += f.weight(a);
  }
  std::map<CirclePoint, std::int64_t> out;
  for (const auto& y : values_at(f, x)) {
    auto it = from_left.find(y);
    out[y] = it != from_left.end() ? it->second : from_right[y];
  }
  return out;
}

std::vector<Rational> sample_points(const PLMultimap& f, std::size_t count) {
  auto xs = f.breakpoints();
  const std::size_t gaps = xs.size() - 1;
  const std::size_t per = std::max<std::size_t>(1, (count + gaps - 1) / gaps);
  std::vector<Rational> out;
  for (std::size_t g = 0; g < gaps; ++g) {
    for (std::size_t j = 1; j <= per; ++j) {
      out.push_back(xs[g] + (xs[g + 1] - xs[g]) *
                                Rational(static_cast<std::int64_t>(j)) /
                                Rational(static_cast<std::int64_t>(per + 1)));
    }
  }
  return out;
}

std::int64_t weighted_index(const PLMultimap& f) {
  std::optional<std::int64_t> index;
  Rational first_x;
  for (const auto& x : sample_points(f, 10)) {
    std::int64_t total = 0;
    for (const auto& [y, w] : point_weights(f, x)) total += w;
    if (!index) {
      index = total;
      first_x = x;
    } else if (*index != total) {
      throw PreconditionError(
          "weights are not balanced: fiber weight " + std::to_string(*index) +
          " at x = " + first_x.str() + " but " + std::to_string(total) +
          " at x = " + x.str());
    }
  }
  return *index;
}

bool verify_certificate(const PLMultimap& f, const WeightCertificate& cert) {
  if (!cert.feasible() || cert.weights.size() != f.arc_count()) return false;
  for (auto w : cert.weights) {
    if (w < 1) return false;
  }
  if (!balance_constraints(f).satisfied_by(cert.weights)) return false;
  try {
    return weighted_index(f.with_weights(cert.weights)) == cert.index;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace cn
