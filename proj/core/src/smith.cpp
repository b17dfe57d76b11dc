#include "cn/smith.hpp"

#include <optional>
#include <stdexcept>

namespace cn {

namespace mp = boost::multiprecision;

namespace {

// Floor division, so that a - q*b has the sign of b (|remainder| < |b|).
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

SmithForm smith_normal_form(BigMatrix m) {
  SmithForm out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  for (const auto& r : m) {
    if (r.size() != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");
  }

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 &&
              (!best || mp::abs(m[i][j]) < mp::abs(m[best->first][best->second]))) {
            best = {i, j};
          }
        }
      }
      if (!best) return out;
      std::swap(m[t], m[best->first]);
      for (auto& r : m) std::swap(r[t], r[best->second]);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = floor_div(m[i][t], m[t][t]);
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        dirty = dirty || m[i][t] != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = floor_div(m[t][j], m[t][t]);
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        dirty = dirty || m[t][j] != 0;
      }
      if (dirty) continue;

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into row t and go again.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < rows && !offending; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            offending = i;
            break;
          }
        }
      }
      if (offending) {
        for (std::size_t j = t; j < cols; ++j) m[t][j] += m[*offending][j];
        continue;
      }
      break;
    }
    out.diagonal.push_back(mp::abs(m[t][t]));
    ++out.rank;
  }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  BigMatrix big;
  for (const auto& r : m) big.emplace_back(r.begin(), r.end());
  return smith_normal_form(std::move(big));
}

std::string HomologyGroup::str() const {
  std::string out;
  if (rank == 1) out = "Z";
  if (rank > 1) out = "Z^" + std::to_string(rank);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.str();
  }
  return out.empty() ? "0" : out;
}

std::vector<HomologyGroup> homology(const ChainComplex& cx) {
  const std::size_t top = cx.cells.size();
  std::vector<SmithForm> snf(top + 1);
  for (std::size_t k = 1; k < top; ++k) snf[k] = smith_normal_form(cx.boundary[k]);

  std::vector<HomologyGroup> out;
  for (std::size_t k = 0; k < top; ++k) {
    HomologyGroup h;
    std::size_t cycles = cx.cells[k].size() - snf[k].rank;
    h.rank = cycles - snf[k + 1].rank;
    for (const auto& d : snf[k + 1].diagonal) {
      if (d > 1) h.torsion.push_back(d);
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<HomologyGroup> homology(int n) { return homology(build_cell_complex(n)); }

}  // namespace cn
