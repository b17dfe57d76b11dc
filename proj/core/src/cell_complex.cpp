#include "cn/cell_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace cn {

SimplexFace::SimplexFace(int n_, std::vector<int> vertices_)
    : n(n_), vertices(std::move(vertices_)) {
  if (n < 1 || vertices.empty()) {
    throw std::invalid_argument("face needs n >= 1 and at least one vertex");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] > n ||
        (i > 0 && vertices[i - 1] >= vertices[i])) {
      throw std::invalid_argument("face vertices must increase within {0..n}");
    }
  }
}

SimplexFace SimplexFace::omit(std::size_t i) const {
  auto vs = vertices;
  vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i));
  return SimplexFace(n, std::move(vs));
}

std::string SimplexFace::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ",";
    out += "b" + std::to_string(vertices[i]);
  }
  return out + ">";
}

FaceClass classify_face(const SimplexFace& face) {
  bool has_first = face.vertices.front() == 0;
  bool has_last = face.vertices.back() == face.n;
  return has_first && has_last ? FaceClass::Extremal : FaceClass::NonExtremal;
}

Configuration q_image_point(const SimplexFace& face, std::span<const Rational> params) {
  if (params.size() != face.vertices.size()) {
    throw std::invalid_argument("q_image_point: one parameter per face vertex");
  }
  Rational total(0);
  for (const auto& s : params) {
    if (s.sign() < 0) throw std::invalid_argument("q_image_point: negative parameter");
    total += s;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("q_image_point: parameters sum to " + total.str() +
                                ", not 1");
  }
  // Coordinate j of sum_m s_m b_{i_m} is the sum of s_m over i_m >= j.
  std::vector<CirclePoint> coords;
  for (int j = 1; j <= face.n; ++j) {
    Rational c(0);
    for (std::size_t m = 0; m < params.size(); ++m) {
      if (face.vertices[m] >= j) c += params[m];
    }
    coords.emplace_back(c);
  }
  return Configuration(std::move(coords));
}

std::string CellId::name() const {
  switch (kind) {
    case CellKind::Vertex: return "v";
    case CellKind::NonExtremal: return "sigma_" + std::to_string(dim);
    case CellKind::Extremal:
    case CellKind::Top: return "rho_" + std::to_string(dim);
  }
  return "?";
}

CellId cell_of(const SimplexFace& face) {
  int d = face.dim();
  if (d == 0) return {0, CellKind::Vertex};
  if (d == face.n) return {d, CellKind::Top};
  return {d, classify_face(face) == FaceClass::Extremal ? CellKind::Extremal
                                                        : CellKind::NonExtremal};
}

SimplexFace representative(int n, const CellId& cell) {
  std::vector<int> vs;
  switch (cell.kind) {
    case CellKind::Vertex:
      vs = {0};
      break;
    case CellKind::NonExtremal:
      for (int i = 0; i <= cell.dim; ++i) vs.push_back(i);
      break;
    case CellKind::Extremal:
      for (int i = 0; i < cell.dim; ++i) vs.push_back(i);
      vs.push_back(n);
      break;
    case CellKind::Top:
      for (int i = 0; i <= n; ++i) vs.push_back(i);
      break;
  }
  return SimplexFace(n, std::move(vs));
}

std::size_t ChainComplex::cell_index(const CellId& cell) const {
  const auto& row = cells.at(static_cast<std::size_t>(cell.dim));
  auto it = std::find(row.begin(), row.end(), cell);
  if (it == row.end()) throw std::out_of_range("no such cell: " + cell.name());
  return static_cast<std::size_t>(it - row.begin());
}

int ChainComplex::euler_characteristic() const {
  int chi = 0;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<int>(cells[k].size());
  }
  return chi;
}

std::vector<std::pair<CellId, std::int64_t>> face_boundary(const SimplexFace& face) {
  std::vector<std::pair<CellId, std::int64_t>> chain;
  if (face.dim() == 0) return chain;
  for (std::size_t i = 0; i < face.vertices.size(); ++i) {
    CellId c = cell_of(face.omit(i));
    std::int64_t sign = i % 2 == 0 ? 1 : -1;
    auto it = std::find_if(chain.begin(), chain.end(),
                           [&](const auto& e) { return e.first == c; });
    if (it == chain.end()) {
      chain.emplace_back(c, sign);
    } else {
      it->second += sign;
    }
  }
  std::erase_if(chain, [](const auto& e) { return e.second == 0; });
  return chain;
}

ChainComplex build_cell_complex(int n) {
  if (n < 1) throw std::invalid_argument("build_cell_complex: n must be >= 1");
  ChainComplex cx;
  cx.n = n;
  cx.cells.resize(static_cast<std::size_t>(n) + 1);
  cx.cells[0] = {{0, CellKind::Vertex}};
  for (int k = 1; k < n; ++k) {
    cx.cells[static_cast<std::size_t>(k)] = {{k, CellKind::NonExtremal},
                                             {k, CellKind::Extremal}};
  }
  cx.cells[static_cast<std::size_t>(n)] = {{n, CellKind::Top}};

  cx.boundary.resize(static_cast<std::size_t>(n) + 1);
  cx.boundary[0] = IntMatrix(0);
  for (int k = 1; k <= n; ++k) {
    const auto& cols = cx.cells[static_cast<std::size_t>(k)];
    const auto& rows = cx.cells[static_cast<std::size_t>(k) - 1];
    IntMatrix m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (const auto& [cell, coeff] : face_boundary(representative(n, cols[c]))) {
        m[cx.cell_index(cell)][c] += coeff;
      }
    }
    cx.boundary[static_cast<std::size_t>(k)] = std::move(m);
  }
  return cx;
}

std::size_t check_identification(int n) {
  if (n < 1 || n > 24) throw std::invalid_argument("check_identification: n out of range");
  std::size_t checked = 0;
  const unsigned long full = (1UL << (n + 1));
  for (unsigned long mask = 1; mask < full; ++mask) {
    std::vector<int> vs;
    for (int i = 0; i <= n; ++i) {
      if (mask & (1UL << i)) vs.push_back(i);
    }
    SimplexFace face(n, std::move(vs));
    auto expected = face_boundary(representative(n, cell_of(face)));
    auto actual = face_boundary(face);
    auto sorted = [](auto chain) {
      std::sort(chain.begin(), chain.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.first.dim, static_cast<int>(a.first.kind)) <
               std::make_pair(b.first.dim, static_cast<int>(b.first.kind));
      });
      return chain;
    };
    if (sorted(expected) != sorted(actual)) {
      throw std::logic_error("face " + face.str() + " has a boundary different from " +
                             cell_of(face).name());
    }
    ++checked;
  }
  return checked;
}

}  // namespace cn
