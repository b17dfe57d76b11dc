#pragma once

// C_n(S^1) as a quotient of the simplex Delta_n = <b_0, ..., b_n>, where
// b_k = e_1 + ... + e_k. Faces containing both b_0 and b_n ("extremal") are
// identified with one another, as are all remaining faces, dimension by
// dimension; all vertices collapse to the single point {0}.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cn/circle.hpp"
#include "cn/rational.hpp"

namespace cn {

struct SimplexFace {
  int n = 0;
  std::vector<int> vertices;  // strictly increasing subset of {0..n}

  SimplexFace() = default;
  // Throws std::invalid_argument if the indices are not a strictly
  // increasing nonempty subset of {0..n}.
  SimplexFace(int n, std::vector<int> vertices);

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  // The face with its i-th vertex removed.
  SimplexFace omit(std::size_t i) const;
  // "<b0,b1,b3>"
  std::string str() const;

  friend bool operator==(const SimplexFace&, const SimplexFace&) = default;
};

enum class FaceClass { Extremal, NonExtremal };

FaceClass classify_face(const SimplexFace& face);

// The image of the point sum_m s_m b_{i_m} of `face` in C_n(S^1): the set of
// partial sums { sum_{i_m >= j} s_m mod 1 : j = 1..n }. `params` are
// barycentric coordinates, one per face vertex, nonnegative with sum 1.
Configuration q_image_point(const SimplexFace& face, std::span<const Rational> params);

enum class CellKind { Vertex, NonExtremal, Extremal, Top };

struct CellId {
  int dim = 0;
  CellKind kind = CellKind::Vertex;

  // "v", "sigma_k", "rho_k", or "rho_n" for the top cell.
  std::string name() const;
  friend bool operator==(const CellId&, const CellId&) = default;
};

// The cell of C_n(S^1) a face of Delta_n is identified into.
CellId cell_of(const SimplexFace& face);

// Canonical representative faces:
//   sigma_k = <b_0..b_k>, rho_k = <b_0..b_{k-1}, b_n>, top = <b_0..b_n>,
//   vertex = <b_0>.
SimplexFace representative(int n, const CellId& cell);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct ChainComplex {
  int n = 0;
  // cells[k]: the k-cells in a fixed order (vertex; sigma_k, rho_k; top).
  std::vector<std::vector<CellId>> cells;
  // boundary[k]: matrix of d_k : C_k -> C_{k-1}, rows = (k-1)-cells,
  // columns = k-cells. boundary[0] has zero rows.
  std::vector<IntMatrix> boundary;

  std::size_t cell_index(const CellId& cell) const;
  int euler_characteristic() const;
};

// Boundary of a face as a chain of cells: alternating sum over omitted
// vertices, every subface oriented by increasing vertex order and mapped to
// its cell with sign +1.
std::vector<std::pair<CellId, std::int64_t>> face_boundary(const SimplexFace& face);

ChainComplex build_cell_complex(int n);

// Enumerates every face of Delta_n (2^{n+1} - 1 of them) and checks that its
// boundary, read through the identification, equals the boundary of its
// cell's representative. Returns the number of faces checked; throws
// std::logic_error on the first inconsistency.
std::size_t check_identification(int n);

}  // namespace cn
