#pragma once

// Smith normal form over the integers and cellular homology.

#include <string>
#include <vector>

#include "cn/cell_complex.hpp"
#include "cn/rational.hpp"

namespace cn {

using BigMatrix = std::vector<std::vector<BigInt>>;

struct SmithForm {
  // Nonzero invariant factors d_1 | d_2 | ... (all positive).
  std::vector<BigInt> diagonal;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(BigMatrix m);
SmithForm smith_normal_form(const IntMatrix& m);

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // each >= 2, each dividing the next

  // "0", "Z", "Z^2 + Z/2 + Z/4"
  std::string str() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

std::vector<HomologyGroup> homology(const ChainComplex& cx);

// H_0 .. H_n of C_n(S^1).
std::vector<HomologyGroup> homology(int n);

}  // namespace cn
