#pragma once

// Finitely presented groups: words, free reduction, the edge-path
// presentation of pi_1(C_n(S^1)) and a small Tietze simplifier.

#include <string>
#include <vector>

#include "cn/cell_complex.hpp"

namespace cn {

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return {generator, -exponent}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
// Free reduction followed by cancelling inverse letters at the two ends.
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  // Throws std::invalid_argument if a relator names an undeclared generator.
  void check() const;
  // "alpha^2 beta^-1"; "1" for the empty word.
  std::string word_str(const Word& w) const;
  // "< alpha, beta | alpha, alpha^2 beta^-1 >"
  std::string str() const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

// Loop word of the boundary of a 2-face <v0,v1,v2>, based at the single
// vertex: g(v0 v1) g(v1 v2) g(v0 v2)^-1, where g(e) is the generator of
// the 1-cell that edge e is identified into. `cells` lists the 1-cells in
// generator order.
Word two_face_boundary_word(const SimplexFace& face, const std::vector<CellId>& cells);

// Edge-path presentation from the 2-skeleton: one generator per 1-cell
// ("alpha" for the non-extremal edge, "beta" for the extremal one), one
// freely reduced relator per 2-cell, read off its representative face.
GroupPresentation pi1_presentation(int n);

struct SimplifyResult {
  enum class Kind { Trivial, Free, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::size_t free_rank = 0;       // for Kind::Free
  GroupPresentation presentation;  // what the moves reduced to

  // "trivial", "free of rank 1", or "inconclusive: < ... >"
  std::string str() const;
};

// Repeats, to a fixed point: cyclic reduction (dropping empty relators),
// deleting a generator that is a relator on its own, and eliminating a
// generator that occurs exactly once in some relator.
SimplifyResult simplify_presentation(GroupPresentation p);

}  // namespace cn
