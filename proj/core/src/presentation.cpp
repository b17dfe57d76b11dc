#include "cn/presentation.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace cn {

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo),
              r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

void GroupPresentation::check() const {
  for (const auto& r : relators) {
    for (const auto& l : r) {
      if (l.generator >= generators.size() || (l.exponent != 1 && l.exponent != -1)) {
        throw std::invalid_argument("relator uses an undeclared generator");
      }
    }
  }
}

std::string GroupPresentation::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    // Collapse runs of one letter into a power.
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int power = static_cast<int>(j - i) * w[i].exponent;
    if (!out.empty()) out += " ";
    out += generators.at(w[i].generator);
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

std::string GroupPresentation::str() const {
  std::string out = "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += generators[i];
  }
  out += generators.empty() ? "|" : " |";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    out += i ? ", " : " ";
    out += word_str(relators[i]);
  }
  return out + " >";
}

Word two_face_boundary_word(const SimplexFace& face, const std::vector<CellId>& cells) {
  if (face.dim() != 2) throw std::invalid_argument("boundary word needs a 2-face");
  auto letter = [&](int a, int b) {
    CellId c = cell_of(SimplexFace(face.n, {a, b}));
    auto it = std::find(cells.begin(), cells.end(), c);
    if (it == cells.end()) throw std::logic_error("edge cell missing: " + c.name());
    return Letter{static_cast<std::size_t>(it - cells.begin()), 1};
  };
  const auto& v = face.vertices;
  return {letter(v[0], v[1]), letter(v[1], v[2]), letter(v[0], v[2]).inverse()};
}

GroupPresentation pi1_presentation(int n) {
  ChainComplex cx = build_cell_complex(n);
  GroupPresentation p;
  const auto& edges = cx.cells[1];
  for (const auto& e : edges) {
    p.generators.push_back(e.kind == CellKind::NonExtremal ? "alpha" : "beta");
  }
  if (n >= 2) {
    for (const auto& c : cx.cells[2]) {
      p.relators.push_back(free_reduce(two_face_boundary_word(representative(n, c), edges)));
    }
  }
  return p;
}

std::string SimplifyResult::str() const {
  switch (kind) {
    case Kind::Trivial: return "trivial";
    case Kind::Free: return "free of rank " + std::to_string(free_rank);
    case Kind::Inconclusive: return "inconclusive: " + presentation.str();
  }
  return "?";
}

namespace {

// Removes generator g, renumbering the letters above it.
void drop_generator(GroupPresentation& p, std::size_t g) {
  p.generators.erase(p.generators.begin() + static_cast<std::ptrdiff_t>(g));
  for (auto& r : p.relators) {
    for (auto& l : r) {
      if (l.generator > g) --l.generator;
    }
  }
}

Word substitute(const Word& w, std::size_t g, const Word& image) {
  Word out;
  for (const auto& l : w) {
    if (l.generator != g) {
      out.push_back(l);
    } else {
      const Word piece = l.exponent == 1 ? image : inverse(image);
      out.insert(out.end(), piece.begin(), piece.end());
    }
  }
  return out;
}

bool step(GroupPresentation& p) {
  // A relator that is a single letter kills its generator.
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (p.relators[r].size() != 1) continue;
    std::size_t g = p.relators[r].front().generator;
    p.relators.erase(p.relators.begin() + static_cast<std::ptrdiff_t>(r));
    for (auto& rel : p.relators) {
      std::erase_if(rel, [g](const Letter& l) { return l.generator == g; });
    }
    drop_generator(p, g);
    return true;
  }
  // A generator occurring once in a relator w g^e (after rotation) equals
  // w^-1 (e = 1) or w (e = -1); substitute it everywhere else.
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    const Word& rel = p.relators[r];
    for (std::size_t pos = 0; pos < rel.size(); ++pos) {
      std::size_t g = rel[pos].generator;
      auto occurrences = std::count_if(rel.begin(), rel.end(),
                                       [g](const Letter& l) { return l.generator == g; });
      if (occurrences != 1) continue;
      Word rest(rel.begin() + static_cast<std::ptrdiff_t>(pos) + 1, rel.end());
      rest.insert(rest.end(), rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(pos));
      Word image = rel[pos].exponent == 1 ? inverse(rest) : rest;
      p.relators.erase(p.relators.begin() + static_cast<std::ptrdiff_t>(r));
      for (auto& other : p.relators) other = substitute(other, g, image);
      drop_generator(p, g);
      return true;
    }
  }
  return false;
}

}  // namespace

SimplifyResult simplify_presentation(GroupPresentation p) {
  p.check();
  for (;;) {
    for (auto& r : p.relators) r = cyclic_reduce(r);
    std::erase_if(p.relators, [](const Word& w) { return w.empty(); });
    if (!step(p)) break;
  }
  SimplifyResult result;
  result.presentation = p;
  if (p.generators.empty()) {
    result.kind = SimplifyResult::Kind::Trivial;
  } else if (p.relators.empty()) {
    result.kind = SimplifyResult::Kind::Free;
    result.free_rank = p.generators.size();
  } else {
    result.kind = SimplifyResult::Kind::Inconclusive;
  }
  return result;
}

}  // namespace cn
