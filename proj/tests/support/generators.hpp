#pragma once

// Seeded random inputs for the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "cn/circle.hpp"
#include "cn/conversions.hpp"
#include "cn/plmultimap.hpp"
#include "cn/weights.hpp"

namespace cn::testing {

using Rng = std::mt19937_64;

// A rational k / den with k uniform in [lo, hi].
Rational random_fraction(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t den);

// 1..max_size distinct points on a grid of step 1/den.
Configuration random_configuration(Rng& rng, std::size_t max_size, std::int64_t den);

// Raw sheets: lifted knots (x, y) from x = 0 to x = 1. `monodromy` maps
// sheet i to the sheet it continues into after one turn (identity on an
// interval).
struct RandomSheets {
  int n = 0;
  DomainKind domain = DomainKind::Interval;
  std::vector<std::vector<SheetKnot>> knots;
  std::vector<std::size_t> monodromy;

  NFoldMap nfold() const;
};

// Sheets that never meet: sheet i stays inside the open band
// (i/n, (i+1)/n) up to a common rotation, so every fiber has n points. On a
// circle the rotation carries sheet i to sheet i + shift.
RandomSheets random_band_sheets(Rng& rng, int n, DomainKind domain);

// Sheets with unconstrained coarse-grid values, so they cross and touch.
// On a circle the ends are wired through a random permutation.
RandomSheets random_crossing_sheets(Rng& rng, int n, DomainKind domain);

// Sheet value at x by linear interpolation of the raw knots, reduced mod 1.
CirclePoint sheet_value(const std::vector<SheetKnot>& knots, const Rational& x);
std::vector<CirclePoint> sheet_values(const RandomSheets& s, const Rational& x);

// Random rationals in (0, 1), on a grid fine enough to miss most
// breakpoints, plus 0 and 1.
std::vector<Rational> random_samples(Rng& rng, std::size_t count);

// Balance-like systems: each equation sets a sum of arcs equal to another
// disjoint sum.
BalanceSystem random_system(Rng& rng, std::size_t arcs, std::size_t equations);

}  // namespace cn::testing
