#pragma once

#include <cstdint>
#include <vector>

#include "totalcolor/construction.hpp"

namespace totalcolor {

/// C_n^k: vertex v gets 2v mod (2k+1), edge {u,v} gets u+v mod (2k+1).
/// Throws std::invalid_argument unless k >= 1 and (2k+1) divides n.
Construction canonical_power_cycle_total(int n, int k);

/// K_m: odd m uses the rotational scheme on m colors, even m the same
/// scheme on K_{m+1} restricted to K_m. Throws for m < 1.
Construction clique_canonical_total(int m);

/// Total coloring of the circulant with the given differences: the
/// canonical scheme when they are {+-1..+-k} with (2k+1) | n, otherwise the
/// exact solver within budget (best coloring found if it runs out).
Construction circulant_total(int n, const std::vector<int>& diffs, std::int64_t budget = 1'000'000);

}  // namespace totalcolor
