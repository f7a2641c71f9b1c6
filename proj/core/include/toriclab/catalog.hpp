#pragma once

#include "toriclab/divisors.hpp"

#include <vector>

namespace toriclab {

/// Rays e_1..e_n, e_0 = −Σ e_i; maximal cones omit one ray each.
Fan projective_space(std::size_t n);

/// P_{P^m}(O(a_0) ⊕ ... ⊕ O(a_k)) with 0 ≤ a_0 ≤ ... ≤ a_k. Rays: the lifted
/// base rays e_1..e_m, e_0, then the fiber rays e_1..e_k, e_0.
Fan bundle_over_projective_space(std::size_t m, const std::vector<Integer> &twists);

/// Hirzebruch surface F_a: rays e_1, e_2, −e_1 + a e_2, −e_2.
Fan hirzebruch(const Integer &a);

struct ContraExample {
  Fan fan;
  TDivisor polarization; ///< 2 D_1 + 2 D_e + 3 E
  std::size_t d1 = 0, de = 0, e = 0; ///< ray indices of e_1, e and f
};

/// Blowup of P^m × P^1 along H × {pt}. Rays e_1..e_m, e_0, e, −e and
/// f = e_1 + e.
ContraExample contra(std::size_t m);

/// Losev–Manin fan: P^n blown up along the coordinate subspaces in order of
/// increasing dimension, lexicographically within a level.
Fan losev_manin(std::size_t n);

} // namespace toriclab
