#pragma once

#include <vector>

#include "tasep_schubert/combinat.hpp"
#include "tasep_schubert/poly.hpp"

namespace ts {

// S^n_lambda(z; x; y) by the first-part recursion. The z shift z_i -> z_{i+shift}
// is taken mod n when wrap is set.
Polynomial z_schubert(const Partition& lambda, int n, bool y_zero = false);
Polynomial z_schubert(const Partition& lambda, int n, int shift, bool wrap, bool y_zero = false);
// Same recursion without the Val(n) check; used for the neighbouring shapes in
// the specialization, lowering and subset-sum identities.
Polynomial z_schubert_unchecked(const Partition& lambda, int n, bool y_zero = false);

// z variables z_i -> z_{i+a} without wrapping.
Polynomial shift_z_open(const Polynomial& p, int a);

// LC_z(S^n_lambda) = S_{c^{-1}(g_n(lambda))}.
bool lc_equals_schubert(const Partition& lambda, int n, bool y_zero = false);
// At y = 0, LC_z(S^n_lambda) is the flagged Schur function with bounds n - lambda_i.
bool lc_equals_flagged_schur(const Partition& lambda, int n);

// Specialization z_1 := x_a.
bool check_specialization(const Partition& lambda, int n, int a, bool y_zero = false);
// z-block divided difference at the first position.
bool check_first_part_lowering(const Partition& lambda, int n, bool y_zero = false);
// z-block divided difference at position mul(lambda).
bool check_repeated_part_lowering(const Partition& lambda, int n, bool y_zero = false);
// Subset-sum expansion with k leading parts removed, at a rational point.
Rational subset_sum_expansion(const Partition& lambda, int n, int k, const Point& pt);
bool check_subset_sum(const Partition& lambda, int n, int k, const Point& pt);

// Largest m such that S^n_lambda is symmetric in x_1..x_m, scanning up to n.
int x_symmetry_extent(const Polynomial& p, int n);

}  // namespace ts
