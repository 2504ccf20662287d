#pragma once

#include <cstdint>

#include "tasep_schubert/poly.hpp"
#include "tasep_schubert/report.hpp"

namespace ts {

// LC_z(S^n_lambda) = S_{c^{-1}(g_n(lambda))} for every lambda in Val(n); at y = 0 also the flagged Schur form.
Report verify_lc_z(int n, bool y_zero, int jobs = 1);
// rc-graph sum against divided differences on S_n; sample = 0 means every permutation.
Report verify_rc_vs_dd(int n, int sample = 0, uint64_t seed = 1, int jobs = 1);
// Specialization, both lowering identities (symbolic, both y settings) and the subset-sum
// expansion at `points` random rational points per instance, for lambda in Val(m), 3 <= m <= n.
Report verify_appendix(int n, int points = 20, uint64_t seed = 1, int jobs = 1);
// e(m) recurrence = closed form for m <= n, = exhaustive count for m <= min(n, 9);
// |St(m,k)| = |ParSeq(m,k)| = T(m,k) for m <= min(n, 8).
Report verify_counts(int n);

// x_i distinct primes, y_i in 0..6, z_i small fractions; entries 1..size.
Point random_rational_point(uint64_t& state, int size);

}  // namespace ts
