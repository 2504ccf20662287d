#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "tasep_schubert/combinat.hpp"
#include "tasep_schubert/poly.hpp"
#include "tasep_schubert/report.hpp"

namespace ts {

struct InadmissibleRates : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateKernel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generator of a finite chain: q[a][b] is the rate a -> b, diagonal = minus the row sum.
struct RateMatrix {
    std::vector<Perm> states;
    std::vector<std::vector<Rational>> q;

    size_t size() const { return states.size(); }
    size_t index(const Perm& w) const;
    bool strongly_connected() const;
};

// x[i-1] = x_i, y[j-1] = y_j. A particle of weight i directly left of a heavier one j
// (cyclically) swaps with it at rate x_i - y_{n+1-j}.
RateMatrix build_generator(int n, const std::vector<Rational>& x, const std::vector<Rational>& y);

// Fraction-free elimination on the transpose; normalized to sum 1.
std::vector<Rational> stationary(const RateMatrix& m);
// Rank of the generator modulo a prime p (entries must have denominators prime to p).
size_t rank_mod_p(const RateMatrix& m, uint64_t p);

struct OraclePoint {
    std::vector<Rational> x, y;
};
// x from small primes divided by 1..3, y from 0..4 (or 0), redrawn until admissible.
OraclePoint random_admissible_point(int n, bool y_zero, uint64_t& state);

// pi_w/pi_id against psi_w/psi_id at `trials` random points. A table of psi may be passed in;
// otherwise it is computed.
Report cross_validate(int n, int trials, unsigned long long seed, bool y_zero, int jobs = 1,
                      const std::map<Perm, Polynomial>* table = nullptr);

}  // namespace ts
