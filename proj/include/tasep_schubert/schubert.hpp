#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tasep_schubert/combinat.hpp"
#include "tasep_schubert/poly.hpp"

namespace ts {

struct NotVexillary : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct HypothesisFails : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Order in which ascents are resolved when climbing from w to w0.
enum class WordStrategy { LargestAscent, SmallestAscent };

// prod_{i+j<=n} (x_i - y_j)
Polynomial delta(int n, bool y_zero = false);

// Word i_1..i_k with S_w = d_{i_1} ... d_{i_k} Delta.
std::vector<int> reduced_word_to_top(const Perm& w, WordStrategy s = WordStrategy::LargestAscent);

// Double Schubert polynomial by divided differences; w is padded to S_n when n > |w|.
Polynomial double_schubert_dd(const Perm& w, int n = 0, WordStrategy s = WordStrategy::LargestAscent,
                              bool y_zero = false);
inline Polynomial schubert(const Perm& w, bool y_zero = false) {
    return double_schubert_dd(w, 0, WordStrategy::LargestAscent, y_zero);
}

// Expansion of an x-only polynomial in single Schubert polynomials, by
// repeatedly removing the lex-smallest monomial x^c as the term of S_{c^{-1}(c)}.
std::vector<std::pair<Perm, Int>> schubert_expand(const Polynomial& p);
std::string schubert_sum_to_string(const std::vector<std::pair<Perm, Int>>& sum);

// Sorted (row, column) cells, 1-based.
using Cell = std::pair<int, int>;
using Diagram = std::vector<Cell>;

Diagram initial_diagram(const Perm& w);
// Every diagram one ladder move away from D.
std::vector<Diagram> ladder_moves(const Diagram& D);
// Closure of the initial diagram under ladder moves, sorted.
std::vector<Diagram> rc_graphs(const Perm& w);
Diagram transpose(const Diagram& D);
Polynomial diagram_weight(const Diagram& D, bool y_zero = false);
Polynomial double_schubert_rc(const Perm& w, bool y_zero = false);
// Rows of '+' and '.'.
std::string diagram_to_string(const Diagram& D);

bool is_vexillary(const Perm& w);
std::vector<int> flag(const Perm& w);
// Southeast corners of the Rothe diagram.
std::vector<Cell> essential_set(const Perm& w);

// Semistandard tableaux of shape lambda, row i bounded by d_i; each tableau as rows.
using Tableau = std::vector<std::vector<int>>;
std::vector<Tableau> ssyt(const Partition& lambda, const std::vector<int>& d);
Polynomial flagged_schur(const Partition& lambda, const std::vector<int>& d);
// Bounds (n - lambda_1, n - lambda_2, ...).
std::vector<int> row_flags(const Partition& lambda, int n);

// S_{w'} = S_w(x_2, x_3, ..., y) prod_{k<=l} (x_1 - y_k) with c(w') = (l, c(w)).
bool linear_factor_pullout(const Perm& w, int l);
// c(w^{-1}) vanishes after position l.
bool pullout_applies(const Perm& w, int l);

}  // namespace ts
