#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tasep_schubert/combinat.hpp"
#include "tasep_schubert/poly.hpp"
#include "tasep_schubert/report.hpp"
#include "tasep_schubert/schubert.hpp"

namespace ts {

struct NegativeExponent : std::logic_error {
    using std::logic_error::logic_error;
};
struct WrongType : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidQueue : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Composition with letters 1..L+1; the letter L+1 marks a vacancy in the bottom row.
using Composition = std::vector<int>;

// Geometry: rows top to bottom, row 0 is row 1 of the picture. Columns are stored
// left to right (bit c of rows[r]); types and z indices count columns from the right,
// so column c has right index n - c.
struct MultilineQueue {
    int n = 0;
    std::vector<uint32_t> rows;

    int L() const { return int(rows.size()); }
    bool ball(int r, int c) const { return (rows[r] >> c) & 1u; }
    static MultilineQueue from_strings(const std::vector<std::string>& rows);  // 'o' ball, '.' vacancy
    bool operator==(const MultilineQueue&) const = default;
    bool operator<(const MultilineQueue& o) const { return rows < o.rows; }
};

struct LabeledQueue {
    MultilineQueue q;
    std::vector<std::vector<int>> label;   // 0 on vacancies
    std::vector<std::vector<int>> cover;   // smallest label whose path traverses the cell, 0 if none
    std::vector<std::vector<int>> parent;  // column of the matched ball one row up, -1 where a path starts

    int n() const { return q.n; }
    int L() const { return q.L(); }
    // Row r (0-based) read right to left, vacancy = r + 2.
    Composition row_type(int r) const;
    Composition type() const { return row_type(L() - 1); }
    // Number of i-covered vacancies in row r (both 1-based).
    int covered(int r, int i) const;
    // Right index of the ball labeled i in row r (1-based), 0 if absent.
    int column_of(int r, int i) const;
};

LabeledQueue bully_label(const MultilineQueue& q);

// m_i = number of letters i, i = 1..max(w)-1.
std::vector<int> content_of(const Composition& w);
bool queue_has_content(const MultilineQueue& q, const std::vector<int>& content);

// Exponents of x_1..x_L.
std::vector<int> wt_exponents(const LabeledQueue& q);
Polynomial wt(const LabeledQueue& q);
Polynomial wt_z(const LabeledQueue& q);
// wt_z(Q)/wt_z(Q minus its bottom row).
Polynomial bottom_row_factor(const LabeledQueue& q);

// Every queue of the given content on n columns whose type passes want (all types when empty).
std::vector<MultilineQueue> enumerate_queues(int n, const std::vector<int>& content,
                                             const std::function<bool(const Composition&)>& want = {},
                                             int jobs = 1);
std::vector<MultilineQueue> mlq_of_type(const Composition& w, int jobs = 1);
// Number of queues of each type, by dynamic programming over row types; distinct labels only.
std::map<Composition, Int> count_by_type(int n, int L);

// Sums over MLQ(w) for every rearrangement w of the content.
std::map<Composition, Polynomial> weight_sums(int n, const std::vector<int>& content, int jobs = 1);
std::map<Composition, Polynomial> z_weight_sums(int n, const std::vector<int>& content, int jobs = 1);
Polynomial mlq_weight_sum(const Composition& w, int jobs = 1);
Polynomial F_w(const Composition& w, int jobs = 1);

// Lattice points (right index, row) of the extended bully paths in MLQ(w(lambda;n)).
using LatticePath = std::vector<std::pair<int, int>>;
std::vector<LatticePath> lattice_paths(const LabeledQueue& q, const Partition& lambda);
bool paths_nonintersecting(const std::vector<LatticePath>& paths);
// Labels 1..n-lambda_1 appear in increasing order in every row type, and their paths do not wrap.
bool small_labels_ordered(const LabeledQueue& q, const Partition& lambda);

Tableau mlq_to_ssyt(const LabeledQueue& q, const Partition& lambda);
MultilineQueue ssyt_to_mlq(const Tableau& t, const Partition& lambda, int n);

std::string to_ascii(const LabeledQueue& q);
std::string composition_to_string(const Composition& w);

Report verify_weight_theorem(int n, int jobs = 1);
Report verify_zweight_theorem(int n, int jobs = 1);
// Exchange equations for every rearrangement of w, positions 1..n-1, and the cyclic pair (n, 1) separately.
Report verify_exchange_equations(const Composition& w, int jobs = 1);
Report verify_bijection(int n, int jobs = 1);
// |MLQ(w(lambda;n))| by row-type counting against |SSYT(lambda, d)|.
Report verify_queue_count(const Partition& lambda, int n);

}  // namespace ts
