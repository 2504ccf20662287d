#pragma once

#include <map>
#include <string>
#include <vector>

#include "tasep_schubert/combinat.hpp"
#include "tasep_schubert/factored.hpp"
#include "tasep_schubert/poly.hpp"
#include "tasep_schubert/report.hpp"

namespace ts {

struct Inconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a -> b -> c in cyclic order of w.
bool cyclic_order(const Perm& w, int a, int b, int c);

Polynomial psi_id_z(int n, bool y_zero);
Factored psi_id_z_factored(int n, bool y_zero);
// prod_{i<j} (x_i - y_{n+1-j})^{j-i-1}
Polynomial psi_id(int n, bool y_zero);

Polynomial xy_fact(const Perm& w);
Polynomial xz_fact(const Perm& w);
Polynomial yz_fact(const Perm& w);
Polynomial xz_fact(const Perm& w, int i);
Polynomial yz_fact(const Perm& w, int i);
Polynomial tf(const Perm& w);
// TF(w) kept as a product of linear factors; y_zero drops every y.
Factored tf_factored(const Perm& w, bool y_zero = false);

struct RecursionOptions {
    bool y_zero = false;
    // Recompute every edge into an already known class and compare.
    bool check_all_edges = true;
};

class DeformedDistribution {
public:
    int n = 0;
    bool y_zero = false;
    // Keyed by the rotation that starts with 1.
    std::map<Perm, Factored> reps;
    size_t edges_checked = 0;

    // psi_w(z) for any state, via cyclic covariance.
    Factored at(const Perm& w) const;
    std::vector<Perm> states() const;
};

DeformedDistribution psi_z_all(int n, const RecursionOptions& opt = {});
// Leading z coefficients for every state in S_n.
std::map<Perm, Polynomial> psi_all(const DeformedDistribution& d);
std::map<Perm, Polynomial> psi_all(int n, bool y_zero);

// Product formulas for a special state w with Psi(w) = (lambda^1..lambda^k).
// TF(w) prod S^n_{lambda^i}(z_j -> z_{j+a_i}), a = s(w), z indices mod n.
Factored deformed_product_form(const Perm& w, bool y_zero = false);
// xyFact(w) prod S_{c^{-1}(g_n(lambda^i))}.
Polynomial schubert_product_form(const Perm& w, bool y_zero = false);
// x^mu prod flagged Schur, y = 0.
Polynomial flagged_schur_form(const Perm& w);
// x^mu with mu_i = C(n-i,2) - sum_j lambda^j_i, i <= n-2.
std::vector<int> mu_exponents(const Perm& w);

Polynomial x_monomial(const std::vector<int>& exponents);
// Complete homogeneous polynomial of degree k in the listed variables (repeats allowed).
Polynomial complete_homogeneous(int k, const std::vector<VarRef>& vars);
// Sum of psi_w over S_n at y = 0.
Polynomial partition_function(int n);
// x^{(C(n,2),..,C(2,2))} prod_i h_{n-i}(x_1^{-1},..,x_{i-1}^{-1},x_i^{-1},x_i^{-1}).
Polynomial partition_function_product(int n);

Report verify_main_theorem(int n, bool general_y, int jobs = 1);
Report verify_monomial_factor(int n, int jobs = 1);
Report verify_partition_function(int n);

}  // namespace ts
