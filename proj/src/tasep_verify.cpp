#include <map>
#include <set>

#include "tasep_schubert/schubert.hpp"
#include "tasep_schubert/tasep.hpp"
#include "tasep_schubert/zschubert.hpp"

namespace ts {

Factored deformed_product_form(const Perm& w, bool y_zero) {
    int n = int(w.size());
    ParSeq ps = psi(w);
    auto a = shifting_vector(ps, n);
    Polynomial prod = 1;
    for (size_t i = 0; i < ps.size(); ++i) prod *= z_schubert(ps[i], n, a[i], true, y_zero);
    return tf_factored(w, y_zero) * Factored(prod, n);
}

Polynomial schubert_product_form(const Perm& w, bool y_zero) {
    int n = int(w.size());
    Polynomial p = xy_fact(w);
    if (y_zero) p = set_block_zero(p, Block::Y);
    for (auto& lam : psi(w)) p *= schubert(code_inverse(g_n(lam, n)), y_zero);
    return p;
}

std::vector<int> mu_exponents(const Perm& w) {
    int n = int(w.size());
    std::vector<int> mu;
    for (int i = 1; i <= n - 2; ++i) mu.push_back(int(binomial(n - i, 2)));
    for (auto& lam : psi(w))
        for (size_t i = 0; i < lam.size(); ++i) mu.at(i) -= lam[i];
    return mu;
}

Polynomial x_monomial(const std::vector<int>& exponents) {
    Polynomial p = 1;
    for (size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i]) p *= Polynomial::var(X(int(i) + 1), exponents[i]);
    return p;
}

Polynomial flagged_schur_form(const Perm& w) {
    int n = int(w.size());
    Polynomial p = x_monomial(mu_exponents(w));
    for (auto& lam : psi(w)) p *= flagged_schur(lam, row_flags(lam, n));
    return p;
}

Polynomial complete_homogeneous(int k, const std::vector<VarRef>& vars) {
    // h[j] = h_j of the variables seen so far
    std::vector<Polynomial> h(k + 1, Polynomial(0));
    h[0] = 1;
    for (auto v : vars)
        for (int j = 1; j <= k; ++j) h[j] += Polynomial::var(v) * h[j - 1];
    return h[k];
}

Polynomial partition_function(int n) {
    Polynomial z;
    for (auto& [w, p] : psi_all(n, true)) z += p;
    return z;
}

Polynomial partition_function_product(int n) {
    Polynomial p = 1;
    for (int i = 1; i <= n; ++i) {
        std::vector<VarRef> vars;
        for (int j = 1; j < i; ++j) vars.push_back(X(j));
        vars.push_back(X(i));
        vars.push_back(X(i));
        p *= complete_homogeneous(n - i, vars);
    }
    // x_i -> x_i^{-1}, then clear denominators
    std::vector<Term> terms;
    for (auto& t : p.terms()) {
        Monomial m;
        for (int i = 1; i < n; ++i) {
            int e = int(binomial(n + 1 - i, 2)) - t.m.exp(X(i));
            if (e < 0) throw std::logic_error("reciprocal product is not a polynomial");
            m.set(X(i), e);
        }
        terms.push_back({m, t.c});
    }
    return Polynomial::from_terms(std::move(terms));
}

Report verify_main_theorem(int n, bool general_y, int jobs) {
    Report r;
    r.suite = "main-theorem";
    r.seconds = timed([&] {
        bool yz = !general_y;
        DeformedDistribution d = psi_z_all(n, {yz, true});
        auto states = st_all(n);
        std::vector<std::array<bool, 3>> ok(states.size());
        parallel_for(states.size(), jobs, [&](size_t i) {
            const Perm& w = states[i];
            Factored got = d.at(w);
            Polynomial lc = got.leading_coeff_z();
            ok[i][0] = got == deformed_product_form(w, yz);
            ok[i][1] = lc == schubert_product_form(w, yz);
            ok[i][2] = set_block_zero(lc, Block::Y) == flagged_schur_form(w);
        });
        std::string mode = general_y ? "" : " y=0";
        for (size_t i = 0; i < states.size(); ++i) {
            std::string s = perm_to_string(states[i]) + mode;
            r.add(s, "deformed product formula", ok[i][0]);
            r.add(s, "xyFact times Schubert product", ok[i][1]);
            r.add(s, "monomial times flagged Schur product", ok[i][2]);
        }
    });
    return r;
}

Report verify_monomial_factor(int n, int jobs) {
    Report r;
    r.suite = "monomial-factor";
    r.seconds = timed([&] {
        auto m = psi_all(n, true);
        std::vector<std::pair<Perm, Polynomial>> all(m.begin(), m.end());
        std::vector<char> ok(all.size());
        parallel_for(all.size(), jobs, [&](size_t i) {
            Monomial f = max_monomial_factor(all[i].second);
            ok[i] = Polynomial::monomial(f) == x_monomial(eta_exponents(all[i].first));
        });
        std::map<std::vector<int>, std::set<Perm>> classes;
        for (size_t i = 0; i < all.size(); ++i) {
            r.add(perm_to_string(all[i].first), "largest monomial factor", ok[i]);
            classes[eta_exponents(all[i].first)].insert(canonical_rotation(all[i].first));
        }
        size_t distinct = 0;
        for (auto& [e, c] : classes) distinct += c.size() == 1;
        r.add("n=" + std::to_string(n), "equal monomial factors imply cyclic equivalence", distinct == classes.size(),
              std::to_string(classes.size()) + " factors");
    });
    return r;
}

Report verify_partition_function(int n) {
    Report r;
    r.suite = "partition-function";
    r.seconds = timed([&] {
        Polynomial z = partition_function(n);
        r.add("n=" + std::to_string(n), "product of complete homogeneous polynomials",
              z == partition_function_product(n));
        Int sum = 0, expect = 1;
        for (auto& t : z.terms()) sum += t.c;
        for (int i = 0; i <= n; ++i) expect *= binomial(n, i);
        r.add("n=" + std::to_string(n), "coefficient count", sum == expect,
              sum.str() + " vs " + expect.str() + ", " + std::to_string(z.size()) + " monomials");
    });
    return r;
}

}  // namespace ts
