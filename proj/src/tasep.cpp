#include "tasep_schubert/tasep.hpp"

#include <algorithm>
#include <set>

namespace ts {

bool cyclic_order(const Perm& w, int a, int b, int c) {
    Perm pos = inverse(w);
    int n = int(w.size());
    int pa = pos[a - 1], pb = pos[b - 1], pc = pos[c - 1];
    int db = ((pb - pa) % n + n) % n, dc = ((pc - pa) % n + n) % n;
    return db < dc;
}

Polynomial psi_id(int n, bool y_zero) {
    Polynomial p = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) {
            Polynomial f = y_zero ? Polynomial::var(X(i)) : binom(X(i), Y(n + 1 - j));
            p *= f.pow(j - i - 1);
        }
    return p;
}

Polynomial psi_id_z(int n, bool y_zero) {
    Polynomial p = psi_id(n, y_zero);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j < i; ++j) p *= binom(Z(i), X(j));
        for (int j = i + 1; j <= n; ++j) p *= y_zero ? Polynomial::var(Z(i)) : binom(Z(i), Y(n + 1 - j));
    }
    return p;
}

Factored psi_id_z_factored(int n, bool y_zero) {
    Factored f(1, n);
    auto minus_y = [&](VarRef a, int j) { f.multiply(y_zero ? linear_key(a) : linear_key(a, Y(j))); };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            for (int e = 0; e < j - i - 1; ++e) minus_y(X(i), n + 1 - j);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j < i; ++j) f.multiply(linear_key(Z(i), X(j)));
        for (int j = i + 1; j <= n; ++j) minus_y(Z(i), n + 1 - j);
    }
    return f;
}

Polynomial xy_fact(const Perm& w) {
    int n = int(w.size());
    Polynomial p = 1;
    for (int i = 1; i <= n - 2; ++i)
        for (int k = i + 2; k <= n; ++k) {
            if (!cyclic_order(w, i, i + 1, k)) continue;
            for (int m = 1; m <= i; ++m) p *= binom(X(m), Y(n + 1 - k));
        }
    return p;
}

Polynomial xz_fact(const Perm& w, int i) {
    int n = int(w.size());
    Polynomial p = 1;
    int cur = w[i - 1];
    for (int step = 1; step < n; ++step) {
        int j = w[((i - 1 - step) % n + n) % n];
        if (j < cur) {
            p *= binom(Z(i), X(j));
            cur = j;
        }
    }
    return p;
}

Polynomial yz_fact(const Perm& w, int i) {
    int n = int(w.size());
    Polynomial p = 1;
    int cur = w[i - 1];
    for (int step = 1; step < n; ++step) {
        int m = w[(i - 1 + step) % n];
        if (m > cur) {
            p *= binom(Z(i), Y(n + 1 - m));
            cur = m;
        }
    }
    return p;
}

Polynomial xz_fact(const Perm& w) {
    Polynomial p = 1;
    for (int i = 1; i <= int(w.size()); ++i) p *= xz_fact(w, i);
    return p;
}

Polynomial yz_fact(const Perm& w) {
    Polynomial p = 1;
    for (int i = 1; i <= int(w.size()); ++i) p *= yz_fact(w, i);
    return p;
}

Polynomial tf(const Perm& w) { return xy_fact(w) * xz_fact(w) * yz_fact(w); }

Factored tf_factored(const Perm& w, bool y_zero) {
    int n = int(w.size());
    Factored f(1, n);
    auto minus_y = [&](VarRef a, int j) { f.multiply(y_zero ? linear_key(a) : linear_key(a, Y(j))); };
    for (int i = 1; i <= n - 2; ++i)
        for (int k = i + 2; k <= n; ++k)
            if (cyclic_order(w, i, i + 1, k))
                for (int m = 1; m <= i; ++m) minus_y(X(m), n + 1 - k);
    for (int i = 1; i <= n; ++i) {
        int cur = w[i - 1];
        for (int step = 1; step < n; ++step) {
            int j = w[((i - 1 - step) % n + n) % n];
            if (j < cur) {
                f.multiply(linear_key(Z(i), X(j)));
                cur = j;
            }
        }
        cur = w[i - 1];
        for (int step = 1; step < n; ++step) {
            int m = w[(i - 1 + step) % n];
            if (m > cur) {
                minus_y(Z(i), n + 1 - m);
                cur = m;
            }
        }
    }
    return f;
}

Factored DeformedDistribution::at(const Perm& w) const {
    int p = int(std::find(w.begin(), w.end(), 1) - w.begin());
    auto it = reps.find(rotate(w, p));
    if (it == reps.end()) throw std::out_of_range("state not computed");
    // rep = sigma^p(w), psi_{sigma w}(z) = psi_w(z_i -> z_{i-1})
    return p == 0 ? it->second : it->second.shift_z(p);
}

std::vector<Perm> DeformedDistribution::states() const { return all_perms(n); }

DeformedDistribution psi_z_all(int n, const RecursionOptions& opt) {
    DeformedDistribution d;
    d.n = n;
    d.y_zero = opt.y_zero;
    Perm id = identity_perm(n);
    d.reps[id] = psi_id_z_factored(n, opt.y_zero);
    std::set<Perm> pending = {id};
    while (!pending.empty()) {
        Perm r = *pending.begin();
        pending.erase(pending.begin());
        const Factored P = d.reps.at(r);
        for (int l = 1; l <= n; ++l) {
            int a = r[l - 1], b = r[l % n];
            if (!(a > b)) continue;
            Perm child = r;
            std::swap(child[l - 1], child[l % n]);
            int p = int(std::find(child.begin(), child.end(), 1) - child.begin());
            Perm rep = rotate(child, p);
            bool known = d.reps.count(rep) > 0;
            if (known && !opt.check_all_edges) continue;
            Factored Q = isobaric_pi(P, l, a, b, opt.y_zero);
            if (p) Q = Q.shift_z(-p);
            if (known) {
                ++d.edges_checked;
                if (!(d.reps.at(rep) == Q))
                    throw Inconsistent("recursion is path dependent at " + perm_to_string(child));
            } else {
                d.reps.emplace(rep, std::move(Q));
                pending.insert(rep);
            }
        }
    }
    return d;
}

std::map<Perm, Polynomial> psi_all(const DeformedDistribution& d) {
    std::map<Perm, Polynomial> lc;
    for (auto& [rep, P] : d.reps) {
        Polynomial c = P.leading_coeff_z();
        for (int k = 0; k < d.n; ++k) lc[rotate(rep, k)] = c;
    }
    return lc;
}

std::map<Perm, Polynomial> psi_all(int n, bool y_zero) {
    RecursionOptions opt;
    opt.y_zero = y_zero;
    opt.check_all_edges = false;
    return psi_all(psi_z_all(n, opt));
}

}  // namespace ts
