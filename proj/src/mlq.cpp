#include "tasep_schubert/mlq.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <unordered_map>

#include "tasep_schubert/tasep.hpp"

namespace ts {

namespace {

// Balls of one row in path order: (column, label).
using PathRow = std::vector<std::pair<int, int>>;

// Matches the balls of cur into mask, in path order; leftover balls start new paths.
void match_row(int n, const PathRow& cur, uint32_t mask, int new_label, PathRow& next, int* cover, int* parent) {
    uint32_t avail = mask;
    for (auto [c, lab] : cur) {
        int k = 0;
        for (; k < n; ++k) {
            int cc = (c + k) % n;
            if ((avail >> cc) & 1u) {
                avail &= ~(1u << cc);
                next.push_back({cc, lab});
                if (parent) parent[cc] = c;
                break;
            }
            if (cover && cover[cc] == 0) cover[cc] = lab;
        }
        if (k == n) throw InvalidQueue("row has too few balls");
    }
    for (int cc = 0; cc < n; ++cc)
        if ((avail >> cc) & 1u) next.push_back({cc, new_label});
}

Composition type_of(int n, int L, const PathRow& bottom) {
    Composition w(n, L + 1);
    for (auto [c, lab] : bottom) w[n - 1 - c] = lab;
    return w;
}

std::vector<uint32_t> subsets_of_size(int n, int k) {
    std::vector<uint32_t> out;
    for (uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == k) out.push_back(m);
    return out;
}

std::vector<int> row_sizes(const std::vector<int>& content) {
    std::vector<int> s;
    int t = 0;
    for (int m : content) s.push_back(t += m);
    return s;
}

struct Enumerator {
    int n, L;
    std::vector<std::vector<uint32_t>> subsets;
    const std::function<bool(const Composition&)>* want;
    std::vector<MultilineQueue> out;
    std::vector<uint32_t> rows;
    std::vector<PathRow> bufs;

    void dfs(int r, const PathRow& cur) {
        if (r == L) {
            if (!*want || (*want)(type_of(n, L, cur))) out.push_back({n, rows});
            return;
        }
        PathRow& next = bufs[r];
        for (uint32_t m : subsets[r]) {
            rows[r] = m;
            next.clear();
            match_row(n, cur, m, r + 1, next, nullptr, nullptr);
            dfs(r + 1, next);
        }
    }
};

Polynomial x_power(int i, int e) { return e ? Polynomial::var(X(i), e) : Polynomial(1); }

}  // namespace

MultilineQueue MultilineQueue::from_strings(const std::vector<std::string>& rows) {
    MultilineQueue q;
    if (rows.empty()) throw InvalidQueue("no rows");
    q.n = int(rows[0].size());
    if (q.n < 1 || q.n > 31) throw InvalidQueue("bad width");
    for (auto& s : rows) {
        if (int(s.size()) != q.n) throw InvalidQueue("ragged rows");
        uint32_t m = 0;
        for (int c = 0; c < q.n; ++c) {
            if (s[c] == 'o')
                m |= 1u << c;
            else if (s[c] != '.')
                throw InvalidQueue("cells must be 'o' or '.'");
        }
        q.rows.push_back(m);
    }
    return q;
}

Composition LabeledQueue::row_type(int r) const {
    int n = q.n;
    if (L() == 0) return Composition(n, 1);
    Composition w(n);
    for (int c = 0; c < n; ++c) w[n - 1 - c] = label[r][c] ? label[r][c] : r + 2;
    return w;
}

int LabeledQueue::covered(int r, int i) const {
    int k = 0;
    for (int c = 0; c < n(); ++c) k += label[r - 1][c] == 0 && cover[r - 1][c] == i;
    return k;
}

int LabeledQueue::column_of(int r, int i) const {
    for (int c = 0; c < n(); ++c)
        if (label[r - 1][c] == i) return n() - c;
    return 0;
}

LabeledQueue bully_label(const MultilineQueue& q) {
    int n = q.n, L = q.L();
    LabeledQueue lq;
    lq.q = q;
    lq.label.assign(L, std::vector<int>(n, 0));
    lq.cover.assign(L, std::vector<int>(n, 0));
    lq.parent.assign(L, std::vector<int>(n, -1));
    PathRow cur, next;
    for (int r = 0; r < L; ++r) {
        if (r > 0 && std::popcount(q.rows[r]) < std::popcount(q.rows[r - 1]))
            throw InvalidQueue("row " + std::to_string(r + 1) + " has fewer balls than the row above");
        next.clear();
        match_row(n, cur, q.rows[r], r + 1, next, lq.cover[r].data(), lq.parent[r].data());
        for (auto [c, lab] : next) lq.label[r][c] = lab;
        std::swap(cur, next);
    }
    return lq;
}

std::vector<int> content_of(const Composition& w) {
    if (w.empty()) throw std::invalid_argument("empty composition");
    int top = *std::max_element(w.begin(), w.end());
    if (*std::min_element(w.begin(), w.end()) < 1) throw std::invalid_argument("parts must be positive");
    std::vector<int> m(top - 1, 0);
    for (int a : w)
        if (a < top) ++m[a - 1];
    return m;
}

bool queue_has_content(const MultilineQueue& q, const std::vector<int>& content) {
    auto s = row_sizes(content);
    if (int(s.size()) != q.L()) return false;
    for (int r = 0; r < q.L(); ++r)
        if (std::popcount(q.rows[r]) != s[r]) return false;
    return true;
}

std::vector<int> wt_exponents(const LabeledQueue& q) {
    int n = q.n(), L = q.L();
    std::vector<int> v(L + 1, 0), e(L + 1, 0);
    for (int r = 1; r <= L; ++r)
        for (int c = 0; c < n; ++c) v[r] += q.label[r - 1][c] == 0;
    for (int i = 1; i <= L - 1; ++i)
        for (int j = i + 1; j <= L; ++j) e[i] += v[j];
    for (int r = 1; r <= L; ++r)
        for (int c = 0; c < n; ++c) {
            int i = q.cover[r - 1][c];
            if (q.label[r - 1][c] == 0 && i > 0) {
                ++e[r];
                --e[i];
            }
        }
    for (int i = 1; i <= L; ++i)
        if (e[i] < 0) throw NegativeExponent("negative exponent of x" + std::to_string(i));
    return {e.begin() + 1, e.end()};
}

Polynomial wt(const LabeledQueue& q) { return x_monomial(wt_exponents(q)); }

namespace {

// Value code of a cell: 0 for a ball, j for x_j.
int cell_value(const LabeledQueue& q, int r, int c) {
    if (q.label[r][c]) return 0;
    return q.cover[r][c] ? q.cover[r][c] : r + 1;
}

Polynomial linear(int i, int v) { return v ? binom(Z(i), X(v)) : Polynomial::var(Z(i)); }

}  // namespace

Polynomial wt_z(const LabeledQueue& q) {
    Polynomial p = wt(q);
    for (int r = 0; r < q.L(); ++r)
        for (int c = 0; c < q.n(); ++c) p *= linear(q.n() - c, cell_value(q, r, c));
    return p;
}

Polynomial bottom_row_factor(const LabeledQueue& q) {
    int n = q.n(), L = q.L(), r = L - 1;
    int t = 0;
    Polynomial num = 1, den = 1;
    for (int c = 0; c < n; ++c) {
        int v = cell_value(q, r, c);
        num *= linear(n - c, v);
        if (v) {
            ++t;
            den *= Polynomial::var(X(v));
        }
    }
    for (int i = 1; i <= L; ++i) num *= x_power(i, t);
    return exact_divide(num, den);
}

std::vector<MultilineQueue> enumerate_queues(int n, const std::vector<int>& content,
                                             const std::function<bool(const Composition&)>& want, int jobs) {
    if (n < 1 || n > 16) throw std::invalid_argument("n out of range");
    auto sizes = row_sizes(content);
    int L = int(sizes.size());
    for (int i = 0; i < L; ++i)
        if (content[i] < 0 || sizes[i] > n) throw std::invalid_argument("content does not fit");
    if (L == 0) {
        if (!want || want(Composition(n, 1))) return {MultilineQueue{n, {}}};
        return {};
    }
    std::vector<std::vector<uint32_t>> subsets;
    for (int s : sizes) subsets.push_back(subsets_of_size(n, s));
    // outermost choice is the first row
    std::vector<std::vector<MultilineQueue>> parts(subsets[0].size());
    parallel_for(parts.size(), jobs, [&](size_t k) {
        Enumerator e{n, L, subsets, &want, {}, std::vector<uint32_t>(L), std::vector<PathRow>(L)};
        e.rows[0] = subsets[0][k];
        PathRow first;
        match_row(n, {}, e.rows[0], 1, first, nullptr, nullptr);
        e.dfs(1, first);
        parts[k] = std::move(e.out);
    });
    std::vector<MultilineQueue> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<MultilineQueue> mlq_of_type(const Composition& w, int jobs) {
    return enumerate_queues(int(w.size()), content_of(w), [&](const Composition& u) { return u == w; }, jobs);
}

std::map<Composition, Int> count_by_type(int n, int L) {
    if (L < 1 || L >= n || n > 16) throw std::invalid_argument("need 1 <= L < n <= 16");
    // state: row labels by column, 0 for vacancy
    using State = std::vector<int8_t>;
    struct Hash {
        size_t operator()(const State& s) const {
            size_t h = 0;
            for (auto v : s) h = h * 31 + size_t(v + 1);
            return h;
        }
    };
    std::unordered_map<State, uint64_t, Hash> cur, next;
    for (int c = 0; c < n; ++c) {
        State s(n, 0);
        s[c] = 1;
        cur[s] = 1;
    }
    PathRow row, out;
    for (int r = 1; r < L; ++r) {
        auto subsets = subsets_of_size(n, r + 1);
        next.clear();
        for (auto& [s, cnt] : cur) {
            row.clear();
            for (int lab = 1; lab <= r; ++lab)
                for (int c = 0; c < n; ++c)
                    if (s[c] == lab) row.push_back({c, lab});
            for (uint32_t m : subsets) {
                out.clear();
                match_row(n, row, m, r + 1, out, nullptr, nullptr);
                State t(n, 0);
                for (auto [c, lab] : out) t[c] = int8_t(lab);
                next[t] += cnt;
            }
        }
        std::swap(cur, next);
    }
    std::map<Composition, Int> res;
    for (auto& [s, cnt] : cur) {
        Composition w(n);
        for (int c = 0; c < n; ++c) w[n - 1 - c] = s[c] ? s[c] : L + 1;
        res[w] += cnt;
    }
    return res;
}

namespace {

// Sums wt (or wt_z) per type. Queues with the same type, weight and column values are merged
// before expansion.
std::map<Composition, Polynomial> sums(int n, const std::vector<int>& content, int jobs, bool deformed,
                                       const std::function<bool(const Composition&)>& want = {}) {
    auto qs = enumerate_queues(n, content, want, jobs);
    std::vector<std::vector<int>> keys(qs.size());
    parallel_for(qs.size(), jobs, [&](size_t k) {
        LabeledQueue lq = bully_label(qs[k]);
        std::vector<int> key = lq.type();
        auto e = wt_exponents(lq);
        key.push_back(-1);
        key.insert(key.end(), e.begin(), e.end());
        if (deformed)
            for (int c = n - 1; c >= 0; --c) {
                key.push_back(-1);
                std::vector<int> col;
                for (int r = 0; r < lq.L(); ++r) col.push_back(cell_value(lq, r, c));
                std::sort(col.begin(), col.end());
                key.insert(key.end(), col.begin(), col.end());
            }
        keys[k] = std::move(key);
    });
    std::map<std::vector<int>, long long> merged;
    for (auto& k : keys) ++merged[k];
    std::vector<std::pair<std::vector<int>, long long>> items(merged.begin(), merged.end());
    std::vector<Polynomial> polys(items.size());
    parallel_for(items.size(), jobs, [&](size_t k) {
        const auto& key = items[k].first;
        size_t p = size_t(n) + 1;
        std::vector<int> e;
        for (; p < key.size() && key[p] != -1; ++p) e.push_back(key[p]);
        Polynomial f = x_monomial(e) * Polynomial(items[k].second);
        for (int i = 1; p < key.size(); ++i) {
            ++p;
            for (; p < key.size() && key[p] != -1; ++p) f *= linear(i, key[p]);
        }
        polys[k] = std::move(f);
    });
    std::map<Composition, Polynomial> out;
    for (size_t k = 0; k < items.size(); ++k) {
        Composition w(items[k].first.begin(), items[k].first.begin() + n);
        out[w] += polys[k];
    }
    return out;
}

}  // namespace

std::map<Composition, Polynomial> weight_sums(int n, const std::vector<int>& content, int jobs) {
    return sums(n, content, jobs, false);
}

std::map<Composition, Polynomial> z_weight_sums(int n, const std::vector<int>& content, int jobs) {
    return sums(n, content, jobs, true);
}

Polynomial mlq_weight_sum(const Composition& w, int jobs) {
    auto m = sums(int(w.size()), content_of(w), jobs, false, [&](const Composition& u) { return u == w; });
    return m.count(w) ? m[w] : Polynomial(0);
}

Polynomial F_w(const Composition& w, int jobs) {
    auto m = sums(int(w.size()), content_of(w), jobs, true, [&](const Composition& u) { return u == w; });
    return m.count(w) ? m[w] : Polynomial(0);
}

std::vector<LatticePath> lattice_paths(const LabeledQueue& q, const Partition& lambda) {
    int n = q.n();
    if (!is_valid_partition(lambda, n)) throw NotValid("partition not in Val(n)");
    if (q.L() != n - 1 || q.type() != w_of_lambda(lambda, n)) throw WrongType("queue type is not w(lambda;n)");
    int l1 = lambda[0];
    std::vector<LatticePath> paths;
    for (int i = 1; i <= int(lambda.size()); ++i) {
        LatticePath p;
        int c = l1 + i, end_row = n - lambda[i - 1], end_col = l1 + i - lambda[i - 1];
        p.push_back({c, i});
        for (int r = i; r <= n - 1; ++r) {
            if (r > i && r <= end_row) p.push_back({c, r});
            int target = q.column_of(r, i);
            if (target > c) throw std::logic_error("bully path " + std::to_string(i) + " wraps");
            if (r > end_row) {
                if (target != c) throw std::logic_error("bully path " + std::to_string(i) + " not trivial at the bottom");
                continue;
            }
            while (c > target) p.push_back({--c, r});
        }
        if (c != end_col) throw std::logic_error("bully path " + std::to_string(i) + " ends off its endpoint");
        paths.push_back(std::move(p));
    }
    return paths;
}

bool paths_nonintersecting(const std::vector<LatticePath>& paths) {
    std::set<std::pair<int, int>> seen;
    for (auto& p : paths)
        for (auto& pt : p)
            if (!seen.insert(pt).second) return false;
    return true;
}

bool small_labels_ordered(const LabeledQueue& q, const Partition& lambda) {
    int n = q.n(), k = n - lambda[0];
    for (int r = 1; r <= q.L(); ++r) {
        int prev = 0;
        for (int i = 1; i <= std::min(r, k); ++i) {
            int c = q.column_of(r, i);
            if (c <= prev) return false;
            prev = c;
            if (r > i && c > q.column_of(r - 1, i)) return false;
        }
    }
    return true;
}

Tableau mlq_to_ssyt(const LabeledQueue& q, const Partition& lambda) {
    Tableau t;
    for (auto& p : lattice_paths(q, lambda)) {
        std::vector<int> row;
        for (size_t k = 1; k < p.size(); ++k)
            if (p[k].second == p[k - 1].second) row.push_back(p[k].second);
        t.push_back(std::move(row));
    }
    return t;
}

MultilineQueue ssyt_to_mlq(const Tableau& t, const Partition& lambda, int n) {
    if (!is_valid_partition(lambda, n)) throw NotValid("partition not in Val(n)");
    int len = int(lambda.size());
    if (int(t.size()) != len) throw std::invalid_argument("tableau shape differs from lambda");
    for (int i = 0; i < len; ++i) {
        if (int(t[i].size()) != lambda[i]) throw std::invalid_argument("tableau shape differs from lambda");
        for (size_t j = 0; j < t[i].size(); ++j) {
            if (t[i][j] < 1 || t[i][j] > n - lambda[i]) throw std::invalid_argument("entry outside its flag");
            if (j > 0 && t[i][j] < t[i][j - 1]) throw std::invalid_argument("row not weakly increasing");
            if (i > 0 && t[i][j] <= t[i - 1][j]) throw std::invalid_argument("column not strictly increasing");
        }
    }
    Perm winv = inverse(w_of_lambda(lambda, n));
    MultilineQueue q{n, std::vector<uint32_t>(n - 1, 0)};
    auto put = [&](int r, int col) {
        uint32_t bit = 1u << (n - col);
        if (q.rows[r - 1] & bit) throw InvalidQueue("two paths meet");
        q.rows[r - 1] |= bit;
    };
    for (int r = 1; r <= n - 1; ++r) {
        for (int i = 1; i <= std::min(r, len); ++i) {
            int cnt = int(std::count_if(t[i - 1].begin(), t[i - 1].end(), [&](int e) { return e <= r; }));
            put(r, lambda[0] + i - cnt);
        }
        for (int j = len + 1; j <= r; ++j) put(r, winv[j - 1]);
    }
    return q;
}

std::string composition_to_string(const Composition& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

std::string to_ascii(const LabeledQueue& q) {
    // balls show their label, '*' a covered vacancy, '.' an uncovered one
    std::string s;
    for (int r = 0; r < q.L(); ++r) {
        for (int c = 0; c < q.n(); ++c) {
            std::string cell = q.label[r][c] ? std::to_string(q.label[r][c]) : (q.cover[r][c] ? "*" : ".");
            s += std::string(3 - std::min<size_t>(cell.size(), 2), ' ') + cell;
        }
        s += "    row type " + composition_to_string(q.row_type(r)) + "\n";
    }
    return s;
}

Report verify_weight_theorem(int n, int jobs) {
    Report r;
    r.suite = "mlq-weight";
    r.seconds = timed([&] {
        auto got = weight_sums(n, std::vector<int>(n - 1, 1), jobs);
        auto psi = psi_all(n, true);
        for (auto& [w, p] : psi) r.add(perm_to_string(w), "queue weight sum", got[w] == p);
    });
    return r;
}

Report verify_zweight_theorem(int n, int jobs) {
    Report r;
    r.suite = "zweight";
    r.seconds = timed([&] {
        auto got = z_weight_sums(n, std::vector<int>(n - 1, 1), jobs);
        auto flat = weight_sums(n, std::vector<int>(n - 1, 1), jobs);
        auto d = psi_z_all(n, {true, true});
        auto states = all_perms(n);
        std::vector<std::array<char, 2>> ok(states.size());
        parallel_for(states.size(), jobs, [&](size_t k) {
            const Perm& w = states[k];
            auto it = got.find(w);
            Polynomial f = it == got.end() ? Polynomial(0) : it->second;
            ok[k][0] = f == d.at(w).expand();
            ok[k][1] = !f.is_zero() && flat.count(w) && leading_coeff_z(f) == flat.at(w);
        });
        for (size_t k = 0; k < states.size(); ++k) {
            r.add(perm_to_string(states[k]), "queue z-weight sum", ok[k][0]);
            r.add(perm_to_string(states[k]), "leading z-coefficient is the weight sum", ok[k][1]);
        }
    });
    return r;
}

Report verify_exchange_equations(const Composition& w, int jobs) {
    Report r;
    r.suite = "exchange";
    r.seconds = timed([&] {
        int n = int(w.size());
        auto F = z_weight_sums(n, content_of(w), jobs);
        auto get = [&](const Composition& u) {
            auto it = F.find(u);
            return it == F.end() ? Polynomial(0) : it->second;
        };
        Composition u = w;
        std::sort(u.begin(), u.end());
        do {
            Polynomial fu = get(u);
            for (int i = 1; i <= n; ++i) {
                int j = i % n + 1;
                int a = u[i - 1], b = u[j - 1];
                std::string in = composition_to_string(u) + " i=" + std::to_string(i);
                std::string kind = i == n ? "cyclic pair" : "adjacent pair";
                Polynomial sfu = swap_vars(fu, Z(i), Z(j));
                if (a == b) {
                    r.add(in, "equal letters, symmetric, " + kind, fu == sfu);
                } else if (a > b) {
                    Composition v = u;
                    std::swap(v[i - 1], v[j - 1]);
                    Polynomial fv = get(v);
                    Polynomial lhs = Polynomial::var(X(b)) * fv * binom(Z(i), Z(j));
                    Polynomial rhs = Polynomial::var(Z(i)) * binom(Z(j), X(b)) * (fu - sfu);
                    r.add(in, "descent exchange, " + kind, !fu.is_zero() && lhs == rhs);
                    Polynomial sum = fu + fv;
                    r.add(in, "sum over the pair is symmetric, " + kind, sum == swap_vars(sum, Z(i), Z(j)));
                }
            }
        } while (std::next_permutation(u.begin(), u.end()));
    });
    return r;
}

namespace {

bool transport_holds(const LabeledQueue& q, const Tableau& t, int n) {
    for (int i = 1; i <= n - 1; ++i)
        for (int r = 1; r <= n - 1; ++r) {
            int expect = 0;
            if (i <= int(t.size()) && r > i) expect = int(std::count(t[i - 1].begin(), t[i - 1].end(), r));
            if (q.covered(r, i) != expect) return false;
        }
    return true;
}

}  // namespace

Report verify_bijection(int n, int jobs) {
    Report r;
    r.suite = "mlq-bijection";
    r.seconds = timed([&] {
        auto lams = val_n(n);
        std::map<Composition, Partition> of_type;
        for (auto& lam : lams) of_type[w_of_lambda(lam, n)] = lam;
        auto queues = enumerate_queues(n, std::vector<int>(n - 1, 1),
                                       [&](const Composition& u) { return of_type.count(u) > 0; }, jobs);
        std::vector<Composition> qtype(queues.size());
        std::vector<Tableau> qtab(queues.size());
        std::vector<char> qok(queues.size());
        parallel_for(queues.size(), jobs, [&](size_t k) {
            LabeledQueue lq = bully_label(queues[k]);
            qtype[k] = lq.type();
            const Partition& lam = of_type.at(qtype[k]);
            try {
                auto paths = lattice_paths(lq, lam);
                qtab[k] = mlq_to_ssyt(lq, lam);
                qok[k] = paths_nonintersecting(paths) && small_labels_ordered(lq, lam) &&
                         ssyt_to_mlq(qtab[k], lam, n) == queues[k] && transport_holds(lq, qtab[k], n);
            } catch (const std::exception&) {
                qok[k] = false;
            }
        });
        for (auto& lam : lams) {
            Composition w = w_of_lambda(lam, n);
            auto tabs = ssyt(lam, row_flags(lam, n));
            std::set<Tableau> images;
            size_t count = 0, bad = 0;
            for (size_t k = 0; k < queues.size(); ++k) {
                if (qtype[k] != w) continue;
                ++count;
                if (!qok[k]) ++bad;
                images.insert(qtab[k]);
            }
            std::vector<char> tok(tabs.size());
            parallel_for(tabs.size(), jobs, [&](size_t k) {
                try {
                    LabeledQueue lq = bully_label(ssyt_to_mlq(tabs[k], lam, n));
                    tok[k] = lq.type() == w && mlq_to_ssyt(lq, lam) == tabs[k] && transport_holds(lq, tabs[k], n);
                } catch (const std::exception&) {
                    tok[k] = false;
                }
            });
            size_t tbad = size_t(std::count(tok.begin(), tok.end(), 0));
            bool onto = images.size() == tabs.size() &&
                        std::all_of(tabs.begin(), tabs.end(), [&](const Tableau& t) { return images.count(t) > 0; });
            std::string in = partition_to_string(lam) + " n=" + std::to_string(n);
            r.add(in, "queue to tableau and back", bad == 0, std::to_string(count) + " queues");
            r.add(in, "tableau to queue and back", tbad == 0, std::to_string(tabs.size()) + " tableaux");
            r.add(in, "queue and tableau counts agree", count == tabs.size() && onto);
        }
    });
    return r;
}

Report verify_queue_count(const Partition& lambda, int n) {
    Report r;
    r.suite = "mlq-bijection";
    r.seconds = timed([&] {
        auto counts = count_by_type(n, n - 1);
        Composition w = w_of_lambda(lambda, n);
        Int got = counts.count(w) ? counts[w] : Int(0);
        Int expect = Int(ssyt(lambda, row_flags(lambda, n)).size());
        r.add(partition_to_string(lambda) + " n=" + std::to_string(n), "queue count equals tableau count",
              got == expect, got.str() + " vs " + expect.str());
    });
    return r;
}

}  // namespace ts
