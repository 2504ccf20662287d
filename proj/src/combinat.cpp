#include "tasep_schubert/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ts {

bool is_permutation(const Perm& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (int a : w) {
        if (a < 1 || a > int(w.size()) || seen[a]) return false;
        seen[a] = true;
    }
    return true;
}

Perm identity_perm(int n) {
    Perm w(n);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

Perm inverse(const Perm& w) {
    Perm v(w.size());
    for (size_t i = 0; i < w.size(); ++i) v[w[i] - 1] = int(i) + 1;
    return v;
}

Perm compose(const Perm& u, const Perm& v) {
    Perm r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = u[v[i] - 1];
    return r;
}

Perm longest_element(int n) {
    Perm w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return w;
}

Perm simple_transposition(int n, int i) {
    Perm s = identity_perm(n);
    std::swap(s[i - 1], s[i]);
    return s;
}

Perm rotate(const Perm& w, int a) {
    int n = int(w.size());
    Perm r(n);
    for (int i = 0; i < n; ++i) r[i] = w[((i + a) % n + n) % n];
    return r;
}

Perm canonical_rotation(const Perm& w) {
    auto it = std::min_element(w.begin(), w.end());
    return rotate(w, int(it - w.begin()));
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm w = identity_perm(n);
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

Code code(const Perm& w) {
    int n = int(w.size());
    Code c(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w[j] < w[i]) ++c[i];
    return c;
}

bool is_valid_code(const Code& c) {
    int n = int(c.size());
    for (int i = 0; i < n; ++i)
        if (c[i] < 0 || c[i] + i + 1 > n) return false;
    return true;
}

Perm code_inverse(const Code& c) {
    if (!is_valid_code(c)) throw InvalidCode("invalid Lehmer code");
    int n = int(c.size());
    std::vector<int> avail = identity_perm(n);
    Perm w;
    for (int i = 0; i < n; ++i) {
        w.push_back(avail[c[i]]);
        avail.erase(avail.begin() + c[i]);
    }
    return w;
}

Partition shape_of_code(const Code& c) {
    Partition p;
    for (int x : c)
        if (x > 0) p.push_back(x);
    std::sort(p.rbegin(), p.rend());
    return p;
}

int length(const Perm& w) {
    Code c = code(w);
    return std::accumulate(c.begin(), c.end(), 0);
}

namespace {

bool order_isomorphic(const Perm& w, const std::vector<int>& idx, const Perm& p) {
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b)
            if ((w[idx[a]] < w[idx[b]]) != (p[a] < p[b])) return false;
    return true;
}

bool contains_rec(const Perm& w, const Perm& p, std::vector<int>& idx, int start) {
    if (idx.size() == p.size()) return order_isomorphic(w, idx, p);
    for (int i = start; i < int(w.size()); ++i) {
        idx.push_back(i);
        if (contains_rec(w, p, idx, i + 1)) return true;
        idx.pop_back();
    }
    return false;
}

}  // namespace

bool contains_pattern(const Perm& w, const Perm& pattern) {
    std::vector<int> idx;
    return contains_rec(w, pattern, idx, 0);
}

bool is_evil_avoiding(const Perm& w) {
    static const std::vector<Perm> evil = {{2, 4, 1, 3}, {3, 2, 1, 4}, {4, 1, 3, 2}, {4, 2, 1, 3}};
    int n = int(w.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int v[4] = {w[a], w[b], w[c], w[d]};
                    Perm pat(4);
                    for (int i = 0; i < 4; ++i) {
                        pat[i] = 1;
                        for (int j = 0; j < 4; ++j)
                            if (v[j] < v[i]) ++pat[i];
                    }
                    for (auto& e : evil)
                        if (pat == e) return false;
                }
    return true;
}

bool evil_avoiding_via_code(const Perm& w) {
    int n = int(w.size());
    Code c = code(w);
    // 1-based views
    auto W = [&](int i) { return w[i - 1]; };
    auto C = [&](int i) { return c[i - 1]; };
    for (int j = 1; j < n; ++j) {
        if (!(W(j) > W(j + 1))) continue;
        int found = 0;
        for (int b = j; b >= 1; --b) {
            if (b < j && !(W(b) < W(b + 1))) break;
            if (C(b) > 0 && C(b) < n - j) {
                found = b;
                break;
            }
        }
        if (!found) continue;
        for (int t = j + 1; t <= j + C(found); ++t)
            if (C(t) != 0) return false;
    }
    return true;
}

int recoils(const Perm& w) {
    Perm inv = inverse(w);
    int r = 0;
    for (size_t a = 1; a < w.size(); ++a)
        if (inv[a] < inv[a - 1]) ++r;  // a+1 left of a
    return r;
}

bool is_k_grassmannian_state(const Perm& w, int k) {
    return !w.empty() && w[0] == 1 && is_evil_avoiding(w) && recoils(w) == k;
}

std::vector<Perm> st_all(int n) {
    std::vector<Perm> out;
    Perm rest = identity_perm(n);
    do {
        if (rest[0] != 1) break;
        if (is_evil_avoiding(rest)) out.push_back(rest);
    } while (std::next_permutation(rest.begin() + 1, rest.end()));
    return out;
}

std::vector<Perm> st_nk(int n, int k) {
    std::vector<Perm> out;
    for (auto& w : st_all(n))
        if (recoils(w) == k) out.push_back(w);
    return out;
}

int mul(const Partition& lambda) {
    int m = 0;
    for (int p : lambda)
        if (p == lambda[0]) ++m;
    return m;
}

int last_part(const Partition& lambda) { return lambda.empty() ? 0 : lambda.back(); }

bool is_valid_partition(const Partition& lambda, int n) {
    if (lambda.empty()) return false;
    int len = int(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 1) return false;
        if (i && lambda[i] > lambda[i - 1]) return false;
    }
    if (lambda[0] > n - len) return false;
    bool full = lambda[0] == n - len && lambda.back() == n - len;
    return !full;
}

namespace {

void partitions_in_box(int rows, int maxpart, Partition& cur, std::vector<Partition>& out) {
    if (int(cur.size()) == rows) {
        out.push_back(cur);
        return;
    }
    int hi = cur.empty() ? maxpart : cur.back();
    for (int p = hi; p >= 1; --p) {
        cur.push_back(p);
        partitions_in_box(rows, maxpart, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> val_n(int n) {
    std::vector<Partition> out;
    for (int len = 1; len < n; ++len) {
        std::vector<Partition> ps;
        Partition cur;
        partitions_in_box(len, n - len, cur, ps);
        for (auto& p : ps)
            if (is_valid_partition(p, n)) out.push_back(p);
    }
    return out;
}

bool is_parseq(const ParSeq& ps, int n) {
    for (auto& l : ps)
        if (!is_valid_partition(l, n)) return false;
    for (size_t i = 0; i + 1 < ps.size(); ++i) {
        int ell = ps[i].back();
        int need = n - ell;
        const Partition& nxt = ps[i + 1];
        if (int(nxt.size()) < need) return false;
        for (int t = 1; t < need; ++t)
            if (nxt[t] != nxt[0]) return false;
    }
    return true;
}

std::vector<ParSeq> parseq_enumerate(int n, int k) {
    std::vector<ParSeq> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    auto vals = val_n(n);
    std::vector<ParSeq> cur;
    for (auto& l : vals) cur.push_back({l});
    for (int step = 1; step < k; ++step) {
        std::vector<ParSeq> next;
        for (auto& s : cur)
            for (auto& l : vals) {
                ParSeq t = s;
                t.push_back(l);
                if (is_parseq(t, n)) next.push_back(std::move(t));
            }
        cur = std::move(next);
    }
    return cur;
}

Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Int T_closed(int n, int k) {
    if (k == 0) return 1;
    Int total = 0;
    for (int i = 0; i <= n - k - 2; ++i) total += (Int(1) << i) * binomial(i + k - 1, k - 1) * binomial(n - 2 - i, k);
    return total;
}

ParSeq psi(const Perm& w) {
    int n = int(w.size());
    int k = recoils(w);
    if (!is_k_grassmannian_state(w, k)) throw NotSpecialState("state is not k-Grassmannian");
    Code c = code(inverse(w));
    std::vector<int> a = {0};
    for (int j = 1; j < n; ++j)
        if (c[j - 1] > c[j]) a.push_back(j);
    ParSeq out;
    for (size_t i = 1; i < a.size(); ++i) {
        Partition lam;
        for (int t = 1; t <= a[i]; ++t) {
            int sub = t <= a[i - 1] ? 0 : c[t - 1];
            int part = n - a[i] - sub;
            if (part > 0) lam.push_back(part);
        }
        out.push_back(lam);
    }
    return out;
}

Perm psi_inverse(const ParSeq& ps, int n) {
    if (!is_parseq(ps, n)) throw InvalidParSeq("not a valid partition sequence");
    Code c(n, 0);
    for (auto& lam : ps) {
        int f = lam[0];
        for (int t = 0; t < n - f; ++t) c[t] += f - (t < int(lam.size()) ? lam[t] : 0);
    }
    if (!is_valid_code(c)) throw InvalidParSeq("sum of codes is not a code");
    return inverse(code_inverse(c));
}

Code g_n(const Partition& lambda, int n) {
    if (lambda.empty()) throw NotValid("empty partition");
    Code v(n, 0);
    size_t i = 0;
    while (i < lambda.size()) {
        int mu = lambda[i];
        int k = 0;
        while (i < lambda.size() && lambda[i] == mu) {
            ++k;
            ++i;
        }
        int pos = n - mu;  // 1-based
        if (pos < 1 || v[pos - 1] != 0) throw NotValid("g_n has no free slot for a part");
        v[pos - 1] = mu;
        int left = k - 1;
        for (int p = pos - 1; p >= 1 && left > 0; --p)
            if (v[p - 1] == 0) {
                v[p - 1] = mu;
                --left;
            }
        if (left > 0) throw NotValid("g_n ran out of positions");
    }
    return v;
}

Int e_recurrence(int n) {
    if (n <= 1) return 1;
    Int a = 1, b = 2;
    for (int i = 3; i <= n; ++i) {
        Int c = 4 * b - 2 * a;
        a = b;
        b = c;
    }
    return b;
}

Int e_closed(int n) {
    // (2 + sqrt2)^(n-1) = p + q sqrt2; the conjugate sum halves to p.
    Int p = 1, q = 0;
    for (int i = 0; i < n - 1; ++i) {
        Int np = 2 * p + 2 * q;
        Int nq = p + 2 * q;
        p = np;
        q = nq;
    }
    return p;
}

long long e_exhaustive(int n) {
    long long count = 0;
    Perm w = identity_perm(n);
    do
        if (is_evil_avoiding(w)) ++count;
    while (std::next_permutation(w.begin(), w.end()));
    return count;
}

std::vector<int> alpha(const Perm& w) {
    int n = int(w.size());
    Perm pos = inverse(w);
    std::vector<int> out;
    for (int i = 1; i <= n - 2; ++i) {
        int r = pos[i] - 1, s = pos[i - 1] - 1;  // 0-based positions of i+1 and i
        int cnt = 0;
        for (int t = r;; t = (t + 1) % n) {
            if (w[t] > i + 1) ++cnt;
            if (t == s) break;
        }
        out.push_back(cnt);
    }
    return out;
}

std::vector<int> eta_exponents(const Perm& w) {
    auto a = alpha(w);
    std::vector<int> e(a.size(), 0);
    int acc = 0;
    for (int i = int(a.size()) - 1; i >= 0; --i) {
        acc += a[i];
        e[i] = acc;
    }
    return e;
}

Perm s_construct(const std::vector<int>& b) {
    int n = int(b.size()) + 2;
    for (int i = 1; i <= n - 2; ++i)
        if (b[i - 1] < 0 || b[i - 1] > i) throw std::out_of_range("S(b) requires 0 <= b_i <= i");
    Perm w = identity_perm(n);
    for (int i = 1; i <= n - 2; ++i) {
        int bi = b[i - 1];
        Perm nw;
        for (int t = 1; t <= n - i - 1; ++t) nw.push_back(t);
        for (int t = n - bi + 1; t <= n; ++t) nw.push_back(w[t - 1]);
        nw.push_back(n - i);
        for (int t = n - i + 1; t <= n - bi; ++t) nw.push_back(w[t - 1]);
        w = nw;
    }
    return w;
}

std::vector<int> shifting_vector(const ParSeq& ps, int n) {
    std::vector<int> a;
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i == 0)
            a.push_back(0);
        else
            a.push_back(a.back() + ps[i - 1][0] + int(ps[i - 1].size()) - n);
    }
    return a;
}

Perm w_of_lambda(const Partition& lambda, int n) {
    if (!is_valid_partition(lambda, n)) throw NotValid("partition not valid for n");
    int rows = n - lambda[0];
    auto part = [&](int r) { return r <= int(lambda.size()) ? lambda[r - 1] : 0; };
    Perm w;
    int h = rows + 1;
    for (int r = 1; r <= rows; ++r) {
        w.push_back(r);
        for (int t = 0; t < part(r) - part(r + 1); ++t) w.push_back(h++);
    }
    return w;
}

Perm direct_sum(const Perm& u, const Perm& v) {
    Perm r = u;
    int m = int(u.size());
    for (int a : v) r.push_back(a + m);
    return r;
}

Perm wbar(const Partition& lambda, int n) {
    Perm u = rotate(w_of_lambda(lambda, n), int(lambda.size()) + lambda[0] - n);
    u.resize(n - last_part(lambda));
    return u;
}

Decomposition decompose(const Perm& w) {
    int n = int(w.size());
    ParSeq ps = psi(w);
    if (ps.size() < 2) throw std::invalid_argument("decomposition needs k >= 2");
    Decomposition d;
    d.a2 = shifting_vector(ps, n)[1];
    Perm r = rotate(w, d.a2);
    int m = n - last_part(ps[0]);
    d.wbar = Perm(r.begin(), r.begin() + m);
    if (d.wbar != wbar(ps[0], n)) throw std::logic_error("first block differs from wbar");
    for (int t = m; t < n; ++t) d.wprime.push_back(r[t] - m);
    if (!is_permutation(d.wprime)) throw std::logic_error("second block is not a permutation");
    d.wdown = direct_sum(identity_perm(m), d.wprime);
    return d;
}

std::string perm_to_string(const Perm& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
    return s;
}

std::string partition_to_string(const Partition& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s;
}

std::string parseq_to_string(const ParSeq& ps) {
    if (ps.empty()) return "()";
    std::string s;
    for (size_t i = 0; i < ps.size(); ++i) s += (i ? " " : "") + ("(" + partition_to_string(ps[i]) + ")");
    return s;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string tok;
    bool sep = s.find_first_of(", ") != std::string::npos;
    if (!sep) {
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("bad list: " + s);
            out.push_back(ch - '0');
        }
        return out;
    }
    std::string norm = s;
    std::replace(norm.begin(), norm.end(), ',', ' ');
    std::istringstream in2(norm);
    while (in2 >> tok) out.push_back(std::stoi(tok));
    return out;
}

Perm parse_perm(const std::string& s) {
    Perm w = parse_int_list(s);
    if (!is_permutation(w)) throw std::invalid_argument("not a permutation: " + s);
    return w;
}

}  // namespace ts
