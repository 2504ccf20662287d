#include "tasep_schubert/schubert.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace ts {

Polynomial delta(int n, bool y_zero) {
    Polynomial p = 1;
    for (int i = 1; i < n; ++i) {
        if (y_zero) {
            p *= Polynomial::var(X(i), n - i);
            continue;
        }
        for (int j = 1; i + j <= n; ++j) p *= binom(X(i), Y(j));
    }
    return p;
}

namespace {

int pick_ascent(const Perm& u, WordStrategy s) {
    int n = int(u.size());
    if (s == WordStrategy::LargestAscent) {
        for (int i = n - 1; i >= 1; --i)
            if (u[i - 1] < u[i]) return i;
    } else {
        for (int i = 1; i < n; ++i)
            if (u[i - 1] < u[i]) return i;
    }
    return 0;
}

Perm pad(const Perm& w, int n) {
    Perm u = w;
    for (int i = int(w.size()) + 1; i <= n; ++i) u.push_back(i);
    return u;
}

std::mutex dd_mutex;
std::map<std::tuple<Perm, int, bool>, Polynomial> dd_cache;

}  // namespace

std::vector<int> reduced_word_to_top(const Perm& w, WordStrategy s) {
    std::vector<int> word;
    Perm u = w;
    while (int i = pick_ascent(u, s)) {
        word.push_back(i);
        std::swap(u[i - 1], u[i]);
    }
    return word;
}

Polynomial double_schubert_dd(const Perm& w, int n, WordStrategy s, bool y_zero) {
    if (!is_permutation(w)) throw std::invalid_argument("not a permutation");
    Perm u = pad(w, std::max<int>(n, int(w.size())));
    auto key = std::make_tuple(u, int(s), y_zero);
    {
        std::lock_guard<std::mutex> g(dd_mutex);
        auto it = dd_cache.find(key);
        if (it != dd_cache.end()) return it->second;
    }
    Polynomial p;
    int i = pick_ascent(u, s);
    if (i == 0) {
        p = delta(int(u.size()), y_zero);
    } else {
        Perm v = u;
        std::swap(v[i - 1], v[i]);
        p = divided_difference(double_schubert_dd(v, 0, s, y_zero), i, Block::X);
    }
    std::lock_guard<std::mutex> g(dd_mutex);
    dd_cache.emplace(key, p);
    return p;
}

std::vector<std::pair<Perm, Int>> schubert_expand(const Polynomial& p) {
    if (p.degree_in(Block::Y) > 0 || p.degree_in(Block::Z) > 0)
        throw std::invalid_argument("Schubert expansion needs an x-only polynomial");
    std::vector<std::pair<Perm, Int>> out;
    Polynomial r = p;
    while (!r.is_zero()) {
        const Term* low = &r.terms().front();
        for (auto& t : r.terms())
            if (std::memcmp(t.m.e.data(), low->m.e.data(), kSlots) < 0) low = &t;
        Code c;
        for (int i = 1; i <= kMaxIndex; ++i) c.push_back(low->m.exp(X(i)));
        int n = 0;
        for (int i = 0; i < int(c.size()); ++i)
            if (c[i]) n = std::max(n, i + 1 + c[i]);
        c.resize(std::max(n, 1), 0);
        Perm w = code_inverse(c);
        while (w.size() > 1 && w.back() == int(w.size())) w.pop_back();
        Int coeff = low->c;
        r -= schubert(w, true) * Polynomial(coeff);
        out.push_back({w, coeff});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string schubert_sum_to_string(const std::vector<std::pair<Perm, Int>>& sum) {
    if (sum.empty()) return "0";
    std::string s;
    for (auto& [w, c] : sum) {
        if (!s.empty()) s += " + ";
        if (c != 1) s += c.str() + "*";
        s += "S_";
        for (size_t i = 0; i < w.size(); ++i) s += (w.size() > 9 && i ? "," : "") + std::to_string(w[i]);
    }
    return s;
}

Diagram initial_diagram(const Perm& w) {
    Code c = code(w);
    Diagram d;
    for (int i = 1; i <= int(c.size()); ++i)
        for (int j = 1; j <= c[i - 1]; ++j) d.push_back({i, j});
    return d;
}

std::vector<Diagram> ladder_moves(const Diagram& D) {
    std::set<Cell> s(D.begin(), D.end());
    std::vector<Diagram> out;
    for (auto [i, j] : D) {
        if (s.count({i, j + 1})) continue;
        for (int m = 1; m < i; ++m) {
            bool a = s.count({i - m, j}), b = s.count({i - m, j + 1});
            if (!a && !b) {
                Diagram e;
                for (auto c : D)
                    if (c != Cell{i, j}) e.push_back(c);
                e.push_back({i - m, j + 1});
                std::sort(e.begin(), e.end());
                out.push_back(std::move(e));
                break;
            }
            if (!(a && b)) break;
        }
    }
    return out;
}

std::vector<Diagram> rc_graphs(const Perm& w) {
    std::set<Diagram> seen;
    std::deque<Diagram> work;
    Diagram d0 = initial_diagram(w);
    seen.insert(d0);
    work.push_back(d0);
    while (!work.empty()) {
        Diagram d = std::move(work.front());
        work.pop_front();
        for (auto& e : ladder_moves(d))
            if (seen.insert(e).second) work.push_back(e);
    }
    return {seen.begin(), seen.end()};
}

Diagram transpose(const Diagram& D) {
    Diagram t;
    for (auto [i, j] : D) t.push_back({j, i});
    std::sort(t.begin(), t.end());
    return t;
}

Polynomial diagram_weight(const Diagram& D, bool y_zero) {
    Polynomial p = 1;
    for (auto [i, j] : D) p *= y_zero ? Polynomial::var(X(i)) : binom(X(i), Y(j));
    return p;
}

Polynomial double_schubert_rc(const Perm& w, bool y_zero) {
    Polynomial p;
    for (auto& d : rc_graphs(w)) p += diagram_weight(d, y_zero);
    return p;
}

std::string diagram_to_string(const Diagram& D) {
    int r = 0, c = 0;
    for (auto [i, j] : D) {
        r = std::max(r, i);
        c = std::max(c, j);
    }
    std::set<Cell> s(D.begin(), D.end());
    std::string out;
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= c; ++j) out += s.count({i, j}) ? '+' : '.';
        out += '\n';
    }
    return out;
}

bool is_vexillary(const Perm& w) { return !contains_pattern(w, {2, 1, 4, 3}); }

std::vector<int> flag(const Perm& w) {
    if (!is_vexillary(w)) throw NotVexillary("flag of a non-vexillary permutation");
    Code c = code(w);
    int n = int(c.size());
    std::vector<int> f;
    for (int i = 0; i < n; ++i) {
        if (!c[i]) continue;
        int e = i;
        for (int j = i; j < n; ++j)
            if (c[j] >= c[i]) e = j;
        f.push_back(e + 1);
    }
    std::sort(f.begin(), f.end());
    return f;
}

std::vector<Cell> essential_set(const Perm& w) {
    int n = int(w.size());
    Perm inv = inverse(w);
    auto in_d = [&](int i, int j) {
        return i >= 1 && i <= n && j >= 1 && j <= n && j < w[i - 1] && i < inv[j - 1];
    };
    std::vector<Cell> e;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (in_d(i, j) && !in_d(i + 1, j) && !in_d(i, j + 1) && !in_d(i + 1, j + 1)) e.push_back({i, j});
    return e;
}

namespace {

void fill_ssyt(const Partition& lambda, const std::vector<int>& d, std::vector<Cell>& cells, size_t k,
               Tableau& t, std::vector<Tableau>& out) {
    if (k == cells.size()) {
        out.push_back(t);
        return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= d[r]; ++v) {
        t[r][c] = v;
        fill_ssyt(lambda, d, cells, k + 1, t, out);
    }
}

}  // namespace

std::vector<Tableau> ssyt(const Partition& lambda, const std::vector<int>& d) {
    if (d.size() < lambda.size()) throw std::invalid_argument("missing row bounds");
    Tableau t;
    for (int len : lambda) t.push_back(std::vector<int>(len, 0));
    std::vector<Cell> cells;
    int cols = lambda.empty() ? 0 : lambda[0];
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < int(lambda.size()) && lambda[r] > c; ++r) cells.push_back({r, c});
    std::vector<Tableau> out;
    fill_ssyt(lambda, d, cells, 0, t, out);
    return out;
}

Polynomial flagged_schur(const Partition& lambda, const std::vector<int>& d) {
    std::vector<Term> terms;
    for (auto& t : ssyt(lambda, d)) {
        Monomial m;
        for (auto& row : t)
            for (int v : row) {
                ++m.e[slot_of(X(v))];
                ++m.deg;
            }
        terms.push_back({m, 1});
    }
    return Polynomial::from_terms(std::move(terms));
}

std::vector<int> row_flags(const Partition& lambda, int n) {
    std::vector<int> d;
    for (int p : lambda) d.push_back(n - p);
    return d;
}

bool pullout_applies(const Perm& w, int l) {
    Code ct = code(inverse(w));
    for (int m = l + 1; m <= int(ct.size()); ++m)
        if (ct[m - 1]) return false;
    return true;
}

bool linear_factor_pullout(const Perm& w, int l) {
    if (l < 0 || !pullout_applies(w, l)) throw HypothesisFails("inverse code does not vanish after l");
    Code c = code(w);
    Code c2 = {l};
    c2.insert(c2.end(), c.begin(), c.end());
    if (!is_valid_code(c2)) throw HypothesisFails("extended code is not a code");
    Perm w2 = code_inverse(c2);
    Polynomial rhs = skip_var(double_schubert_dd(w), Block::X, 1);
    for (int k = 1; k <= l; ++k) rhs *= binom(X(1), Y(k));
    return double_schubert_dd(w2) == rhs;
}

}  // namespace ts
