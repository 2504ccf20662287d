#include "tasep_schubert/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include "tasep_schubert/tasep.hpp"

namespace ts {

size_t RateMatrix::index(const Perm& w) const {
    auto it = std::lower_bound(states.begin(), states.end(), w);
    if (it == states.end() || *it != w) throw std::out_of_range("unknown state");
    return size_t(it - states.begin());
}

bool RateMatrix::strongly_connected() const {
    size_t N = size();
    auto reach = [&](bool forward) {
        std::vector<char> seen(N, 0);
        std::queue<size_t> todo;
        todo.push(0);
        seen[0] = 1;
        while (!todo.empty()) {
            size_t a = todo.front();
            todo.pop();
            for (size_t b = 0; b < N; ++b) {
                const Rational& r = forward ? q[a][b] : q[b][a];
                if (a != b && r != 0 && !seen[b]) {
                    seen[b] = 1;
                    todo.push(b);
                }
            }
        }
        return std::count(seen.begin(), seen.end(), 1) == std::ptrdiff_t(N);
    };
    return N > 0 && reach(true) && reach(false);
}

RateMatrix build_generator(int n, const std::vector<Rational>& x, const std::vector<Rational>& y) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (int(x.size()) < n - 1 || int(y.size()) < n - 1) throw std::invalid_argument("need x_1..x_{n-1}, y_1..y_{n-1}");
    RateMatrix m;
    m.states = all_perms(n);
    std::sort(m.states.begin(), m.states.end());
    size_t N = m.size();
    m.q.assign(N, std::vector<Rational>(N, Rational(0)));
    for (size_t a = 0; a < N; ++a) {
        const Perm& w = m.states[a];
        for (int p = 0; p < n; ++p) {
            int p2 = (p + 1) % n;
            int i = w[p], j = w[p2];
            if (i >= j) continue;
            Rational rate = x[i - 1] - y[n - j];
            if (rate <= 0)
                throw InadmissibleRates("x" + std::to_string(i) + " - y" + std::to_string(n + 1 - j) + " is not positive");
            Perm u = w;
            std::swap(u[p], u[p2]);
            size_t b = m.index(u);
            m.q[a][b] += rate;
            m.q[a][a] -= rate;
        }
    }
    return m;
}

std::vector<Rational> stationary(const RateMatrix& m) {
    size_t N = m.size();
    if (N == 0) throw DegenerateKernel("empty chain");
    // A = Q^T with each row scaled to integers
    std::vector<std::vector<Int>> a(N, std::vector<Int>(N));
    for (size_t r = 0; r < N; ++r) {
        Int l = 1;
        for (size_t c = 0; c < N; ++c) {
            Int d = denominator(m.q[c][r]);
            l = l / gcd(l, d) * d;
        }
        for (size_t c = 0; c < N; ++c) a[r][c] = numerator(m.q[c][r]) * (l / denominator(m.q[c][r]));
    }
    // Bareiss forward elimination with column pivoting
    std::vector<size_t> pivot_col;
    Int prev = 1;
    size_t row = 0;
    for (size_t col = 0; col < N && row < N; ++col) {
        size_t p = row;
        while (p < N && a[p][col] == 0) ++p;
        if (p == N) continue;
        std::swap(a[p], a[row]);
        for (size_t r = row + 1; r < N; ++r) {
            for (size_t c = col + 1; c < N; ++c) a[r][c] = (a[row][col] * a[r][c] - a[r][col] * a[row][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[row][col];
        pivot_col.push_back(col);
        ++row;
    }
    if (pivot_col.size() != N - 1) throw DegenerateKernel("kernel dimension " + std::to_string(N - pivot_col.size()));
    size_t free_col = 0;
    for (size_t k = 0; k < N; ++k)
        if (k >= pivot_col.size() || pivot_col[k] != k) {
            free_col = k;
            break;
        }
    std::vector<Rational> v(N, Rational(0));
    v[free_col] = 1;
    for (size_t k = pivot_col.size(); k-- > 0;) {
        size_t pc = pivot_col[k];
        Rational s = 0;
        for (size_t c = pc + 1; c < N; ++c)
            if (a[k][c] != 0) s += Rational(a[k][c]) * v[c];
        v[pc] = -s / Rational(a[k][pc]);
    }
    Rational total = std::accumulate(v.begin(), v.end(), Rational(0));
    for (auto& e : v) e /= total;
    return v;
}

size_t rank_mod_p(const RateMatrix& m, uint64_t p) {
    size_t N = m.size();
    auto mulmod = [p](uint64_t u, uint64_t w) { return uint64_t((unsigned __int128)u * w % p); };
    auto powmod = [&](uint64_t b, uint64_t e) {
        uint64_t r = 1;
        for (; e; e >>= 1, b = mulmod(b, b))
            if (e & 1) r = mulmod(r, b);
        return r;
    };
    auto reduce = [&](const Int& z) {
        Int r = z % Int(p);
        if (r < 0) r += Int(p);
        return uint64_t(r);
    };
    std::vector<std::vector<uint64_t>> a(N, std::vector<uint64_t>(N));
    for (size_t r = 0; r < N; ++r)
        for (size_t c = 0; c < N; ++c) {
            uint64_t d = reduce(denominator(m.q[r][c]));
            if (d == 0) throw std::invalid_argument("denominator divisible by p");
            a[r][c] = mulmod(reduce(numerator(m.q[r][c])), powmod(d, p - 2));
        }
    size_t rank = 0;
    for (size_t col = 0; col < N && rank < N; ++col) {
        size_t piv = rank;
        while (piv < N && a[piv][col] == 0) ++piv;
        if (piv == N) continue;
        std::swap(a[piv], a[rank]);
        uint64_t inv = powmod(a[rank][col], p - 2);
        for (size_t r = rank + 1; r < N; ++r) {
            if (a[r][col] == 0) continue;
            uint64_t f = mulmod(a[r][col], inv);
            for (size_t c = col; c < N; ++c) a[r][c] = (a[r][c] + p - mulmod(f, a[rank][c])) % p;
        }
        ++rank;
    }
    return rank;
}

namespace {

uint64_t next_u64(uint64_t& state) {
    std::mt19937_64 g(state);
    state = g();
    return state;
}

bool admissible(int n, const OraclePoint& pt) {
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (pt.x[i - 1] - pt.y[n - j] <= 0) return false;
    return true;
}

std::string point_to_string(const OraclePoint& pt) {
    std::string s = "x=(";
    for (size_t i = 0; i < pt.x.size(); ++i) s += (i ? "," : "") + pt.x[i].str();
    s += ") y=(";
    for (size_t i = 0; i < pt.y.size(); ++i) s += (i ? "," : "") + pt.y[i].str();
    return s + ")";
}

}  // namespace

OraclePoint random_admissible_point(int n, bool y_zero, uint64_t& state) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (;;) {
        OraclePoint pt;
        std::vector<int> ps(std::begin(primes), std::end(primes));
        for (int i = 0; i < n - 1; ++i) {
            size_t k = i + next_u64(state) % (ps.size() - i);
            std::swap(ps[i], ps[k]);
            pt.x.push_back(Rational(ps[i], int(1 + next_u64(state) % 3)));
            pt.y.push_back(y_zero ? Rational(0) : Rational(int(next_u64(state) % 5)));
        }
        if (admissible(n, pt)) return pt;
    }
}

Report cross_validate(int n, int trials, unsigned long long seed, bool y_zero, int jobs,
                      const std::map<Perm, Polynomial>* table) {
    Report r;
    r.suite = "oracle";
    r.seed = seed;
    r.seconds = timed([&] {
        std::map<Perm, Polynomial> own;
        if (!table) {
            own = psi_all(n, y_zero);
            table = &own;
        }
        uint64_t state = seed;
        std::vector<OraclePoint> pts;
        for (int t = 0; t < trials; ++t) pts.push_back(random_admissible_point(n, y_zero, state));
        std::vector<std::pair<bool, std::string>> out(pts.size());
        parallel_for(pts.size(), jobs, [&](size_t t) {
            const OraclePoint& pt = pts[t];
            RateMatrix m = build_generator(n, pt.x, pt.y);
            auto pi = stationary(m);
            Point at;
            at.x.push_back(0);
            at.y.push_back(0);
            at.z.push_back(0);
            for (int i = 0; i < n; ++i) {
                at.x.push_back(i < n - 1 ? pt.x[i] : Rational(0));
                at.y.push_back(i < n - 1 ? pt.y[i] : Rational(0));
                at.z.push_back(0);
            }
            size_t id = m.index(identity_perm(n));
            Rational psi_id = evaluate(table->at(identity_perm(n)), at);
            Rational worst = 0;
            bool positive = true;
            for (size_t k = 0; k < m.size(); ++k) {
                positive = positive && pi[k] > 0;
                Rational dev = abs(pi[k] / pi[id] - evaluate(table->at(m.states[k]), at) / psi_id);
                worst = std::max(worst, dev);
            }
            out[t] = {positive && worst == 0, point_to_string(pt) + " max deviation " + worst.str()};
        });
        for (size_t t = 0; t < pts.size(); ++t)
            r.add("n=" + std::to_string(n) + (y_zero ? " y=0" : "") + " trial " + std::to_string(t + 1),
                  "stationary ratios", out[t].first, out[t].second);
    });
    return r;
}

}  // namespace ts
