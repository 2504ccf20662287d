#include "tasep_schubert/zschubert.hpp"

#include <map>
#include <mutex>

#include "tasep_schubert/schubert.hpp"

namespace ts {

namespace {

std::mutex zs_mutex;
std::map<std::tuple<Partition, int, bool>, Polynomial> zs_cache;

Partition tail(const Partition& lambda, int k) { return Partition(lambda.begin() + k, lambda.end()); }

int part(const Partition& lambda, int i) { return i < int(lambda.size()) ? lambda[i] : 0; }

Partition drop_zeros(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Polynomial y_or_zero(int j, bool y_zero) { return y_zero ? Polynomial(0) : Polynomial::var(Y(j)); }

// (v - y_j), or v when y = 0
Polynomial minus_y(VarRef v, int j, bool y_zero) { return Polynomial::var(v) - y_or_zero(j, y_zero); }

}  // namespace

Polynomial shift_z_open(const Polynomial& p, int a) {
    if (a == 0) return p;
    int top = 0, bottom = kMaxIndex + 1;
    for (auto& t : p.terms())
        for (int i = 1; i <= kMaxIndex; ++i)
            if (t.m.exp(Z(i))) {
                top = std::max(top, i);
                bottom = std::min(bottom, i);
            }
    if (top == 0) return p;
    if (top + a > kMaxIndex || bottom + a < 1) throw std::out_of_range("z shift leaves the block");
    // rotating the whole block is enough since no occupied index wraps
    std::array<uint8_t, kSlots> perm{};
    for (int s = 0; s < kSlots; ++s) perm[s] = uint8_t(s);
    for (int i = 1; i <= kMaxIndex; ++i) {
        int j = ((i - 1 + a) % kMaxIndex + kMaxIndex) % kMaxIndex + 1;
        perm[slot_of(Z(i))] = uint8_t(slot_of(Z(j)));
    }
    return permute_slots(p, perm);
}

Polynomial z_schubert_unchecked(const Partition& lambda, int n, bool y_zero) {
    if (lambda.empty()) return 1;
    auto key = std::make_tuple(lambda, n, y_zero);
    {
        std::lock_guard<std::mutex> g(zs_mutex);
        auto it = zs_cache.find(key);
        if (it != zs_cache.end()) return it->second;
    }
    int l1 = lambda[0], l2 = part(lambda, 1), mu = mul(lambda);
    int d = l1 - l2 + 1, m = n - l1 - mu;
    if (m < 0) throw NotValid("z-Schubert recursion leaves its range");
    Polynomial inner = z_schubert_unchecked(tail(lambda, 1), n - 1, y_zero);
    Polynomial g = shift_z_open(skip_var(inner, Block::X, 1), d);
    for (int l = 1; l <= n - mu; ++l) g *= minus_y(X(1), l, y_zero);
    for (int i = 1; i <= d; ++i)
        for (int k = 2; k <= m + 1; ++k) g *= binom(Z(i), X(k));
    for (int i = 1; i <= m; ++i) g = divided_difference(g, i, Block::X);
    std::lock_guard<std::mutex> lock(zs_mutex);
    zs_cache.emplace(key, g);
    return g;
}

Polynomial z_schubert(const Partition& lambda, int n, bool y_zero) {
    if (lambda.empty()) return 1;
    if (!is_valid_partition(lambda, n)) throw NotValid("partition not in Val(n)");
    return z_schubert_unchecked(lambda, n, y_zero);
}

Polynomial z_schubert(const Partition& lambda, int n, int shift, bool wrap, bool y_zero) {
    Polynomial p = z_schubert(lambda, n, y_zero);
    if (!shift) return p;
    return wrap ? shift_z(p, shift, n) : shift_z_open(p, shift);
}

bool lc_equals_schubert(const Partition& lambda, int n, bool y_zero) {
    Polynomial lc = leading_coeff_z(z_schubert(lambda, n, y_zero));
    Perm w = code_inverse(g_n(lambda, n));
    return lc == double_schubert_dd(w, 0, WordStrategy::LargestAscent, y_zero);
}

bool lc_equals_flagged_schur(const Partition& lambda, int n) {
    Polynomial lc = leading_coeff_z(z_schubert(lambda, n, true));
    return lc == flagged_schur(lambda, row_flags(lambda, n));
}

bool check_specialization(const Partition& lambda, int n, int a, bool y_zero) {
    if (lambda.empty() || a < 1 || a > n - lambda[0]) throw std::invalid_argument("specialization index out of range");
    int l1 = lambda[0], l2 = part(lambda, 1), mu = mul(lambda);
    int d = l1 - l2 + 1;
    Polynomial lhs = substitute(z_schubert_unchecked(lambda, n, y_zero), {{Z(1), Polynomial::var(X(a))}});
    Polynomial rhs = shift_z_open(skip_var(z_schubert_unchecked(tail(lambda, 1), n - 1, y_zero), Block::X, a), d);
    for (int l = 1; l <= n - mu; ++l) rhs *= minus_y(X(a), l, y_zero);
    for (int i = 2; i <= d; ++i)
        for (int k = 1; k <= n - l1 - mu + 1; ++k)
            if (k != a) rhs *= binom(Z(i), X(k));
    return lhs == rhs;
}

bool check_first_part_lowering(const Partition& lambda, int n, bool y_zero) {
    if (lambda.empty() || !(lambda[0] > part(lambda, 1))) throw std::invalid_argument("first part must be strictly largest");
    int l1 = lambda[0], l2 = part(lambda, 1);
    Polynomial lhs = z_schubert_unchecked(lambda, n, y_zero);
    for (int i = 3; i <= l1 - l2 + 1; ++i) lhs *= binom(Z(i), X(n + 1 - l1));
    Partition lower = lambda;
    lower[0] -= 1;
    lower = drop_zeros(lower);
    Polynomial inner = shift_z_open(z_schubert_unchecked(lower, n, y_zero), 1);
    for (int i = 1; i <= n - l1; ++i) inner *= binom(Z(1), X(i));
    // a zero first part repeats over all remaining rows
    int ml = lower.empty() ? n : mul(lower);
    for (int i = 1; i <= ml - 1; ++i) inner *= minus_y(Z(2), n - i, y_zero);
    return lhs == divided_difference(inner, Z(1), Z(2));
}

bool check_repeated_part_lowering(const Partition& lambda, int n, bool y_zero) {
    int b = lambda.empty() ? 0 : mul(lambda);
    if (b < 2) throw std::invalid_argument("largest part must repeat");
    int l1 = lambda[0];
    Partition rest = tail(lambda, b);
    int t1 = part(rest, 0);
    Polynomial lhs = z_schubert_unchecked(lambda, n, y_zero);
    for (int i = 1; i <= b - 1; ++i) lhs *= minus_y(Z(i), n + 1 - b, y_zero);
    for (int i = b + 2; i <= b + l1 - t1; ++i) lhs *= binom(Z(i), X(n + 1 - l1));
    Partition lower(lambda.begin(), lambda.begin() + b);
    lower[b - 1] -= 1;
    lower.insert(lower.end(), rest.begin(), rest.end());
    lower = drop_zeros(lower);
    Partition tail_shape = {l1 - 1};
    tail_shape.insert(tail_shape.end(), rest.begin(), rest.end());
    tail_shape = drop_zeros(tail_shape);
    Polynomial inner = z_schubert_unchecked(lower, n, y_zero);
    int mt = tail_shape.empty() ? n + 1 - b : mul(tail_shape);
    for (int i = 1; i <= mt - 1; ++i) inner *= minus_y(Z(b + 1), n + 1 - b - i, y_zero);
    return lhs == divided_difference(inner, Z(b), Z(b + 1));
}

Rational subset_sum_expansion(const Partition& lambda, int n, int k, const Point& pt) {
    if (k < 1 || k > mul(lambda)) throw std::invalid_argument("k must lie in 1..mul(lambda)");
    int l1 = lambda[0], mu = mul(lambda);
    Partition rest = tail(lambda, k);
    int N = n - l1 - mu + k;
    int shift = l1 - part(lambda, k) + k;
    Polynomial inner = z_schubert_unchecked(rest, n - k);
    Rational total = 0;
    for (int mask = 0; mask < (1 << N); ++mask) {
        if (__builtin_popcount(unsigned(mask)) != k) continue;
        auto in_i = [&](int i) { return (mask >> (i - 1)) & 1; };
        Point q;
        q.y = pt.y;
        q.x = {Rational(0)};
        for (int i = 1; i < int(pt.x.size()); ++i)
            if (i > N || !in_i(i)) q.x.push_back(pt.x[i]);
        q.z = {Rational(0)};
        for (int i = 1; i + shift < int(pt.z.size()); ++i) q.z.push_back(pt.z[i + shift]);
        Rational term = evaluate(inner, q);
        for (int i = 1; i <= N; ++i) {
            if (!in_i(i)) continue;
            for (int l = 1; l <= n - mu; ++l) term *= pt.x[i] - pt.y[l];
            for (int j = 1; j <= N; ++j)
                if (!in_i(j)) term /= pt.x[i] - pt.x[j];
        }
        for (int i = 1; i <= shift; ++i)
            for (int j = 1; j <= N; ++j)
                if (!in_i(j)) term *= pt.z[i] - pt.x[j];
        total += term;
    }
    return total;
}

bool check_subset_sum(const Partition& lambda, int n, int k, const Point& pt) {
    return evaluate(z_schubert_unchecked(lambda, n), pt) == subset_sum_expansion(lambda, n, k, pt);
}

int x_symmetry_extent(const Polynomial& p, int n) {
    int m = 1;
    while (m < n && swap_vars(p, X(m), X(m + 1)) == p) ++m;
    return m;
}

}  // namespace ts
