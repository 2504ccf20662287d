#include "tasep_schubert/factored.hpp"

#include <random>

namespace ts {

namespace {

using u64 = uint64_t;
constexpr u64 kPrime = (u64(1) << 61) - 1;

u64 mulmod(u64 a, u64 b) {
    unsigned __int128 r = (unsigned __int128)a * b;
    u64 lo = u64(r & kPrime), hi = u64(r >> 61);
    u64 s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
}

u64 residue(const Int& c) {
    Int r = c % kPrime;
    if (r < 0) r += kPrime;
    return r.convert_to<u64>();
}

// Terms flattened for repeated modular evaluation.
struct Compact {
    std::vector<u64> coef;
    std::vector<uint32_t> start;
    std::vector<std::pair<uint8_t, uint8_t>> vars;
    std::array<bool, kSlots> present{};

    explicit Compact(const Polynomial& p) {
        coef.reserve(p.size());
        start.reserve(p.size() + 1);
        for (auto& t : p.terms()) {
            coef.push_back(residue(t.c));
            start.push_back(uint32_t(vars.size()));
            for (int s = 0; s < kSlots; ++s)
                if (t.m.e[s]) {
                    vars.push_back({uint8_t(s), t.m.e[s]});
                    present[s] = true;
                }
        }
        start.push_back(uint32_t(vars.size()));
    }

    u64 eval(const std::array<u64, kSlots>& val) const {
        std::array<std::vector<u64>, kSlots> pw;
        u64 acc = 0;
        for (size_t i = 0; i < coef.size(); ++i) {
            u64 v = coef[i];
            for (uint32_t j = start[i]; j < start[i + 1]; ++j) {
                auto [s, e] = vars[j];
                auto& tab = pw[s];
                while (tab.size() <= e) tab.push_back(tab.empty() ? 1 : mulmod(tab.back(), val[s]));
                v = mulmod(v, tab[e]);
            }
            acc += v;
            if (acc >= kPrime) acc -= kPrime;
        }
        return acc;
    }
};

// Image of a key under a slot permutation; the bool is true when the sign flips.
std::pair<Factored::Key, bool> map_key(Factored::Key k, const std::array<uint8_t, kSlots>& perm) {
    int a = perm[k.first];
    if (k.second < 0) return {{a, -1}, false};
    int b = perm[k.second];
    if (a < b) return {{a, b}, false};
    return {{b, a}, true};
}

std::vector<Factored::Key> candidates(int n) {
    std::vector<Factored::Key> c;
    std::vector<int> xs, ys, zs;
    for (int i = 1; i <= n; ++i) {
        xs.push_back(slot_of(X(i)));
        ys.push_back(slot_of(Y(i)));
        zs.push_back(slot_of(Z(i)));
    }
    for (auto* blk : {&zs, &xs, &ys})
        for (int s : *blk) c.push_back({s, -1});
    for (int z : zs) {
        for (int x : xs) c.push_back({z, x});
        for (int y : ys) c.push_back({z, y});
    }
    for (int x : xs)
        for (int y : ys) c.push_back({x, y});
    return c;
}

}  // namespace

Factored::Key linear_key(VarRef a, VarRef b) {
    int sa = slot_of(a), sb = slot_of(b);
    if (sa >= sb) throw std::invalid_argument("linear_key expects the larger variable first");
    return {sa, sb};
}

Factored::Key linear_key(VarRef a) { return {slot_of(a), -1}; }

Polynomial Factored::linear(Key k) {
    Polynomial p = Polynomial::var(var_of_slot(k.first));
    if (k.second >= 0) p -= Polynomial::var(var_of_slot(k.second));
    return p;
}

Factored::Factored(const Polynomial& p, int n_) : n(n_), cofactor(p) { normalize(); }

void Factored::multiply(Key k, int e) {
    if (e) factors[k] += e;
}

void Factored::normalize() {
    if (cofactor.is_zero()) {
        factors.clear();
        return;
    }
    std::mt19937_64 rng(0x5eed);
    std::array<u64, kSlots> base;
    for (auto& v : base) v = rng() % kPrime;
    Compact cp(cofactor);
    for (Key k : candidates(n)) {
        while (cofactor.degree() > 0) {
            if (k.second < 0) {
                Monomial m;
                m.e[k.first] = 1;
                m.deg = 1;
                bool all = true;
                for (auto& t : cofactor.terms())
                    if (!t.m.e[k.first]) {
                        all = false;
                        break;
                    }
                if (!all) break;
                cofactor = exact_divide(cofactor, Polynomial::monomial(m));
            } else {
                if (!cp.present[k.first] || !cp.present[k.second]) break;
                auto val = base;
                val[k.first] = val[k.second];
                if (cp.eval(val) != 0) break;
                try {
                    cofactor = exact_divide(cofactor, linear(k));
                } catch (const NotDivisible&) {
                    break;
                }
            }
            ++factors[k];
            cp = Compact(cofactor);
        }
    }
}

Polynomial Factored::expand() const {
    Polynomial p = 1;
    for (auto& [k, e] : factors) p *= linear(k).pow(e);
    return p * cofactor;
}

int Factored::degree() const {
    int d = cofactor.degree();
    for (auto& [k, e] : factors) d += e;
    return d;
}

Factored Factored::permute(const std::array<uint8_t, kSlots>& perm) const {
    Factored r;
    r.n = n;
    bool neg = false;
    for (auto& [k, e] : factors) {
        auto [nk, flip] = map_key(k, perm);
        r.factors[nk] += e;
        if (flip && (e & 1)) neg = !neg;
    }
    r.cofactor = permute_slots(cofactor, perm);
    if (neg) r.cofactor = -r.cofactor;
    return r;
}

namespace {
std::array<uint8_t, kSlots> identity_slots() {
    std::array<uint8_t, kSlots> a{};
    for (int i = 0; i < kSlots; ++i) a[i] = uint8_t(i);
    return a;
}
}  // namespace

Factored Factored::shift_z(int a) const {
    auto perm = identity_slots();
    for (int i = 1; i <= n; ++i) perm[slot_of(Z(i))] = uint8_t(slot_of(Z(zmod(i + a, n))));
    return permute(perm);
}

Factored Factored::swap_z(int i, int j) const {
    auto perm = identity_slots();
    std::swap(perm[slot_of(Z(i))], perm[slot_of(Z(j))]);
    return permute(perm);
}

Rational Factored::evaluate(const Point& pt) const {
    Rational r = ts::evaluate(cofactor, pt);
    for (auto& [k, e] : factors) {
        Rational v = pt.at(var_of_slot(k.first));
        if (k.second >= 0) v -= pt.at(var_of_slot(k.second));
        for (int i = 0; i < e; ++i) r *= v;
    }
    return r;
}

Polynomial Factored::leading_coeff_z() const {
    Polynomial p = ts::leading_coeff_z(cofactor);
    for (auto& [k, e] : factors)
        if (var_of_slot(k.first).block != Block::Z) p *= linear(k).pow(e);
    return p;
}

Factored operator*(const Factored& a, const Factored& b) {
    Factored r;
    r.n = std::max(a.n, b.n);
    r.factors = a.factors;
    for (auto& [k, e] : b.factors) r.factors[k] += e;
    r.cofactor = a.cofactor * b.cofactor;
    if (a.n != b.n) r.normalize();
    if (r.cofactor.is_zero()) r.factors.clear();
    return r;
}

bool Factored::operator==(const Factored& o) const {
    return factors == o.factors && cofactor == o.cofactor;
}

Factored isobaric_pi(const Factored& G, int l, int beta, int alpha, bool y_zero) {
    if (!(alpha < beta)) throw std::invalid_argument("isobaric_pi requires alpha < beta");
    int n = G.n;
    VarRef zl = Z(zmod(l, n)), zl1 = Z(zmod(l + 1, n));
    auto perm = identity_slots();
    std::swap(perm[slot_of(zl)], perm[slot_of(zl1)]);

    Factored out;
    out.n = n;
    std::map<Factored::Key, int> rest = G.factors;
    Polynomial mixed = 1;
    for (auto& [k, e] : G.factors) {
        int& mine = rest[k];
        if (mine == 0) continue;
        auto [img, flip] = map_key(k, perm);
        if (img == k && !flip) {
            out.factors[k] += mine;
            mine = 0;
            continue;
        }
        if (img == k) continue;  // z_l - z_{l+1}; never a candidate
        auto it = rest.find(img);
        int common = it == rest.end() ? 0 : std::min(mine, it->second);
        if (common) {
            out.factors[k] += common;
            out.factors[img] += common;
            mine -= common;
            it->second -= common;
        }
    }
    for (auto& [k, e] : rest)
        if (e) mixed *= Factored::linear(k).pow(e);

    Polynomial H = divided_difference(mixed * G.cofactor, zl, zl1);
    if (H.is_zero()) {
        out.factors.clear();
        out.cofactor = 0;
        return out;
    }
    Factored::Key den = y_zero ? linear_key(X(alpha)) : linear_key(X(alpha), Y(n + 1 - beta));
    auto it = out.factors.find(den);
    if (it != out.factors.end() && it->second > 0) {
        if (--it->second == 0) out.factors.erase(it);
    } else {
        H = exact_divide(H, Factored::linear(den));
    }
    out.multiply(y_zero ? linear_key(zl) : linear_key(zl, Y(n + 1 - beta)));
    out.multiply(linear_key(zl1, X(alpha)));
    out.cofactor = std::move(H);
    out.normalize();
    return out;
}

std::string to_text(const Factored& f) {
    std::string s;
    for (auto& [k, e] : f.factors) {
        if (!e) continue;
        if (!s.empty()) s += "*";
        s += k.second < 0 ? to_text(Factored::linear(k)) : "(" + to_text(Factored::linear(k)) + ")";
        if (e > 1) s += "^" + std::to_string(e);
    }
    if (!(f.cofactor == Polynomial(1)) || s.empty()) {
        std::string c = to_text(f.cofactor);
        if (s.empty()) return c;
        s += "*(" + c + ")";
    }
    return s;
}

}  // namespace ts
