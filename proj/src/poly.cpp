#include "tasep_schubert/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace ts {

namespace {

int block_offset(Block b) {
    switch (b) {
        case Block::Z: return 0;
        case Block::X: return kMaxIndex;
        case Block::Y: return 2 * kMaxIndex;
    }
    return 0;
}

char block_char(Block b) {
    switch (b) {
        case Block::X: return 'x';
        case Block::Y: return 'y';
        case Block::Z: return 'z';
    }
    return '?';
}

bool term_greater(const Term& a, const Term& b) { return a.m.greater(b.m); }

std::vector<Term> merge_sorted(std::vector<Term> v) {
    std::sort(v.begin(), v.end(), term_greater);
    std::vector<Term> out;
    out.reserve(v.size());
    for (auto& t : v) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c += t.c;
        } else {
            if (!out.empty() && out.back().c == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().c == 0) out.pop_back();
    return out;
}

}  // namespace

int slot_of(VarRef v) {
    if (v.index < 1 || v.index > kMaxIndex)
        throw std::out_of_range("variable index out of range: " + std::to_string(v.index));
    return block_offset(v.block) + v.index - 1;
}

VarRef var_of_slot(int s) {
    if (s < kMaxIndex) return {Block::Z, s + 1};
    if (s < 2 * kMaxIndex) return {Block::X, s - kMaxIndex + 1};
    return {Block::Y, s - 2 * kMaxIndex + 1};
}

void Monomial::set(VarRef v, int k) {
    if (k < 0 || k > 255) throw std::out_of_range("exponent out of range");
    int s = slot_of(v);
    deg = static_cast<uint16_t>(deg - e[s] + k);
    e[s] = static_cast<uint8_t>(k);
}

int Monomial::block_degree(Block b) const {
    int o = block_offset(b), d = 0;
    for (int i = 0; i < kMaxIndex; ++i) d += e[o + i];
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kSlots; ++i) {
        unsigned s = unsigned(e[i]) + o.e[i];
        if (s > 255) throw std::overflow_error("exponent overflow");
        r.e[i] = static_cast<uint8_t>(s);
    }
    r.deg = static_cast<uint16_t>(deg + o.deg);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kSlots; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kSlots; ++i) r.e[i] = static_cast<uint8_t>(e[i] - o.e[i]);
    r.deg = static_cast<uint16_t>(deg - o.deg);
    return r;
}

size_t MonomialHash::operator()(const Monomial& m) const {
    uint64_t w[kSlots / 8];
    std::memcpy(w, m.e.data(), kSlots);
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (uint64_t x : w) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<size_t>(h ^ (h >> 33));
}

Polynomial::Polynomial(long long c) {
    if (c != 0) terms_.push_back({Monomial{}, Int(c)});
}

Polynomial::Polynomial(const Int& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::var(VarRef v, int power) {
    Monomial m;
    m.set(v, power);
    return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const Int& c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = merge_sorted(std::move(terms));
    return p;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.front().m.deg; }

int Polynomial::degree_in(Block b) const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, t.m.block_degree(b));
    return d;
}

int Polynomial::degree_in(VarRef v) const {
    int d = -1, s = slot_of(v);
    for (auto& t : terms_) d = std::max(d, int(t.m.e[s]));
    return d;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial add_scaled(const Polynomial& p, const Polynomial& q, const Monomial& m, const Int& c) {
    Polynomial r;
    if (c == 0) return p;
    auto& out = r.terms_;
    out.reserve(p.terms_.size() + q.terms_.size());
    size_t i = 0, j = 0;
    const auto& a = p.terms_;
    const auto& b = q.terms_;
    bool unit = m.is_one();
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        Monomial bm = unit ? b[j].m : b[j].m * m;
        if (i == a.size() || bm.greater(a[i].m)) {
            out.push_back({bm, b[j].c * c});
            ++j;
        } else if (a[i].m.greater(bm)) {
            out.push_back(a[i++]);
        } else {
            Int s = a[i].c + b[j].c * c;
            if (s != 0) out.push_back({bm, std::move(s)});
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    *this = add_scaled(*this, o, Monomial{}, 1);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    *this = add_scaled(*this, o, Monomial{}, -1);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const Polynomial& big = a.size() >= b.size() ? a : b;
    const Polynomial& small = a.size() >= b.size() ? b : a;
    if (small.size() <= 8) {
        Polynomial r;
        for (auto& t : small.terms()) r = add_scaled(r, big, t.m, t.c);
        return r;
    }
    std::unordered_map<Monomial, Int, MonomialHash> acc;
    acc.reserve(big.size() * 4);
    for (auto& s : small.terms())
        for (auto& t : big.terms()) acc[s.m * t.m] += s.c * t.c;
    std::vector<Term> v;
    v.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) v.push_back({m, c});
    return Polynomial::from_terms(std::move(v));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Int& c) const {
    Polynomial r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;
}

Polynomial Polynomial::pow(int k) const {
    Polynomial r = 1, b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

namespace {

// p / (u - v) by synthetic division in u.
Polynomial divide_by_var_difference(const Polynomial& p, int su, int sv, bool negate) {
    int D = 0;
    for (auto& t : p.terms()) D = std::max(D, int(t.m.e[su]));
    std::vector<std::vector<Term>> buckets(D + 1);
    for (auto& t : p.terms()) {
        Term s = t;
        int k = s.m.e[su];
        s.m.e[su] = 0;
        s.m.deg = static_cast<uint16_t>(s.m.deg - k);
        buckets[k].push_back(std::move(s));
    }
    Monomial vm;
    vm.e[sv] = 1;
    vm.deg = 1;
    Monomial um;
    um.e[su] = 1;
    um.deg = 1;
    // Q_{k-1} = P_k + v Q_k
    Polynomial Q, result;
    for (int k = D; k >= 1; --k) {
        Polynomial Pk = Polynomial::from_terms(std::move(buckets[k]));
        Q = add_scaled(Pk, Q, vm, 1);
        Monomial uk;
        uk.e[su] = static_cast<uint8_t>(k - 1);
        uk.deg = static_cast<uint16_t>(k - 1);
        result = add_scaled(result, Q, uk, negate ? -1 : 1);
    }
    Polynomial P0 = Polynomial::from_terms(std::move(buckets[0]));
    if (!add_scaled(P0, Q, vm, 1).is_zero()) throw NotDivisible("nonzero remainder");
    return result;
}

}  // namespace

Polynomial exact_divide_generic(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    struct Cmp {
        bool operator()(const Monomial& a, const Monomial& b) const { return a.greater(b); }
    };
    std::map<Monomial, Int, Cmp> r;
    for (auto& t : p.terms()) r.emplace(t.m, t.c);
    const Term& ld = d.leading();
    std::vector<Term> q;
    while (!r.empty()) {
        auto it = r.begin();
        if (!ld.m.divides(it->first)) throw NotDivisible("leading term not divisible");
        Int qc, rem;
        boost::multiprecision::divide_qr(it->second, ld.c, qc, rem);
        if (rem != 0) throw NotDivisible("coefficient not divisible");
        Monomial qm = it->first / ld.m;
        for (auto& t : d.terms()) {
            Monomial mm = t.m * qm;
            auto jt = r.find(mm);
            Int delta = -(t.c * qc);
            if (jt == r.end()) {
                r.emplace(mm, delta);
            } else {
                jt->second += delta;
                if (jt->second == 0) r.erase(jt);
            }
        }
        q.push_back({qm, qc});
    }
    return Polynomial::from_terms(std::move(q));
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (p.is_zero()) return {};
    if (d.size() == 1) {
        const Term& t = d.leading();
        std::vector<Term> q;
        q.reserve(p.size());
        for (auto& s : p.terms()) {
            if (!t.m.divides(s.m)) throw NotDivisible("monomial does not divide");
            Int qc, rem;
            boost::multiprecision::divide_qr(s.c, t.c, qc, rem);
            if (rem != 0) throw NotDivisible("coefficient not divisible");
            q.push_back({s.m / t.m, qc});
        }
        return Polynomial::from_terms(std::move(q));
    }
    if (d.size() == 2) {
        const Term& a = d.terms()[0];
        const Term& b = d.terms()[1];
        if (a.m.deg == 1 && b.m.deg == 1 && abs(a.c) == 1 && a.c == -b.c) {
            int su = -1, sv = -1;
            for (int s = 0; s < kSlots; ++s) {
                if (a.m.e[s]) su = s;
                if (b.m.e[s]) sv = s;
            }
            return divide_by_var_difference(p, su, sv, a.c < 0);
        }
    }
    return exact_divide_generic(p, d);
}

Polynomial permute_slots(const Polynomial& p, const std::array<uint8_t, kSlots>& perm) {
    std::vector<Term> v;
    v.reserve(p.size());
    for (auto& t : p.terms()) {
        Term s{Monomial{}, t.c};
        s.m.deg = t.m.deg;
        for (int i = 0; i < kSlots; ++i)
            if (t.m.e[i]) s.m.e[perm[i]] = t.m.e[i];
        v.push_back(std::move(s));
    }
    return Polynomial::from_terms(std::move(v));
}

namespace {
std::array<uint8_t, kSlots> identity_perm() {
    std::array<uint8_t, kSlots> a{};
    for (int i = 0; i < kSlots; ++i) a[i] = static_cast<uint8_t>(i);
    return a;
}
}  // namespace

Polynomial swap_vars(const Polynomial& p, VarRef a, VarRef b) {
    if (a.block != b.block) throw BlockMismatch("swap across blocks");
    auto perm = identity_perm();
    std::swap(perm[slot_of(a)], perm[slot_of(b)]);
    return permute_slots(p, perm);
}

Polynomial divided_difference(const Polynomial& p, VarRef a, VarRef b) {
    if (a.block != b.block) throw BlockMismatch("divided difference across blocks");
    int sa = slot_of(a), sb = slot_of(b);
    std::vector<Term> v;
    for (auto& t : p.terms()) {
        int pa = t.m.e[sa], pb = t.m.e[sb];
        if (pa == pb) continue;
        int lo = std::min(pa, pb), gap = std::abs(pa - pb);
        Int c = pa > pb ? t.c : Int(-t.c);
        Monomial base = t.m;
        base.deg = static_cast<uint16_t>(base.deg - pa - pb + 2 * lo + gap - 1);
        for (int k = 0; k < gap; ++k) {
            Monomial m = base;
            m.e[sa] = static_cast<uint8_t>(lo + k);
            m.e[sb] = static_cast<uint8_t>(lo + gap - 1 - k);
            v.push_back({m, c});
        }
    }
    return Polynomial::from_terms(std::move(v));
}

Polynomial divided_difference(const Polynomial& p, int i, Block block, int n) {
    if (block == Block::Z && n > 0) return divided_difference(p, Z(zmod(i, n)), Z(zmod(i + 1, n)));
    return divided_difference(p, VarRef{block, i}, VarRef{block, i + 1});
}

Polynomial divided_difference_by_division(const Polynomial& p, int i, Block block, int n) {
    VarRef a{block, i}, b{block, i + 1};
    if (block == Block::Z && n > 0) {
        a = Z(zmod(i, n));
        b = Z(zmod(i + 1, n));
    }
    return exact_divide_generic(p - swap_vars(p, a, b), binom(a, b));
}

Polynomial isobaric_pi(const Polynomial& G, int l, int beta, int alpha, int n, bool y_zero) {
    if (!(alpha < beta)) throw std::invalid_argument("isobaric_pi requires alpha < beta");
    VarRef zl = Z(zmod(l, n)), zl1 = Z(zmod(l + 1, n));
    Polynomial H = divided_difference(G, zl, zl1) * binom(zl1, X(alpha));
    if (y_zero) return exact_divide(H * Polynomial::var(zl), Polynomial::var(X(alpha)));
    VarRef yb = Y(n + 1 - beta);
    return exact_divide(H * binom(zl, yb), binom(X(alpha), yb));
}

Polynomial substitute(const Polynomial& p, const std::map<VarRef, Polynomial>& bindings) {
    std::vector<std::pair<int, const Polynomial*>> bound;
    for (auto& [v, q] : bindings) bound.push_back({slot_of(v), &q});
    std::map<std::pair<int, int>, Polynomial> powers;
    auto power = [&](size_t bi, int k) -> const Polynomial& {
        auto key = std::make_pair(int(bi), k);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        return powers.emplace(key, bound[bi].second->pow(k)).first->second;
    };
    // Group terms by their bound exponents so each group costs one product.
    std::map<std::vector<uint8_t>, std::vector<Term>> groups;
    for (auto& t : p.terms()) {
        std::vector<uint8_t> key(bound.size());
        Term s = t;
        for (size_t i = 0; i < bound.size(); ++i) {
            key[i] = t.m.e[bound[i].first];
            s.m.e[bound[i].first] = 0;
            s.m.deg = static_cast<uint16_t>(s.m.deg - key[i]);
        }
        groups[key].push_back(std::move(s));
    }
    Polynomial result;
    for (auto& [key, terms] : groups) {
        Polynomial g = Polynomial::from_terms(std::move(terms));
        for (size_t i = 0; i < bound.size(); ++i)
            if (key[i]) g *= power(i, key[i]);
        result += g;
    }
    return result;
}

Polynomial set_block_zero(const Polynomial& p, Block b) {
    std::vector<Term> v;
    for (auto& t : p.terms())
        if (t.m.block_degree(b) == 0) v.push_back(t);
    return Polynomial::from_terms(std::move(v));
}

const Rational& Point::at(VarRef v) const {
    const std::vector<Rational>* vec = v.block == Block::X ? &x : v.block == Block::Y ? &y : &z;
    if (v.index < 1 || size_t(v.index) >= vec->size())
        throw std::out_of_range("point lacks a value for variable");
    return (*vec)[v.index];
}

Rational evaluate(const Polynomial& p, const Point& pt) {
    std::map<std::pair<int, int>, Rational> cache;
    Rational total = 0;
    for (auto& t : p.terms()) {
        Rational term = Rational(t.c);
        for (int s = 0; s < kSlots; ++s) {
            int k = t.m.e[s];
            if (!k) continue;
            auto key = std::make_pair(s, k);
            auto it = cache.find(key);
            if (it == cache.end()) {
                Rational v = 1;
                const Rational& base = pt.at(var_of_slot(s));
                for (int e = 0; e < k; ++e) v *= base;
                it = cache.emplace(key, v).first;
            }
            term *= it->second;
        }
        total += term;
    }
    return total;
}

Polynomial shift_z(const Polynomial& p, int a, int n) {
    auto perm = identity_perm();
    for (int i = 1; i <= n; ++i) perm[slot_of(Z(i))] = static_cast<uint8_t>(slot_of(Z(zmod(i + a, n))));
    return permute_slots(p, perm);
}

Polynomial skip_var(const Polynomial& p, Block b, int a) {
    std::vector<Term> v;
    v.reserve(p.size());
    int o = block_offset(b);
    for (auto& t : p.terms()) {
        Term s = t;
        if (t.m.e[o + kMaxIndex - 1]) throw std::out_of_range("skip_var overflows block");
        for (int k = kMaxIndex; k >= a + 1; --k) s.m.e[o + k - 1] = t.m.e[o + k - 2];
        s.m.e[o + a - 1] = 0;
        v.push_back(std::move(s));
    }
    return Polynomial::from_terms(std::move(v));
}

Polynomial leading_coeff_z(const Polynomial& p) {
    int top = -1;
    for (auto& t : p.terms()) top = std::max(top, t.m.block_degree(Block::Z));
    if (top <= 0) return p;
    std::vector<Term> v;
    const Monomial* zpart = nullptr;
    for (auto& t : p.terms()) {
        if (t.m.block_degree(Block::Z) != top) continue;
        if (!zpart) {
            zpart = &t.m;
        } else if (std::memcmp(zpart->e.data(), t.m.e.data(), kMaxIndex) != 0) {
            throw NonUniqueLeadingTerm("several z-monomials of top degree");
        }
        Term s = t;
        for (int i = 0; i < kMaxIndex; ++i) s.m.e[i] = 0;
        s.m.deg = static_cast<uint16_t>(s.m.deg - top);
        v.push_back(std::move(s));
    }
    return Polynomial::from_terms(std::move(v));
}

Monomial max_monomial_factor(const Polynomial& p, Block b) {
    if (p.is_zero()) throw ZeroPolynomial("monomial factor of zero");
    int o = block_offset(b);
    Monomial m;
    for (int i = 0; i < kMaxIndex; ++i) {
        int lo = 255;
        for (auto& t : p.terms()) lo = std::min(lo, int(t.m.e[o + i]));
        m.e[o + i] = static_cast<uint8_t>(lo);
        m.deg = static_cast<uint16_t>(m.deg + lo);
    }
    return m;
}

std::string to_text(const Monomial& m) {
    std::string s;
    for (Block b : {Block::X, Block::Y, Block::Z}) {
        for (int i = 1; i <= kMaxIndex; ++i) {
            int k = m.exp({b, i});
            if (!k) continue;
            if (!s.empty()) s += '*';
            s += block_char(b);
            s += std::to_string(i);
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s.empty() ? "1" : s;
}

std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& t : p.terms()) {
        bool neg = t.c < 0;
        Int mag = neg ? Int(-t.c) : t.c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (t.m.is_one()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += to_text(t.m);
        }
    }
    return out;
}

std::string to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& t : p.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (Block b : {Block::X, Block::Y, Block::Z})
            for (int i = 1; i <= kMaxIndex; ++i)
                if (int k = t.m.exp({b, i})) exps[std::string(1, block_char(b)) + std::to_string(i)] = k;
        terms.push_back({{"coeff", t.c.str()}, {"exps", exps}});
    }
    return nlohmann::json{{"terms", terms}}.dump();
}

Polynomial from_json(const std::string& s) {
    auto j = nlohmann::json::parse(s);
    std::vector<Term> v;
    for (auto& t : j.at("terms")) {
        Term term{Monomial{}, Int(t.at("coeff").get<std::string>())};
        for (auto& [name, k] : t.at("exps").items()) {
            Block b = name[0] == 'x' ? Block::X : name[0] == 'y' ? Block::Y : Block::Z;
            if (name[0] != 'x' && name[0] != 'y' && name[0] != 'z')
                throw std::invalid_argument("bad variable name: " + name);
            term.m.set({b, std::stoi(name.substr(1))}, k.get<int>());
        }
        v.push_back(std::move(term));
    }
    return Polynomial::from_terms(std::move(v));
}

}  // namespace ts
