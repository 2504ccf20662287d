#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ts {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Block : uint8_t { X, Y, Z };

// Indices run 1..kMaxIndex in every block.
constexpr int kMaxIndex = 16;
constexpr int kSlots = 3 * kMaxIndex;

struct VarRef {
    Block block;
    int index;
    bool operator==(const VarRef&) const = default;
    bool operator<(const VarRef& o) const {
        return block != o.block ? block < o.block : index < o.index;
    }
};

inline VarRef X(int i) { return {Block::X, i}; }
inline VarRef Y(int i) { return {Block::Y, i}; }
inline VarRef Z(int i) { return {Block::Z, i}; }

// Storage slot of a variable. Layout is z-block, x-block, y-block so that a
// byte-wise comparison of exponent arrays realizes lex order z1 > .. > x1 > .. > y1 > ..
int slot_of(VarRef v);
VarRef var_of_slot(int s);

// Reduce a z index into 1..n.
inline int zmod(int i, int n) { return ((i - 1) % n + n) % n + 1; }

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BlockMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonUniqueLeadingTerm : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroPolynomial : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Monomial {
    std::array<uint8_t, kSlots> e{};
    uint16_t deg = 0;

    int exp(VarRef v) const { return e[slot_of(v)]; }
    void set(VarRef v, int k);
    int block_degree(Block b) const;
    bool is_one() const { return deg == 0; }

    bool operator==(const Monomial& o) const {
        return deg == o.deg && e == o.e;
    }
    // Graded lex; true when *this is strictly larger.
    bool greater(const Monomial& o) const {
        if (deg != o.deg) return deg > o.deg;
        return std::memcmp(e.data(), o.e.data(), kSlots) > 0;
    }
    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // requires divides
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const;
};

struct Term {
    Monomial m;
    Int c;
};

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long long c);  // NOLINT: implicit constant
    Polynomial(const Int& c);  // NOLINT
    static Polynomial var(VarRef v, int power = 1);
    static Polynomial monomial(const Monomial& m, const Int& c = 1);
    // Builds from arbitrary terms; sorts and merges duplicates.
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }
    int degree() const;
    int degree_in(Block b) const;
    int degree_in(VarRef v) const;
    bool is_constant() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial times_monomial(const Monomial& m, const Int& c = 1) const;
    Polynomial pow(int k) const;

private:
    std::vector<Term> terms_;  // strictly decreasing monomials, nonzero coefficients
    friend Polynomial add_scaled(const Polynomial&, const Polynomial&, const Monomial&, const Int&);
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
// p + c*m*q
Polynomial add_scaled(const Polynomial& p, const Polynomial& q, const Monomial& m, const Int& c);

// Returns q with p = q*d; throws NotDivisible otherwise.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d);
// Generic long division with respect to the monomial order, no fast paths.
Polynomial exact_divide_generic(const Polynomial& p, const Polynomial& d);

Polynomial swap_vars(const Polynomial& p, VarRef a, VarRef b);
// Applies a slot permutation: variable in slot s goes to slot perm[s].
Polynomial permute_slots(const Polynomial& p, const std::array<uint8_t, kSlots>& perm);

// (p - s p)/(a - b) where s swaps a and b, computed termwise.
Polynomial divided_difference(const Polynomial& p, VarRef a, VarRef b);
// d_i on the x block or z block; for Z the pair (z_i, z_{i+1}) is taken mod n when n > 0.
Polynomial divided_difference(const Polynomial& p, int i, Block block, int n = 0);
// Same operator through exact_divide_generic.
Polynomial divided_difference_by_division(const Polynomial& p, int i, Block block, int n = 0);

// pi_l(beta, alpha; n). With y_zero the y variables are taken to be 0.
Polynomial isobaric_pi(const Polynomial& G, int l, int beta, int alpha, int n, bool y_zero = false);

Polynomial substitute(const Polynomial& p, const std::map<VarRef, Polynomial>& bindings);
Polynomial set_block_zero(const Polynomial& p, Block b);

struct Point {
    // 1-based; entry 0 unused.
    std::vector<Rational> x, y, z;
    const Rational& at(VarRef v) const;
};
Rational evaluate(const Polynomial& p, const Point& pt);

// z_i -> z_{i+a}, indices mod n.
Polynomial shift_z(const Polynomial& p, int a, int n);
// Variable deletion: v_k -> v_{k+1} for k >= a within block b.
Polynomial skip_var(const Polynomial& p, Block b, int a);

Polynomial leading_coeff_z(const Polynomial& p);
Monomial max_monomial_factor(const Polynomial& p, Block b = Block::X);

std::string to_text(const Polynomial& p);
std::string to_text(const Monomial& m);
std::string to_json(const Polynomial& p);
Polynomial from_json(const std::string& s);

// Convenience: product of (a - b) factors.
inline Polynomial binom(VarRef a, VarRef b) { return Polynomial::var(a) - Polynomial::var(b); }

}  // namespace ts
