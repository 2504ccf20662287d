#pragma once

#include <map>
#include <utility>

#include "tasep_schubert/poly.hpp"

namespace ts {

// Polynomial stored as prod (v_a - v_b)^e * prod v_a^e * cofactor, where the
// cofactor has no factor among the candidate linear forms over the first n
// indices of each block. The form is canonical, so equality is structural.
class Factored {
public:
    // (slot a, slot b) with a < b means v_a - v_b; b = -1 means the variable v_a.
    using Key = std::pair<int, int>;

    int n = 0;
    std::map<Key, int> factors;
    Polynomial cofactor = 1;

    Factored() = default;
    Factored(const Polynomial& p, int n);

    static Polynomial linear(Key k);

    bool is_zero() const { return cofactor.is_zero(); }
    Polynomial expand() const;
    int degree() const;
    // Pulls every candidate linear factor out of the cofactor.
    void normalize();
    void multiply(Key k, int e = 1);

    Factored permute(const std::array<uint8_t, kSlots>& perm) const;
    Factored shift_z(int a) const;
    Factored swap_z(int i, int j) const;

    Rational evaluate(const Point& pt) const;
    Polynomial leading_coeff_z() const;

    friend Factored operator*(const Factored& a, const Factored& b);
    bool operator==(const Factored& o) const;
    bool operator!=(const Factored& o) const { return !(*this == o); }
};

Factored::Key linear_key(VarRef a, VarRef b);
Factored::Key linear_key(VarRef a);

// pi_l(beta, alpha; n) on a factored polynomial.
Factored isobaric_pi(const Factored& G, int l, int beta, int alpha, bool y_zero = false);

std::string to_text(const Factored& f);

}  // namespace ts
