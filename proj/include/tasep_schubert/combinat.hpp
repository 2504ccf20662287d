#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tasep_schubert/poly.hpp"

namespace ts {

// One-line notation, values 1..n.
using Perm = std::vector<int>;
using Code = std::vector<int>;
// Weakly decreasing positive parts.
using Partition = std::vector<int>;
using ParSeq = std::vector<Partition>;

struct InvalidCode : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotSpecialState : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidParSeq : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotValid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool is_permutation(const Perm& w);
Perm identity_perm(int n);
Perm inverse(const Perm& w);
// (u v)(i) = u(v(i))
Perm compose(const Perm& u, const Perm& v);
Perm longest_element(int n);
Perm simple_transposition(int n, int i);
// sigma^a(w) = (w_{1+a}, ..., w_{n+a}) with cyclic subscripts.
Perm rotate(const Perm& w, int a);
// Rotation that puts the letter 1 first.
Perm canonical_rotation(const Perm& w);
std::vector<Perm> all_perms(int n);

Code code(const Perm& w);
bool is_valid_code(const Code& c);
Perm code_inverse(const Code& c);
Partition shape_of_code(const Code& c);
int length(const Perm& w);  // number of inversions

bool contains_pattern(const Perm& w, const Perm& pattern);
bool is_evil_avoiding(const Perm& w);
// Code-descent criterion applied to code(w); equals is_evil_avoiding(inverse(w)).
bool evil_avoiding_via_code(const Perm& w);

int recoils(const Perm& w);
bool is_k_grassmannian_state(const Perm& w, int k);
// St(n,k) in lexicographic order.
std::vector<Perm> st_nk(int n, int k);
// All w with w_1 = 1 and evil-avoiding, grouped by nothing; lexicographic.
std::vector<Perm> st_all(int n);

int mul(const Partition& lambda);
int last_part(const Partition& lambda);
bool is_valid_partition(const Partition& lambda, int n);
std::vector<Partition> val_n(int n);
bool is_parseq(const ParSeq& ps, int n);
std::vector<ParSeq> parseq_enumerate(int n, int k);
Int T_closed(int n, int k);

ParSeq psi(const Perm& w);
Perm psi_inverse(const ParSeq& ps, int n);
Code g_n(const Partition& lambda, int n);

Int e_recurrence(int n);
// ((2+sqrt2)^(n-1) + (2-sqrt2)^(n-1))/2 computed in Z[sqrt2].
Int e_closed(int n);
long long e_exhaustive(int n);

std::vector<int> alpha(const Perm& w);
// Exponent vector of prod x_i^(alpha_i + ... + alpha_{n-2}), length n-2.
std::vector<int> eta_exponents(const Perm& w);
Perm s_construct(const std::vector<int>& b);

std::vector<int> shifting_vector(const ParSeq& ps, int n);
Perm w_of_lambda(const Partition& lambda, int n);
Perm direct_sum(const Perm& u, const Perm& v);
Perm wbar(const Partition& lambda, int n);

struct Decomposition {
    int a2;
    Perm wbar;   // first block of sigma^{a2}(w)
    Perm wprime; // second block
    Perm wdown;  // id_{n - lambda^1_last} + wprime
};
Decomposition decompose(const Perm& w);

std::string perm_to_string(const Perm& w);
std::string partition_to_string(const Partition& p);
std::string parseq_to_string(const ParSeq& ps);
// Accepts "1,4,2,3", "1 4 2 3" or "1423".
Perm parse_perm(const std::string& s);
std::vector<int> parse_int_list(const std::string& s);

Int binomial(int n, int k);

}  // namespace ts
