#include <doctest.h>

#include <map>
#include <set>

#include "tasep_schubert/combinat.hpp"
#include "printed_tables.hpp"

using namespace ts;

namespace {

// Independent brute-force recoil count straight from the definition.
int recoils_direct(const Perm& w) {
    int r = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] == w[j] + 1) ++r;
    return r;
}

}  // namespace

TEST_CASE("Lehmer codes") {
    CHECK(code({1, 3, 5, 4, 2}) == Code{0, 1, 2, 1, 0});
    CHECK(shape_of_code(code({1, 3, 5, 4, 2})) == Partition{2, 1, 1});
    CHECK(code(identity_perm(6)) == Code(6, 0));
    CHECK_THROWS_AS(code_inverse({3, 0, 0}), InvalidCode);
    for (int n = 1; n <= 6; ++n)
        for (auto& w : all_perms(n)) CHECK(code_inverse(code(w)) == w);
    // code (0,3,1,1,0) belongs to w^{-1} for a state with Psi = ((3),(1,1))
    Perm w = inverse(code_inverse({0, 3, 1, 1, 0}));
    CHECK(psi(w) == ParSeq{{3}, {1, 1}});
    CHECK(psi(inverse(code_inverse({0, 2, 2, 1, 0}))) == ParSeq{{2}, {1, 1, 1}});
}

TEST_CASE("evil-avoiding permutations") {
    CHECK_FALSE(is_evil_avoiding({2, 4, 1, 3}));
    CHECK(is_evil_avoiding(identity_perm(5)));
    CHECK(contains_pattern({3, 1, 4, 2, 5}, {2, 4, 1, 3}) == false);
    CHECK(contains_pattern({2, 5, 1, 4, 3}, {2, 4, 1, 3}));
    const long long expected[] = {1, 2, 6, 20, 68, 232};
    for (int n = 1; n <= 6; ++n) {
        CHECK(e_exhaustive(n) == expected[n - 1]);
        CHECK(e_recurrence(n) == expected[n - 1]);
        CHECK(e_closed(n) == expected[n - 1]);
    }
    CHECK(e_recurrence(6) == 4 * 68 - 2 * 20);
    for (int n = 1; n <= 12; ++n) CHECK(e_recurrence(n) == e_closed(n));
}

TEST_CASE("code criterion agrees with the direct scan") {
    CHECK(evil_avoiding_via_code(identity_perm(5)));
    CHECK(evil_avoiding_via_code(code_inverse({0, 3, 1, 1, 0})));
    const std::vector<Perm> evil = {{2, 4, 1, 3}, {3, 2, 1, 4}, {4, 1, 3, 2}, {4, 2, 1, 3}};
    for (int n = 1; n <= 7; ++n)
        for (auto& w : all_perms(n)) {
            bool direct = true;
            for (auto& e : evil) direct = direct && !contains_pattern(inverse(w), e);
            REQUIRE(evil_avoiding_via_code(w) == direct);
            REQUIRE(is_evil_avoiding(inverse(w)) == direct);
        }
}

TEST_CASE("recoils and St(n,k)") {
    CHECK(recoils(identity_perm(4)) == 0);
    for (auto& w : all_perms(6)) REQUIRE(recoils(w) == recoils_direct(w));
    const int st5[] = {1, 11, 7, 1};
    for (int k = 0; k <= 3; ++k) CHECK(int(st_nk(5, k).size()) == st5[k]);
    CHECK(st_nk(4, 1).size() == 4);
    CHECK(T_closed(4, 0) == 1);
    CHECK(T_closed(4, 1) == 4);
    CHECK(T_closed(4, 2) == 1);
    for (int n = 3; n <= 8; ++n) {
        Int total = 0;
        for (int k = 0; k <= n - 2; ++k) {
            size_t st = st_nk(n, k).size();
            CHECK(st == parseq_enumerate(n, k).size());
            CHECK(Int(st) == T_closed(n, k));
            total += st;
        }
        // a leading 1 never takes part in an evil pattern
        CHECK(total == e_recurrence(n - 1));
    }
}

TEST_CASE("Psi and shifting vector against the n=5 table") {
    std::set<std::string> listed;
    for (auto& r : printed::table3()) {
        Perm w = parse_perm(r.w);
        CAPTURE(r.w);
        CHECK(psi(w) == r.ps);
        CHECK(shifting_vector(r.ps, 5) == r.s);
        CHECK(psi_inverse(r.ps, 5) == w);
        listed.insert(r.w);
    }
    CHECK(listed.size() == 20);
    std::set<std::string> all;
    for (int k = 0; k <= 3; ++k)
        for (auto& w : st_nk(5, k)) {
            std::string s;
            for (int a : w) s += char('0' + a);
            all.insert(s);
        }
    CHECK(all == listed);
    CHECK_THROWS_AS(psi({2, 1, 3}), NotSpecialState);
    CHECK_THROWS_AS(psi_inverse({{3}, {2, 2, 1, 1}}, 6), InvalidParSeq);
}

TEST_CASE("Psi round trip") {
    for (int n = 3; n <= 7; ++n)
        for (int k = 0; k <= n - 2; ++k)
            for (auto& w : st_nk(n, k)) {
                auto ps = psi(w);
                REQUIRE(int(ps.size()) == k);
                REQUIRE(is_parseq(ps, n));
                REQUIRE(psi_inverse(ps, n) == w);
            }
}

TEST_CASE("g_n and valid partitions") {
    CHECK(g_n({2, 1, 1}, 5) == Code{0, 1, 2, 1, 0});
    CHECK(g_n({3, 2, 2, 1}, 6) == Code{0, 2, 3, 2, 1, 0});
    CHECK(g_n({3, 1, 1}, 6) == Code{0, 0, 3, 1, 1, 0});
    CHECK_THROWS_AS(g_n({4}, 4), NotValid);
    CHECK_THROWS_AS(g_n({1, 1, 1}, 3), NotValid);
    for (int n = 3; n <= 9; ++n) {
        auto vals = val_n(n);
        CHECK(vals.size() == size_t((1 << (n - 1)) - n));
        for (auto& l : vals) {
            Code g = g_n(l, n);
            CHECK(g.front() == 0);
            CHECK(g.back() == 0);
            CHECK(shape_of_code(g) == l);
            CHECK(is_valid_code(g));
        }
    }
    CHECK(val_n(3) == std::vector<Partition>{{1}});
    CHECK(is_valid_partition({6, 6, 4, 4, 2, 2}, 13));
}

TEST_CASE("partition sequences") {
    CHECK(is_parseq({{3}, {2, 2, 2, 1}}, 6));
    CHECK(is_parseq({{4, 2}, {1, 1, 1, 1}}, 6));
    CHECK_FALSE(is_parseq({{3}, {2, 2, 1, 1}}, 6));
    CHECK_FALSE(is_parseq({{4, 2}, {1, 1, 1}}, 6));
    CHECK(parseq_enumerate(5, 2).size() == 7);
    CHECK(parseq_enumerate(7, 0) == std::vector<ParSeq>{ParSeq{}});
    for (int n = 4; n <= 8; ++n)
        for (int k = 1; k <= n - 2; ++k) {
            size_t rhs = 2 * parseq_enumerate(n - 1, k).size();
            for (int i = k + 1; i <= n - 1; ++i) rhs += parseq_enumerate(i, k - 1).size();
            CHECK(parseq_enumerate(n, k).size() == rhs);
        }
}

TEST_CASE("alpha and S(b)") {
    Perm w = s_construct({1, 1, 2, 3});
    CHECK(w == Perm{1, 6, 3, 5, 2, 4});
    CHECK(alpha(w) == std::vector<int>{1, 1, 1, 0});
    CHECK(s_construct({0, 0, 0}) == identity_perm(5));
    CHECK_THROWS_AS(s_construct({2, 0}), std::out_of_range);
    for (int n = 3; n <= 7; ++n) {
        std::vector<int> a(n - 2);
        for (int i = 1; i <= n - 2; ++i) a[i - 1] = n - 1 - i;
        CHECK(alpha(identity_perm(n)) == a);
    }
    for (auto& v : all_perms(6)) CHECK(alpha(v) == alpha(rotate(v, 1)));
    // Every cyclic class of S_n is some S(b), and alpha_i(S(b)) = n-1-i-b_{n-1-i}.
    for (int n = 3; n <= 6; ++n) {
        std::set<Perm> classes;
        std::vector<int> b(n - 2, 0);
        while (true) {
            Perm s = s_construct(b);
            auto a = alpha(s);
            for (int i = 1; i <= n - 2; ++i) CHECK(a[i - 1] == n - 1 - i - b[n - 2 - i]);
            classes.insert(canonical_rotation(s));
            int t = 0;
            while (t < n - 2 && b[t] == t + 1) b[t++] = 0;
            if (t == n - 2) break;
            ++b[t];
        }
        long long fact = 1;
        for (int i = 2; i < n; ++i) fact *= i;
        CHECK(classes.size() == size_t(fact));
    }
    // alpha separates cyclic classes
    for (int n = 3; n <= 6; ++n) {
        std::map<std::vector<int>, Perm> seen;
        for (auto& v : all_perms(n)) {
            auto a = alpha(v);
            auto it = seen.find(a);
            if (it == seen.end())
                seen[a] = canonical_rotation(v);
            else
                REQUIRE(it->second == canonical_rotation(v));
        }
    }
}

TEST_CASE("lattice-path permutations and direct sums") {
    CHECK(w_of_lambda({6, 6, 4, 4, 2, 2}, 13) == Perm{1, 2, 8, 9, 3, 4, 10, 11, 5, 6, 12, 13, 7});
    CHECK(w_of_lambda({3, 3, 2, 1}, 9) == Perm{1, 2, 7, 3, 8, 4, 9, 5, 6});
    CHECK(w_of_lambda({1}, 3) == Perm{1, 3, 2});
    for (int n = 3; n <= 8; ++n)
        for (auto& l : val_n(n)) {
            Perm w = w_of_lambda(l, n);
            REQUIRE(is_k_grassmannian_state(w, 1));
            REQUIRE(psi(w) == ParSeq{l});
            Code c = code(inverse(w));
            for (int t = 0; t < n - l[0]; ++t) REQUIRE(c[t] == l[0] - (t < int(l.size()) ? l[t] : 0));
        }
    CHECK(direct_sum({3, 2, 1}, {3, 1, 2, 5, 4}) == Perm{3, 2, 1, 6, 4, 5, 8, 7});
    CHECK(direct_sum(identity_perm(2), identity_perm(3)) == identity_perm(5));
    CHECK(wbar({2, 2}, 5) == Perm{3, 1, 2});
    auto d = decompose({1, 2, 5, 4, 3});
    CHECK(d.a2 == -1);
    CHECK(d.wbar == Perm{3, 1, 2});
    CHECK(d.wprime == Perm{2, 1});
    CHECK(d.wdown == Perm{1, 2, 3, 5, 4});
    for (int n = 4; n <= 7; ++n)
        for (int k = 2; k <= n - 2; ++k)
            for (auto& w : st_nk(n, k)) {
                auto dd = decompose(w);
                auto ps = psi(w);
                REQUIRE(psi(dd.wdown) == ParSeq(ps.begin() + 1, ps.end()));
            }
}

TEST_CASE("parsing and formatting") {
    CHECK(parse_perm("1,4,2,3") == Perm{1, 4, 2, 3});
    CHECK(parse_perm("1423") == Perm{1, 4, 2, 3});
    CHECK(parse_perm("1 4 2 3") == Perm{1, 4, 2, 3});
    CHECK_THROWS(parse_perm("1,1,2"));
    CHECK(perm_to_string({1, 6, 3, 5, 2, 4}) == "1 6 3 5 2 4");
    CHECK(partition_to_string({3, 2, 2, 1}) == "3,2,2,1");
}
