#include <doctest.h>

#include "tasep_schubert/mlq.hpp"
#include "tasep_schubert/tasep.hpp"

using namespace ts;

namespace {

Polynomial v(VarRef a) { return Polynomial::var(a); }
Polynomial b(VarRef a, VarRef c) { return binom(a, c); }

// Rows given by the right indices of their balls.
MultilineQueue from_right_indices(int n, const std::vector<std::vector<int>>& rows) {
    std::vector<std::string> s;
    for (auto& r : rows) {
        std::string row(n, '.');
        for (int i : r) row[n - i] = 'o';
        s.push_back(row);
    }
    return MultilineQueue::from_strings(s);
}

LabeledQueue fig3() { return bully_label(MultilineQueue::from_strings({"..o.....", ".o.ooo..", "oo...ooo"})); }

void check(const Report& r) {
    for (auto& i : r.items) CHECK_MESSAGE(i.pass, r.suite, " ", i.input, " ", i.source, " ", i.detail);
    CHECK(!r.items.empty());
}

}  // namespace

TEST_CASE("eight column queue: labels, types and covered vacancies") {
    auto q = fig3();
    CHECK(q.type() == Composition{2, 2, 1, 4, 4, 4, 2, 3});
    CHECK(q.row_type(0) == Composition{2, 2, 2, 2, 2, 1, 2, 2});
    CHECK(q.row_type(1) == Composition{3, 3, 2, 2, 1, 3, 2, 3});
    CHECK(q.covered(2, 1) == 1);
    CHECK(q.covered(3, 1) == 2);
    for (int r = 1; r <= 3; ++r) CHECK(q.covered(r, 2) == 0);
    CHECK(wt(q) == v(X(1)).pow(4) * v(X(2)).pow(4) * v(X(3)).pow(2));
}

TEST_CASE("eight column queue: z-weight and bottom row factor") {
    auto q = fig3();
    Polynomial z[9];
    for (int i = 1; i <= 8; ++i) z[i] = v(Z(i));
    VarRef x1 = X(1), x2 = X(2), x3 = X(3);
    Polynomial expect = wt(q) * b(Z(1), x1) * b(Z(1), x2) * z[1] * b(Z(2), x1) * b(Z(2), x2) * z[2] * b(Z(3), x1) *
                        z[3].pow(2) * b(Z(4), x1).pow(2) * z[4] * b(Z(5), x1).pow(2) * z[5] * b(Z(6), x1) *
                        b(Z(6), x3) * z[6] * b(Z(7), x1) * z[7].pow(2) * b(Z(8), x1) * b(Z(8), x2) * z[8];
    CHECK(wt_z(q) == expect);
    CHECK(leading_coeff_z(wt_z(q)) == wt(q));

    // (x1x2x3)^3 z1z2z3 (z4-x1)/x1 (z5-x1)/x1 (z6-x3)/x3 z7z8
    Polynomial fuw = v(X(1)) * v(X(2)).pow(3) * v(X(3)).pow(2) * z[1] * z[2] * z[3] * b(Z(4), x1) * b(Z(5), x1) *
                     b(Z(6), x3) * z[7] * z[8];
    CHECK(bottom_row_factor(q) == fuw);
    auto top = bully_label(MultilineQueue::from_strings({"..o.....", ".o.ooo.."}));
    CHECK(exact_divide(wt_z(q), wt_z(top)) == fuw);
}

TEST_CASE("small queues") {
    auto one = bully_label(MultilineQueue::from_strings({".o.oo"}));
    for (int c : {1, 3, 4}) CHECK(one.label[0][c] == 1);
    CHECK(one.type() == Composition{1, 1, 2, 1, 2});
    auto full = bully_label(MultilineQueue::from_strings({".o.", "ooo"}));
    CHECK(wt(full) == 1);
    CHECK(wt_z(full) == v(Z(1)) * v(Z(2)) * v(Z(3)) * b(Z(1), X(1)) * b(Z(3), X(1)) * v(Z(2)));
    CHECK_THROWS_AS(bully_label(MultilineQueue::from_strings({"oo.", "o.."})), InvalidQueue);
    CHECK_THROWS_AS(MultilineQueue::from_strings({"o.x"}), InvalidQueue);
    CHECK(content_of({2, 2, 1, 4, 4, 4, 2, 3}) == std::vector<int>{1, 3, 1});
}

TEST_CASE("queue enumeration") {
    auto all = enumerate_queues(5, {1, 1, 1, 1});
    CHECK(all.size() == 2500);
    std::map<Composition, Int> counts;
    for (auto& q : all) {
        auto lq = bully_label(q);
        counts[lq.type()] += 1;
        CHECK(leading_coeff_z(wt_z(lq)) == wt(lq));
    }
    CHECK(counts == count_by_type(5, 4));
    CHECK(counts.size() == 120);
    CHECK(mlq_of_type({1, 3, 2, 5, 4}).size() == size_t(counts[{1, 3, 2, 5, 4}]));
}

TEST_CASE("weight sums equal the stationary probabilities") {
    for (int n = 3; n <= 5; ++n) check(verify_weight_theorem(n));
    CHECK(mlq_weight_sum({1, 2, 3, 4, 5}) == x_monomial({6, 3, 1}));
}

TEST_CASE("z-weight sums equal the deformed probabilities") {
    for (int n = 3; n <= 5; ++n) check(verify_zweight_theorem(n));
    auto d = psi_z_all(3, {true, true});
    CHECK(F_w({1, 3, 2}) == d.at({1, 3, 2}).expand());
}

TEST_CASE("exchange equations") {
    for (Composition w : std::vector<Composition>{{2, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 2, 3, 4}, {3, 1, 2, 1}})
        check(verify_exchange_equations(w));
    Polynomial f = F_w({1, 1, 2});
    CHECK(f == swap_vars(f, Z(1), Z(2)));
    CHECK(f != swap_vars(f, Z(2), Z(3)));
}

TEST_CASE("queue of type w((3,3,2,1);9) and its tableau") {
    auto q = bully_label(from_right_indices(9, {{2},
                                                {2, 4},
                                                {2, 3, 5},
                                                {1, 3, 4, 7},
                                                {1, 3, 4, 7, 8},
                                                {1, 2, 4, 6, 8, 9},
                                                {1, 2, 3, 4, 6, 8, 9},
                                                {1, 2, 3, 4, 5, 6, 8, 9}}));
    Partition lam = {3, 3, 2, 1};
    CHECK(q.type() == Composition{1, 2, 7, 3, 8, 4, 9, 5, 6});
    CHECK(q.type() == w_of_lambda(lam, 9));
    CHECK(q.row_type(6) == Composition{1, 2, 7, 3, 8, 4, 8, 5, 6});
    Tableau t = mlq_to_ssyt(q, lam);
    CHECK(t[0] == std::vector<int>{1, 1, 4});
    CHECK(t == Tableau{{1, 1, 4}, {2, 3, 6}, {3, 4}, {6}});
    CHECK(paths_nonintersecting(lattice_paths(q, lam)));
    CHECK(small_labels_ordered(q, lam));
    CHECK(ssyt_to_mlq(t, lam, 9) == q.q);
    for (int i = 1; i <= 4; ++i)
        for (int r = i + 1; r <= 8; ++r) CHECK(q.covered(r, i) == std::count(t[i - 1].begin(), t[i - 1].end(), r));
    check(verify_queue_count(lam, 9));
}

TEST_CASE("vertical paths give the minimal tableau") {
    for (int n = 3; n <= 7; ++n)
        for (auto& lam : val_n(n)) {
            Tableau t;
            for (size_t i = 0; i < lam.size(); ++i) t.push_back(std::vector<int>(lam[i], int(i) + 1));
            auto q = bully_label(ssyt_to_mlq(t, lam, n));
            CHECK(q.type() == w_of_lambda(lam, n));
            CHECK(mlq_to_ssyt(q, lam) == t);
            for (auto& p : lattice_paths(q, lam))
                for (size_t k = 1; k < p.size(); ++k)
                    if (p[k].second != p[0].second) CHECK(p[k].first == p[k - 1].first);
            for (int r = 1; r < n; ++r)
                for (int i = 1; i < n; ++i) CHECK(q.covered(r, i) == 0);
        }
}

TEST_CASE("bijection with flagged tableaux") {
    for (int n = 3; n <= 6; ++n) check(verify_bijection(n));
    auto q = fig3();
    CHECK_THROWS_AS(mlq_to_ssyt(q, {1}), WrongType);
    auto wrong = bully_label(MultilineQueue::from_strings({"o..", "oo."}));
    CHECK_THROWS_AS(mlq_to_ssyt(wrong, {1}), WrongType);
    CHECK_THROWS_AS(ssyt_to_mlq({{2, 1}}, {2}, 5), std::invalid_argument);
    CHECK_THROWS_AS(ssyt_to_mlq({{4}}, {1}, 4), std::invalid_argument);
}
