#include <doctest.h>

#include "tasep_schubert/oracle.hpp"
#include "tasep_schubert/tasep.hpp"

using namespace ts;

namespace {

std::vector<Rational> rats(std::initializer_list<int> v) {
    std::vector<Rational> out;
    for (int a : v) out.push_back(a);
    return out;
}

}  // namespace

TEST_CASE("n=3 generator") {
    // distinct values so each rate identifies its pair
    auto x = rats({100, 10}), y = rats({1, 2});
    RateMatrix m = build_generator(3, x, y);
    CHECK(m.size() == 6);
    int edges = 0;
    for (size_t a = 0; a < 6; ++a) {
        Rational sum = 0;
        for (size_t b = 0; b < 6; ++b) {
            sum += m.q[a][b];
            if (a != b && m.q[a][b] != 0) ++edges;
            if (a != b) CHECK(m.q[a][b] >= 0);
        }
        CHECK(sum == 0);
    }
    CHECK(edges == 9);
    CHECK(m.q[m.index({3, 1, 2})][m.index({2, 1, 3})] == x[1] - y[0]);
    CHECK(m.q[m.index({1, 2, 3})][m.index({2, 1, 3})] == x[0] - y[1]);
    CHECK(m.q[m.index({1, 2, 3})][m.index({1, 3, 2})] == x[1] - y[0]);
    CHECK(m.q[m.index({1, 2, 3})][m.index({3, 2, 1})] == 0);
    CHECK(m.strongly_connected());
}

TEST_CASE("stationary vectors") {
    auto pi = stationary(build_generator(3, rats({5, 3}), rats({1, 2})));
    RateMatrix m = build_generator(3, rats({5, 3}), rats({1, 2}));
    CHECK(pi[m.index({1, 3, 2})] / pi[m.index({1, 2, 3})] == Rational(5, 4));
    Rational total = 0;
    for (auto& p : pi) {
        CHECK(p > 0);
        total += p;
    }
    CHECK(total == 1);

    // symmetric rates give the uniform vector
    RateMatrix s;
    s.states = {{1}, {2}, {3}, {4}};
    s.q.assign(4, std::vector<Rational>(4, Rational(0)));
    auto link = [&](int a, int b, Rational r) {
        s.q[a][b] += r;
        s.q[b][a] += r;
        s.q[a][a] -= r;
        s.q[b][b] -= r;
    };
    link(0, 1, 3);
    link(1, 2, Rational(1, 2));
    link(2, 3, 7);
    link(3, 0, 2);
    for (auto& p : stationary(s)) CHECK(p == Rational(1, 4));

    // two closed classes
    RateMatrix d = s;
    d.q.assign(4, std::vector<Rational>(4, Rational(0)));
    d.q[0][1] = 1, d.q[0][0] = -1, d.q[1][0] = 1, d.q[1][1] = -1;
    d.q[2][3] = 1, d.q[2][2] = -1, d.q[3][2] = 1, d.q[3][3] = -1;
    CHECK_FALSE(d.strongly_connected());
    CHECK_THROWS_AS(stationary(d), DegenerateKernel);
}

TEST_CASE("uniform rates") {
    RateMatrix m = build_generator(4, rats({1, 1, 1}), rats({0, 0, 0}));
    for (size_t a = 0; a < m.size(); ++a)
        for (size_t b = 0; b < m.size(); ++b)
            if (a != b) CHECK((m.q[a][b] == 0 || m.q[a][b] == 1));
    auto pi = stationary(m);
    auto psi = psi_all(4, true);
    Point at;
    at.x = rats({0, 1, 1, 1});
    at.y = rats({0, 0, 0, 0});
    at.z = rats({0, 0, 0, 0});
    size_t id = m.index({1, 2, 3, 4});
    for (size_t k = 0; k < m.size(); ++k)
        CHECK(pi[k] / pi[id] == evaluate(psi.at(m.states[k]), at) / evaluate(psi.at({1, 2, 3, 4}), at));
}

TEST_CASE("n=4 generator at a fixed point") {
    RateMatrix m = build_generator(4, rats({7, 5, 3}), rats({1, 2, 0}));
    CHECK(m.size() == 24);
    CHECK(m.strongly_connected());
    CHECK(rank_mod_p(m, 1000000007ULL) == 23);
    CHECK_THROWS_AS(build_generator(4, rats({7, 5, 1}), rats({1, 2, 0})), InadmissibleRates);
}

TEST_CASE("cross validation against the symbolic probabilities") {
    for (int n = 3; n <= 4; ++n) {
        auto r = cross_validate(n, 5, 20240 + n, false);
        CHECK(r.items.size() == 5);
        for (auto& i : r.items) CHECK_MESSAGE(i.pass, i.input, " ", i.detail);
    }
    for (int n = 3; n <= 5; ++n) CHECK(cross_validate(n, 5, 77 + n, true).passed());
    CHECK(cross_validate(4, 2, 1, false).items[0].detail == cross_validate(4, 2, 1, false).items[0].detail);
}

TEST_CASE("a perturbed table is rejected") {
    auto psi = psi_all(4, false);
    psi[{1, 3, 2, 4}] += Polynomial::var(X(1));
    auto r = cross_validate(4, 3, 5, false, 1, &psi);
    CHECK_FALSE(r.passed());
    CHECK(r.failures() == 3);
}

TEST_CASE("kernel is one dimensional") {
    uint64_t state = 3;
    for (int n = 3; n <= 6; ++n) {
        auto pt = random_admissible_point(n, false, state);
        RateMatrix m = build_generator(n, pt.x, pt.y);
        CHECK(m.strongly_connected());
        CHECK(rank_mod_p(m, 1000000007ULL) == m.size() - 1);
    }
}
