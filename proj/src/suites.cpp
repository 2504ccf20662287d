#include "tasep_schubert/suites.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "tasep_schubert/combinat.hpp"
#include "tasep_schubert/schubert.hpp"
#include "tasep_schubert/zschubert.hpp"

namespace ts {

Point random_rational_point(uint64_t& state, int size) {
    static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
    std::mt19937_64 rng(state);
    std::vector<int> pool(std::begin(primes), std::end(primes));
    if (size > int(pool.size())) throw std::invalid_argument("point too large");
    std::shuffle(pool.begin(), pool.end(), rng);
    Point p;
    p.x = {0};
    p.y = {0};
    p.z = {0};
    for (int i = 1; i <= size; ++i) {
        p.x.push_back(Rational(pool[i - 1]));
        p.y.push_back(Rational(int(rng() % 7)));
        p.z.push_back(Rational(int(rng() % 41) - 20, int(rng() % 5) + 1));
    }
    state = rng();
    return p;
}

Report verify_lc_z(int n, bool y_zero, int jobs) {
    Report r;
    r.suite = "lc-z";
    r.seconds = timed([&] {
        auto lams = val_n(n);
        std::vector<std::array<char, 2>> ok(lams.size());
        parallel_for(lams.size(), jobs, [&](size_t k) {
            ok[k][0] = lc_equals_schubert(lams[k], n, y_zero);
            ok[k][1] = !y_zero || lc_equals_flagged_schur(lams[k], n);
        });
        std::string mode = y_zero ? " y=0" : "";
        for (size_t k = 0; k < lams.size(); ++k) {
            std::string in = partition_to_string(lams[k]) + " n=" + std::to_string(n) + mode;
            r.add(in, "leading z-coefficient is a Schubert polynomial", ok[k][0]);
            if (y_zero) r.add(in, "leading z-coefficient is a flagged Schur function", ok[k][1]);
        }
    });
    return r;
}

Report verify_rc_vs_dd(int n, int sample, uint64_t seed, int jobs) {
    Report r;
    r.suite = "rc-vs-dd";
    r.seed = seed;
    r.seconds = timed([&] {
        auto all = all_perms(n);
        std::vector<Perm> ws;
        if (sample <= 0) {
            ws = all;
        } else {
            std::mt19937_64 rng(seed);
            std::shuffle(all.begin(), all.end(), rng);
            ws.assign(all.begin(), all.begin() + std::min<size_t>(size_t(sample), all.size()));
            std::sort(ws.begin(), ws.end());
        }
        std::vector<char> ok(ws.size());
        parallel_for(ws.size(), jobs, [&](size_t k) {
            Polynomial dd = double_schubert_dd(ws[k]);
            ok[k] = dd == double_schubert_rc(ws[k]) && set_block_zero(dd, Block::Y) == double_schubert_rc(ws[k], true);
        });
        for (size_t k = 0; k < ws.size(); ++k) r.add(perm_to_string(ws[k]), "rc-graph sum", ok[k]);
    });
    return r;
}

Report verify_appendix(int n, int points, uint64_t seed, int jobs) {
    Report r;
    r.suite = "appendix";
    r.seed = seed;
    r.seconds = timed([&] {
        struct Item {
            Partition lam;
            int m;
        };
        std::vector<Item> items;
        for (int m = 3; m <= n; ++m)
            for (auto& lam : val_n(m)) items.push_back({lam, m});
        // one seed per instance so that results do not depend on jobs
        std::vector<uint64_t> seeds;
        std::mt19937_64 rng(seed);
        for (size_t k = 0; k < items.size(); ++k) seeds.push_back(rng());
        std::vector<std::vector<ReportItem>> out(items.size());
        parallel_for(items.size(), jobs, [&](size_t k) {
            const auto& [lam, m] = items[k];
            std::string in = partition_to_string(lam) + " n=" + std::to_string(m);
            auto add = [&](std::string src, bool pass, std::string detail = {}) {
                out[k].push_back({in, std::move(src), pass, std::move(detail)});
            };
            for (bool yz : {false, true}) {
                std::string mode = yz ? ", y=0" : "";
                bool spec = true;
                for (int a = 1; a <= m - lam[0]; ++a) spec = spec && check_specialization(lam, m, a, yz);
                add("specialization z1 = x_a" + mode, spec);
                int l2 = lam.size() > 1 ? lam[1] : 0;
                if (lam[0] > l2) add("first part lowering" + mode, check_first_part_lowering(lam, m, yz));
                if (mul(lam) > 1) add("repeated part lowering" + mode, check_repeated_part_lowering(lam, m, yz));
            }
            uint64_t st = seeds[k];
            for (int j = 1; j <= mul(lam); ++j) {
                int good = 0;
                for (int t = 0; t < points; ++t) good += check_subset_sum(lam, m, j, random_rational_point(st, 2 * m + 2));
                add("subset-sum expansion, k=" + std::to_string(j), good == points,
                    std::to_string(good) + "/" + std::to_string(points) + " points");
            }
        });
        for (auto& v : out)
            for (auto& i : v) r.items.push_back(i);
    });
    return r;
}

Report verify_counts(int n) {
    Report r;
    r.suite = "counts";
    r.seconds = timed([&] {
        for (int m = 1; m <= n; ++m) {
            std::string in = "n=" + std::to_string(m);
            Int e = e_recurrence(m);
            r.add(in, "e(n) recurrence equals closed form", e == e_closed(m), e.str());
            if (m <= 9) {
                long long ex = e_exhaustive(m);
                r.add(in, "e(n) recurrence equals pattern count", Int(ex) == e, std::to_string(ex));
            }
            if (m <= 8) {
                size_t total = 0;
                for (int k = 0; k < m; ++k) {
                    size_t st = st_nk(m, k).size();
                    total += st;
                    size_t ps = parseq_enumerate(m, k).size();
                    Int t = T_closed(m, k);
                    r.add(in + " k=" + std::to_string(k), "|St(n,k)| = |ParSeq(n,k)| = T(n,k)",
                          st == ps && Int(st) == t, std::to_string(st) + ", " + std::to_string(ps) + ", " + t.str());
                }
                if (m >= 2)
                    r.add(in, "states with first letter 1 number e(n-1)", Int(total) == e_recurrence(m - 1),
                          std::to_string(total));
            }
        }
    });
    return r;
}

}  // namespace ts
