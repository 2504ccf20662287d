#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tasep_schubert/combinat.hpp"
#include "tasep_schubert/mlq.hpp"
#include "tasep_schubert/oracle.hpp"
#include "tasep_schubert/schubert.hpp"
#include "tasep_schubert/suites.hpp"
#include "tasep_schubert/tables.hpp"
#include "tasep_schubert/tasep.hpp"
#include "tasep_schubert/zschubert.hpp"

#ifndef TASEP_SCHUBERT_GOLDEN
#define TASEP_SCHUBERT_GOLDEN "tests/golden"
#endif

using namespace ts;
using nlohmann::json;

namespace {

struct Globals {
    std::string format = "text";
    unsigned long long seed = 1;
    bool y_zero = false;
    int jobs = 1;
    bool force = false;
    bool verbose = false;
};

struct OutOfBounds : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void bound(const Globals& g, bool ok, const std::string& what) {
    if (!ok && !g.force) throw OutOfBounds(what + " is beyond the default bounds; pass --force to run it anyway");
}

bool json_out(const Globals& g) { return g.format == "json"; }

int emit(const Globals& g, const Report& r) {
    std::cout << (json_out(g) ? to_json(r) + "\n" : to_text(r, g.verbose));
    return r.passed() ? 0 : 1;
}

std::vector<int> ints(const std::string& s) { return parse_int_list(s); }

// steady-state ---------------------------------------------------------------

int cmd_steady_state(const Globals& g, int n, bool deformed, const std::string& state) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    bound(g, g.y_zero ? n <= 6 : n <= 5, "n=" + std::to_string(n) + (g.y_zero ? " at y=0" : " with general y"));
    std::optional<Perm> only;
    if (!state.empty()) {
        only = parse_perm(state);
        if (int(only->size()) != n || !is_permutation(*only)) throw std::invalid_argument("state is not in S_n");
    }
    json out = json::array();
    auto show = [&](const Perm& w, const std::string& text) {
        if (json_out(g))
            out.push_back({{"state", perm_to_string(w)}, {"psi", text}});
        else
            std::cout << perm_to_string(w) << "  " << text << "\n";
    };
    if (deformed) {
        DeformedDistribution d = psi_z_all(n, {g.y_zero, false});
        for (auto& w : all_perms(n))
            if (!only || *only == w) show(w, to_text(d.at(w)));
    } else {
        auto psi = psi_all(n, g.y_zero);
        for (auto& [w, p] : psi)
            if (!only || *only == w) show(w, to_text(p));
    }
    if (json_out(g)) std::cout << out.dump(2) << "\n";
    return 0;
}

// schubert / zschubert --------------------------------------------------------

int cmd_schubert(const Globals& g, const std::string& perm, const std::string& method, bool expand) {
    Perm w = parse_perm(perm);
    if (!is_permutation(w)) throw std::invalid_argument("not a permutation");
    bound(g, w.size() <= 7, "a permutation of " + std::to_string(w.size()) + " letters");
    Polynomial p;
    if (method == "dd")
        p = double_schubert_dd(w, 0, WordStrategy::LargestAscent, g.y_zero);
    else if (method == "rc")
        p = double_schubert_rc(w, g.y_zero);
    else
        throw std::invalid_argument("method must be dd or rc");
    std::string text = to_text(p);
    if (json_out(g)) {
        json j = {{"perm", perm_to_string(w)}, {"method", method}, {"polynomial", text}};
        if (expand) j["schubert_expansion"] = schubert_sum_to_string(schubert_expand(set_block_zero(p, Block::Y)));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text << "\n";
    }
    return 0;
}

int cmd_zschubert(const Globals& g, const std::string& lam_s, int n, int shift, bool lc) {
    Partition lam = lam_s.empty() ? Partition{} : ints(lam_s);
    bound(g, g.y_zero ? n <= 7 : n <= 6, "n=" + std::to_string(n));
    Polynomial p = z_schubert(lam, n, shift, true, g.y_zero);
    if (lc) p = leading_coeff_z(p);
    if (json_out(g))
        std::cout << json{{"lambda", partition_to_string(lam)}, {"n", n}, {"shift", shift}, {"polynomial", to_text(p)}}.dump(2)
                  << "\n";
    else
        std::cout << to_text(p) << "\n";
    return 0;
}

// mlq ------------------------------------------------------------------------

int cmd_mlq(const Globals& g, const std::string& type_s, bool list, bool sum, bool zsum) {
    Composition w = ints(type_s);
    content_of(w);
    bound(g, w.size() <= 7, "a queue with " + std::to_string(w.size()) + " columns");
    auto qs = mlq_of_type(w, g.jobs);
    json j = {{"type", composition_to_string(w)}, {"count", qs.size()}};
    if (!json_out(g)) std::cout << qs.size() << " queues of type " << composition_to_string(w) << "\n";
    if (list) {
        j["queues"] = json::array();
        for (auto& q : qs) {
            auto lq = bully_label(q);
            std::string pic = to_ascii(lq), weight = to_text(wt(lq));
            if (json_out(g))
                j["queues"].push_back({{"diagram", pic}, {"wt", weight}});
            else
                std::cout << "\n" << pic << "wt = " << weight << "\n";
        }
    }
    if (sum) {
        std::string s = to_text(mlq_weight_sum(w, g.jobs));
        if (json_out(g))
            j["sum_wt"] = s;
        else
            std::cout << "sum wt = " << s << "\n";
    }
    if (zsum) {
        std::string s = to_text(F_w(w, g.jobs));
        if (json_out(g))
            j["sum_wt_z"] = s;
        else
            std::cout << "sum wt_z = " << s << "\n";
    }
    if (json_out(g)) std::cout << j.dump(2) << "\n";
    return 0;
}

// verify ---------------------------------------------------------------------

const std::vector<std::string> kSuites = {"main-theorem", "monomial-factor", "zweight",   "mlq-bijection",
                                          "lc-z",         "rc-vs-dd",        "oracle",    "exchange",
                                          "appendix",     "partition-function", "counts"};

struct VerifyArgs {
    int n = 5;
    int trials = 5;
    int samples = -1;
    int points = 20;
    std::string type;
};

Report run_suite(const Globals& g, const std::string& suite, const VerifyArgs& a) {
    int n = a.n;
    std::string at = "n=" + std::to_string(n);
    if (suite == "main-theorem") {
        if (n < 3) throw std::invalid_argument("main-theorem needs n >= 3");
        bound(g, g.y_zero ? n <= 6 : n <= 5, at);
        return verify_main_theorem(n, !g.y_zero, g.jobs);
    }
    if (suite == "monomial-factor") {
        bound(g, n <= 6, at);
        return verify_monomial_factor(n, g.jobs);
    }
    if (suite == "partition-function") {
        bound(g, n <= 6, at);
        return verify_partition_function(n);
    }
    if (suite == "zweight") {
        bound(g, n <= 5, at);
        Report r = verify_weight_theorem(n, g.jobs);
        r.append(verify_zweight_theorem(n, g.jobs));
        r.suite = "zweight";
        return r;
    }
    if (suite == "mlq-bijection") {
        bound(g, n <= 7, at);
        Report r;
        r.suite = suite;
        for (int m = 3; m <= n; ++m) r.append(verify_bijection(m, g.jobs));
        return r;
    }
    if (suite == "lc-z") {
        bound(g, n <= 6, at);
        Report r;
        r.suite = suite;
        for (int m = 3; m <= n; ++m) r.append(verify_lc_z(m, g.y_zero, g.jobs));
        return r;
    }
    if (suite == "rc-vs-dd") {
        bound(g, n <= 7, at);
        int samples = a.samples >= 0 ? a.samples : (n <= 5 ? 0 : 100);
        return verify_rc_vs_dd(n, samples, g.seed, g.jobs);
    }
    if (suite == "oracle") {
        bound(g, n <= 5 || (n == 6 && g.y_zero), at);
        return cross_validate(n, a.trials, g.seed, g.y_zero, g.jobs);
    }
    if (suite == "exchange") {
        std::vector<Composition> ws;
        if (!a.type.empty())
            ws.push_back(ints(a.type));
        else {
            ws = {{1, 1, 2}, {1, 2, 2}, {1, 1, 1, 2}};
            ws.push_back(identity_perm(n));
        }
        Report r;
        r.suite = suite;
        for (auto& w : ws) {
            bound(g, w.size() <= 5, "a composition with " + std::to_string(w.size()) + " parts");
            r.append(verify_exchange_equations(w, g.jobs));
        }
        return r;
    }
    if (suite == "appendix") {
        bound(g, n <= 5, at);
        return verify_appendix(n, a.points, g.seed, g.jobs);
    }
    if (suite == "counts") {
        bound(g, n <= 12, at);
        return verify_counts(n);
    }
    throw std::invalid_argument("unknown suite " + suite);
}

int cmd_verify(const Globals& g, const std::string& suite, const VerifyArgs& a) {
    if (suite != "all") return emit(g, run_suite(g, suite, a));
    bool ok = true;
    json all = json::array();
    for (auto& s : kSuites) {
        Report r = run_suite(g, s, a);
        r.suite = s;
        ok = ok && r.passed();
        if (json_out(g))
            all.push_back(json::parse(to_json(r)));
        else
            std::cout << to_text(r, g.verbose);
    }
    if (json_out(g)) std::cout << all.dump(2) << "\n";
    return ok ? 0 : 1;
}

// enumerate ------------------------------------------------------------------

int cmd_enumerate(const Globals& g, const std::string& what, int n, int k, const std::string& type, bool count) {
    std::vector<std::string> lines;
    if (what == "evil") {
        bound(g, n <= 9, "n=" + std::to_string(n));
        for (auto& w : all_perms(n))
            if (is_evil_avoiding(w)) lines.push_back(perm_to_string(w));
    } else if (what == "st-nk") {
        bound(g, n <= 10, "n=" + std::to_string(n));
        for (auto& w : st_nk(n, k)) lines.push_back(perm_to_string(w));
    } else if (what == "parseq") {
        bound(g, n <= 10, "n=" + std::to_string(n));
        for (auto& ps : parseq_enumerate(n, k)) lines.push_back(parseq_to_string(ps));
    } else if (what == "valn") {
        bound(g, n <= 16, "n=" + std::to_string(n));
        for (auto& lam : val_n(n)) lines.push_back(partition_to_string(lam));
    } else if (what == "mlq") {
        if (type.empty()) throw std::invalid_argument("enumerate mlq needs --type");
        Composition w = ints(type);
        bound(g, w.size() <= 7, "a queue with " + std::to_string(w.size()) + " columns");
        for (auto& q : mlq_of_type(w, g.jobs)) lines.push_back(to_ascii(bully_label(q)));
    } else {
        throw std::invalid_argument("unknown object " + what);
    }
    if (json_out(g)) {
        json j = {{"object", what}, {"count", lines.size()}};
        if (!count) j["items"] = lines;
        std::cout << j.dump(2) << "\n";
    } else if (count) {
        std::cout << lines.size() << "\n";
    } else {
        for (auto& l : lines) std::cout << l << (what == "mlq" ? "\n" : "\n");
    }
    return 0;
}

// tables ---------------------------------------------------------------------

std::string golden_dir() {
    const char* env = std::getenv("TASEP_SCHUBERT_GOLDEN_DIR");
    return env && *env ? env : TASEP_SCHUBERT_GOLDEN;
}

int cmd_tables(const Globals& g, const std::string& which, bool write) {
    std::vector<std::string> names = which == "all" ? table_names() : std::vector<std::string>{which};
    bool ok = true;
    json out = json::array();
    for (auto& name : names) {
        RenderedTable t = render_table(name);
        std::string path = golden_dir() + "/" + name + ".txt";
        bool same = false;
        if (write) {
            std::ofstream(path) << t.text;
            same = true;
        } else {
            std::ifstream in(path);
            std::stringstream ss;
            ss << in.rdbuf();
            same = in.good() || in.eof() ? ss.str() == t.text : false;
        }
        ok = ok && same && t.matches;
        if (json_out(g))
            out.push_back({{"table", name}, {"rows", t.rows}, {"matches_printed", t.matches}, {"golden", path},
                           {"golden_identical", same}, {"text", t.text}});
        else {
            std::cout << t.text;
            std::cout << name << ": " << t.rows << " rows, " << (t.matches ? "all match the printed entries" : "MISMATCH")
                      << ", golden " << (write ? "written" : same ? "identical" : "DIFFERS") << " (" << path << ")\n";
        }
    }
    if (json_out(g)) std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inhomogeneous TASEP on a ring: exact stationary distributions, Schubert product formulas, multiline queues"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "seed for random points and samples");
    app.add_flag("--y-zero", g.y_zero, "set every y_i to 0");
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--force", g.force, "allow sizes beyond the default bounds");
    app.add_flag("--verbose", g.verbose, "list passing items too");

    int n = 4, k = 0, shift = 0;
    std::string state, perm, method = "dd", lam, type, suite, what, which;
    bool deformed = false, expand = false, lc = false, list = false, sum = false, zsum = false, count = false,
         write = false;
    VerifyArgs va;
    int trials = 5;

    auto* ss = app.add_subcommand("steady-state", "stationary probabilities psi_w (or psi_w(z) with --deformed)");
    ss->add_option("--n", n)->required();
    ss->add_flag("--deformed", deformed);
    ss->add_option("--state", state);

    auto* sc = app.add_subcommand("schubert", "double Schubert polynomial");
    sc->add_option("perm", perm)->required();
    sc->add_option("--method", method)->check(CLI::IsMember({"dd", "rc"}));
    sc->add_flag("--expand", expand, "with --format json, add the single Schubert expansion at y=0");

    auto* zs = app.add_subcommand("zschubert", "z-Schubert polynomial S^n_lambda");
    zs->add_option("--lambda", lam, "parts, e.g. 2,1 (empty for the empty partition)");
    zs->add_option("--n", n)->required();
    zs->add_option("--shift", shift, "z_i -> z_{i+shift}, indices mod n");
    zs->add_flag("--lc", lc, "print the leading z coefficient only");

    auto* mq = app.add_subcommand("mlq", "multiline queues of a given type");
    mq->add_option("--type", type)->required();
    mq->add_flag("--list", list);
    mq->add_flag("--sum", sum);
    mq->add_flag("--zsum", zsum);

    auto* oc = app.add_subcommand("oracle", "exact stationary vector of the chain against the formulas");
    oc->add_option("--n", n)->required();
    oc->add_option("--trials", trials);

    auto* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("suite", suite)->required()->check(CLI::IsMember([] {
        auto s = kSuites;
        s.push_back("all");
        return s;
    }()));
    vf->add_option("--n", va.n);
    vf->add_option("--trials", va.trials);
    vf->add_option("--samples", va.samples, "rc-vs-dd sample size (0 = all)");
    vf->add_option("--points", va.points, "random points per appendix instance");
    vf->add_option("--type", va.type, "exchange: a single composition");

    auto* en = app.add_subcommand("enumerate", "list combinatorial objects");
    en->add_option("object", what)->required()->check(CLI::IsMember({"evil", "st-nk", "parseq", "valn", "mlq"}));
    en->add_option("--n", n);
    en->add_option("--k", k);
    en->add_option("--type", type);
    en->add_flag("--count", count);

    auto* tb = app.add_subcommand("tables", "recompute the printed tables and compare with the golden files");
    tb->add_option("which", which)->required()->check(CLI::IsMember({"fig2", "table1", "table2", "table3", "all"}));
    tb->add_flag("--write", write, "rewrite the golden files");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ss) return cmd_steady_state(g, n, deformed, state);
        if (*sc) return cmd_schubert(g, perm, method, expand);
        if (*zs) return cmd_zschubert(g, lam, n, shift, lc);
        if (*mq) return cmd_mlq(g, type, list, sum, zsum);
        if (*oc) {
            VerifyArgs a;
            a.n = n;
            a.trials = trials;
            return emit(g, run_suite(g, "oracle", a));
        }
        if (*vf) return cmd_verify(g, suite, va);
        if (*en) return cmd_enumerate(g, what, n, k, type, count);
        if (*tb) return cmd_tables(g, which, write);
    } catch (const OutOfBounds& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
