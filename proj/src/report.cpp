#include "tasep_schubert/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include <json.hpp>

namespace ts {

bool Report::passed() const { return failures() == 0; }

size_t Report::failures() const {
    return size_t(std::count_if(items.begin(), items.end(), [](const ReportItem& i) { return !i.pass; }));
}

void Report::add(std::string input, std::string source, bool pass, std::string detail) {
    items.push_back({std::move(input), std::move(source), pass, std::move(detail)});
}

void Report::append(const Report& o) {
    items.insert(items.end(), o.items.begin(), o.items.end());
    seconds += o.seconds;
}

std::string to_json(const Report& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["passed"] = r.passed();
    j["seconds"] = r.seconds;
    j["seed"] = r.seed;
    j["items"] = nlohmann::json::array();
    for (auto& i : r.items)
        j["items"].push_back({{"input", i.input}, {"source", i.source}, {"pass", i.pass}, {"detail", i.detail}});
    return j.dump(2);
}

std::string to_text(const Report& r, bool verbose) {
    std::string s;
    for (auto& i : r.items) {
        if (!verbose && i.pass) continue;
        s += (i.pass ? "ok   " : "FAIL ") + r.suite + " " + i.input + " [" + i.source + "]";
        if (!i.detail.empty()) s += " " + i.detail;
        s += "\n";
    }
    s += r.suite + ": " + std::to_string(r.items.size() - r.failures()) + "/" + std::to_string(r.items.size()) +
         " passed in " + std::to_string(r.seconds) + " s\n";
    return s;
}

void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& body) {
    size_t workers = std::min<size_t>(std::max(jobs, 1), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex m;
    std::vector<std::thread> pool;
    for (size_t t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (size_t i; (i = next++) < count;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> g(m);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

double timed(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace ts
