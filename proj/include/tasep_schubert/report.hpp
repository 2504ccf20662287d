#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ts {

struct ReportItem {
    std::string input;
    std::string source;  // table or theorem the expectation comes from
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<ReportItem> items;
    double seconds = 0;
    unsigned long long seed = 0;

    bool passed() const;
    size_t failures() const;
    void add(std::string input, std::string source, bool pass, std::string detail = {});
    void append(const Report& o);
};

std::string to_json(const Report& r);
std::string to_text(const Report& r, bool verbose = false);

// Runs body(i) for i in [0, count) on up to jobs threads.
void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& body);

// Wall time of fn in seconds.
double timed(const std::function<void()>& fn);

}  // namespace ts
