#pragma once

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace hnf {

// Outcome of one exhaustive check. Counterexamples are capped; the counter
// keeps the true total.
struct Report {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> counterexamples;
    double seconds = 0;

    bool ok() const noexcept { return failures == 0; }
    void fail(std::string what) {
        ++failures;
        if (counterexamples.size() < 20) counterexamples.push_back(std::move(what));
    }
    void merge(const Report& other) {
        checked += other.checked;
        failures += other.failures;
        for (const auto& c : other.counterexamples)
            if (counterexamples.size() < 20) counterexamples.push_back(c);
    }
};

inline nlohmann::json to_json(const Report& r) {
    return {{"name", r.name},
            {"checked", r.checked},
            {"failures", r.failures},
            {"counterexamples", r.counterexamples},
            {"seconds", r.seconds},
            {"ok", r.ok()}};
}

inline std::string to_text(const Report& r) {
    std::string s = (r.ok() ? "PASS " : "FAIL ") + r.name + ": " + std::to_string(r.checked) + " checked, " +
                    std::to_string(r.failures) + " failed";
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
    s += buf;
    for (const auto& c : r.counterexamples) s += "\n  " + c;
    return s;
}

} // namespace hnf
