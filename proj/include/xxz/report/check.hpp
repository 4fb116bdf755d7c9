#pragma once

#include <string>
#include <vector>

namespace xxz {

enum class Provenance { paper, trivial, derived };

const char* provenance_tag(Provenance p);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string got;
    Provenance provenance = Provenance::derived;
};

// Ordered list of named identity checks produced by a verifier.
struct CheckReport {
    std::vector<CheckResult> items;

    void add(std::string name, bool pass, std::string expected = "", std::string got = "",
             Provenance prov = Provenance::derived) {
        items.push_back({std::move(name), pass, std::move(expected), std::move(got), prov});
    }
    void append(const CheckReport& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }
    bool all_pass() const {
        for (const auto& c : items)
            if (!c.pass) return false;
        return !items.empty();
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : items) n += !c.pass;
        return n;
    }
    // First failing item, for diagnostics.
    std::string first_failure() const {
        for (const auto& c : items)
            if (!c.pass) return c.name + ": expected " + c.expected + ", got " + c.got;
        return "";
    }
};

}  // namespace xxz
