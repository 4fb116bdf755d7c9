#pragma once

#include "xxz/exec.hpp"
#include "xxz/report/check.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace xxz {

enum class OutputFormat { json, csv, text };

OutputFormat parse_format(const std::string& s);

struct SuiteConfig {
    std::string suite = "all";
    int N_max = 6;       // chain sizes for the spin, qKZ and inhomogeneous EFP suites
    int n_max = 3;       // half-sizes for closed forms and determinant checks
    int k_max = 2;       // cap on k for the polynomial determinant comparisons
    std::uint64_t seed = 0;
    int instances = 200;
    Exec exec = Exec::parallel;
};

struct ReportRow {
    std::string suite;
    std::string instance;
    std::string expected;
    std::string got;
    bool pass = false;
    Provenance provenance = Provenance::derived;
};

struct SuiteReport {
    std::string suite;
    std::vector<ReportRow> rows;

    std::size_t passed() const;
    std::size_t failed() const;
    bool all_pass() const { return failed() == 0 && !rows.empty(); }
    int exit_code() const { return all_pass() ? 0 : 1; }
};

const std::vector<std::string>& suite_names();
bool known_suite(const std::string& name);

// Runs every instance of the suite grid. Instances are independent and run on
// the worker pool; rows keep the canonical instance order. Exceptions from an
// instance become a failed row.
SuiteReport run_suite(const SuiteConfig& cfg);

nlohmann::json report_to_json(const SuiteReport& r);
std::string report_to_csv(const SuiteReport& r);
std::string report_to_text(const SuiteReport& r);
std::string render_report(const SuiteReport& r, OutputFormat f);

// One unit of work in a suite grid.
struct SuiteTask {
    std::string label;
    std::function<CheckReport()> run;
};

// The task grid of a suite. Besides the public suite ids this accepts the
// parts det-reps/qkz, det-reps/t, ratios/plain and ratios/pseudo.
std::vector<SuiteTask> suite_tasks(const std::string& suite, const SuiteConfig& cfg);

// Runs tasks on the pool and flattens their reports in task order.
SuiteReport run_tasks(const std::string& suite, const std::vector<SuiteTask>& tasks, Exec exec);

}  // namespace xxz
