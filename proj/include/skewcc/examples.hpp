#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewcc/json_io.hpp"

namespace skewcc {

/// One assertion of a bundled example run.
struct ExampleCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // mismatch description or exception text
};

struct ExampleResult {
    std::string id;
    std::vector<ExampleCheck> checks;

    bool passed() const {
        for (const ExampleCheck& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// ids of every bundled configuration: the worked examples ("ex1".."ex6",
/// "ex7a", "ex7b") plus small auxiliary instances used by the exhaustive
/// cross-checks.
const std::vector<std::string>& bundled_config_ids();

/// The configuration JSON for one id; throws std::invalid_argument for an
/// unknown id.
json bundled_config(const std::string& id);

/// ids accepted by run_example: "ex1" .. "ex7".
const std::vector<std::string>& paper_example_ids();

/// Replays one worked example and reports every frozen assertion.
ExampleResult run_example(const std::string& id, std::uint64_t seed);

std::vector<ExampleResult> run_all_examples(std::uint64_t seed);

json examples_report(const std::vector<ExampleResult>& results);

}  // namespace skewcc
