#pragma once

#include "mckay/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mckay {

struct CriterionResult {
    int id = 0;
    std::string title;
    std::string scope;
    bool passed = true;
    long checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

struct VerifyOptions {
    // Replaces each criterion's default n range, clipped to its domain.
    std::optional<std::pair<int, int>> n_range;
    std::uint64_t seed = 20240601;
    unsigned threads = 0; // 0: hardware concurrency
};

constexpr int criterion_count = 11;

CriterionResult run_criterion(int id, const VerifyOptions& opt = {});
std::vector<CriterionResult> run_all(const VerifyOptions& opt = {});

// "[PASS] 3 fixed points ... (48 checks)"
std::string summary_line(const CriterionResult& r);
Json to_json(const CriterionResult& r);

} // namespace mckay
