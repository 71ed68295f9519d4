#pragma once

#include <string>
#include <vector>

#include "frobhopf/json_io.hpp"

namespace frobhopf {

struct ReproduceOutcome {
    bool pass = false;
    json results;
    std::string example;   // which worked example this identifier replays
};

/// Replay a named worked example against embedded expected values.
/// Mismatches set pass = false and are listed under results["mismatches"].
ReproduceOutcome run_reproduce(const std::string& id, int degree = 8,
                               uint64_t budget = 10000000);

std::vector<std::string> reproduce_ids();

} // namespace frobhopf
