#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include <json.hpp>

#include "core/caps.hpp"

namespace subsum {

// Return false to request a graceful stop; a checkpoint is written first
// when a checkpoint path is configured.
using ProgressFn = std::function<bool(uint64_t units_done, uint64_t units_total)>;

struct RunOptions {
    uint32_t jobs = 1;
    uint64_t seed = 1;
    uint32_t witness_cap = 10;
    std::string checkpoint_path;
    ProgressFn progress;
    Caps caps;
};

// Runs `unit_count` independent work units on a pool of `jobs` workers and
// folds their JSON partials IN UNIT ORDER, so the result is identical for any
// worker count or schedule. Checkpoints carry the fold over the completed
// unit prefix; resuming continues from there and produces the same output as
// an uninterrupted run.
nlohmann::json run_units(const RunOptions& opt, const std::string& fingerprint,
                         uint64_t unit_count,
                         const std::function<nlohmann::json(uint64_t)>& run_unit,
                         const std::function<void(nlohmann::json&, const nlohmann::json&)>& merge,
                         nlohmann::json initial);

// Atomic write-temp-then-rename.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace subsum
