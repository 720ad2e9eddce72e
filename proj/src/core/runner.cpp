#include "core/runner.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "core/error.hpp"

namespace subsum {

namespace {

constexpr int kCheckpointSchemaVersion = 1;

struct CheckpointData {
    uint64_t completed = 0;
    nlohmann::json aggregate;
};

std::optional<CheckpointData> load_checkpoint(const std::string& path,
                                              const std::string& fingerprint) {
    std::ifstream in(path);
    if (!in.good()) return std::nullopt;
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::io_error, "unreadable checkpoint " + path + ": " + e.what());
    }
    if (doc.value("schema_version", -1) != kCheckpointSchemaVersion)
        throw Error(ErrorCode::checkpoint_mismatch, "checkpoint schema version mismatch");
    if (doc.value("fingerprint", std::string()) != fingerprint)
        throw Error(ErrorCode::checkpoint_mismatch,
                    "checkpoint at " + path + " belongs to a different run");
    CheckpointData cp;
    cp.completed = doc.at("completed_units").get<uint64_t>();
    cp.aggregate = doc.at("aggregate");
    return cp;
}

void store_checkpoint(const std::string& path, const std::string& fingerprint,
                      uint64_t completed, const nlohmann::json& aggregate) {
    nlohmann::json doc;
    doc["schema_version"] = kCheckpointSchemaVersion;
    doc["fingerprint"] = fingerprint;
    doc["completed_units"] = completed;
    doc["aggregate"] = aggregate;
    write_file_atomic(path, doc.dump(2) + "\n");
}

} // namespace

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out.good())
            throw Error(ErrorCode::io_error, "cannot write " + tmp);
        out << content;
        out.flush();
        if (!out.good())
            throw Error(ErrorCode::io_error, "write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error(ErrorCode::io_error, "cannot rename " + tmp + " to " + path);
}

nlohmann::json run_units(const RunOptions& opt, const std::string& fingerprint,
                         uint64_t unit_count,
                         const std::function<nlohmann::json(uint64_t)>& run_unit,
                         const std::function<void(nlohmann::json&, const nlohmann::json&)>& merge,
                         nlohmann::json initial) {
    uint64_t start = 0;
    nlohmann::json acc = std::move(initial);
    if (!opt.checkpoint_path.empty()) {
        if (auto cp = load_checkpoint(opt.checkpoint_path, fingerprint)) {
            start = cp->completed;
            acc = cp->aggregate;
        }
    }

    if (start >= unit_count) {
        if (!opt.checkpoint_path.empty()) std::remove(opt.checkpoint_path.c_str());
        return acc;
    }

    std::mutex mu;
    std::atomic<uint64_t> next{start};
    std::vector<std::optional<nlohmann::json>> slots(unit_count);
    uint64_t frontier = start; // units [0, frontier) merged into acc
    bool stop = false;
    std::exception_ptr failure;

    auto on_unit_done = [&](uint64_t idx, nlohmann::json partial) {
        std::lock_guard<std::mutex> lock(mu);
        slots[idx] = std::move(partial);
        bool advanced = false;
        while (frontier < unit_count && slots[frontier].has_value()) {
            merge(acc, *slots[frontier]);
            slots[frontier].reset();
            ++frontier;
            advanced = true;
        }
        if (advanced && !opt.checkpoint_path.empty() && frontier < unit_count)
            store_checkpoint(opt.checkpoint_path, fingerprint, frontier, acc);
        if (opt.progress && !opt.progress(frontier, unit_count)) stop = true;
    };

    auto worker = [&] {
        for (;;) {
            {
                std::lock_guard<std::mutex> lock(mu);
                if (stop || failure) return;
            }
            uint64_t idx = next.fetch_add(1);
            if (idx >= unit_count) return;
            try {
                on_unit_done(idx, run_unit(idx));
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    uint32_t jobs = std::max<uint32_t>(1, opt.jobs);
    uint64_t remaining = unit_count - start;
    uint32_t threads = static_cast<uint32_t>(std::min<uint64_t>(jobs, remaining));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (uint32_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    if (failure) std::rethrow_exception(failure);

    if (stop && frontier < unit_count) {
        if (!opt.checkpoint_path.empty())
            store_checkpoint(opt.checkpoint_path, fingerprint, frontier, acc);
        throw Interrupted();
    }

    // out-of-order completions past an interrupted frontier are discarded by
    // the loop above; on full completion everything merged in unit order
    if (!opt.checkpoint_path.empty()) std::remove(opt.checkpoint_path.c_str());
    return acc;
}

} // namespace subsum
