#pragma once

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace gpoly {

struct InvariantTally {
    std::string id;
    long passed = 0;
    long failed = 0;
    std::vector<std::string> failures; // first few only
};

struct RunReport {
    std::string command;
    nlohmann::json config = nlohmann::json::object();
    std::map<std::string, long> counts;
    std::vector<std::pair<std::string, std::int64_t>> phases_ns;
    std::vector<std::string> collisions;
    std::vector<InvariantTally> invariants;
    std::vector<std::string> failures;

    bool ok() const;
};

// Timings are left out unless asked for, so that a fixed seed gives a
// byte-identical report.
nlohmann::json report_to_json(const RunReport& r, bool with_timing = false);

// 0 when the report passed; otherwise a code naming the first failing suite.
int exit_code_for(const RunReport& r);

// Runs fn(0..count-1) on up to `workers` threads; results keep index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F fn, unsigned workers = 1)
{
    std::vector<T> out(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_lock;
    auto run = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> hold(error_lock);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(run);
    run();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return out;
}

class PhaseTimer {
public:
    PhaseTimer(RunReport& r, std::string name) : report_(r), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
    ~PhaseTimer()
    {
        auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start_).count();
        report_.phases_ns.emplace_back(name_, static_cast<std::int64_t>(ns));
    }

private:
    RunReport& report_;
    std::string name_;
    std::chrono::steady_clock::time_point start_;
};

// Star expansions of all free trees with at most max_n vertices; any two
// non-isomorphic trees with the same expansion are listed as collisions.
RunReport verify_stanley(int max_n, unsigned workers = 1);

struct InvariantOptions {
    std::uint64_t seed = 1;
    int trials = 20;
    // Test hook: flips one sign in the undotting used by the Pascal check.
    bool mutate_undot_sign = false;
    // Id prefix, e.g. "polyring."; empty runs everything.
    std::string only;
};

// The randomized property battery; every id of invariant_ids() is reported.
RunReport verify_invariants(const InvariantOptions& opts);
std::vector<std::string> invariant_ids();

} // namespace gpoly
