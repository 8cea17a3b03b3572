#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "efg/json_io.hpp"

namespace efg {

struct SuiteFailure {
    std::size_t index = 0;
    std::string reason;
    /// Signals, configuration and game parameters; enough to replay the instance alone.
    json witness;
};

struct SuiteReport {
    std::string name;
    std::size_t instances = 0;
    std::vector<SuiteFailure> failures;  // sorted by instance index
    double seconds = 0;
    /// Suite-specific counters, e.g. rejected samples or verdict tallies.
    json notes = json::object();

    bool ok() const { return failures.empty(); }
    /// Wall time is left out unless requested, so equal seeds give equal JSON.
    json to_json(bool with_time = false) const;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    /// nullopt: the suite's default count.
    std::optional<std::size_t> instances;
    /// 0: EFGAME_THREADS, else hardware concurrency.
    unsigned threads = 0;
};

/// Names accepted by run_suite, in report order.
const std::vector<std::string>& suite_names();
std::size_t default_instances(const std::string& name);
/// Throws std::invalid_argument on an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

/// EFGAME_THREADS when set to a positive integer, else hardware concurrency (at least 1).
unsigned thread_count(unsigned requested = 0);

/// Runs body(i) for i in [0, n) on `threads` workers.  The first exception is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace efg
