// One line per acceptance criterion.  Exit 0 iff the set of unmet criteria equals the
// set passed with --known-failure (empty by default).

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <set>
#include <string>
#include <vector>

#include "efg/suites.hpp"

namespace {

struct Criterion {
    int id;
    const char* suite;
    std::size_t instances;
    // pinned tolerances: allowed failures and wall-time limit in seconds (0 = none)
    std::size_t max_failures;
    double time_limit;
    const char* claim;
};

constexpr std::uint64_t kSeed = 1;

const std::vector<Criterion> kCriteria{
    {1, "sec1", 100, 0, 60, "4- and 3-variable unit-interval formulas agree"},
    {2, "equiv", 1000, 0, 5, "floor table matches difference constraints"},
    {3, "prop1", 500, 0, 0, "equivalent pairs share every frac order"},
    {4, "prop2", 500, 0, 0, "increasing halves compose; floor additivity"},
    {5, "prop3", 200, 0, 300, "halving Spoiler wins within n rounds, 3 pebbles"},
    {6, "cor1", 200, 0, 0, "Spoiler wins the m-round 3-pebble game on non-equivalent triples"},
    {7, "prop4", 200, 0, 0, "local Spoiler win implies (m+n)-round 3-pebble win"},
    {8, "lemma1", 100, 0, 0, "composed Duplicator survives n rounds"},
    {9, "prop5", 200, 0, 1800, "(4n+2)-round 3-pebble Duplicator win transfers"},
    {10, "stability", 60, 0, 0, "refined discretization flips no verdict"},
    {11, "sec5-antitone", 20, 0, 0, "antitone rewrite is clean and equivalent"},
    {12, "sec6", 1, 0, 300, "2-pebble 2-round Duplicator, 3-pebble 3-round Spoiler"},
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> known;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--known-failure") == 0 && i + 1 < argc) {
            known.insert(std::atoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: %s [--known-failure N]...\n", argv[0]);
            return 2;
        }
    }
    std::set<int> unmet;
    for (const auto& c : kCriteria) {
        const auto r = efg::run_suite(c.suite, {kSeed, c.instances, 0});
        const bool in_time = c.time_limit == 0 || r.seconds < c.time_limit;
        const bool pass = r.failures.size() <= c.max_failures && in_time;
        if (!pass) unmet.insert(c.id);
        std::string limit = c.time_limit > 0 ? ", limit " + std::to_string(static_cast<int>(c.time_limit)) + " s" : "";
        std::printf("%s %2d %-13s %zu instances, %zu failures, %.2f s%s: %s\n", pass ? "PASS" : "FAIL", c.id, c.suite,
                    r.instances, r.failures.size(), r.seconds, limit.c_str(), c.claim);
        for (std::size_t k = 0; k < r.failures.size() && k < 3; ++k)
            std::printf("       instance %zu: %s\n", r.failures[k].index, r.failures[k].reason.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu of %zu criteria met\n", kCriteria.size() - unmet.size(), kCriteria.size());
    if (unmet != known) {
        for (int id : known)
            if (!unmet.contains(id)) std::printf("criterion %d was expected to fail and passed\n", id);
        return 1;
    }
    return 0;
}
