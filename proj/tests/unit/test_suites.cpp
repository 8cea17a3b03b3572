#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>

#include "efg/suites.hpp"

using namespace efg;

TEST(Suites, NamesAndDefaults) {
    const auto& names = suite_names();
    EXPECT_EQ(names.size(), 12u);
    EXPECT_EQ(default_instances("equiv"), 1000u);
    EXPECT_EQ(default_instances("prop3"), 200u);
    EXPECT_EQ(default_instances("sec6"), 1u);
    EXPECT_THROW((void)default_instances("prop9"), std::invalid_argument);
    EXPECT_THROW((void)run_suite("all"), std::invalid_argument);
}

TEST(Suites, FastSuitesPassAtSmallCounts) {
    for (const char* name : {"equiv", "prop1", "prop2", "prop3", "sec1"}) {
        const auto r = run_suite(name, {7, 20, 2});
        EXPECT_EQ(r.instances, 20u) << name;
        EXPECT_TRUE(r.ok()) << name << ": " << r.to_json().dump();
    }
}

TEST(Suites, ReportIsIndependentOfThreads) {
    const auto one = run_suite("cor1", {3, 40, 1});
    const auto four = run_suite("cor1", {3, 40, 4});
    EXPECT_EQ(one.to_json().dump(), four.to_json().dump());
    EXPECT_FALSE(one.to_json().contains("seconds"));
    EXPECT_TRUE(one.to_json(true).contains("seconds"));
}

TEST(Suites, SeedChangesInstances) {
    EXPECT_NE(run_suite("equiv", {1, 50, 1}).to_json().dump(), run_suite("equiv", {2, 50, 1}).to_json().dump());
}

TEST(Suites, FailuresCarryWitnesses) {
    // the boundary instances of the corollary fail with the configuration attached
    const auto r = run_suite("cor1", {1, 200, 0});
    for (const auto& f : r.failures) {
        EXPECT_TRUE(f.witness.contains("configuration"));
        EXPECT_TRUE(f.witness.contains("m"));
        EXPECT_NE(f.reason.find("which suffices"), std::string::npos) << f.reason;
    }
}

TEST(Suites, ExperimentSuite) {
    const auto r = run_suite("sec6");
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.notes.at("k_pebble_duplicator"), 1);
    EXPECT_EQ(r.notes.at("companion_spoiler"), 1);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
    std::vector<std::atomic<int>> hits(100);
    parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
    parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(ParallelFor, RethrowsFirstError) {
    EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) {
                     if (i == 5) throw std::runtime_error("boom");
                 }),
                 std::runtime_error);
}

TEST(ParallelFor, ThreadCountFromEnvironment) {
    EXPECT_EQ(thread_count(3), 3u);
    ::setenv("EFGAME_THREADS", "2", 1);
    EXPECT_EQ(thread_count(0), 2u);
    ::setenv("EFGAME_THREADS", "x", 1);
    EXPECT_GE(thread_count(0), 1u);
    ::unsetenv("EFGAME_THREADS");
}
