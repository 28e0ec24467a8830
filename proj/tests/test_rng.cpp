#include "pforge/rng.hpp"

#include <doctest.h>

#include <set>

using namespace pforge;

TEST_CASE("splitmix64 reproduces the reference sequence for seed 0") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);
}

TEST_CASE("identical seeds give identical streams") {
    SplitMix64 a(12345), b(12345);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("below stays in range and covers small bounds") {
    SplitMix64 rng(7);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const auto v = rng.below(5);
        CHECK(v < 5);
        seen.insert(v);
    }
    CHECK(seen.size() == 5);
}

TEST_CASE("substreams differ by index but are stable per index") {
    const auto first = [](std::uint64_t seed, std::uint64_t idx) {
        auto rng = substream(seed, idx);
        return rng.next();
    };
    CHECK(first(1, 0) == first(1, 0));
    std::set<std::uint64_t> outputs;
    for (std::uint64_t i = 0; i < 64; ++i) outputs.insert(first(1, i));
    CHECK(outputs.size() == 64);
    CHECK(first(1, 0) != first(2, 0));
}
