// Acceptance suite: runs every verification criterion and prints one
// pass/fail line per criterion. Exit status is the number of failures.
//
// Usage: nullfil_acceptance [--seed N] [criterion ids...]

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "nullfil/selftest.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 20240807;
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            only.push_back(std::atoi(argv[i]));
        }
    }

    std::printf("acceptance suite (seed %llu)\n", static_cast<unsigned long long>(seed));
    int failures = 0;
    for (const auto& r : nullfil::selftest::run_all(seed, only)) {
        std::printf("[%s] criterion %d: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds);
        if (!r.detail.empty()) std::printf("        %s\n", r.detail.c_str());
        if (!r.pass) ++failures;
    }
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
