#include "criteria.hpp"

#include <cstdio>
#include <exception>

int main() {
    int failures = 0;
    for (const auto& criterion : comet::acceptance::criteria()) {
        try {
            criterion.fn();
            std::printf("[PASS] criterion %2d: %s\n", criterion.number,
                        criterion.name.c_str());
        } catch (const comet::acceptance::Skip& skip) {
            std::printf("[SKIP] criterion %2d: %s (%s)\n", criterion.number,
                        criterion.name.c_str(), skip.reason.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("[FAIL] criterion %2d: %s\n        %s\n", criterion.number,
                        criterion.name.c_str(), e.what());
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
