#ifndef TOUGHCYCLES_BUDGET_HPP
#define TOUGHCYCLES_BUDGET_HPP

#include <chrono>

namespace toughcycles {

// Cooperative per-graph deadline; checked inside the exponential searches.
struct Budget {
    bool enabled = false;
    std::chrono::steady_clock::time_point deadline{};

    static Budget from_ms(int ms) {
        Budget b;
        if (ms > 0) {
            b.enabled = true;
            b.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
        }
        return b;
    }
    bool expired() const { return enabled && std::chrono::steady_clock::now() > deadline; }
};

}  // namespace toughcycles

#endif
