#ifndef WIDTHKIT_BUDGET_HPP
#define WIDTHKIT_BUDGET_HPP

#include <cstdint>
#include <cstdlib>
#include <string>

#include "errors.hpp"

namespace widthkit {

/// Node counter for exhaustive searches. Converts exponential blowup into a
/// typed error instead of an unbounded run. The default limit can be
/// overridden with the WIDTHKIT_BUDGET environment variable.
class SearchBudget {
public:
    static constexpr std::uint64_t kDefaultLimit = 10'000'000;

    SearchBudget() : limit_(default_limit()) {}
    explicit SearchBudget(std::uint64_t limit) : limit_(limit) {}

    static std::uint64_t default_limit() {
        if (const char* env = std::getenv("WIDTHKIT_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return v;
        }
        return kDefaultLimit;
    }

    std::uint64_t limit() const { return limit_; }
    std::uint64_t used() const { return used_; }

    void charge(std::uint64_t nodes = 1) {
        used_ += nodes;
        if (used_ > limit_)
            throw resource_limit_error(
                "search budget of " + std::to_string(limit_) + " nodes exceeded", limit_);
    }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}  // namespace widthkit

#endif
