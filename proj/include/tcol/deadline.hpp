#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace tcol {

struct Timeout : std::runtime_error {
    Timeout() : std::runtime_error("time limit exceeded") {}
};

// Nullable wall-clock cutoff checked cooperatively inside long-running solvers.
class Deadline {
public:
    Deadline() = default;

    static Deadline never() { return Deadline(); }

    static Deadline after(double seconds) {
        Deadline d;
        d.at_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(seconds));
        return d;
    }

    bool expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }

    void check() const {
        if (expired()) throw Timeout();
    }

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace tcol
