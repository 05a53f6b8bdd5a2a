#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace frobkit {

// Outcome of one named axiom check. The witness is an exact counterexample
// (a point, an index tuple, or a nonzero polynomial), rendered to a string;
// present exactly when the check failed.
struct CheckReport {
    std::string name;
    bool pass = false;
    std::optional<std::string> witness;

    static CheckReport ok(std::string n) { return {std::move(n), true, std::nullopt}; }
    static CheckReport fail(std::string n, std::string w) {
        return {std::move(n), false, std::move(w)};
    }
};

// Thrown when an element has no inverse in a fiber algebra (the point lies on
// the discriminant relative to that element). `stage` is meaningful for chain
// computations: it names the product stage whose identity failed to invert.
struct NotInvertible : std::runtime_error {
    int stage;
    explicit NotInvertible(const std::string& what, int stage_index = -1)
        : std::runtime_error(what), stage(stage_index) {}
};

}  // namespace frobkit
