#pragma once

#include "frobkit/report.hpp"
#include "frobkit/rng.hpp"
#include "frobkit/specfile.hpp"

#include <cstdint>

namespace frobkit {

struct RunOptions {
    int points = 100;
    std::uint64_t seed = kDefaultSeed;
    int depth = -1;        // chain only; -1 = number of supplied identities
    bool emit_dual = false;  // dualize only
    std::string digest;    // digest of the raw input bytes
};

RunReport run_verify(const SpecFile& spec, const RunOptions& opts);
RunReport run_dualize(const SpecFile& spec, const RunOptions& opts);
RunReport run_chain(const SpecFile& spec, const RunOptions& opts);

}  // namespace frobkit
