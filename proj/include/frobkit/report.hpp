#pragma once

#include "frobkit/check_report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace frobkit {

inline constexpr const char* kToolVersion = "frobkit 0.1.0";

enum class ReportFormat { text, machine };

struct RunReport {
    std::string version = kToolVersion;
    std::string input_digest;
    std::uint64_t seed = 0;
    int points = 0;
    int degree_bound = 2;
    struct Row {
        std::string name;
        bool pass = false;
        bool skipped = false;
        std::optional<std::string> witness;
    };
    std::vector<Row> checks;
    bool pass = false;  // true iff every non-skipped check passes

    void add(const CheckReport& c);
    void add_skipped(std::string name, std::string reason);
    void add_info(std::string name, std::string detail);
    void finalize();  // computes overall pass
};

// FNV-1a 64-bit, rendered as 16 hex digits.
std::string input_digest(const std::string& bytes);

// Byte-stable for fixed input + seed.
std::string emit_report(const RunReport& report, ReportFormat format);

}  // namespace frobkit
