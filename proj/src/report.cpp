#include "frobkit/report.hpp"

#include <json.hpp>

#include <sstream>

namespace frobkit {

void RunReport::add(const CheckReport& c) {
    Row row;
    row.name = c.name;
    row.pass = c.pass;
    row.witness = c.witness;
    checks.push_back(std::move(row));
}

void RunReport::add_skipped(std::string name, std::string reason) {
    Row row;
    row.name = std::move(name);
    row.pass = true;
    row.skipped = true;
    row.witness = std::move(reason);
    checks.push_back(std::move(row));
}

void RunReport::add_info(std::string name, std::string detail) {
    Row row;
    row.name = std::move(name);
    row.pass = true;
    row.witness = std::move(detail);
    checks.push_back(std::move(row));
}

void RunReport::finalize() {
    pass = true;
    for (const auto& row : checks)
        if (!row.skipped && !row.pass) pass = false;
}

std::string input_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string emit_report(const RunReport& report, ReportFormat format) {
    if (format == ReportFormat::machine) {
        nlohmann::json root;
        root["version"] = report.version;
        root["input_digest"] = report.input_digest;
        root["seed"] = report.seed;
        root["points"] = report.points;
        root["degree_bound"] = report.degree_bound;
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& row : report.checks) {
            nlohmann::json c;
            c["name"] = row.name;
            c["pass"] = row.pass;
            c["skipped"] = row.skipped;
            if (row.witness) c["witness"] = *row.witness;
            checks.push_back(std::move(c));
        }
        root["checks"] = std::move(checks);
        root["pass"] = report.pass;
        return root.dump(2) + "\n";
    }
    std::ostringstream os;
    os << report.version << "\n";
    os << "input " << report.input_digest << ", seed " << report.seed << ", points "
       << report.points << ", degree bound " << report.degree_bound << "\n";
    for (const auto& row : report.checks) {
        os << "  " << (row.skipped ? "SKIP" : (row.pass ? "PASS" : "FAIL")) << "  " << row.name;
        if (row.witness) os << "  [" << *row.witness << "]";
        os << "\n";
    }
    os << (report.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace frobkit
