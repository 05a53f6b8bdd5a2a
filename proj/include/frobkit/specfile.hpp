#pragma once

#include "frobkit/algebroid.hpp"
#include "frobkit/frobenius.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobkit {

// Input fails to parse or violates a declared invariant. `where` is a
// JSON-pointer-ish location ("metric[0][1]") or a byte offset for syntax
// errors. Maps to exit code 2.
struct SpecError : std::runtime_error {
    std::string where;
    SpecError(const std::string& message, std::string location = "")
        : std::runtime_error(location.empty() ? message : location + ": " + message),
          where(std::move(location)) {}
};

struct AffineFieldRecord {
    MatQ a;
    VecQ b;
};

// Parsed spec file. Either the Frobenius block (potential/metric/euler/charge)
// or a poisson block must be present; both may be.
struct SpecFile {
    int n = 0;
    std::optional<MultiPoly> potential;
    std::optional<MatQ> metric;
    std::optional<MatQ> euler_a;
    std::optional<VecQ> euler_b;
    std::optional<Rational> charge;
    std::vector<AffineFieldRecord> chain;
    std::optional<PoissonBivector> poisson;

    bool has_frobenius() const { return potential.has_value(); }
    FrobeniusSpec to_frobenius() const;  // throws SpecError if absent
    std::vector<PolyVectorField> chain_fields() const;
};

SpecFile parse_spec(const std::string& text);
// Inverse of parse_spec on valid files (round-trip identity).
std::string serialize_spec(const SpecFile& spec);

}  // namespace frobkit
