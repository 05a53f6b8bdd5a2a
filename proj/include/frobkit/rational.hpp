#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobkit {

// Arbitrary-precision rational, kept canonical (reduced, positive
// denominator, zero is 0/1) by the backend.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Accepts exactly `-?\d+(/\d+)?`. Rejects zero denominators.
Rational parse_rational(std::string_view s);

std::string to_string(const Rational& q);

}  // namespace frobkit
