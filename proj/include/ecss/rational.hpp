#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

namespace ecss {

using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms; integers render as "p/1".
std::string to_string(const Rational& r);

/// Accepts "p/q" or "p" with optional sign. Rejects decimals, zero
/// denominators and trailing junk.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace ecss
