#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace yangrep {

/// Exact rational number, always stored reduced with positive denominator.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Error type used across the library for precondition and domain failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input or configuration (as opposed to a violated invariant).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

std::string rat_str(const Rat& r);

/// Parses "p", "-p" or "p/q" with q > 0 after reduction. Rejects "p/0".
std::optional<Rat> parse_rat(std::string_view s);
Rat parse_rat_or_throw(std::string_view s);

BigInt rat_num(const Rat& r);
BigInt rat_den(const Rat& r);

bool is_integer(const Rat& r);
bool is_nonneg_integer(const Rat& r);
bool is_half_integer(const Rat& r);  // member of 1/2 + Z

/// Rounds toward zero; requires an integer value that fits in long.
long rat_to_long(const Rat& r);

/// Combined bit size of numerator and denominator, used for pivot choice.
std::size_t rat_bits(const Rat& r);

std::vector<Rat> parse_rat_list(const std::vector<std::string>& items);

}  // namespace yangrep
