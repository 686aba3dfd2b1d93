#include "yangrep/rat.hpp"

#include <cctype>

namespace yangrep {

std::string rat_str(const Rat& r) { return r.str(); }

static bool valid_int_token(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::optional<Rat> parse_rat(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_int_token(s, true)) return std::nullopt;
    return Rat(BigInt(std::string(s)));
  }
  auto num = s.substr(0, slash);
  auto den = s.substr(slash + 1);
  if (!valid_int_token(num, true) || !valid_int_token(den, false)) return std::nullopt;
  BigInt d{std::string(den)};
  if (d == 0) return std::nullopt;
  return Rat(BigInt(std::string(num))) / Rat(d);
}

Rat parse_rat_or_throw(std::string_view s) {
  auto r = parse_rat(s);
  if (!r) throw Error("invalid rational literal: '" + std::string(s) + "'");
  return *r;
}

BigInt rat_num(const Rat& r) { return BigInt(boost::multiprecision::numerator(r)); }
BigInt rat_den(const Rat& r) { return BigInt(boost::multiprecision::denominator(r)); }

bool is_integer(const Rat& r) { return rat_den(r) == 1; }

bool is_nonneg_integer(const Rat& r) { return r >= 0 && is_integer(r); }

bool is_half_integer(const Rat& r) { return is_integer(r + r) && !is_integer(r); }

long rat_to_long(const Rat& r) {
  if (!is_integer(r)) throw Error("rat_to_long: not an integer: " + rat_str(r));
  return static_cast<long>(rat_num(r));
}

std::size_t rat_bits(const Rat& r) {
  const BigInt n = rat_num(r) < 0 ? BigInt(-rat_num(r)) : rat_num(r);
  const BigInt d = rat_den(r);
  auto bits = [](const BigInt& x) {
    return x == 0 ? std::size_t{0} : boost::multiprecision::msb(x) + 1;
  };
  return bits(n) + bits(d);
}

std::vector<Rat> parse_rat_list(const std::vector<std::string>& items) {
  std::vector<Rat> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(parse_rat_or_throw(s));
  return out;
}

}  // namespace yangrep
