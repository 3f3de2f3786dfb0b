#include "kinkxxz/half_int.hpp"

#include <charconv>
#include <stdexcept>

namespace kinkxxz {

namespace {

std::int64_t parse_integer(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || first == s.data() + s.size())
    throw std::invalid_argument("not a half-integer: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty half-integer");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_integer(text.substr(0, slash), text);
    std::int64_t den = parse_integer(text.substr(slash + 1), text);
    if (den == 1) return from_int(num);
    if (den == 2) return from_twice(num);
    if (den == 0 || (2 * num) % den != 0)
      throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'");
    return from_twice(2 * num / den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    bool negative = !ip.empty() && ip.front() == '-';
    std::int64_t whole = (ip.empty() || ip == "-" || ip == "+") ? 0 : parse_integer(ip, text);
    // fractional part must be 0, 00.., 5, 50..
    std::size_t nz = fp.find_last_not_of('0');
    std::string_view sig = nz == std::string_view::npos ? std::string_view{} : fp.substr(0, nz + 1);
    for (char c : fp)
      if (c < '0' || c > '9') throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'");
    std::int64_t half = 0;
    if (sig == "5") half = 1;
    else if (!sig.empty()) throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'");
    std::int64_t twice = 2 * (whole < 0 ? -whole : whole) + half;
    return from_twice(negative ? -twice : twice);
  }

  return from_int(parse_integer(text, text));
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace kinkxxz
