#pragma once

#include <boost/rational.hpp>

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "armine/error.hpp"
#include "armine/types.hpp"

namespace armine {

// Exact rational arithmetic for confidence/lift thresholds. Threshold
// comparisons ("conf >= minconf") must never depend on float rounding.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::int64_t parse_int64(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

inline std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return out;
}

}  // namespace detail

// Parses "0.75", ".5", "75%", "3/4" or "2" into an exact rational.
inline Rational parse_ratio(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.empty()) throw Error("invalid ratio: empty string");

  bool percent = false;
  if (s.back() == '%') {
    percent = true;
    s.remove_suffix(1);
    s = detail::trim(s);
    if (s.empty()) throw Error("invalid ratio: '" + std::string(text) + "'");
  }

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
    if (s.empty()) throw Error("invalid ratio: '" + std::string(text) + "'");
  }

  Rational r;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::int64_t num = detail::parse_int64(s.substr(0, slash), "ratio numerator");
    std::int64_t den = detail::parse_int64(s.substr(slash + 1), "ratio denominator");
    if (den == 0) throw Error("invalid ratio: zero denominator in '" + std::string(text) + "'");
    r = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw Error("invalid ratio: '" + std::string(text) + "'");
    if (fp.size() > 18) throw Error("ratio has too many fractional digits: '" + std::string(text) + "'");
    std::int64_t ipart = ip.empty() ? 0 : detail::parse_int64(ip, "ratio");
    std::int64_t fpart = fp.empty() ? 0 : detail::parse_int64(fp, "ratio");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    if (ipart > (std::numeric_limits<std::int64_t>::max() - fpart) / den)
      throw Error("ratio out of range: '" + std::string(text) + "'");
    r = Rational(ipart * den + fpart, den);
  } else {
    r = Rational(detail::parse_int64(s, "ratio"));
  }
  if (percent) r /= 100;
  if (negative) r = -r;
  return r;
}

// Fixed-point decimal rendering with round-half-even on the digit after
// `digits`, e.g. format_fixed(Rational(15, 16)) == "0.937500".
inline std::string format_fixed(const Rational& value, int digits = 6) {
  using u128 = unsigned __int128;
  if (digits < 0 || digits > 18) throw Error("format_fixed: unsupported digit count");
  const bool neg = value < Rational(0);
  const std::int64_t num = value.numerator();
  const u128 n = neg ? u128(0) - u128(static_cast<std::uint64_t>(num)) : u128(num);
  const u128 d = u128(value.denominator());

  u128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  u128 q = (n * scale) / d;
  const u128 r = (n * scale) % d;
  if (2 * r > d || (2 * r == d && (q & 1))) ++q;

  std::string ip = detail::u128_to_string(q / scale);
  std::string out = neg && q != 0 ? "-" + ip : ip;
  if (digits > 0) {
    std::string fp = detail::u128_to_string(q % scale);
    out += "." + std::string(static_cast<std::size_t>(digits) - fp.size(), '0') + fp;
  }
  return out;
}

// Smallest count c with c >= fraction * n; the boundary conversion for
// percentage thresholds ("2%" of 27736 transactions -> 555).
inline Count ceil_count(const Rational& fraction, Count n) {
  if (fraction < Rational(0)) throw Error("threshold fraction must be non-negative");
  const __int128 num = static_cast<__int128>(fraction.numerator()) * static_cast<__int128>(n);
  const __int128 den = fraction.denominator();
  const __int128 c = (num + den - 1) / den;
  if (c > static_cast<__int128>(std::numeric_limits<std::int64_t>::max()))
    throw Error("threshold fraction out of range");
  return static_cast<Count>(c);
}

}  // namespace armine
