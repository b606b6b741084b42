#include "linksched/price.hpp"

#include <cctype>
#include <limits>

namespace linksched {

std::optional<Price> Price::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  std::int64_t units = 0;
  bool any = false;
  constexpr std::int64_t max_units = std::numeric_limits<std::int64_t>::max() / scale;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    any = true;
    if (units > max_units / 10) return std::nullopt;
    units = units * 10 + (text[i] - '0');
    if (units > max_units) return std::nullopt;
    ++i;
  }
  if (!any) return std::nullopt;
  std::int64_t frac = 0;
  if (i < text.size()) {
    if (text[i] != '.') return std::nullopt;
    ++i;
    int digits = 0;
    std::int64_t place = scale / 10;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (++digits > 6) return std::nullopt;
      frac += (text[i] - '0') * place;
      place /= 10;
      ++i;
    }
    if (digits == 0) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  if (units > (std::numeric_limits<std::int64_t>::max() - frac) / scale) return std::nullopt;
  return from_micros(units * scale + frac);
}

std::string Price::str() const {
  std::int64_t units = micros_ / scale;
  std::int64_t frac = micros_ % scale;
  std::string out = std::to_string(units);
  if (frac == 0) return out;
  std::string digits = std::to_string(frac);
  digits.insert(digits.begin(), 6 - digits.size(), '0');
  while (digits.back() == '0') digits.pop_back();
  out += '.';
  out += digits;
  return out;
}

}  // namespace linksched
