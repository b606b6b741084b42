#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace linksched {

// Exact decimal link price with at most six fractional digits, stored as an
// integer count of micro-units. Keeping prices integral makes every price
// comparison exact, so all modules observe the identical order no matter how
// a price was produced (file, generator, arithmetic).
class Price {
public:
  static constexpr std::int64_t scale = 1'000'000;

  constexpr Price() = default;

  static constexpr Price from_micros(std::int64_t micros) {
    Price p;
    p.micros_ = micros;
    return p;
  }

  static constexpr Price from_units(std::int64_t units) {
    return from_micros(units * scale);
  }

  // Accepts "12" or "12.375": digits, optionally a point followed by one to
  // six fractional digits. Signs, empty parts, extra precision, and values
  // that overflow the micro-unit representation are rejected.
  static std::optional<Price> parse(std::string_view text);

  constexpr std::int64_t micros() const { return micros_; }

  // Canonical decimal rendering: trailing fractional zeros stripped, no
  // decimal point for whole values ("12", "12.5", "0.000001").
  std::string str() const;

  constexpr bool operator==(const Price&) const = default;
  constexpr auto operator<=>(const Price&) const = default;

  constexpr Price operator+(const Price& o) const {
    return from_micros(micros_ + o.micros_);
  }
  Price& operator+=(const Price& o) {
    micros_ += o.micros_;
    return *this;
  }

private:
  std::int64_t micros_ = 0;
};

}  // namespace linksched
