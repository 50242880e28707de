#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rigkit {

/// Audit timestamps carry millisecond resolution (`audit(S.MS:SERIAL)`), so
/// they are stored as integral milliseconds. Conversions to and from seconds
/// are exact for every value auditd can produce.
struct Timestamp {
  std::int64_t ms = 0;

  static Timestamp from_seconds(double seconds) {
    return Timestamp{static_cast<std::int64_t>(std::llround(seconds * 1000.0))};
  }
  double seconds() const { return static_cast<double>(ms) / 1000.0; }

  auto operator<=>(const Timestamp&) const = default;
};

/// Seconds-with-millis rendering used by every text format ("1632851805.333").
std::string format_seconds(Timestamp t);

/// Input data could not be used (malformed file, violated precondition).
/// The CLI maps this to exit code 1.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rigkit
