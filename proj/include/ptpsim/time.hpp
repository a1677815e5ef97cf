#pragma once

#include <cmath>
#include <cstdint>

// Simulation time axis: integer picoseconds since run start. All kernel
// arithmetic stays in integers; the helpers below are the only unit
// conversion points.

namespace ptpsim {

using SimTime = std::int64_t;   // picoseconds of true time
using LocalTime = std::int64_t; // picoseconds on some clock's local scale

inline constexpr SimTime kNanosecond = 1'000;
inline constexpr SimTime kMicrosecond = 1'000'000;
inline constexpr SimTime kMillisecond = 1'000'000'000;
inline constexpr SimTime kSecond = 1'000'000'000'000;

constexpr SimTime ps(std::int64_t v) { return v; }
constexpr SimTime ns(std::int64_t v) { return v * kNanosecond; }
constexpr SimTime us(std::int64_t v) { return v * kMicrosecond; }
constexpr SimTime ms(std::int64_t v) { return v * kMillisecond; }
constexpr SimTime sec(std::int64_t v) { return v * kSecond; }

inline SimTime from_seconds(double s) { return static_cast<SimTime>(std::llround(s * 1e12)); }
inline SimTime from_us(double v) { return static_cast<SimTime>(std::llround(v * 1e6)); }
inline double to_seconds(SimTime t) { return static_cast<double>(t) / 1e12; }
inline double to_ns(SimTime t) { return static_cast<double>(t) / 1e3; }

} // namespace ptpsim
