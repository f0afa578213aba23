#pragma once

#include <cmath>

// All dB <-> linear conversions go through here.
namespace mmplan::units {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }

inline double watt_to_dbw(double watt) { return 10.0 * std::log10(watt); }

constexpr double kMetersPerKm = 1000.0;
constexpr double kSquareMetersPerSquareKm = 1.0e6;

}  // namespace mmplan::units
