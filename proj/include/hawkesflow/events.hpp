#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "hawkesflow/errors.hpp"

namespace hawkesflow {

enum class Side : int { Buy = 1, Sell = 2 };

inline int side_index(Side s) { return s == Side::Buy ? 0 : 1; }
inline Side side_from_index(int j) { return j == 0 ? Side::Buy : Side::Sell; }
inline Side other_side(Side s) { return s == Side::Buy ? Side::Sell : Side::Buy; }

const char* to_string(Side s);
Side side_from_string(const std::string& name);

// One aggressive market order arrival.
struct MarkedEvent {
  double t;       // seconds since session open
  Side side;
  double volume;  // lots (1 lot = 100 shares)
};

// Throws unsorted_history unless event times are non-decreasing.
void require_sorted(std::span<const MarkedEvent> events);

std::size_t count_side(std::span<const MarkedEvent> events, Side side);

// Median volume in lots per side; 0 for a side with no events.
std::array<double, 2> median_volumes(std::span<const MarkedEvent> events);

}  // namespace hawkesflow
