#include "hawkesflow/events.hpp"

#include <algorithm>
#include <array>

namespace hawkesflow {

const char* to_string(Side s) { return s == Side::Buy ? "buy" : "sell"; }

Side side_from_string(const std::string& name) {
  if (name == "buy" || name == "Buy" || name == "BUY" || name == "1") {
    return Side::Buy;
  }
  if (name == "sell" || name == "Sell" || name == "SELL" || name == "2") {
    return Side::Sell;
  }
  throw invalid_params("unknown side: " + name);
}

void require_sorted(std::span<const MarkedEvent> events) {
  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i].t < events[i - 1].t) {
      throw unsorted_history("event times must be non-decreasing");
    }
  }
}

std::size_t count_side(std::span<const MarkedEvent> events, Side side) {
  std::size_t n = 0;
  for (const auto& e : events) n += (e.side == side);
  return n;
}

std::array<double, 2> median_volumes(std::span<const MarkedEvent> events) {
  std::array<double, 2> medians{0.0, 0.0};
  for (int j = 0; j < 2; ++j) {
    std::vector<double> vols;
    for (const auto& e : events) {
      if (side_index(e.side) == j) vols.push_back(e.volume);
    }
    if (vols.empty()) continue;
    std::sort(vols.begin(), vols.end());
    const std::size_t n = vols.size();
    medians[j] = (n % 2 == 1) ? vols[n / 2]
                              : 0.5 * (vols[n / 2 - 1] + vols[n / 2]);
  }
  return medians;
}

}  // namespace hawkesflow
