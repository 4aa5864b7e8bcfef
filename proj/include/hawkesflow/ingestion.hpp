#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hawkesflow/baseline.hpp"
#include "hawkesflow/events.hpp"

namespace hawkesflow {

// One row of the order-flow CSV:
//   date,time_centiseconds,side,size_shares,opposite_best_shares[,levels_consumed]
// Times are centiseconds since midnight; real feeds carry integers (10 ms
// resolution), the parser also accepts fractional values so simulated
// streams round-trip losslessly.
struct RawOrderRecord {
  std::string date;  // YYYY-MM-DD
  double time_cs = 0.0;
  Side side = Side::Buy;
  double size_shares = 0.0;
  double opposite_best_shares = 0.0;
  bool has_opposite_best = false;
  int levels_consumed = -1;  // -1 when the column is absent
};

// A named session window; ingestion and reporting key sessions by name.
struct SessionSpec {
  std::string name;
  SessionWindow window;
};

std::vector<SessionSpec> default_sessions();

std::vector<RawOrderRecord> read_order_csv(std::istream& in,
                                           const std::string& source_name);
std::vector<RawOrderRecord> read_order_csv(const std::filesystem::path& path);

// Strictly greater than the opposite best quote (boundary equality is not
// aggressive). Throws missing_field when the column was absent.
bool classify_aggressive(const RawOrderRecord& record);

// Events of one (date, session), times rebased to seconds since open,
// volumes in lots.
struct SessionEvents {
  std::string date;
  std::string session;
  SessionWindow window;
  std::vector<MarkedEvent> events;
  double duplicate_fraction = 0.0;  // filled by break_ties
};

// Drops records outside every window (closed boundaries) and groups the
// rest by (date, session). Output order: date, then session spec order.
std::vector<SessionEvents> split_sessions(std::span<const RawOrderRecord> records,
                                          std::span<const SessionSpec> specs);

struct TieBreakResult {
  std::vector<MarkedEvent> events;
  double duplicate_fraction = 0.0;
};

// Deterministic tie handling: the i-th of m events sharing a 10 ms stamp is
// offset by i * 10/(m+1) milliseconds, keeping file order and never moving
// an event by 10 ms or more.
TieBreakResult break_ties(std::span<const MarkedEvent> events);

// In-place convenience: applies break_ties and records the fraction.
void break_ties(SessionEvents& session);

struct DescriptiveStats {
  std::array<double, 2> median_volume_lots{0.0, 0.0};
  // Proportions over penetration levels 1..7 and 8+; all zero when the
  // levels column is absent.
  std::array<std::array<double, 8>, 2> penetration{};
  bool has_penetration = false;
  double duplicate_timestamp_fraction = 0.0;
  // session name -> per side, average event count per whole minute of the
  // session, averaged across the days present.
  std::map<std::string, std::array<std::vector<double>, 2>> per_minute_avg;
};

// Computed over aggressive, in-session records (classification applied when
// the opposite-best column is present).
DescriptiveStats descriptive_stats(std::span<const RawOrderRecord> records,
                                   std::span<const SessionSpec> specs);

// Writes one session of events back out in the ingestion schema (full
// precision times; opposite_best_shares = 0 so everything classifies as
// aggressive).
void write_events_csv(std::ostream& out, const std::string& date,
                      const SessionSpec& spec,
                      std::span<const MarkedEvent> events);
void write_events_csv(const std::filesystem::path& path, const std::string& date,
                      const SessionSpec& spec,
                      std::span<const MarkedEvent> events);

}  // namespace hawkesflow
