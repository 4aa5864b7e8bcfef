#include "hawkesflow/ingestion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hawkesflow {

namespace {

constexpr double kSharesPerLot = 100.0;
constexpr double kCentisecondsPerSecond = 100.0;

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& s, const std::string& context) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw csv_error(context + ": cannot parse number '" + s + "'");
  }
}

std::string fmt_full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<SessionSpec> default_sessions() {
  return {{"morning", SessionWindow::morning()},
          {"afternoon", SessionWindow::afternoon()}};
}

std::vector<RawOrderRecord> read_order_csv(std::istream& in,
                                           const std::string& source_name) {
  std::string line;
  if (!std::getline(in, line)) {
    throw csv_error(source_name + ": empty file (header required)");
  }
  const std::vector<std::string> header = split_csv_line(trim(line));
  const std::vector<std::string> required = {
      "date", "time_centiseconds", "side", "size_shares",
      "opposite_best_shares"};
  if (header.size() < required.size()) {
    throw csv_error(source_name + ": header must start with " +
                    "date,time_centiseconds,side,size_shares,opposite_best_shares");
  }
  for (std::size_t i = 0; i < required.size(); ++i) {
    if (trim(header[i]) != required[i]) {
      throw csv_error(source_name + ": unexpected header column '" +
                      header[i] + "' (expected '" + required[i] + "')");
    }
  }
  const bool has_levels =
      header.size() > 5 && trim(header[5]) == "levels_consumed";

  std::vector<RawOrderRecord> records;
  std::size_t line_no = 1;
  std::string prev_date;
  double prev_time = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = trim(line);
    if (trimmed.empty()) continue;
    const std::string context = source_name + ":" + std::to_string(line_no);
    const std::vector<std::string> fields = split_csv_line(trimmed);
    if (fields.size() < 5) {
      throw csv_error(context + ": expected at least 5 fields");
    }
    RawOrderRecord rec;
    rec.date = trim(fields[0]);
    rec.time_cs = parse_double(trim(fields[1]), context);
    rec.side = side_from_string(trim(fields[2]));
    rec.size_shares = parse_double(trim(fields[3]), context);
    const std::string opp = trim(fields[4]);
    if (!opp.empty()) {
      rec.opposite_best_shares = parse_double(opp, context);
      rec.has_opposite_best = true;
    }
    if (has_levels && fields.size() > 5) {
      const std::string lv = trim(fields[5]);
      if (!lv.empty()) {
        rec.levels_consumed = static_cast<int>(parse_double(lv, context));
      }
    }
    if (!(rec.size_shares > 0.0)) {
      throw csv_error(context + ": size_shares must be > 0");
    }
    if (rec.date == prev_date && rec.time_cs < prev_time) {
      throw csv_error(context + ": timestamps must be non-decreasing within a day");
    }
    prev_date = rec.date;
    prev_time = rec.time_cs;
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<RawOrderRecord> read_order_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw csv_error("cannot open " + path.string());
  }
  return read_order_csv(in, path.filename().string());
}

bool classify_aggressive(const RawOrderRecord& record) {
  if (!record.has_opposite_best) {
    throw missing_field("opposite_best_shares is required to classify orders");
  }
  return record.size_shares > record.opposite_best_shares;
}

std::vector<SessionEvents> split_sessions(
    std::span<const RawOrderRecord> records,
    std::span<const SessionSpec> specs) {
  std::map<std::pair<std::string, std::size_t>, SessionEvents> grouped;
  for (const auto& rec : records) {
    const double tod = rec.time_cs / kCentisecondsPerSecond;
    for (std::size_t s = 0; s < specs.size(); ++s) {
      const SessionWindow& w = specs[s].window;
      if (tod < w.open_tod() || tod > w.close_tod()) continue;
      auto [it, inserted] = grouped.try_emplace(
          {rec.date, s},
          SessionEvents{rec.date, specs[s].name, w, {}, 0.0});
      it->second.events.push_back(MarkedEvent{
          tod - w.open_tod(), rec.side, rec.size_shares / kSharesPerLot});
      break;
    }
  }
  std::vector<SessionEvents> out;
  out.reserve(grouped.size());
  for (auto& [key, val] : grouped) out.push_back(std::move(val));
  return out;
}

TieBreakResult break_ties(std::span<const MarkedEvent> events) {
  require_sorted(events);
  TieBreakResult result;
  result.events.assign(events.begin(), events.end());
  std::size_t duplicated = 0;
  std::size_t i = 0;
  while (i < result.events.size()) {
    std::size_t j = i + 1;
    while (j < result.events.size() && result.events[j].t == result.events[i].t) {
      ++j;
    }
    const std::size_t m = j - i;
    if (m > 1) {
      duplicated += m;
      const double step = 0.010 / static_cast<double>(m + 1);
      for (std::size_t r = 0; r < m; ++r) {
        result.events[i + r].t += static_cast<double>(r + 1) * step;
      }
    }
    i = j;
  }
  for (std::size_t a = 1; a < result.events.size(); ++a) {
    if (!(result.events[a].t > result.events[a - 1].t)) {
      throw invalid_params(
          "tie offsets collided with a neighbouring timestamp; "
          "input stamps must sit on the 10 ms grid");
    }
  }
  result.duplicate_fraction =
      result.events.empty()
          ? 0.0
          : static_cast<double>(duplicated) /
                static_cast<double>(result.events.size());
  return result;
}

void break_ties(SessionEvents& session) {
  TieBreakResult r = break_ties(std::span<const MarkedEvent>(session.events));
  session.events = std::move(r.events);
  session.duplicate_fraction = r.duplicate_fraction;
}

DescriptiveStats descriptive_stats(std::span<const RawOrderRecord> records,
                                   std::span<const SessionSpec> specs) {
  DescriptiveStats stats;

  // Aggressive, in-session records only.
  struct Tagged {
    const RawOrderRecord* rec;
    std::size_t spec;
    double t_rel;
  };
  std::vector<Tagged> kept;
  for (const auto& rec : records) {
    if (rec.has_opposite_best && !classify_aggressive(rec)) continue;
    const double tod = rec.time_cs / kCentisecondsPerSecond;
    for (std::size_t s = 0; s < specs.size(); ++s) {
      const SessionWindow& w = specs[s].window;
      if (tod < w.open_tod() || tod > w.close_tod()) continue;
      kept.push_back({&rec, s, tod - w.open_tod()});
      break;
    }
  }
  if (kept.empty()) return stats;

  // Median volumes per side, in lots.
  for (int j = 0; j < 2; ++j) {
    std::vector<double> vols;
    for (const auto& tag : kept) {
      if (side_index(tag.rec->side) == j) {
        vols.push_back(tag.rec->size_shares / kSharesPerLot);
      }
    }
    if (vols.empty()) continue;
    std::sort(vols.begin(), vols.end());
    const std::size_t n = vols.size();
    stats.median_volume_lots[j] =
        (n % 2 == 1) ? vols[n / 2] : 0.5 * (vols[n / 2 - 1] + vols[n / 2]);
  }

  // Penetration histogram over levels 1..7 and 8+.
  std::array<std::array<std::size_t, 8>, 2> counts{};
  std::array<std::size_t, 2> totals{0, 0};
  for (const auto& tag : kept) {
    if (tag.rec->levels_consumed < 0) continue;
    const int level = std::clamp(tag.rec->levels_consumed, 1, 8);
    const int j = side_index(tag.rec->side);
    ++counts[j][static_cast<std::size_t>(level - 1)];
    ++totals[j];
  }
  if (totals[0] + totals[1] > 0) {
    stats.has_penetration = true;
    for (int j = 0; j < 2; ++j) {
      if (totals[j] == 0) continue;
      for (std::size_t l = 0; l < 8; ++l) {
        stats.penetration[j][l] = static_cast<double>(counts[j][l]) /
                                  static_cast<double>(totals[j]);
      }
    }
  }

  // Duplicate-stamp fraction across (date, session).
  std::map<std::tuple<std::string, std::size_t, double>, std::size_t> stamp_counts;
  for (const auto& tag : kept) {
    ++stamp_counts[{tag.rec->date, tag.spec, tag.rec->time_cs}];
  }
  std::size_t duplicated = 0;
  for (const auto& [stamp, count] : stamp_counts) {
    if (count > 1) duplicated += count;
  }
  stats.duplicate_timestamp_fraction =
      static_cast<double>(duplicated) / static_cast<double>(kept.size());

  // Per-minute averages across days.
  std::map<std::string, std::size_t> dates;
  for (const auto& tag : kept) dates.try_emplace(tag.rec->date);
  const double n_dates = static_cast<double>(dates.size());
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const std::size_t minutes =
        static_cast<std::size_t>(std::ceil(specs[s].window.length() / 60.0));
    auto& per_side = stats.per_minute_avg[specs[s].name];
    per_side[0].assign(minutes, 0.0);
    per_side[1].assign(minutes, 0.0);
  }
  for (const auto& tag : kept) {
    auto& per_side = stats.per_minute_avg[specs[tag.spec].name];
    const std::size_t minute = std::min(
        static_cast<std::size_t>(tag.t_rel / 60.0),
        per_side[0].size() - 1);
    per_side[side_index(tag.rec->side)][minute] += 1.0;
  }
  for (auto& [name, per_side] : stats.per_minute_avg) {
    for (int j = 0; j < 2; ++j) {
      for (double& v : per_side[j]) v /= n_dates;
    }
  }
  return stats;
}

void write_events_csv(std::ostream& out, const std::string& date,
                      const SessionSpec& spec,
                      std::span<const MarkedEvent> events) {
  out << "date,time_centiseconds,side,size_shares,opposite_best_shares\n";
  for (const auto& e : events) {
    const double cs = (spec.window.open_tod() + e.t) * kCentisecondsPerSecond;
    out << date << ',' << fmt_full(cs) << ',' << to_string(e.side) << ','
        << fmt_full(e.volume * kSharesPerLot) << ",0\n";
  }
}

void write_events_csv(const std::filesystem::path& path, const std::string& date,
                      const SessionSpec& spec,
                      std::span<const MarkedEvent> events) {
  std::ofstream out(path);
  if (!out) {
    throw csv_error("cannot write " + path.string());
  }
  write_events_csv(out, date, spec, events);
}

}  // namespace hawkesflow
