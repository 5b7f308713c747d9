#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "erid/trajectory.hpp"

namespace erid {

// Schema: t,player,action,prob,nashconv,relative_nashconv with one row per
// (recorded step, player, action). Probabilities and metrics are written
// with 17 significant digits so parsing them back reproduces the doubles
// bit-for-bit. UTF-8, LF line endings.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
void write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path);

struct CsvRow {
  std::int64_t t = 0;
  int player = 0;  // 1 or 2
  std::size_t action = 0;
  double prob = 0.0;
  double nashconv = 0.0;
  double relative_nashconv = 0.0;
};

std::vector<CsvRow> read_trajectory_csv(std::istream& in);
std::vector<CsvRow> read_trajectory_csv(const std::filesystem::path& path);

// 17-significant-digit decimal form of a double (round-trip exact).
std::string format_double(double v);

}  // namespace erid
