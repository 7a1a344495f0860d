#pragma once

#include <string>
#include <vector>

#include "mmsim/llg.hpp"

namespace mmsim {

// Headerless 4-column TSV, one line per record: step as a decimal integer,
// then mx, my, mz fixed-point with 6 fractional digits. LF line endings by
// default; crlf=true switches to \r\n for byte-level comparison with outputs
// of the original solver.
void write_trajectory(const std::vector<TrajectoryRecord>& records, const std::string& path,
                      bool crlf = false);

std::string format_trajectory(const std::vector<TrajectoryRecord>& records, bool crlf = false);

// Reads the same format back (used by the validation fixtures).
std::vector<TrajectoryRecord> read_trajectory(const std::string& path);

} // namespace mmsim
