#include "mmsim/trajectory.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mmsim/errors.hpp"

namespace mmsim {

std::string format_trajectory(const std::vector<TrajectoryRecord>& records, bool crlf) {
    const char* eol = crlf ? "\r\n" : "\n";
    std::string out;
    char line[128];
    for (const TrajectoryRecord& r : records) {
        std::snprintf(line, sizeof line, "%" PRId64 "\t%f\t%f\t%f", r.step, r.mx, r.my, r.mz);
        out += line;
        out += eol;
    }
    return out;
}

void write_trajectory(const std::vector<TrajectoryRecord>& records, const std::string& path,
                      bool crlf) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open trajectory file '" + path + "' for writing");
    out << format_trajectory(records, crlf);
    if (!out) throw io_error("failed writing trajectory file '" + path + "'");
}

std::vector<TrajectoryRecord> read_trajectory(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open trajectory file '" + path + "'");
    std::vector<TrajectoryRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        TrajectoryRecord r;
        std::istringstream ls(line);
        if (!(ls >> r.step >> r.mx >> r.my >> r.mz))
            throw io_error("malformed trajectory line in '" + path + "': " + line);
        records.push_back(r);
    }
    return records;
}

} // namespace mmsim
