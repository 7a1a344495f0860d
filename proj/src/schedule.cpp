#include "mmsim/schedule.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmsim {

FieldSchedule::FieldSchedule(std::vector<ScheduleStage> stages) : stages_(std::move(stages)) {
    std::sort(stages_.begin(), stages_.end(),
              [](const ScheduleStage& a, const ScheduleStage& b) { return a.start < b.start; });
    for (std::size_t i = 0; i < stages_.size(); ++i) {
        if (stages_[i].end <= stages_[i].start)
            throw std::invalid_argument("FieldSchedule: stage range must be nonempty");
        if (i > 0 && stages_[i].start < stages_[i - 1].end)
            throw std::invalid_argument("FieldSchedule: stage ranges must be disjoint");
    }
}

AppliedField FieldSchedule::at(std::int64_t step) const {
    // Stages are sorted; runs have few stages, the scan is cheap.
    for (const ScheduleStage& s : stages_) {
        if (step < s.start) break;
        if (step < s.end) return {s.value_at(step), s.alpha_override};
    }
    return {Vec3{}, std::nullopt};
}

} // namespace mmsim
