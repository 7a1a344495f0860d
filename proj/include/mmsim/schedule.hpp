#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mmsim/grid.hpp"

namespace mmsim {

// One stage of the applied-field program: a half-open step range carrying
// either a constant field or a linear ramp from `field` at `start` to
// `field_end` at `end`, plus an optional damping override.
struct ScheduleStage {
    std::int64_t start = 0; // inclusive
    std::int64_t end = 0;   // exclusive
    Vec3 field;
    bool ramp = false;
    Vec3 field_end;                   // ramp target, reached (in the limit) at `end`
    std::optional<double> alpha_override;

    Vec3 value_at(std::int64_t step) const {
        if (!ramp) return field;
        const double f = static_cast<double>(step - start) / static_cast<double>(end - start);
        return field + f * (field_end - field);
    }
};

struct AppliedField {
    Vec3 field;
    std::optional<double> alpha_override;
};

// Staged applied-field and damping program indexed by step number. Steps not
// covered by any stage get zero field and no damping change.
class FieldSchedule {
public:
    FieldSchedule() = default;
    explicit FieldSchedule(std::vector<ScheduleStage> stages);

    AppliedField at(std::int64_t step) const;

    const std::vector<ScheduleStage>& stages() const { return stages_; }
    bool empty() const { return stages_.empty(); }

private:
    std::vector<ScheduleStage> stages_; // sorted, disjoint
};

} // namespace mmsim
