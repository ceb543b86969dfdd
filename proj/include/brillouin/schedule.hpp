#pragma once

#include <string>
#include <vector>

namespace brillouin {

enum class ScheduleMode { ConstantOn, AnalyticPeriodic, MinimumDetect, Custom };

enum class EventKind { SwitchOn, SwitchOff, VacuumReset };

struct ScheduleEvent {
    double time = 0.0;
    EventKind kind = EventKind::SwitchOn;
};

// One piecewise-constant coupling segment. reset_at_start discards the optical
// occupation and the cross coherence (n_a <- 0, c <- 0) when the segment begins.
struct Segment {
    double duration = 0.0;
    double g_value = 0.0;
    bool reset_at_start = false;
};

// Piecewise-constant coupling g(t). Segments tile [0, span] exactly.
struct PulseSchedule {
    std::vector<Segment> segments;
    ScheduleMode mode = ScheduleMode::Custom;

    double span() const;
    double g_at(double t) const;

    // Boundary events: SwitchOff when g drops to 0, SwitchOn when it returns,
    // VacuumReset at each reset_at_start segment boundary.
    std::vector<ScheduleEvent> events() const;

    static PulseSchedule constant(double g_value, double span);
};

const char* to_string(EventKind kind);

}  // namespace brillouin
