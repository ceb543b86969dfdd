#include "brillouin/schedule.hpp"

namespace brillouin {

double PulseSchedule::span() const {
    double total = 0.0;
    for (const auto& seg : segments) total += seg.duration;
    return total;
}

double PulseSchedule::g_at(double t) const {
    double edge = 0.0;
    for (const auto& seg : segments) {
        edge += seg.duration;
        if (t < edge) return seg.g_value;
    }
    return segments.empty() ? 0.0 : segments.back().g_value;
}

std::vector<ScheduleEvent> PulseSchedule::events() const {
    std::vector<ScheduleEvent> out;
    double t = 0.0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i > 0) {
            const bool was_on = segments[i - 1].g_value > 0.0;
            const bool is_on = segments[i].g_value > 0.0;
            if (was_on && !is_on) out.push_back({t, EventKind::SwitchOff});
            if (!was_on && is_on) out.push_back({t, EventKind::SwitchOn});
        }
        if (segments[i].reset_at_start) out.push_back({t, EventKind::VacuumReset});
        t += segments[i].duration;
    }
    return out;
}

PulseSchedule PulseSchedule::constant(double g_value, double span) {
    PulseSchedule s;
    s.mode = ScheduleMode::ConstantOn;
    s.segments.push_back({span, g_value, false});
    return s;
}

const char* to_string(EventKind kind) {
    switch (kind) {
        case EventKind::SwitchOn: return "on";
        case EventKind::SwitchOff: return "off";
        case EventKind::VacuumReset: return "reset";
    }
    return "";
}

}  // namespace brillouin
