#include "brillouin/params.hpp"

#include <cmath>

namespace brillouin {

ValidationReport validate(const CouplingParams& p) {
    const double fields[] = {p.gamma, p.Gamma, p.g, p.delta1, p.delta2, p.n_th};
    for (double v : fields) {
        if (!std::isfinite(v)) throw InvalidParams("coupling parameters must be finite");
    }
    if (p.gamma <= 0.0) throw InvalidParams("gamma must be positive");
    if (p.Gamma <= 0.0) throw InvalidParams("Gamma must be positive");
    if (p.g < 0.0) throw InvalidParams("g must be non-negative");
    if (p.n_th < 0.0) throw InvalidParams("n_th must be non-negative");

    ValidationReport report;
    report.strong_coupling = p.g > 5.0 * std::max(p.gamma, p.Gamma);
    report.detunings_within_linewidth =
        std::abs(p.delta1) < p.Gamma && std::abs(p.delta2) < p.Gamma;
    return report;
}

bool satisfies_cauchy_schwarz(const MomentState& s, double slack) {
    const double c2 = s.c_re * s.c_re + s.c_im * s.c_im;
    return c2 <= s.n_a * s.n_b * (1.0 + slack) + 1e-30;
}

MomentState thermal_initial_state(const CouplingParams& params) {
    validate(params);
    return MomentState{0.0, params.n_th, 0.0, 0.0};
}

}  // namespace brillouin
