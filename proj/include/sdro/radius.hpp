#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sdro {

enum class RadiusKind { LightTail, BoundedExplicit, DimensionFree, PowerLaw };

std::string radius_kind_name(RadiusKind k);
RadiusKind radius_kind_from_name(const std::string& s);

// Ambiguity-radius schedule. Per kind:
//   LightTail        c * (log(1/beta_t) / n_t)^min(p/d, 1/2)
//   DimensionFree    c * (log(n_t) / n_t)^(1/2)
//   PowerLaw         c * (t + n0)^(-e)
//   BoundedExplicit  explicit_bounded_radius(n_t, beta, rho, d, p)
// plus `eta_inflation` (typically 2*eta_K) added on top.
struct RadiusSchedule {
    RadiusKind kind = RadiusKind::PowerLaw;

    double c = 1.0;        // user scale constant (LightTail, DimensionFree, PowerLaw)
    double exponent = 0.5; // e (PowerLaw)
    std::int64_t n0 = 1;   // offset (PowerLaw)

    // LightTail confidence sequence: beta_t = beta0 / (t+1)^2 when decay_beta,
    // otherwise the fixed value beta0. BoundedExplicit always uses fixed beta0.
    double beta0 = 0.05;
    bool decay_beta = true;

    int d = 1;         // uncertainty dimension (LightTail, BoundedExplicit)
    double p = 1.0;    // Wasserstein order of the concentration bound
    double rho = 1.0;  // support radius (BoundedExplicit)

    double eta_inflation = 0.0;

    // metadata only: residual rho_t reported next to certificates when present
    double residual = 0.0;

    std::string describe() const;
};

double radius_at(const RadiusSchedule& schedule, std::int64_t t, std::int64_t n_t);

// Explicit nominal radius for compactly supported distributions (requires
// p < d/2):
//   eps_N(beta, rho) = 2 rho (C N^{-1/d} + sqrt(d) (2 ln(1/beta))^{1/(2p)} N^{-1/(2p)})
//   C = sqrt(d) 2^{(d-2)/(2p)} (1/(1 - 2^{p - d/2}) + 1/(1 - 2^{-p}))^{1/p}
double explicit_bounded_radius(std::int64_t N, double beta, double rho, int d, double p);

// Companion single-power-of-N representation with constants
// C* = C^d / (2 sqrt(d)^d) and c* = 1 / (2^d sqrt(d)^d):
//   eps_N = 2 rho (ln(C* / beta) / c*)^{1/d} N^{-1/d}
struct CompactRadiusForm {
    double c_star = 0.0;
    double big_c_star = 0.0;
    double value = 0.0;
};
CompactRadiusForm compact_bounded_radius(std::int64_t N, double beta, double rho, int d,
                                         double p);

// Runs the experiment closure for every candidate schedule and returns the
// index of the schedule with the lowest mean validation objective (ties go to
// the first listed). The runner receives (candidate, candidate_index) and
// returns the mean validation objective across its repetitions.
using ScheduleRunner = std::function<double(const RadiusSchedule&, std::size_t)>;
std::size_t cross_validate_schedule(const std::vector<RadiusSchedule>& candidates,
                                    const ScheduleRunner& runner,
                                    std::vector<double>* scores = nullptr);

} // namespace sdro
