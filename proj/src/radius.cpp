#include "sdro/radius.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sdro {

std::string radius_kind_name(RadiusKind k) {
    switch (k) {
    case RadiusKind::LightTail: return "lighttail";
    case RadiusKind::BoundedExplicit: return "boundedexplicit";
    case RadiusKind::DimensionFree: return "dimensionfree";
    case RadiusKind::PowerLaw: return "powerlaw";
    }
    return "powerlaw";
}

RadiusKind radius_kind_from_name(const std::string& s) {
    if (s == "lighttail") return RadiusKind::LightTail;
    if (s == "boundedexplicit") return RadiusKind::BoundedExplicit;
    if (s == "dimensionfree") return RadiusKind::DimensionFree;
    if (s == "powerlaw") return RadiusKind::PowerLaw;
    throw std::invalid_argument("unknown radius schedule kind: " + s);
}

std::string RadiusSchedule::describe() const {
    std::ostringstream os;
    os << radius_kind_name(kind);
    switch (kind) {
    case RadiusKind::PowerLaw:
        os << "(c=" << c << ",e=" << exponent << ",n0=" << n0 << ")";
        break;
    case RadiusKind::LightTail:
        os << "(c=" << c << ",beta0=" << beta0 << ",decay=" << decay_beta << ",d=" << d
           << ",p=" << p << ")";
        break;
    case RadiusKind::DimensionFree:
        os << "(c=" << c << ")";
        break;
    case RadiusKind::BoundedExplicit:
        os << "(rho=" << rho << ",beta=" << beta0 << ",d=" << d << ",p=" << p << ")";
        break;
    }
    if (eta_inflation > 0.0) os << "+" << eta_inflation;
    return os.str();
}

double radius_at(const RadiusSchedule& schedule, std::int64_t t, std::int64_t n_t) {
    if (n_t < 1) throw std::invalid_argument("radius_at: n_t must be >= 1");
    double base = 0.0;
    switch (schedule.kind) {
    case RadiusKind::PowerLaw:
        base = schedule.c *
               std::pow(static_cast<double>(t + schedule.n0), -schedule.exponent);
        break;
    case RadiusKind::DimensionFree:
        base = schedule.c *
               std::sqrt(std::log(static_cast<double>(n_t)) / static_cast<double>(n_t));
        break;
    case RadiusKind::LightTail: {
        double beta = schedule.beta0;
        if (schedule.decay_beta)
            beta /= static_cast<double>(t + 1) * static_cast<double>(t + 1);
        if (!(beta > 0.0 && beta < 1.0))
            throw std::invalid_argument("radius_at: beta_t must lie in (0,1)");
        const double expo = std::min(schedule.p / static_cast<double>(schedule.d), 0.5);
        base = schedule.c * std::pow(std::log(1.0 / beta) / static_cast<double>(n_t), expo);
        break;
    }
    case RadiusKind::BoundedExplicit:
        base = explicit_bounded_radius(n_t, schedule.beta0, schedule.rho, schedule.d,
                                       schedule.p);
        break;
    }
    return base + schedule.eta_inflation;
}

double explicit_bounded_radius(std::int64_t N, double beta, double rho, int d, double p) {
    if (!(p < static_cast<double>(d) / 2.0))
        throw std::invalid_argument("explicit_bounded_radius: requires p < d/2");
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("explicit_bounded_radius: beta must lie in (0,1)");
    if (!(rho > 0.0)) throw std::invalid_argument("explicit_bounded_radius: rho must be > 0");
    if (N < 1) throw std::invalid_argument("explicit_bounded_radius: N must be >= 1");

    const double dd = static_cast<double>(d);
    const double big_c = std::sqrt(dd) * std::pow(2.0, (dd - 2.0) / (2.0 * p)) *
                         std::pow(1.0 / (1.0 - std::pow(2.0, p - dd / 2.0)) +
                                      1.0 / (1.0 - std::pow(2.0, -p)),
                                  1.0 / p);
    const double n = static_cast<double>(N);
    return 2.0 * rho *
           (big_c * std::pow(n, -1.0 / dd) +
            std::sqrt(dd) * std::pow(2.0 * std::log(1.0 / beta), 1.0 / (2.0 * p)) *
                std::pow(n, -1.0 / (2.0 * p)));
}

CompactRadiusForm compact_bounded_radius(std::int64_t N, double beta, double rho, int d,
                                         double p) {
    if (!(p < static_cast<double>(d) / 2.0))
        throw std::invalid_argument("compact_bounded_radius: requires p < d/2");
    const double dd = static_cast<double>(d);
    const double big_c = std::sqrt(dd) * std::pow(2.0, (dd - 2.0) / (2.0 * p)) *
                         std::pow(1.0 / (1.0 - std::pow(2.0, p - dd / 2.0)) +
                                      1.0 / (1.0 - std::pow(2.0, -p)),
                                  1.0 / p);
    CompactRadiusForm out;
    out.big_c_star = std::pow(big_c, dd) / (2.0 * std::pow(std::sqrt(dd), dd));
    out.c_star = 1.0 / (std::pow(2.0, dd) * std::pow(std::sqrt(dd), dd));
    out.value = 2.0 * rho *
                std::pow(std::log(out.big_c_star / beta) / out.c_star, 1.0 / dd) *
                std::pow(static_cast<double>(N), -1.0 / dd);
    return out;
}

std::size_t cross_validate_schedule(const std::vector<RadiusSchedule>& candidates,
                                    const ScheduleRunner& runner,
                                    std::vector<double>* scores) {
    if (candidates.empty())
        throw std::invalid_argument("cross_validate_schedule: no candidates");
    std::size_t best = 0;
    double best_score = 0.0;
    std::vector<double> local;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        double score;
        try {
            score = runner(candidates[i], i);
        } catch (const std::exception& e) {
            throw std::runtime_error("cross_validate_schedule: candidate " +
                                     std::to_string(i) + " (" + candidates[i].describe() +
                                     ") failed: " + e.what());
        }
        local.push_back(score);
        if (i == 0 || score < best_score) {
            best_score = score;
            best = i;
        }
    }
    if (scores) *scores = std::move(local);
    return best;
}

} // namespace sdro
