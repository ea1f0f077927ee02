#include "solgeom/profile.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace solgeom {

RadialProfile RadialProfile::arctan(double m, double a) {
    if (!(m > 0.0)) throw std::invalid_argument("arctan profile: m must be > 0");
    if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("arctan profile: need 0 < a <= 1");
    constexpr double pi = std::numbers::pi;
    RadialProfile p;
    p.name_ = "arctan(m=" + std::to_string(m) + ",a=" + std::to_string(a) + ")";
    p.b_ = [m, a](double t) { return (m / pi) * (pi / 2.0 - std::atan(a * t)); };
    p.db_ = [m, a](double t) { return -(m / pi) * a / (1.0 + a * a * t * t); };
    p.ddb_ = [m, a](double t) {
        const double q = 1.0 + a * a * t * t;
        return (m / pi) * 2.0 * a * a * a * t / (q * q);
    };
    p.limit_pos_ = 0.0;
    p.limit_neg_ = m;
    return p;
}

RadialProfile RadialProfile::exponential() {
    RadialProfile p;
    p.name_ = "exp";
    p.b_ = [](double t) { return std::exp(-t); };
    p.db_ = [](double t) { return -std::exp(-t); };
    p.ddb_ = [](double t) { return std::exp(-t); };
    p.limit_pos_ = 0.0;
    p.limit_neg_ = std::nullopt;  // grows without bound
    return p;
}

RadialProfile RadialProfile::zero() {
    RadialProfile p;
    p.name_ = "zero";
    p.b_ = [](double) { return 0.0; };
    p.db_ = [](double) { return 0.0; };
    p.ddb_ = [](double) { return 0.0; };
    p.limit_pos_ = 0.0;
    p.limit_neg_ = 0.0;
    return p;
}

RadialProfile RadialProfile::custom(std::string name,
                                    std::function<double(double)> b,
                                    std::function<double(double)> db,
                                    std::function<double(double)> ddb,
                                    std::optional<double> limit_pos_inf,
                                    std::optional<double> limit_neg_inf) {
    if (!b || !db || !ddb)
        throw std::invalid_argument("custom profile: all three evaluators required");
    RadialProfile p;
    p.name_ = std::move(name);
    p.b_ = std::move(b);
    p.db_ = std::move(db);
    p.ddb_ = std::move(ddb);
    p.limit_pos_ = limit_pos_inf;
    p.limit_neg_ = limit_neg_inf;
    return p;
}

}  // namespace solgeom
