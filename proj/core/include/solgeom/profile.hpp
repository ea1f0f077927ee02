#pragma once

#include <functional>
#include <optional>
#include <string>

namespace solgeom {

// Scalar radial profile b(t) of a spiral curve (d + b(t))(cos t, sin t),
// with exact first and second derivatives. Built-in families:
//   arctan(m, a): b = (m/pi)(pi/2 - atan(a t)),  m > 0, 0 < a <= 1
//   exp:          b = e^(-t)        (unbounded limit as t -> -inf)
//   zero:         b = 0             (the circle)
// Custom profiles supply their own evaluators and optional limits.
class RadialProfile {
public:
    static RadialProfile arctan(double m, double a);
    static RadialProfile exponential();
    static RadialProfile zero();
    static RadialProfile custom(std::string name,
                                std::function<double(double)> b,
                                std::function<double(double)> db,
                                std::function<double(double)> ddb,
                                std::optional<double> limit_pos_inf = std::nullopt,
                                std::optional<double> limit_neg_inf = std::nullopt);

    double b(double t) const { return b_(t); }
    double db(double t) const { return db_(t); }
    double ddb(double t) const { return ddb_(t); }

    // Declared limits of b at +inf / -inf; nullopt means unbounded or unknown.
    std::optional<double> limit_pos_inf() const { return limit_pos_; }
    std::optional<double> limit_neg_inf() const { return limit_neg_; }

    const std::string& name() const { return name_; }

private:
    RadialProfile() = default;

    std::string name_;
    std::function<double(double)> b_, db_, ddb_;
    std::optional<double> limit_pos_, limit_neg_;
};

}  // namespace solgeom
