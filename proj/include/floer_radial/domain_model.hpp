#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace floer_radial {

/// Set of Reeb periods on a boundary, measured in multiples of 2*pi.
/// Either all positive integer multiples of a minimal period unit
/// (periodic Reeb flow), or an explicit finite list of multipliers
/// (synthetic boundaries for testing).
class PeriodSpectrum {
public:
    static PeriodSpectrum integer_multiples(Rational unit) {
        if (unit <= 0) throw std::invalid_argument("period unit must be positive");
        PeriodSpectrum s;
        s.unit_ = std::move(unit);
        s.all_integer_multiples_ = true;
        return s;
    }

    static PeriodSpectrum finite(Rational unit, std::vector<Rational> multipliers) {
        if (unit <= 0) throw std::invalid_argument("period unit must be positive");
        std::sort(multipliers.begin(), multipliers.end());
        for (std::size_t i = 0; i < multipliers.size(); ++i) {
            if (multipliers[i] <= 0)
                throw std::invalid_argument("period multipliers must be positive");
            if (i > 0 && multipliers[i] == multipliers[i - 1])
                throw std::invalid_argument("duplicate period multiplier");
        }
        PeriodSpectrum s;
        s.unit_ = std::move(unit);
        s.all_integer_multiples_ = false;
        s.multipliers_ = std::move(multipliers);
        return s;
    }

    const Rational& unit() const { return unit_; }
    bool all_integer_multiples() const { return all_integer_multiples_; }
    const std::vector<Rational>& multipliers() const { return multipliers_; }

    /// Exact membership of a value (in multiples of 2*pi) in the spectrum.
    bool contains(const Rational& value) const {
        if (value <= 0) return false;
        if (all_integer_multiples_) {
            Rational q = value / unit_;
            return denominator(q) == 1;
        }
        for (const auto& mu : multipliers_)
            if (mu * unit_ == value) return true;
        return false;
    }

    /// All periods strictly below `bound`, sorted increasing.
    std::vector<Rational> periods_below(const Rational& bound) const {
        std::vector<Rational> out;
        if (all_integer_multiples_) {
            for (Rational p = unit_; p < bound; p += unit_) out.push_back(p);
        } else {
            for (const auto& mu : multipliers_) {
                Rational p = mu * unit_;
                if (p < bound) out.push_back(p);
            }
        }
        return out;
    }

    /// The greatest period strictly below `bound` (the paper's b0 for b = bound).
    std::optional<Rational> largest_period_below(const Rational& bound) const {
        auto ps = periods_below(bound);
        if (ps.empty()) return std::nullopt;
        return ps.back();
    }

private:
    PeriodSpectrum() = default;
    Rational unit_ = 1;
    bool all_integer_multiples_ = true;
    std::vector<Rational> multipliers_;
};

/// A slope q*(2*pi) + eps, with eps a symbolic infinitesimal.  Slopes are
/// positive, so q = 0 forces eps.
struct SlopeSpec {
    Rational q;
    bool eps = false;

    SlopeSpec(Rational q_, bool eps_) : q(std::move(q_)), eps(eps_) {
        if (q < 0) throw std::invalid_argument("slope multiplier must be nonnegative");
        if (q == 0 && !eps) throw std::invalid_argument("slope must be positive: q = 0 requires eps");
    }
};

/// A slope is admissible when its exact value is not a Reeb period.  The
/// spectrum is closed with no accumulation points in the models used here,
/// so any +eps slope is admissible.
inline bool is_admissible(const SlopeSpec& s, const PeriodSpectrum& spec) {
    if (s.eps) return true;
    return !spec.contains(s.q);
}

/// Size data of an exact symplectomorphism: sup|F_phi| and the support radius.
struct SymplectoSize {
    Rational sup_f;
    Rational support_radius;

    SymplectoSize(Rational f, Rational rho) : sup_f(std::move(f)), support_radius(std::move(rho)) {
        if (sup_f < 0 || support_radius < 0)
            throw std::invalid_argument("SymplectoSize fields must be nonnegative");
    }
};

/// C(W, phi) = 2 * max{ sup|F_phi|, rho(W, phi) }.
inline Rational c_constant(const SymplectoSize& sz) {
    return 2 * std::max(sz.sup_f, sz.support_radius);
}

/// Time parameter for the Liouville-flow conjugation.  When t = ln(p/q) the
/// shrink factor e^{-t} = q/p is exact; otherwise the factor is the exact
/// binary rational of the double exp(-t).
class RescaleTime {
public:
    static RescaleTime log_of(const Rational& ratio) {
        if (ratio < 1) throw std::invalid_argument("log_of requires ratio >= 1 (t >= 0)");
        RescaleTime t;
        t.exact_ = true;
        t.ratio_ = ratio;
        return t;
    }

    static RescaleTime numeric(double t) {
        if (t < 0) throw std::invalid_argument("rescale time must be nonnegative");
        RescaleTime out;
        out.exact_ = false;
        out.ratio_ = 1;
        out.t_ = t;
        return out;
    }

    bool exact() const { return exact_; }
    const Rational& ratio() const { return ratio_; }

    /// e^{-t}
    Rational shrink_factor() const {
        if (exact_) return Rational(denominator(ratio_), numerator(ratio_));
        return Rational(std::exp(-t_));
    }

    RescaleTime then(const RescaleTime& other) const {
        if (exact_ && other.exact_) return log_of(ratio_ * other.ratio_);
        double t0 = exact_ ? std::log(to_double(ratio_)) : t_;
        double t1 = other.exact_ ? std::log(to_double(other.ratio_)) : other.t_;
        return numeric(t0 + t1);
    }

private:
    RescaleTime() = default;
    bool exact_ = true;
    Rational ratio_ = 1;
    double t_ = 0;
};

/// Conjugation by the time-t Liouville flow scales both size constants by e^{-t}.
inline SymplectoSize liouville_rescale(const SymplectoSize& sz, const RescaleTime& t) {
    Rational f = t.shrink_factor();
    return SymplectoSize(sz.sup_f * f, sz.support_radius * f);
}

}  // namespace floer_radial
