#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace floer_radial {

/// Dimensions entering the ambient-invariance bound: the below-zero filtered
/// chain group and the two total Floer homologies.
struct FilteredRanks {
    long below = 0;     // dim CF^{<0}
    long total_w2 = 0;  // dim HF(W2, eps/2)
    long total_w1 = 0;  // dim HF(W1, eps)
};

enum class BoundVerdict { Pass, Fail, EqualityRequired };

struct AmbientBoundResult {
    BoundVerdict verdict = BoundVerdict::Fail;
    bool strict_pass = false;  // the literal strict inequality |w2 - w1| < 2*below
    long slack = 0;            // 2*below - |w2 - w1|
};

/// The bound |dim HF(W2) - dim HF(W1)| < 2 * dim CF^{<0}.  The inequality is
/// strict; at below = 0 it degenerates to requiring equality of the two
/// dimensions, which is reported as its own verdict.
inline AmbientBoundResult ambient_bound(const FilteredRanks& fr) {
    if (fr.below < 0 || fr.total_w1 < 0 || fr.total_w2 < 0)
        throw std::invalid_argument("dimensions must be nonnegative");
    AmbientBoundResult r;
    long diff = fr.total_w2 >= fr.total_w1 ? fr.total_w2 - fr.total_w1
                                           : fr.total_w1 - fr.total_w2;
    r.slack = 2 * fr.below - diff;
    r.strict_pass = diff < 2 * fr.below;
    if (fr.below == 0)
        r.verdict = BoundVerdict::EqualityRequired;
    else
        r.verdict = r.strict_pass ? BoundVerdict::Pass : BoundVerdict::Fail;
    return r;
}

/// Exact layout of the m disjoint conjugated copies in the cylindrical part:
/// with rho = (1+delta)/delta, the supports are (r0*rho^j, r0*rho^{j+1}) for
/// j = 0..m-1, r0 = rho^{-m}, and r0*rho^m = 1 exactly.  The flow times are
/// kept in log form (T = ln(t_arg), c = ln(rho)).
struct CopiesLayout {
    Rational delta;
    int m = 1;
    Rational rho;               // (1+delta)/delta = e^c
    Rational t_arg;             // e^T = delta^{m-1} / (1+delta)^m
    Rational r0;                // (delta/(1+delta))^m
    std::vector<std::pair<Rational, Rational>> supports;
};

inline CopiesLayout copies_layout(const Rational& delta, int m) {
    if (!(delta > 0 && delta < Rational(1, 2)))
        throw std::invalid_argument("delta must lie in the open interval (0, 1/2)");
    if (m < 1) throw std::invalid_argument("m must be positive");

    CopiesLayout out;
    out.delta = delta;
    out.m = m;
    out.rho = (1 + delta) / delta;
    out.t_arg = rational_pow(delta, m - 1) / rational_pow(1 + delta, m);
    out.r0 = rational_pow(delta / (1 + delta), m);

    Rational left = out.r0;
    for (int j = 0; j < m; ++j) {
        Rational right = left * out.rho;
        out.supports.emplace_back(left, right);
        left = right;
    }

    if (out.r0 * rational_pow(out.rho, m) != 1)
        throw std::logic_error("telescoping identity r0 * rho^m = 1 violated");
    if (out.supports.back().second != 1)
        throw std::logic_error("last support must end at 1");
    for (std::size_t j = 1; j < out.supports.size(); ++j)
        if (out.supports[j].first != out.supports[j - 1].second)
            throw std::logic_error("supports must tile without overlap");
    return out;
}

/// Generator count of the m-copy Hamiltonian: A orbits in the core plus B per
/// copy, i.e. A + m*B.  The induced iterated-ratio bound is B.
inline long generator_count(long A, long B, int m) {
    if (A < 0 || B < 0 || m < 1) throw std::invalid_argument("need A, B >= 0 and m >= 1");
    return A + long(m) * B;
}

/// Finite limsup proxy for the iterated ratio: the maximum of dims[m]/m over
/// the tail window (the last window_fraction of the sequence).  dims is
/// indexed from m = 1.  An estimate, not a limit.
inline Rational kappa_estimate(const std::vector<long>& dims, double window_fraction = 0.5) {
    if (dims.empty()) throw std::invalid_argument("kappa_estimate needs a nonempty sequence");
    if (!(window_fraction > 0.0 && window_fraction <= 1.0))
        throw std::invalid_argument("window fraction must lie in (0, 1]");
    const std::size_t n = dims.size();
    std::size_t window = std::size_t(double(n) * window_fraction);
    if (window < 1) window = 1;
    std::size_t start = n - window;  // zero-based index; m = start + 1
    Rational best(dims[start], long(start) + 1);
    for (std::size_t i = start + 1; i < n; ++i) {
        Rational r(dims[i], long(i) + 1);
        if (r > best) best = r;
    }
    return best;
}

}  // namespace floer_radial
