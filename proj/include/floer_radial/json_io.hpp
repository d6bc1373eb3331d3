#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "action_spectrum.hpp"
#include "domain_model.hpp"
#include "geodesics.hpp"
#include "hf_spheres.hpp"
#include "rational.hpp"
#include "smoothing.hpp"
#include "stair.hpp"
#include "transfer.hpp"

namespace floer_radial {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return format_rational(r); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    return parse_rational(j.get<std::string>());
}

// --- domain model -----------------------------------------------------------

inline json to_json(const PeriodSpectrum& s) {
    json j;
    j["unit_multiplier"] = format_rational(s.unit());
    j["all_integer_multiples"] = s.all_integer_multiples();
    json ms = json::array();
    for (const auto& m : s.multipliers()) ms.push_back(format_rational(m));
    j["multipliers"] = ms;
    return j;
}

inline PeriodSpectrum period_spectrum_from_json(const json& j) {
    Rational unit = rational_from_json(j.at("unit_multiplier"));
    if (j.at("all_integer_multiples").get<bool>())
        return PeriodSpectrum::integer_multiples(unit);
    std::vector<Rational> ms;
    for (const auto& v : j.at("multipliers")) ms.push_back(rational_from_json(v));
    return PeriodSpectrum::finite(unit, std::move(ms));
}

inline json to_json(const SlopeSpec& s) {
    return json{{"q", format_rational(s.q)}, {"eps", s.eps}};
}

inline SlopeSpec slope_spec_from_json(const json& j) {
    return SlopeSpec(rational_from_json(j.at("q")), j.at("eps").get<bool>());
}

// --- smoothing --------------------------------------------------------------

inline json to_json(const InterpolationSpec& s) {
    json j;
    j["r0"] = format_rational(s.r0);
    j["ell"] = format_rational(s.ell);
    j["alpha"] = format_rational(s.alpha);
    j["beta0"] = format_rational(s.beta0);
    j["beta1"] = format_rational(s.beta1);
    j["shape"] = s.shape == InterpShape::ConvexToLinear ? "convex-to-linear" : "linear-to-constant";
    if (s.barrier) j["barrier"] = format_rational(*s.barrier);
    return j;
}

inline InterpolationSpec interpolation_spec_from_json(const json& j) {
    InterpolationSpec s;
    s.r0 = rational_from_json(j.at("r0"));
    s.ell = rational_from_json(j.at("ell"));
    s.alpha = rational_from_json(j.at("alpha"));
    s.beta0 = rational_from_json(j.at("beta0"));
    s.beta1 = rational_from_json(j.at("beta1"));
    std::string shape = j.at("shape").get<std::string>();
    if (shape == "convex-to-linear")
        s.shape = InterpShape::ConvexToLinear;
    else if (shape == "linear-to-constant")
        s.shape = InterpShape::LinearToConstant;
    else
        throw std::invalid_argument("unknown interpolation shape: " + shape);
    if (j.contains("barrier")) s.barrier = rational_from_json(j.at("barrier"));
    return s;
}

inline const char* branch_name(InterpBranch b) {
    switch (b) {
        case InterpBranch::Integral: return "integral";
        case InterpBranch::Stretch: return "stretch";
        case InterpBranch::Damp: return "damp";
    }
    return "?";
}

inline json to_json(const SampledProfile& p) {
    json j;
    j["grid"] = p.grid;
    j["values"] = p.values;
    j["derivs"] = p.derivs;
    j["branch"] = branch_name(p.branch);
    j["k1"] = p.k1;
    j["eps_s"] = p.eps_s;
    j["k2"] = p.k2;
    return j;
}

inline SampledProfile sampled_profile_from_json(const json& j) {
    SampledProfile p;
    p.grid = j.at("grid").get<std::vector<double>>();
    p.values = j.at("values").get<std::vector<double>>();
    p.derivs = j.at("derivs").get<std::vector<double>>();
    std::string b = j.at("branch").get<std::string>();
    p.branch = b == "stretch" ? InterpBranch::Stretch
               : b == "damp" ? InterpBranch::Damp
                             : InterpBranch::Integral;
    p.k1 = j.value("k1", 1.0);
    p.eps_s = j.value("eps_s", 1.0);
    p.k2 = j.value("k2", 1.0);
    return p;
}

inline std::string profile_tsv(const SampledProfile& p) {
    std::string out = "r\th\thprime\n";
    for (std::size_t i = 0; i < p.grid.size(); ++i) {
        out += std::to_string(p.grid[i]) + "\t" + std::to_string(p.values[i]) + "\t" +
               std::to_string(p.derivs[i]) + "\n";
    }
    return out;
}

// --- stair ------------------------------------------------------------------

inline json to_json(const StairParams& p) {
    json j;
    j["a"] = format_rational(p.a);
    j["b"] = format_rational(p.b);
    j["b0"] = format_rational(p.b0);
    j["c_phi"] = format_rational(p.c_phi);
    j["A"] = format_rational(p.A);
    j["delta1"] = format_rational(p.delta1);
    j["delta2"] = format_rational(p.delta2);
    j["B"] = format_rational(p.B);
    j["delta3"] = format_rational(p.delta3);
    j["C"] = format_rational(p.C);
    return j;
}

inline StairParams stair_params_from_json(const json& j) {
    StairParams p;
    p.a = rational_from_json(j.at("a"));
    p.b = rational_from_json(j.at("b"));
    p.b0 = rational_from_json(j.at("b0"));
    p.c_phi = rational_from_json(j.at("c_phi"));
    p.A = rational_from_json(j.at("A"));
    p.delta1 = rational_from_json(j.at("delta1"));
    p.delta2 = rational_from_json(j.at("delta2"));
    p.B = rational_from_json(j.at("B"));
    p.delta3 = rational_from_json(j.at("delta3"));
    p.C = rational_from_json(j.at("C"));
    return p;
}

inline json to_json(const StairCertificate& c) {
    json j;
    json arr = json::array();
    for (const auto& iq : c.ineq) {
        json e;
        e["pass"] = iq.pass;
        e["value"] = format_rational(iq.value);
        if (iq.upper) e["upper_bound"] = format_rational(*iq.upper);
        arr.push_back(e);
    }
    j["inequalities"] = arr;
    j["all_pass"] = c.all_pass;
    j["displayed_ineq1_pass"] = c.displayed_ineq1_pass;
    return j;
}

inline json to_json(const StairSegment& s) {
    json j;
    j["lo"] = format_rational(s.lo);
    j["hi"] = format_rational(s.hi);
    switch (s.kind) {
        case SegmentKind::Constant:
            j["kind"] = "constant";
            j["value"] = format_rational(s.const_value);
            break;
        case SegmentKind::Linear:
            j["kind"] = "linear";
            j["slope"] = format_rational(s.slope);
            j["intercept"] = format_rational(s.intercept);
            break;
        case SegmentKind::Smooth:
            j["kind"] = "smooth";
            j["profile"] = to_json(*s.smooth);
            break;
    }
    return j;
}

inline StairSegment stair_segment_from_json(const json& j) {
    StairSegment s;
    s.lo = rational_from_json(j.at("lo"));
    s.hi = rational_from_json(j.at("hi"));
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") {
        s.kind = SegmentKind::Constant;
        s.const_value = rational_from_json(j.at("value"));
    } else if (kind == "linear") {
        s.kind = SegmentKind::Linear;
        s.slope = rational_from_json(j.at("slope"));
        s.intercept = rational_from_json(j.at("intercept"));
    } else if (kind == "smooth") {
        s.kind = SegmentKind::Smooth;
        s.smooth = sampled_profile_from_json(j.at("profile"));
    } else {
        throw std::invalid_argument("unknown segment kind: " + kind);
    }
    return s;
}

inline json to_json(const StairProfile& p) {
    json j;
    j["units"] = "multiples of 2pi";
    j["params"] = to_json(p.params);
    j["tol"] = p.tol;
    json segs = json::array();
    for (const auto& s : p.segments) segs.push_back(to_json(s));
    j["segments"] = segs;
    return j;
}

inline StairProfile stair_profile_from_json(const json& j) {
    StairProfile p;
    p.params = stair_params_from_json(j.at("params"));
    p.tol = j.value("tol", 1e-6);
    for (const auto& s : j.at("segments")) p.segments.push_back(stair_segment_from_json(s));
    return p;
}

// --- orbits -----------------------------------------------------------------

inline json to_json(const OrbitClass& c) {
    json j;
    j["region"] = region_name(c.region);
    if (c.radius) j["radius"] = *c.radius;
    j["period"] = format_rational(c.period);
    if (c.exact_action) j["exact_action"] = format_rational(*c.exact_action);
    if (c.action) j["action"] = *c.action;
    if (c.action_range) {
        j["action_range"] = json{{"lo", format_rational(c.action_range->lo)},
                                 {"hi", format_rational(c.action_range->hi)}};
    }
    return j;
}

// --- hf ranks ---------------------------------------------------------------

inline json to_json(const GradedRanks& g) {
    json j;
    for (const auto& [k, d] : g.dims) j[std::to_string(k)] = d;
    return j;
}

inline json to_json(const VisibleRank& v) {
    json j;
    j["lower"] = v.lower;
    j["upper"] = v.upper;
    if (v.exact) j["exact"] = *v.exact;
    return j;
}

// --- transfer ---------------------------------------------------------------

inline json to_json(const CopiesLayout& c) {
    json j;
    j["delta"] = format_rational(c.delta);
    j["m"] = c.m;
    j["rho"] = format_rational(c.rho);
    j["r0"] = format_rational(c.r0);
    j["T"] = "ln(" + format_rational(c.t_arg) + ")";
    j["c"] = "ln(" + format_rational(c.rho) + ")";
    json s = json::array();
    for (const auto& [lo, hi] : c.supports)
        s.push_back(json{{"lo", format_rational(lo)}, {"hi", format_rational(hi)}});
    j["supports"] = s;
    return j;
}

inline json to_json(const AmbientBoundResult& r) {
    json j;
    switch (r.verdict) {
        case BoundVerdict::Pass: j["verdict"] = "pass"; break;
        case BoundVerdict::Fail: j["verdict"] = "fail"; break;
        case BoundVerdict::EqualityRequired: j["verdict"] = "equality-required"; break;
    }
    j["strict_pass"] = r.strict_pass;
    j["slack"] = r.slack;
    return j;
}

// --- geodesics --------------------------------------------------------------

inline json to_json(const GeodesicReport& r) {
    json j;
    j["domination_ok"] = r.domination_ok;
    j["principal_lengths"] = r.lengths;
    j["witness_length"] = r.witness;
    j["witness_index"] = r.witness_index;
    j["pass"] = r.pass;
    return j;
}

}  // namespace floer_radial
