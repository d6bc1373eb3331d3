#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace floer_radial {

/// Degree-indexed dimensions of a Z2-graded vector space.
struct GradedRanks {
    std::map<int, int> dims;

    int at(int k) const {
        auto it = dims.find(k);
        return it == dims.end() ? 0 : it->second;
    }

    int total() const {
        int t = 0;
        for (const auto& [k, d] : dims) t += d;
        return t;
    }

    void add(int k, int d = 1) {
        if (d == 0) return;
        dims[k] += d;
    }
};

/// Mod-2 homology of the unit cotangent bundle S*S^n: one dimension each in
/// degrees 0, n-1, n, 2n-1.
inline GradedRanks boundary_homology(int n) {
    if (n < 2) throw std::invalid_argument("boundary_homology requires n >= 2");
    GradedRanks g;
    g.add(0);
    g.add(n - 1);
    g.add(n);
    g.add(2 * n - 1);
    return g;
}

/// Ranks of HF(D*S^n, 2*pi*m + eps).  The degree support is the multiset
/// { l*(n-1), l*(n-1)+n : 0 <= l <= 2m }; for n = 2 this collapses to
/// dimension 1 in degrees {0, 1, 2m+1, 2m+2} and 2 in degrees 2..2m.
/// m = 0 is allowed and gives the homology of S^n (slope eps).
inline GradedRanks hf_ranks(int n, int m) {
    if (n < 2) throw std::invalid_argument("hf_ranks requires n >= 2");
    if (m < 0) throw std::invalid_argument("hf_ranks requires m >= 0");
    GradedRanks g;
    for (int l = 0; l <= 2 * m; ++l) {
        g.add(l * (n - 1));
        g.add(l * (n - 1) + n);
    }
    return g;
}

/// Eventual (symplectic homology) rank in degree k: the m -> infinity limit
/// of hf_ranks(n, .) degree-wise.
inline int sh_rank(int n, int k) {
    if (n < 2) throw std::invalid_argument("sh_rank requires n >= 2");
    if (k < 0) return 0;
    int d = 0;
    if (k % (n - 1) == 0) ++d;                           // k = l*(n-1), l >= 0
    if (k >= n && (k - n) % (n - 1) == 0) ++d;           // k = l*(n-1)+n, l >= 0
    return d;
}

struct LesFailure {
    int ell = 0;
    int k = 0;
    char which = 'a';  // 'a', 'b' exactness bounds; 'c' stabilization
};

struct LesCertificate {
    bool pass = false;            // exactness bounds (a) and (b)
    bool stabilization_pass = false;  // model-window check (c), reported separately
    std::vector<LesFailure> failures;
};

/// Exactness-rank consistency of a table of graded ranks, where table[l] is
/// the rank vector at slope 2*pi*l + eps.  For every l and degree k, with
/// shift D = -(2l+1)(n-1) (crossing slope 2*pi*(l+1) adds the degrees
/// (2l+1)(n-1) + {0, n-1, n, 2n-1}):
///   (a) dim_k(l+1) <= dim_k(l) + dim H_{k+D}(S*S^n)
///   (b) dim_k(l)   <= dim_k(l+1) + dim H_{k+D+1}(S*S^n)
///   (c) dim_k(l) equals the eventual rank for k inside the stabilization
///       window (k < 2l for n = 2; model window k < 2l(n-1) for n > 2).
inline LesCertificate les_consistency_table(int n, const std::vector<GradedRanks>& table) {
    if (n < 2) throw std::invalid_argument("les_consistency requires n >= 2");
    LesCertificate cert;
    cert.pass = true;
    cert.stabilization_pass = true;
    if (table.size() < 2) return cert;

    const GradedRanks sstar = boundary_homology(n);
    const int m = int(table.size()) - 1;
    const int kmax = 2 * m * (n - 1) + n + 2;
    const int kmin = -(2 * m + 2);

    for (int l = 0; l < m; ++l) {
        const int shift = -(2 * l + 1) * (n - 1);
        for (int k = kmin; k <= kmax; ++k) {
            if (table[l + 1].at(k) > table[l].at(k) + sstar.at(k + shift)) {
                cert.pass = false;
                cert.failures.push_back({l, k, 'a'});
            }
            if (table[l].at(k) > table[l + 1].at(k) + sstar.at(k + shift + 1)) {
                cert.pass = false;
                cert.failures.push_back({l, k, 'b'});
            }
        }
    }
    for (int l = 1; l <= m; ++l) {
        const int window = (n == 2) ? 2 * l : 2 * l * (n - 1);
        for (int k = 0; k < window; ++k) {
            if (table[l].at(k) != sh_rank(n, k)) {
                cert.stabilization_pass = false;
                cert.failures.push_back({l, k, 'c'});
            }
        }
    }
    return cert;
}

/// Consistency certificate for the closed-form ranks up to slope 2*pi*m + eps.
inline LesCertificate les_consistency(int n, int m) {
    if (m < 1) throw std::invalid_argument("les_consistency requires m >= 1");
    std::vector<GradedRanks> table;
    table.reserve(m + 1);
    for (int l = 0; l <= m; ++l) table.push_back(hf_ranks(n, l));
    return les_consistency_table(n, table);
}

struct KappaTable {
    Rational limit;                 // exact value of the iterated ratio
    std::vector<Rational> ratios;   // (4m+2)/m for m = 1..mmax
};

/// Iterated ratio of the fibered Dehn twist on D*S^n: the limit of
/// (4m+2)/m, exactly 4, with the finite ratios 4 + 2/m.
inline KappaTable kappa_fibered_twist(int n, int mmax = 10) {
    if (n < 2) throw std::invalid_argument("kappa_fibered_twist requires n >= 2");
    KappaTable t;
    t.limit = 4;
    for (int m = 1; m <= mmax; ++m)
        t.ratios.emplace_back(Rational(4 * m + 2, m));
    return t;
}

struct VisibleRank {
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;
};

/// Bounds on the visible rank r(D*S^n, 2*pi*m + eps).  The upper bound is the
/// total HF dimension 4m+2; the lower bound sums the eventual ranks over the
/// degree window where continuation is forced to be an isomorphism
/// (k < m+1 for n = 2, k < 2(m-1)(n-1) for n > 2).  The exact value 6 is
/// known for m = 1 only.
inline VisibleRank visible_rank_bounds(int n, int m) {
    if (n < 2 || m < 1) throw std::invalid_argument("visible_rank_bounds requires n >= 2, m >= 1");
    VisibleRank v;
    v.upper = 4 * m + 2;
    const int window = (n == 2) ? m + 1 : 2 * (m - 1) * (n - 1);
    for (int k = 0; k < window; ++k) v.lower += sh_rank(n, k);
    if (m == 1) v.exact = 6;
    return v;
}

/// True iff the exact visible rank exceeds the total mod-2 homology of S^n
/// (which is 2); only decidable where the exact rank is known (m = 1).
inline bool geodesic_rank_hypothesis(int n, int m = 1) {
    auto v = visible_rank_bounds(n, m);
    if (!v.exact) throw std::invalid_argument("no exact visible rank available for m > 1");
    return *v.exact > 2;
}

}  // namespace floer_radial
