#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "srtk/homology.hpp"
#include "srtk/simplicial_complex.hpp"

namespace srtk {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient with the conventions binom(a, 0) = 1 and
/// binom(a, j) = 0 for j < 0.
BigInt binom(long long a, long long j);
long long binom_ll(long long a, long long j); // small-argument variant

/// h_j = Σ_{i=0}^j (-1)^{j-i} binom(d-i, j-i) f_{i-1}; input is
/// (f_{-1}, ..., f_{d-1}), output (h_0, ..., h_d).
std::vector<long long> h_from_f(const std::vector<long long>& f, int d);
/// Inverse transform: f_{j-1} = Σ_{i=0}^j binom(d-i, j-i) h_i.
std::vector<long long> f_from_h(const std::vector<long long>& h, int d);

/// h'_j = h_j + binom(d,j) Σ_{i=0}^{j-1} (-1)^{j-i-1} β_{i-1}.
std::vector<long long> h_prime(const std::vector<long long>& h, const BettiTable& betti, int d);

/// h''_j = h'_j - binom(d,j) β_{j-1} for j < d and h''_d = β_{d-1}.
std::vector<long long> h_double_prime(const std::vector<long long>& hp, const BettiTable& betti, int d);

/// The combinatorial data of one complex over one field: the f-vector and its
/// h, h' and h'' transforms together with the Betti numbers used to produce
/// them.
struct HVectorBundle {
    int n = 0;
    int d = 0;
    std::vector<long long> f, h, h_prime, h_double_prime;
    BettiTable betti;
};

HVectorBundle make_bundle(const SimplicialComplex& c, const BettiTable& betti);

/// The d-binomial expansion of b >= 0 relative to n:
///   b = m_top * binom(n-1+d, d) + binom(m_d, d) + ... + binom(m_s, s)
/// with m_top >= 0 and n+d-2 >= m_d > ... > m_s >= s >= 1. Terms are stored
/// as (index i, m_i) pairs with i descending from d; b = 0 has the empty
/// expansion.
struct BinomialExpansion {
    long long b = 0;
    int n = 1;
    int d = 0;
    long long m_top = 0;
    std::vector<std::pair<int, long long>> terms;

    int s() const { return terms.empty() ? d + 1 : terms.back().first; }
    BigInt value() const;  // reconstructs b
    BigInt growth() const; // b^<d>
    std::string str() const;
};

BinomialExpansion d_binomial_expansion(long long b, int n, int d);

/// b^<d> = m_top * binom(n+d, d+1) + Σ binom(m_i + 1, i + 1); 0^<d> = 0.
BigInt macaulay_growth(long long b, int n, int d);

/// Degreewise growth test h(j+1) <= h(j)^<j> for a Hilbert function of a
/// module generated in degree zero over n variables.
struct MacaulayReport {
    struct Row {
        int j = 0;
        long long value = 0;
        BigInt bound;
        bool pass = false;
    };
    std::vector<Row> rows;
    bool pass = true;
};

MacaulayReport check_module_macaulay(const std::vector<long long>& hfun, int n);

/// The two face-vector bounds for Buchsbaum* complexes:
///   (a) h'_{j+1} <= min{ (h''_j)^<j>, (h''_{j+2})^<d-j-2> + β_j binom(d, j+1) }   1 <= j <= d-2
///   (b) β_{d-1} h''_{d-j} >= h''_j                                               1 <= j <= d-1
struct BstarBoundsReport {
    struct RowA {
        int j = 0;
        long long lhs = 0;
        BigInt branch_growth;   // (h''_j)^<j>
        BigInt branch_duality;  // (h''_{j+2})^<d-j-2> + β_j binom(d, j+1)
        bool evaluable = true;
        std::string note;
        bool pass = false;
    };
    struct RowB {
        int j = 0;
        long long lhs = 0; // h''_{d-j}, compared as β_{d-1} h''_{d-j} >= h''_j
        long long rhs = 0; // h''_j
        bool pass = false;
    };
    std::vector<RowA> part_a;
    std::vector<RowB> part_b;
    bool b_included = false;
    bool pass = true;
};

/// Evaluates part (a) always and part (b) when include_b is set. The
/// single-argument overload requests both and signals BettiZero when part (b)
/// has a nonempty range but β_{d-1} = 0.
BstarBoundsReport check_bstar_bounds(const HVectorBundle& bundle, bool include_b);
BstarBoundsReport check_bstar_bounds(const HVectorBundle& bundle);

/// Söderberg's determinantal condition on the h''-vector: for every j the
/// 3x3 determinant of (h''_{j-1}, h''_j, h''_{j+1}) against the binomial rows
/// r_t = binom(n-1+t, t) must be non-negative. Out-of-range entries are 0;
/// entries with |j| outside [0, d] give identically zero determinants, so the
/// report covers j = 0..d.
struct SoderbergReport {
    struct Row {
        int j = 0;
        BigInt det;
        bool pass = false;
    };
    std::vector<Row> rows;
    bool pass = true;
};

SoderbergReport soderberg_check(const std::vector<long long>& h_double_prime, int n, int d);

} // namespace srtk
