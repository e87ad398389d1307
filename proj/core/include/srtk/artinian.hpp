#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "srtk/gfp.hpp"
#include "srtk/homology.hpp"
#include "srtk/simplicial_complex.hpp"

namespace srtk {

/// Candidate linear system of parameters: row i holds the coefficients of
/// ℓ_i on x_1..x_n. The seed that produced the matrix is kept so reports are
/// reproducible.
struct LinearForms {
    FpMatrix coeffs;
    std::uint64_t seed = 0;
    int attempts = 0; // candidate matrices drawn, including the accepted one
};

/// Facet-rank certificate: the d forms are an lsop for K[Δ] iff for every
/// facet F the d x |F| submatrix on F's columns has rank |F|.
bool verify_lsop(const SimplicialComplex& c, const FpMatrix& forms);

/// Samples d random linear forms until verify_lsop accepts, drawing
/// coefficients from a seeded mt19937_64 stream. Signals LsopNotFound when
/// max_attempts candidates all fail (typically: p too small for the complex).
LinearForms random_lsop(const SimplicialComplex& c, const PrimeField& f, std::uint64_t seed,
                        int max_attempts = 20000);

/// Exponent vector of length n; entry k-1 is the exponent of x_k.
using Monomial = std::vector<int>;

/// Degree-j monomials whose support is a face, in lexicographic order
/// (exponents compared on x_1, x_2, ...; higher powers of earlier variables
/// first). These span [K[Δ]]_j.
std::vector<Monomial> face_monomials(const SimplicialComplex& c, int degree);

/// A finite-dimensional graded algebra, presented degreewise: dimensions and
/// the multiplication-by-x_k matrices between consecutive degrees. Immutable
/// once built.
class GradedAlgebra {
public:
    GradedAlgebra(PrimeField f, int nvars, std::vector<long> dims, std::vector<std::vector<FpMatrix>> mult);

    const PrimeField& field() const { return field_; }
    int nvars() const { return nvars_; }

    /// Largest degree with a nonzero component (0 for the zero-dimensional
    /// corner case dims = {1}).
    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    long dim(int degree) const {
        if (degree < 0 || degree > top_degree()) return 0;
        return dims_[static_cast<std::size_t>(degree)];
    }
    const std::vector<long>& dims() const { return dims_; }

    /// Multiplication x_k: degree -> degree+1 (var is 1-based); the zero map
    /// beyond the top degree.
    FpMatrix mult(int degree, int var) const;

private:
    PrimeField field_;
    int nvars_;
    std::vector<long> dims_;
    std::vector<std::vector<FpMatrix>> mult_; // [degree][var-1]
};

/// Artinian reduction K[Δ]/ℓ with its per-degree monomial representatives.
struct GradedReduction {
    GradedAlgebra algebra;
    std::vector<std::vector<Monomial>> basis; // representative monomials per degree
    LinearForms forms;

    const std::vector<long>& dims() const { return algebra.dims(); }
    int top_degree() const { return algebra.top_degree(); }
};

/// Computes K[Δ]/ℓ degree by degree: the degree-j ambient space is spanned by
/// the face-supported monomials, the subspace killed is Σ_i ℓ_i [K[Δ]]_{j-1}
/// expressed through the previous degree's ambient basis, and representatives
/// are the non-pivot monomials of the reduced echelon form. The loop stops
/// after two consecutive zero dimensions.
GradedReduction graded_reduction(const SimplicialComplex& c, const LinearForms& forms);

/// Degreewise socle dimensions: dim ∩_k ker(x_k: R_j -> R_{j+1}), computed as
/// the kernel of the stacked multiplication matrix. Zero entries are omitted.
struct SocleProfile {
    std::map<int, long> dims;

    long at(int j) const {
        auto it = dims.find(j);
        return it == dims.end() ? 0 : it->second;
    }
    friend bool operator==(const SocleProfile&, const SocleProfile&) = default;
};

SocleProfile socle_profile(const GradedAlgebra& a);

/// Outcome of the socle characterization of Buchsbaum* complexes: Δ (already
/// verified Buchsbaum) is Buchsbaum* iff dim [Soc K[Δ]/ℓ]_j = binom(d,j)
/// β_{j-1}(Δ) for every j >= 1.
struct BstarCheck {
    bool buchsbaum = false;
    bool socle_equality = false;
    std::string reason;
    struct Row {
        int degree = 0;
        long actual = 0;
        long expected = 0;
    };
    std::vector<Row> rows;
    std::uint64_t seed = 0;
    int lsop_attempts = 0;

    bool passed() const { return buchsbaum && socle_equality; }
};

BstarCheck buchsbaum_star_check(const SimplicialComplex& c, const PrimeField& f, std::uint64_t seed);
bool is_buchsbaum_star(const SimplicialComplex& c, const PrimeField& f, std::uint64_t seed);

/// Lower bounds on the socle of the reduction of a Buchsbaum complex:
/// dim [Soc]_j >= binom(d,j) β_{j-1} for 1 <= j <= d-1 and
/// dim [Soc]_d >= β_{d-1}, with the slack (the Q'-contribution) reported per
/// degree. The degree-d slack is 0 for every Buchsbaum complex.
struct SocleBoundCheck {
    struct Row {
        int degree = 0;
        long actual = 0;
        long expected = 0;
        long slack = 0;
    };
    std::vector<Row> rows; // degrees 1..d
    bool lower_bounds_hold = true;
    bool top_exact = true; // slack at degree d is exactly 0
};

SocleBoundCheck socle_lower_bound_check(const SimplicialComplex& c, const PrimeField& f, std::uint64_t seed);

/// (K[Δ]/ℓ)/I for I = ⊕_{j=1}^{d-1} [Soc K[Δ]/ℓ]_j, with multiplication maps
/// recomputed from representatives and the socle recomputed on the quotient.
struct LevelQuotient {
    GradedAlgebra algebra;
    SocleProfile socle;
    long cm_type = 0; // socle dimension in the top degree

    bool is_level() const { return socle.dims.size() <= 1; }
    const std::vector<long>& dims() const { return algebra.dims(); }
};

/// The socle-stripping construction on an arbitrary graded algebra; degrees
/// 1..d-1 of the socle are removed.
LevelQuotient strip_socle_below(const GradedAlgebra& a, int d);
LevelQuotient level_quotient(const SimplicialComplex& c, const PrimeField& f, std::uint64_t seed);

/// Dimension identity induced by the star-deletion exact sequence: for a
/// vertex k with lk k doubly CM and Δ_{-k} Buchsbaum of the same dimension,
///   dim [K[Δ]/ℓ]_j = dim [K[st k]/ℓ]_{j-1} + dim [K[Δ_{-k}]/ℓ]_j
/// for one lsop of K[Δ] that simultaneously certifies the star and the
/// deletion. Throws HypothesisFailed naming the first failing hypothesis.
struct StarDeletionCheck {
    int vertex = 0;
    struct Row {
        int degree = 0;
        long whole = 0;
        long star_shifted = 0;
        long deletion = 0;
        bool ok = false;
    };
    std::vector<Row> rows;
    bool pass = true;
};

StarDeletionCheck star_deletion_dim_check(const SimplicialComplex& c, int vertex, const PrimeField& f,
                                          std::uint64_t seed);

} // namespace srtk
