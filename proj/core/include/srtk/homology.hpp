#pragma once

#include <map>
#include <vector>

#include "srtk/gfp.hpp"
#include "srtk/simplicial_complex.hpp"

namespace srtk {

/// Reduced Betti numbers β_{-1}, β_0, ..., β_{dim} of a complex over GF(p).
///
/// β_{-1} is 1 exactly for the complex {∅} (which occurs as the link of a
/// facet); for complexes with vertices it is 0.
struct BettiTable {
    std::int64_t p = 0;
    int dim = -2;
    std::vector<long> values; // index 0 = β_{-1}

    long beta(int j) const {
        int i = j + 1;
        if (i < 0 || i >= static_cast<int>(values.size())) return 0;
        return values[static_cast<std::size_t>(i)];
    }
    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Augmented boundary matrix ∂_j: C_j -> C_{j-1} with alternating signs;
/// ∂_0 sends every vertex to the empty face. Rows are (j-1)-faces, columns
/// j-faces, both in lexicographic order.
FpMatrix boundary_matrix(const SimplicialComplex& c, int j, const PrimeField& f);

BettiTable reduced_betti(const SimplicialComplex& c, const PrimeField& f);

/// Graded dimensions of the i-th local cohomology of the Stanley-Reisner ring
/// in the squarefree degrees: the entry at degree -j is
///   Σ_{F ∈ Δ, |F| = j} dim H̃_{i-j-1}(lk F),
/// so the degree-0 entry equals β_{i-1}(Δ). Zero entries are omitted.
struct LocalCohomologyDims {
    int i = 0;
    std::map<int, long> dims; // degree (<= 0) -> dimension

    long at(int degree) const {
        auto it = dims.find(degree);
        return it == dims.end() ? 0 : it->second;
    }
};

LocalCohomologyDims hochster_dims(const SimplicialComplex& c, const PrimeField& f, int i);

/// Reisner's criterion: H̃_i(lk F) = 0 for every face F (the empty face
/// included) and every i < dim lk F.
bool is_cohen_macaulay(const SimplicialComplex& c, const PrimeField& f);

/// Schenzel's criterion: pure with every vertex link Cohen-Macaulay.
bool is_buchsbaum(const SimplicialComplex& c, const PrimeField& f);

/// Doubly Cohen-Macaulay: CM, and every vertex deletion is CM of the same
/// dimension.
bool is_two_cm(const SimplicialComplex& c, const PrimeField& f);

} // namespace srtk
