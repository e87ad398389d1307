#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srtk/artinian.hpp"
#include "srtk/enumeration.hpp"
#include "srtk/homology.hpp"
#include "srtk/simplicial_complex.hpp"

namespace srtk {

/// One lsop sample's worth of algebraic data.
struct SeedAnalysis {
    std::uint64_t seed = 0;
    int lsop_attempts = 0;
    std::vector<long> reduction_dims;
    SocleProfile socle;
    bool bstar_equality = false;
    SocleBoundCheck socle_bounds;
    std::vector<long> level_dims;
    SocleProfile level_socle;
    long level_type = 0;
    bool level_is_level = false;
};

/// Everything the `report` subcommand emits for one complex over one field.
struct AnalysisReport {
    std::string name;
    SimplicialComplex complex;
    std::int64_t p = 0;
    BettiTable betti;
    HVectorBundle vectors;

    bool pure = false;
    bool cohen_macaulay = false;
    bool buchsbaum = false;
    bool two_cm = false;
    bool buchsbaum_star = false;
    std::string bstar_reason;

    std::vector<SeedAnalysis> seeds;
    bool seed_agreement = true;

    BstarBoundsReport bounds;
    bool bounds_b_skipped = false; // β_{d-1} = 0, part (b) inapplicable
    SoderbergReport soderberg;
    MacaulayReport macaulay_reversed; // on the reversed h''-vector
    bool macaulay_applicable = false; // false when h'' has negative entries
};

/// Runs the full analysis: classification, nseeds lsop samples (seed,
/// seed+1, ...), socle/level data per seed, and the face-vector bound checks.
/// Propagates LsopNotFound when no linear system of parameters turns up.
AnalysisReport analyze(const SimplicialComplex& c, const std::string& name, std::int64_t p, std::uint64_t seed,
                       int nseeds = 1);

/// Loss-free JSON rendering with a fixed key order: identical inputs give
/// byte-identical output. Big integers are rendered as decimal strings.
std::string to_json(const AnalysisReport& r, int indent = 2);

std::string to_text(const AnalysisReport& r);

} // namespace srtk
