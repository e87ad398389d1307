#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "srtk/errors.hpp"

namespace srtk {

/// A face of a simplicial complex: strictly increasing 1-based vertex ids.
/// The empty face has dimension -1.
class Face {
public:
    Face() = default;
    explicit Face(std::vector<int> vertices);

    static const Face& empty();

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }
    bool is_empty() const { return v_.empty(); }
    const std::vector<int>& vertices() const { return v_; }
    int max_vertex() const { return v_.empty() ? 0 : v_.back(); }

    bool contains(const Face& other) const;          // other ⊆ this
    bool contains_vertex(int v) const;
    bool disjoint(const Face& other) const;
    Face unite(const Face& other) const;
    Face minus(const Face& other) const;

    /// Bitmask with bit (v-1) set per vertex; only valid when max_vertex() <= 64.
    std::uint64_t mask() const;

    std::string str() const;

    friend bool operator==(const Face&, const Face&) = default;
    friend std::strong_ordering operator<=>(const Face& a, const Face& b) { return a.v_ <=> b.v_; }

private:
    std::vector<int> v_;
};

/// A finite simplicial complex on the ground set [1..n], stored by its
/// inclusion-maximal faces. Immutable after construction; all operations are
/// pure and safe for concurrent use.
///
/// Construction through from_facets() rejects the void complex and the complex
/// consisting of the empty face alone, but both arise naturally as links,
/// stars and deletions and are representable: is_void() / is_empty_complex()
/// flag them, with dim() -2 and -1 respectively.
class SimplicialComplex {
public:
    /// The void complex on an empty ground set.
    SimplicialComplex() = default;

    static SimplicialComplex from_facets(int n, std::vector<Face> facets);
    static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets);

    int n() const { return n_; }
    int dim() const { return dim_; }
    /// Krull dimension of the Stanley-Reisner ring: dim() + 1.
    int d() const { return dim_ + 1; }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].is_empty(); }

    /// Inclusion-maximal faces in lexicographic order.
    const std::vector<Face>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }

    /// Vertices that occur in some facet, ascending.
    std::vector<int> vertex_set() const;

    bool contains(const Face& f) const;
    bool is_pure() const;

    /// All j-dimensional faces, lexicographic; j = -1 yields the empty face,
    /// anything outside [-1, dim()] yields an empty sequence.
    std::vector<Face> faces_of_dim(int j) const;

    /// Every face, the empty face included, ordered by dimension then lex.
    std::vector<Face> all_faces() const;

    long face_count(int j) const;

    /// (f_{-1}, f_0, ..., f_{dim}) with f_{-1} = 1.
    std::vector<long> f_vector() const;

    /// lk F = {G : F ∪ G ∈ Δ, F ∩ G = ∅}. Void when F is not a face.
    SimplicialComplex link(const Face& f) const;
    /// st F = {G : F ∪ G ∈ Δ}. Void when F is not a face.
    SimplicialComplex star(const Face& f) const;
    /// Δ_{-F} = {G : F ∩ G = ∅}.
    SimplicialComplex deletion(const Face& f) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    static SimplicialComplex from_maximal(int n, std::vector<Face> faces);
    void index_masks();

    int n_ = 0;
    int dim_ = -2;
    std::vector<Face> facets_;
    std::vector<std::uint64_t> facet_masks_; // populated when n <= 64
};

/// Reads the facet-list text format: first data line "n d", then one facet
/// per line as space-separated vertex ids; '#' starts a comment.
SimplicialComplex parse_facet_lines(std::istream& in);
SimplicialComplex parse_facet_file(const std::string& path);
std::string to_facet_lines(const SimplicialComplex& c);

} // namespace srtk
