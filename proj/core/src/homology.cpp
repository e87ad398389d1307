#include "srtk/homology.hpp"

#include <string>
#include <unordered_map>

namespace srtk {

namespace {

// Memo table for link homology: one Reisner scan recomputes the same link
// complexes many times (links of links are links of unions).
struct BettiCache {
    const PrimeField& field;
    std::unordered_map<std::string, BettiTable> memo;

    const BettiTable& get(const SimplicialComplex& c);
};

std::string cache_key(const SimplicialComplex& c) {
    std::string key;
    for (const Face& f : c.facets()) {
        for (int v : f.vertices()) {
            key += std::to_string(v);
            key += ',';
        }
        key += ';';
    }
    return key;
}

BettiTable compute_betti(const SimplicialComplex& c, const PrimeField& f) {
    BettiTable t;
    t.p = f.p();
    t.dim = c.dim();
    if (c.is_void()) return t;
    if (c.is_empty_complex()) {
        t.values = {1}; // H̃_{-1}({∅}) = K
        return t;
    }
    // ranks of ∂_0 .. ∂_dim; rank ∂_{dim+1} = 0
    std::vector<std::size_t> rk(static_cast<std::size_t>(c.dim()) + 2, 0);
    for (int j = 0; j <= c.dim(); ++j) rk[static_cast<std::size_t>(j)] = boundary_matrix(c, j, f).rank();
    t.values.resize(static_cast<std::size_t>(c.dim()) + 2, 0);
    for (int j = -1; j <= c.dim(); ++j) {
        long cj = c.face_count(j);
        long ker = j < 0 ? cj : cj - static_cast<long>(rk[static_cast<std::size_t>(j)]);
        long bnd = j + 1 <= c.dim() ? static_cast<long>(rk[static_cast<std::size_t>(j) + 1]) : 0;
        t.values[static_cast<std::size_t>(j) + 1] = ker - bnd;
    }
    return t;
}

const BettiTable& BettiCache::get(const SimplicialComplex& c) {
    std::string key = cache_key(c);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    return memo.emplace(std::move(key), compute_betti(c, field)).first->second;
}

// H̃_i(lk F) = 0 for all i < dim lk F, for every face in `faces`.
bool reisner_scan(const SimplicialComplex& c, const std::vector<Face>& faces, BettiCache& cache) {
    for (const Face& f : faces) {
        SimplicialComplex lk = c.link(f);
        const BettiTable& b = cache.get(lk);
        for (int i = -1; i < lk.dim(); ++i)
            if (b.beta(i) != 0) return false;
    }
    return true;
}

bool cohen_macaulay(const SimplicialComplex& c, BettiCache& cache) {
    if (c.is_void()) return false;
    return reisner_scan(c, c.all_faces(), cache);
}

} // namespace

FpMatrix boundary_matrix(const SimplicialComplex& c, int j, const PrimeField& f) {
    if (j < 0 || j > c.dim()) fail(Errc::index_out_of_range, "boundary index " + std::to_string(j));
    std::vector<Face> lo = c.faces_of_dim(j - 1);
    std::vector<Face> hi = c.faces_of_dim(j);
    std::map<Face, std::size_t> idx;
    for (std::size_t i = 0; i < lo.size(); ++i) idx[lo[i]] = i;
    FpMatrix m(f, lo.size(), hi.size());
    for (std::size_t col = 0; col < hi.size(); ++col) {
        const std::vector<int>& v = hi[col].vertices();
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::vector<int> sub;
            sub.reserve(v.size() - 1);
            for (std::size_t k = 0; k < v.size(); ++k)
                if (k != i) sub.push_back(v[k]);
            m.set(idx.at(Face(std::move(sub))), col, i % 2 == 0 ? 1 : f.p() - 1);
        }
    }
    return m;
}

BettiTable reduced_betti(const SimplicialComplex& c, const PrimeField& f) { return compute_betti(c, f); }

LocalCohomologyDims hochster_dims(const SimplicialComplex& c, const PrimeField& f, int i) {
    if (i < 0 || i > c.d()) fail(Errc::index_out_of_range, "local cohomology index " + std::to_string(i));
    BettiCache cache{f, {}};
    LocalCohomologyDims out;
    out.i = i;
    for (const Face& face : c.all_faces()) {
        int j = static_cast<int>(face.size());
        long dim = cache.get(c.link(face)).beta(i - j - 1);
        if (dim != 0) out.dims[-j] += dim;
    }
    return out;
}

bool is_cohen_macaulay(const SimplicialComplex& c, const PrimeField& f) {
    BettiCache cache{f, {}};
    return cohen_macaulay(c, cache);
}

bool is_buchsbaum(const SimplicialComplex& c, const PrimeField& f) {
    if (!c.is_pure()) return false;
    BettiCache cache{f, {}};
    for (int v : c.vertex_set())
        if (!cohen_macaulay(c.link(Face({v})), cache)) return false;
    return true;
}

bool is_two_cm(const SimplicialComplex& c, const PrimeField& f) {
    BettiCache cache{f, {}};
    if (!cohen_macaulay(c, cache)) return false;
    for (int v : c.vertex_set()) {
        SimplicialComplex del = c.deletion(Face({v}));
        if (del.dim() != c.dim() || !cohen_macaulay(del, cache)) return false;
    }
    return true;
}

} // namespace srtk
