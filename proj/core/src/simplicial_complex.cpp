#include "srtk/simplicial_complex.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace srtk {

Face::Face(std::vector<int> vertices) : v_(std::move(vertices)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

const Face& Face::empty() {
    static const Face e;
    return e;
}

bool Face::contains(const Face& other) const {
    return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
}

bool Face::contains_vertex(int v) const { return std::binary_search(v_.begin(), v_.end(), v); }

bool Face::disjoint(const Face& other) const {
    auto a = v_.begin();
    auto b = other.v_.begin();
    while (a != v_.end() && b != other.v_.end()) {
        if (*a < *b)
            ++a;
        else if (*b < *a)
            ++b;
        else
            return false;
    }
    return true;
}

Face Face::unite(const Face& other) const {
    std::vector<int> out;
    out.reserve(v_.size() + other.v_.size());
    std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
    Face f;
    f.v_ = std::move(out);
    return f;
}

Face Face::minus(const Face& other) const {
    std::vector<int> out;
    std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
    Face f;
    f.v_ = std::move(out);
    return f;
}

std::uint64_t Face::mask() const {
    std::uint64_t m = 0;
    for (int v : v_) m |= std::uint64_t{1} << (v - 1);
    return m;
}

std::string Face::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v_[i]);
    }
    return s + "}";
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<Face> facets) {
    if (facets.empty()) fail(Errc::empty_input, "a simplicial complex needs at least one facet");
    for (const Face& f : facets) {
        if (f.is_empty()) fail(Errc::empty_input, "facets must be nonempty");
        if (f.vertices().front() < 1 || f.max_vertex() > n)
            fail(Errc::vertex_out_of_range,
                 "facet " + f.str() + " has a vertex outside [1.." + std::to_string(n) + "]");
    }
    return from_maximal(n, std::move(facets));
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<std::vector<int>>& facets) {
    std::vector<Face> fs;
    fs.reserve(facets.size());
    for (const auto& f : facets) fs.emplace_back(f);
    return from_facets(n, std::move(fs));
}

// Shared by from_facets and by link/star/deletion, which may legitimately
// produce the void complex or {∅}.
SimplicialComplex SimplicialComplex::from_maximal(int n, std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> maximal;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool contained = false;
        for (std::size_t k = 0; k < faces.size() && !contained; ++k)
            contained = k != i && faces[k].contains(faces[i]);
        if (!contained) maximal.push_back(faces[i]);
    }
    SimplicialComplex c;
    c.n_ = n;
    c.facets_ = std::move(maximal);
    c.dim_ = -2;
    for (const Face& f : c.facets_) c.dim_ = std::max(c.dim_, f.dim());
    c.index_masks();
    return c;
}

void SimplicialComplex::index_masks() {
    facet_masks_.clear();
    if (n_ > 64) return;
    facet_masks_.reserve(facets_.size());
    for (const Face& f : facets_) facet_masks_.push_back(f.mask());
}

std::vector<int> SimplicialComplex::vertex_set() const {
    std::set<int> vs;
    for (const Face& f : facets_)
        for (int v : f.vertices()) vs.insert(v);
    return {vs.begin(), vs.end()};
}

bool SimplicialComplex::contains(const Face& f) const {
    if (f.is_empty()) return !is_void();
    if (!facet_masks_.empty()) {
        std::uint64_t m = f.mask();
        for (std::uint64_t fm : facet_masks_)
            if ((m & ~fm) == 0) return true;
        return false;
    }
    for (const Face& g : facets_)
        if (g.contains(f)) return true;
    return false;
}

bool SimplicialComplex::is_pure() const {
    for (const Face& f : facets_)
        if (f.dim() != dim_) return false;
    return true;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int j) const {
    std::vector<Face> out;
    if (j < -1 || j > dim_) return out;
    if (j == -1) {
        if (!is_void()) out.push_back(Face::empty());
        return out;
    }
    std::set<Face> faces;
    std::vector<int> idx(static_cast<std::size_t>(j) + 1);
    for (const Face& f : facets_) {
        const std::vector<int>& fv = f.vertices();
        int k = j + 1;
        if (static_cast<int>(fv.size()) < k) continue;
        // enumerate k-subsets of the facet
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<int> sub(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) sub[i] = fv[idx[i]];
            faces.insert(Face(std::move(sub)));
            int i = k - 1;
            while (i >= 0 && idx[i] == static_cast<int>(fv.size()) - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
        }
    }
    out.assign(faces.begin(), faces.end());
    return out;
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::vector<Face> out;
    for (int j = -1; j <= dim_; ++j) {
        auto fj = faces_of_dim(j);
        out.insert(out.end(), fj.begin(), fj.end());
    }
    return out;
}

long SimplicialComplex::face_count(int j) const { return static_cast<long>(faces_of_dim(j).size()); }

std::vector<long> SimplicialComplex::f_vector() const {
    std::vector<long> f;
    for (int j = -1; j <= dim_; ++j) f.push_back(face_count(j));
    return f;
}

SimplicialComplex SimplicialComplex::link(const Face& f) const {
    SimplicialComplex out;
    out.n_ = n_;
    if (!contains(f)) return out; // F ∉ Δ: lk F = st F = ∅ (the void complex)
    std::vector<Face> max;
    for (const Face& g : facets_)
        if (g.contains(f)) max.push_back(g.minus(f));
    return from_maximal(n_, std::move(max));
}

SimplicialComplex SimplicialComplex::star(const Face& f) const {
    SimplicialComplex out;
    out.n_ = n_;
    if (!contains(f)) return out;
    std::vector<Face> max;
    for (const Face& g : facets_)
        if (g.contains(f)) max.push_back(g);
    return from_maximal(n_, std::move(max));
}

SimplicialComplex SimplicialComplex::deletion(const Face& f) const {
    std::vector<Face> max;
    for (const Face& g : facets_) max.push_back(g.minus(f));
    return from_maximal(n_, std::move(max));
}

SimplicialComplex parse_facet_lines(std::istream& in) {
    std::string line;
    int n = -1, d = -1;
    std::vector<std::vector<int>> facets;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long long> nums;
        long long x;
        while (ls >> x) nums.push_back(x);
        if (!ls.eof()) fail(Errc::parse_error, "line " + std::to_string(lineno) + ": expected integers");
        if (nums.empty()) continue;
        if (n < 0) {
            if (nums.size() != 2) fail(Errc::parse_error, "header line must be 'n d'");
            if (nums[0] < 1 || nums[0] > 1'000'000) fail(Errc::parse_error, "vertex count out of range");
            if (nums[1] < 1 || nums[1] > nums[0]) fail(Errc::parse_error, "declared d out of range");
            n = static_cast<int>(nums[0]);
            d = static_cast<int>(nums[1]);
            continue;
        }
        std::vector<int> f;
        for (long long v : nums) {
            if (v < 1 || v > n)
                fail(Errc::parse_error, "line " + std::to_string(lineno) + ": vertex " + std::to_string(v) +
                                            " outside [1.." + std::to_string(n) + "]");
            f.push_back(static_cast<int>(v));
        }
        facets.push_back(std::move(f));
    }
    if (n < 0) fail(Errc::parse_error, "missing 'n d' header line");
    if (facets.empty()) fail(Errc::parse_error, "no facets given");
    SimplicialComplex c = SimplicialComplex::from_facets(n, facets);
    if (c.d() != d)
        fail(Errc::parse_error, "declared d = " + std::to_string(d) + " but facets give d = " + std::to_string(c.d()));
    return c;
}

SimplicialComplex parse_facet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::parse_error, "cannot open " + path);
    return parse_facet_lines(in);
}

std::string to_facet_lines(const SimplicialComplex& c) {
    std::ostringstream os;
    os << c.n() << ' ' << c.d() << '\n';
    for (const Face& f : c.facets()) {
        const auto& v = f.vertices();
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
        os << '\n';
    }
    return os.str();
}

} // namespace srtk
