#include "srtk/builtins.hpp"

#include <charconv>

namespace srtk {

namespace {

SimplicialComplex simplex_boundary(int k) {
    int n = k + 1;
    std::vector<std::vector<int>> facets;
    for (int skip = 1; skip <= n; ++skip) {
        std::vector<int> f;
        for (int v = 1; v <= n; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex cross_polytope(int k) {
    int n = 2 * k;
    std::vector<std::vector<int>> facets;
    for (int bits = 0; bits < (1 << k); ++bits) {
        std::vector<int> f;
        for (int i = 0; i < k; ++i) f.push_back(2 * i + 1 + ((bits >> i) & 1));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex rp2_6() {
    return SimplicialComplex::from_facets(6, std::vector<std::vector<int>>{{1, 2, 3},
                                                                           {1, 2, 4},
                                                                           {1, 3, 5},
                                                                           {1, 4, 6},
                                                                           {1, 5, 6},
                                                                           {2, 3, 6},
                                                                           {2, 4, 5},
                                                                           {2, 5, 6},
                                                                           {3, 4, 5},
                                                                           {3, 4, 6}});
}

SimplicialComplex torus7() {
    // the 2-neighborly 7-vertex torus: orbits {i, i+1, i+3} and {i, i+2, i+3} mod 7
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
        facets.push_back({i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
    }
    return SimplicialComplex::from_facets(7, facets);
}

SimplicialComplex wedge_two_circles() {
    return SimplicialComplex::from_facets(
        5, std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}});
}

SimplicialComplex bowtie_filled() {
    return SimplicialComplex::from_facets(5, std::vector<std::vector<int>>{{1, 2, 3}, {1, 4, 5}});
}

int parse_parameter(const std::string& name, std::size_t colon) {
    int k = 0;
    const char* first = name.data() + colon + 1;
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec != std::errc{} || ptr != last || k < 1 || k > 16)
        fail(Errc::unknown_builtin, "bad parameter in builtin name '" + name + "' (expected 1..16)");
    return k;
}

} // namespace

SimplicialComplex builtin(const std::string& name) {
    auto colon = name.find(':');
    std::string base = name.substr(0, colon);
    if (base == "simplex_boundary" && colon != std::string::npos) return simplex_boundary(parse_parameter(name, colon));
    if (base == "cross_polytope" && colon != std::string::npos) return cross_polytope(parse_parameter(name, colon));
    if (colon == std::string::npos) {
        if (name == "rp2_6") return rp2_6();
        if (name == "torus7") return torus7();
        if (name == "wedge_two_circles") return wedge_two_circles();
        if (name == "bowtie_filled") return bowtie_filled();
    }
    fail(Errc::unknown_builtin, "unknown builtin '" + name + "'");
}

std::vector<std::string> builtin_names() {
    return {"simplex_boundary:k", "cross_polytope:k", "rp2_6", "torus7", "wedge_two_circles", "bowtie_filled"};
}

} // namespace srtk
