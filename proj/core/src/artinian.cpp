#include "srtk/artinian.hpp"

#include <algorithm>
#include <random>

#include "srtk/enumeration.hpp"

namespace srtk {

namespace {

FpMatrix facet_submatrix(const FpMatrix& forms, const Face& facet) {
    FpMatrix sub(forms.field(), forms.rows(), facet.size());
    for (std::size_t r = 0; r < forms.rows(); ++r) {
        std::size_t c = 0;
        for (int v : facet.vertices()) sub.set(r, c++, forms.at(r, static_cast<std::size_t>(v) - 1));
    }
    return sub;
}

bool verify_lsop_all(std::span<const SimplicialComplex* const> complexes, const FpMatrix& forms) {
    for (const SimplicialComplex* c : complexes)
        if (!verify_lsop(*c, forms)) return false;
    return true;
}

LinearForms sample_lsop(std::span<const SimplicialComplex* const> complexes, const PrimeField& f,
                        std::uint64_t seed, int max_attempts) {
    const SimplicialComplex& c = *complexes.front();
    int d = c.d();
    int n = c.n();
    std::mt19937_64 rng(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        FpMatrix forms(f, static_cast<std::size_t>(d), static_cast<std::size_t>(n));
        for (std::size_t r = 0; r < forms.rows(); ++r)
            for (std::size_t col = 0; col < forms.cols(); ++col)
                forms.set(r, col, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(f.p())));
        if (verify_lsop_all(complexes, forms)) return LinearForms{std::move(forms), seed, attempt};
    }
    fail(Errc::lsop_not_found, "no linear system of parameters found after " + std::to_string(max_attempts) +
                                   " attempts over GF(" + std::to_string(f.p()) + ")");
}

} // namespace

bool verify_lsop(const SimplicialComplex& c, const FpMatrix& forms) {
    if (c.is_void() || c.is_empty_complex()) return false;
    if (forms.rows() != static_cast<std::size_t>(c.d()) || forms.cols() != static_cast<std::size_t>(c.n()))
        return false;
    for (const Face& facet : c.facets())
        if (facet_submatrix(forms, facet).rank() != facet.size()) return false;
    return true;
}

LinearForms random_lsop(const SimplicialComplex& c, const PrimeField& f, std::uint64_t seed, int max_attempts) {
    const SimplicialComplex* cs[] = {&c};
    return sample_lsop(cs, f, seed, max_attempts);
}

std::vector<Monomial> face_monomials(const SimplicialComplex& c, int degree) {
    std::vector<Monomial> out;
    Monomial exps(static_cast<std::size_t>(c.n()), 0);
    std::vector<int> support;
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (remaining == 0) {
            for (std::size_t k = static_cast<std::size_t>(var) - 1; k < exps.size(); ++k) exps[k] = 0;
            out.push_back(exps);
            return;
        }
        if (var > c.n()) return;
        for (int e = remaining; e >= 0; --e) { // descending: lexicographically larger monomials first
            exps[static_cast<std::size_t>(var) - 1] = e;
            if (e > 0) {
                support.push_back(var);
                if (c.contains(Face(support))) self(self, var + 1, remaining - e);
                support.pop_back();
            } else {
                self(self, var + 1, remaining);
            }
        }
        exps[static_cast<std::size_t>(var) - 1] = 0;
    };
    if (!c.is_void()) rec(rec, 1, degree);
    return out;
}

GradedAlgebra::GradedAlgebra(PrimeField f, int nvars, std::vector<long> dims,
                             std::vector<std::vector<FpMatrix>> mult)
    : field_(f), nvars_(nvars), dims_(std::move(dims)), mult_(std::move(mult)) {
    while (dims_.size() > 1 && dims_.back() == 0) dims_.pop_back();
    if (mult_.size() < dims_.size()) fail(Errc::internal_error, "missing multiplication maps");
    mult_.resize(dims_.size());
}

FpMatrix GradedAlgebra::mult(int degree, int var) const {
    if (var < 1 || var > nvars_) fail(Errc::index_out_of_range, "variable index " + std::to_string(var));
    if (degree < 0 || degree > top_degree())
        return FpMatrix(field_, static_cast<std::size_t>(dim(degree + 1)), static_cast<std::size_t>(dim(degree)));
    return mult_[static_cast<std::size_t>(degree)][static_cast<std::size_t>(var) - 1];
}

GradedReduction graded_reduction(const SimplicialComplex& c, const LinearForms& forms) {
    if (!verify_lsop(c, forms.coeffs))
        fail(Errc::lsop_not_found, "the given forms are not a linear system of parameters for the complex");
    const PrimeField& f = forms.coeffs.field();
    int n = c.n();
    int d = c.d();

    struct Degree {
        std::vector<Monomial> amb;
        std::map<Monomial, std::size_t> index;
        QuotientBasis qb{FpMatrix(PrimeField(2), 0, 0), {}, {}, 0};
    };
    std::vector<Degree> deg;
    std::vector<long> dims;
    int consecutive_zero = 0;
    const int cap = n + d + 4; // the reduction of a verified lsop dies by degree n

    for (int j = 0;; ++j) {
        if (j > cap) fail(Errc::internal_error, "artinian reduction did not terminate; lsop certificate is wrong");
        Degree cur;
        cur.amb = face_monomials(c, j);
        for (std::size_t i = 0; i < cur.amb.size(); ++i) cur.index[cur.amb[i]] = i;
        FpMatrix span(f, 0, cur.amb.size());
        if (j >= 1) {
            const Degree& prev = deg[static_cast<std::size_t>(j) - 1];
            std::vector<std::int64_t> row(cur.amb.size());
            for (std::size_t i = 0; i < forms.coeffs.rows(); ++i) {
                for (const Monomial& m : prev.amb) {
                    std::fill(row.begin(), row.end(), 0);
                    Monomial shifted = m;
                    for (int k = 1; k <= n; ++k) {
                        std::int64_t coef = forms.coeffs.at(i, static_cast<std::size_t>(k) - 1);
                        if (coef == 0) continue;
                        ++shifted[static_cast<std::size_t>(k) - 1];
                        auto it = cur.index.find(shifted);
                        if (it != cur.index.end()) row[it->second] = f.add(row[it->second], coef);
                        --shifted[static_cast<std::size_t>(k) - 1];
                    }
                    span.append_row(row);
                }
            }
        }
        cur.qb = quotient_basis(span, cur.amb.size());
        dims.push_back(static_cast<long>(cur.qb.quotient_dim()));
        deg.push_back(std::move(cur));
        if (dims.back() == 0) {
            if (++consecutive_zero == 2) break;
        } else {
            consecutive_zero = 0;
        }
    }

    std::size_t top = 0;
    for (std::size_t j = 0; j < dims.size(); ++j)
        if (dims[j] > 0) top = j;

    std::vector<std::vector<FpMatrix>> mult;
    std::vector<std::vector<Monomial>> basis;
    for (std::size_t j = 0; j <= top; ++j) {
        const Degree& cur = deg[j];
        const Degree& nxt = deg[j + 1];
        std::vector<FpMatrix> maps;
        maps.reserve(static_cast<std::size_t>(n));
        for (int k = 1; k <= n; ++k) {
            FpMatrix m(f, nxt.qb.quotient_dim(), cur.qb.quotient_dim());
            for (std::size_t col = 0; col < cur.qb.reps.size(); ++col) {
                Monomial shifted = cur.amb[cur.qb.reps[col]];
                ++shifted[static_cast<std::size_t>(k) - 1];
                auto it = nxt.index.find(shifted);
                if (it == nxt.index.end()) continue; // x_k times the representative vanishes in K[Δ]
                std::vector<std::int64_t> e(nxt.amb.size(), 0);
                e[it->second] = 1;
                std::vector<std::int64_t> coords = nxt.qb.project(e);
                for (std::size_t r = 0; r < coords.size(); ++r) m.set(r, col, coords[r]);
            }
            maps.push_back(std::move(m));
        }
        mult.push_back(std::move(maps));
        std::vector<Monomial> reps;
        for (std::size_t cidx : cur.qb.reps) reps.push_back(cur.amb[cidx]);
        basis.push_back(std::move(reps));
    }

    dims.resize(top + 1);
    return GradedReduction{GradedAlgebra(f, n, std::move(dims), std::move(mult)), std::move(basis), forms};
}

namespace {

FpMatrix stacked_mult(const GradedAlgebra& a, int degree) {
    FpMatrix s(a.field(), 0, static_cast<std::size_t>(a.dim(degree)));
    for (int k = 1; k <= a.nvars(); ++k) {
        FpMatrix m = a.mult(degree, k);
        for (std::size_t r = 0; r < m.rows(); ++r) s.append_row(m.row(r));
    }
    return s;
}

} // namespace

SocleProfile socle_profile(const GradedAlgebra& a) {
    SocleProfile out;
    for (int j = 0; j <= a.top_degree(); ++j) {
        if (a.dim(j) == 0) continue;
        long dim = a.dim(j) - static_cast<long>(stacked_mult(a, j).rank());
        if (dim != 0) out.dims[j] = dim;
    }
    return out;
}

BstarCheck buchsbaum_star_check(const SimplicialComplex& c, const PrimeField& f, std::uint64_t seed) {
    BstarCheck r;
    r.seed = seed;
    if (!is_buchsbaum(c, f)) {
        r.reason = "complex is not Buchsbaum (purity or a vertex-link Reisner condition fails)";
        return r;
    }
    r.buchsbaum = true;
    LinearForms forms = random_lsop(c, f, seed);
    r.lsop_attempts = forms.attempts;
    GradedReduction red = graded_reduction(c, forms);
    SocleProfile soc = socle_profile(red.algebra);
    BettiTable betti = reduced_betti(c, f);
    int d = c.d();
    bool equal = true;
    for (int j = 1; j <= std::max(d, red.top_degree()); ++j) {
        long expected = binom_ll(d, j) * betti.beta(j - 1);
        long actual = soc.at(j);
        r.rows.push_back({j, actual, expected});
        equal = equal && actual == expected;
    }
    r.socle_equality = equal;
    if (!equal) r.reason = "socle dimensions deviate from binom(d,j) beta_{j-1}";
    return r;
}

bool is_buchsbaum_star(const SimplicialComplex& c, const PrimeField& f, std::uint64_t seed) {
    return buchsbaum_star_check(c, f, seed).passed();
}

SocleBoundCheck socle_lower_bound_check(const SimplicialComplex& c, const PrimeField& f, std::uint64_t seed) {
    LinearForms forms = random_lsop(c, f, seed);
    GradedReduction red = graded_reduction(c, forms);
    SocleProfile soc = socle_profile(red.algebra);
    BettiTable betti = reduced_betti(c, f);
    int d = c.d();
    SocleBoundCheck out;
    for (int j = 1; j <= std::max(d, red.top_degree()); ++j) {
        SocleBoundCheck::Row row;
        row.degree = j;
        row.actual = soc.at(j);
        row.expected = binom_ll(d, j) * betti.beta(j - 1);
        row.slack = row.actual - row.expected;
        if (row.slack < 0) out.lower_bounds_hold = false;
        if (j == d && row.slack != 0) out.top_exact = false;
        out.rows.push_back(row);
    }
    return out;
}

LevelQuotient strip_socle_below(const GradedAlgebra& a, int d) {
    const PrimeField& f = a.field();
    int top = a.top_degree();

    // Socle bases in degrees 1..d-1, as row-span matrices in the algebra's coordinates.
    std::vector<QuotientBasis> qb;
    qb.reserve(static_cast<std::size_t>(top) + 2);
    for (int j = 0; j <= top + 1; ++j) {
        FpMatrix span(f, 0, static_cast<std::size_t>(a.dim(j)));
        if (j >= 1 && j <= d - 1 && a.dim(j) > 0) {
            for (const auto& v : stacked_mult(a, j).kernel_basis()) {
                // I = ⊕ Soc_j is m-closed because m annihilates it; anything else is a bug.
                for (int k = 1; k <= a.nvars(); ++k) {
                    std::vector<std::int64_t> image = a.mult(j, k).apply(v);
                    if (!std::all_of(image.begin(), image.end(), [](std::int64_t x) { return x == 0; }))
                        fail(Errc::internal_error, "socle vector not annihilated by the maximal ideal");
                }
                span.append_row(v);
            }
        }
        qb.push_back(quotient_basis(span, static_cast<std::size_t>(a.dim(j))));
    }

    std::vector<long> dims;
    std::vector<std::vector<FpMatrix>> mult;
    for (int j = 0; j <= top; ++j) {
        dims.push_back(static_cast<long>(qb[static_cast<std::size_t>(j)].quotient_dim()));
        std::vector<FpMatrix> maps;
        for (int k = 1; k <= a.nvars(); ++k) {
            const QuotientBasis& cur = qb[static_cast<std::size_t>(j)];
            const QuotientBasis& nxt = qb[static_cast<std::size_t>(j) + 1];
            FpMatrix old = a.mult(j, k);
            FpMatrix m(f, nxt.quotient_dim(), cur.quotient_dim());
            for (std::size_t col = 0; col < cur.reps.size(); ++col) {
                std::vector<std::int64_t> image(old.rows(), 0);
                for (std::size_t r = 0; r < old.rows(); ++r) image[r] = old.at(r, cur.reps[col]);
                std::vector<std::int64_t> coords = nxt.project(image);
                for (std::size_t r = 0; r < coords.size(); ++r) m.set(r, col, coords[r]);
            }
            maps.push_back(std::move(m));
        }
        mult.push_back(std::move(maps));
    }

    LevelQuotient out{GradedAlgebra(f, a.nvars(), std::move(dims), std::move(mult)), {}, 0};
    out.socle = socle_profile(out.algebra);
    out.cm_type = out.socle.at(out.algebra.top_degree());
    return out;
}

LevelQuotient level_quotient(const SimplicialComplex& c, const PrimeField& f, std::uint64_t seed) {
    GradedReduction red = graded_reduction(c, random_lsop(c, f, seed));
    return strip_socle_below(red.algebra, c.d());
}

StarDeletionCheck star_deletion_dim_check(const SimplicialComplex& c, int vertex, const PrimeField& f,
                                          std::uint64_t seed) {
    Face vk({vertex});
    if (!c.contains(vk)) fail(Errc::hypothesis_failed, "k = " + std::to_string(vertex) + " is not a vertex");
    if (!is_buchsbaum(c, f)) fail(Errc::hypothesis_failed, "the complex is not Buchsbaum");
    SimplicialComplex lk = c.link(vk);
    if (!is_two_cm(lk, f)) fail(Errc::hypothesis_failed, "the link of k is not doubly Cohen-Macaulay");
    SimplicialComplex del = c.deletion(vk);
    if (del.dim() != c.dim() || !is_buchsbaum(del, f))
        fail(Errc::hypothesis_failed, "the deletion of k is not Buchsbaum of dimension d-1");
    SimplicialComplex st = c.star(vk);

    const SimplicialComplex* all[] = {&c, &st, &del};
    LinearForms forms = sample_lsop(all, f, seed, 20000);

    GradedReduction red_c = graded_reduction(c, forms);
    GradedReduction red_st = graded_reduction(st, forms);
    GradedReduction red_del = graded_reduction(del, forms);

    StarDeletionCheck out;
    out.vertex = vertex;
    int hi = std::max({red_c.top_degree(), red_st.top_degree() + 1, red_del.top_degree()}) + 1;
    for (int j = 0; j <= hi; ++j) {
        StarDeletionCheck::Row row;
        row.degree = j;
        row.whole = red_c.algebra.dim(j);
        row.star_shifted = red_st.algebra.dim(j - 1);
        row.deletion = red_del.algebra.dim(j);
        row.ok = row.whole == row.star_shifted + row.deletion;
        out.pass = out.pass && row.ok;
        out.rows.push_back(row);
    }
    return out;
}

} // namespace srtk
