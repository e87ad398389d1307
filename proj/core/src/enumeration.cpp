#include "srtk/enumeration.hpp"

#include <sstream>

namespace srtk {

BigInt binom(long long a, long long j) {
    if (j < 0) return 0;
    if (j == 0) return 1;
    if (a < j) return 0; // integer a >= 0 in all uses below
    BigInt num = 1;
    for (long long i = 0; i < j; ++i) {
        num *= a - i;
        num /= i + 1; // exact at every step for integer a
    }
    return num;
}

long long binom_ll(long long a, long long j) {
    BigInt b = binom(a, j);
    if (b > std::numeric_limits<long long>::max())
        fail(Errc::internal_error, "binomial coefficient overflows 64 bits");
    return static_cast<long long>(b);
}

std::vector<long long> h_from_f(const std::vector<long long>& f, int d) {
    if (static_cast<int>(f.size()) != d + 1) fail(Errc::length_mismatch, "f-vector must have d+1 entries");
    if (f[0] != 1) fail(Errc::length_mismatch, "f_{-1} must be 1");
    std::vector<long long> h(static_cast<std::size_t>(d) + 1, 0);
    for (int j = 0; j <= d; ++j) {
        long long acc = 0;
        for (int i = 0; i <= j; ++i) {
            long long term = binom_ll(d - i, j - i) * f[static_cast<std::size_t>(i)];
            acc += (j - i) % 2 == 0 ? term : -term;
        }
        h[static_cast<std::size_t>(j)] = acc;
    }
    return h;
}

std::vector<long long> f_from_h(const std::vector<long long>& h, int d) {
    if (static_cast<int>(h.size()) != d + 1) fail(Errc::length_mismatch, "h-vector must have d+1 entries");
    if (h[0] != 1) fail(Errc::length_mismatch, "h_0 must be 1");
    std::vector<long long> f(static_cast<std::size_t>(d) + 1, 0);
    for (int j = 0; j <= d; ++j) {
        long long acc = 0;
        for (int i = 0; i <= j; ++i) acc += binom_ll(d - i, j - i) * h[static_cast<std::size_t>(i)];
        f[static_cast<std::size_t>(j)] = acc;
    }
    return f;
}

std::vector<long long> h_prime(const std::vector<long long>& h, const BettiTable& betti, int d) {
    if (static_cast<int>(h.size()) != d + 1) fail(Errc::length_mismatch, "h-vector must have d+1 entries");
    std::vector<long long> hp(h);
    for (int j = 0; j <= d; ++j) {
        long long alt = 0;
        for (int i = 0; i <= j - 1; ++i) {
            long long b = betti.beta(i - 1);
            alt += (j - i - 1) % 2 == 0 ? b : -b;
        }
        hp[static_cast<std::size_t>(j)] += binom_ll(d, j) * alt;
    }
    return hp;
}

std::vector<long long> h_double_prime(const std::vector<long long>& hp, const BettiTable& betti, int d) {
    if (static_cast<int>(hp.size()) != d + 1) fail(Errc::length_mismatch, "h'-vector must have d+1 entries");
    std::vector<long long> hpp(hp);
    for (int j = 0; j < d; ++j) hpp[static_cast<std::size_t>(j)] -= binom_ll(d, j) * betti.beta(j - 1);
    hpp[static_cast<std::size_t>(d)] = betti.beta(d - 1);
    return hpp;
}

HVectorBundle make_bundle(const SimplicialComplex& c, const BettiTable& betti) {
    HVectorBundle b;
    b.n = c.n();
    b.d = c.d();
    for (long x : c.f_vector()) b.f.push_back(x);
    b.h = h_from_f(b.f, b.d);
    b.h_prime = h_prime(b.h, betti, b.d);
    b.h_double_prime = h_double_prime(b.h_prime, betti, b.d);
    b.betti = betti;
    return b;
}

BigInt BinomialExpansion::value() const {
    BigInt acc = BigInt(m_top) * binom(n - 1 + d, d);
    for (auto [i, m] : terms) acc += binom(m, i);
    return acc;
}

BigInt BinomialExpansion::growth() const {
    if (b == 0) return 0;
    BigInt acc = BigInt(m_top) * binom(n + d, d + 1);
    for (auto [i, m] : terms) acc += binom(m + 1, i + 1);
    return acc;
}

std::string BinomialExpansion::str() const {
    std::ostringstream os;
    if (b == 0) return "0";
    bool first = true;
    if (m_top != 0) {
        os << m_top << "*C(" << n - 1 + d << "," << d << ")";
        first = false;
    }
    for (auto [i, m] : terms) {
        if (!first) os << " + ";
        os << "C(" << m << "," << i << ")";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

BinomialExpansion d_binomial_expansion(long long b, int n, int d) {
    if (b < 0) fail(Errc::expansion_impossible, "negative value " + std::to_string(b));
    if (n < 1 || d < 0) fail(Errc::expansion_impossible, "need n >= 1 and d >= 0");
    BinomialExpansion e;
    e.b = b;
    e.n = n;
    e.d = d;
    if (b == 0) return e;
    BigInt q = binom(n - 1 + d, d);
    BigInt top = BigInt(b) / q;
    BigInt rem = BigInt(b) % q;
    e.m_top = static_cast<long long>(top);
    long long prev = n + d - 1; // greedy picks m_d <= n+d-2 since rem < binom(n-1+d, d)
    for (int i = d; i >= 1 && rem > 0; --i) {
        long long m = i - 1;
        while (m + 1 < prev && binom(m + 1, i) <= rem) ++m;
        if (m < i) fail(Errc::internal_error, "greedy expansion underflow");
        e.terms.emplace_back(i, m);
        rem -= binom(m, i);
        prev = m;
    }
    if (rem != 0) fail(Errc::internal_error, "greedy expansion left a remainder");
    return e;
}

BigInt macaulay_growth(long long b, int n, int d) { return d_binomial_expansion(b, n, d).growth(); }

MacaulayReport check_module_macaulay(const std::vector<long long>& hfun, int n) {
    MacaulayReport rep;
    for (std::size_t j = 0; j + 1 < hfun.size(); ++j) {
        if (hfun[j] < 0 || hfun[j + 1] < 0)
            fail(Errc::expansion_impossible, "Hilbert function values must be non-negative");
        MacaulayReport::Row row;
        row.j = static_cast<int>(j);
        row.value = hfun[j + 1];
        row.bound = macaulay_growth(hfun[j], n, static_cast<int>(j));
        row.pass = BigInt(row.value) <= row.bound;
        rep.pass = rep.pass && row.pass;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

namespace {

long long hpp_at(const HVectorBundle& b, int j) {
    if (j < 0 || j > b.d) return 0;
    return b.h_double_prime[static_cast<std::size_t>(j)];
}

} // namespace

BstarBoundsReport check_bstar_bounds(const HVectorBundle& bundle, bool include_b) {
    BstarBoundsReport rep;
    rep.b_included = include_b;
    int d = bundle.d;
    for (int j = 1; j <= d - 2; ++j) {
        BstarBoundsReport::RowA row;
        row.j = j;
        row.lhs = bundle.h_prime[static_cast<std::size_t>(j) + 1];
        try {
            row.branch_growth = macaulay_growth(hpp_at(bundle, j), bundle.n, j);
            row.branch_duality = macaulay_growth(hpp_at(bundle, j + 2), bundle.n, d - j - 2) +
                                 BigInt(bundle.betti.beta(j)) * binom(d, j + 1);
            BigInt bound = std::min(row.branch_growth, row.branch_duality);
            row.pass = BigInt(row.lhs) <= bound;
        } catch (const Error& e) {
            row.evaluable = false;
            row.note = e.what();
            row.pass = false;
        }
        rep.pass = rep.pass && row.pass;
        rep.part_a.push_back(std::move(row));
    }
    if (include_b) {
        long long type = bundle.betti.beta(d - 1);
        if (d - 1 >= 1 && type == 0)
            fail(Errc::betti_zero, "bound (b) needs beta_{d-1} > 0");
        for (int j = 1; j <= d - 1; ++j) {
            BstarBoundsReport::RowB row;
            row.j = j;
            row.lhs = hpp_at(bundle, d - j);
            row.rhs = hpp_at(bundle, j);
            row.pass = type * row.lhs >= row.rhs;
            rep.pass = rep.pass && row.pass;
            rep.part_b.push_back(row);
        }
    }
    return rep;
}

BstarBoundsReport check_bstar_bounds(const HVectorBundle& bundle) { return check_bstar_bounds(bundle, true); }

SoderbergReport soderberg_check(const std::vector<long long>& hpp, int n, int d) {
    if (static_cast<int>(hpp.size()) != d + 1) fail(Errc::length_mismatch, "h''-vector must have d+1 entries");
    auto h = [&](int j) -> BigInt { return j < 0 || j > d ? BigInt(0) : BigInt(hpp[static_cast<std::size_t>(j)]); };
    auto r = [&](int j) -> BigInt { return binom(n - 1 + j, j); };
    SoderbergReport rep;
    for (int j = 0; j <= d; ++j) {
        BigInt a0 = h(j - 1), a1 = h(j), a2 = h(j + 1);
        BigInt b0 = r(j - 1), b1 = r(j), b2 = r(j + 1);
        BigInt c0 = r(d - j + 1), c1 = r(d - j), c2 = r(d - j - 1);
        BigInt det = a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
        SoderbergReport::Row row{j, det, det >= 0};
        rep.pass = rep.pass && row.pass;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace srtk
