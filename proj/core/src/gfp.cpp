#include "srtk/gfp.hpp"

#include <algorithm>

namespace srtk {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

PrimeField::PrimeField(std::int64_t p) : p_(p) {
    if (!is_prime(p)) fail(Errc::invalid_argument, "field characteristic must be prime, got " + std::to_string(p));
}

std::int64_t PrimeField::pow(std::int64_t a, std::int64_t e) const { return powmod(a, e, p_); }

std::int64_t PrimeField::inv(std::int64_t a) const {
    if (a == 0) fail(Errc::invalid_argument, "division by zero in GF(p)");
    return powmod(a, p_ - 2, p_);
}

bool PrimeField::is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (p % q == 0) return p == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::int64_t d = p - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t x = powmod(a, d, p);
        if (x == 1 || x == p - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, p);
            if (x == p - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FpMatrix FpMatrix::identity(const PrimeField& f, std::size_t k) {
    FpMatrix m(f, k, k);
    for (std::size_t i = 0; i < k; ++i) m.set(i, i, 1);
    return m;
}

void FpMatrix::append_row(std::span<const std::int64_t> v) {
    if (v.size() != cols_) fail(Errc::length_mismatch, "appended row has wrong length");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

bool FpMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::int64_t x) { return x == 0; });
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

FpMatrix FpMatrix::times(const FpMatrix& rhs) const {
    if (cols_ != rhs.rows_) fail(Errc::length_mismatch, "matrix product shape mismatch");
    FpMatrix out(field_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            std::int64_t f = at(r, k);
            if (f == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c)
                out.set(r, c, field_.add(out.at(r, c), field_.mul(f, rhs.at(k, c))));
        }
    }
    return out;
}

std::vector<std::int64_t> FpMatrix::apply(std::span<const std::int64_t> v) const {
    if (v.size() != cols_) fail(Errc::length_mismatch, "vector length does not match matrix columns");
    std::vector<std::int64_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::int64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            if (v[c] != 0) acc = field_.add(acc, field_.mul(at(r, c), v[c]));
        out[r] = acc;
    }
    return out;
}

FpMatrix FpMatrix::rref(std::vector<std::size_t>* pivots) const {
    FpMatrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols_ && r < m.rows_; ++c) {
        std::size_t sel = r;
        while (sel < m.rows_ && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows_) continue;
        if (sel != r)
            for (std::size_t k = 0; k < m.cols_; ++k) std::swap(m.a_[sel * m.cols_ + k], m.a_[r * m.cols_ + k]);
        std::int64_t inv = field_.inv(m.at(r, c));
        for (std::size_t k = c; k < m.cols_; ++k) m.set(r, k, field_.mul(m.at(r, k), inv));
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (i == r) continue;
            std::int64_t f = m.at(i, c);
            if (f == 0) continue;
            for (std::size_t k = c; k < m.cols_; ++k)
                m.set(i, k, field_.sub(m.at(i, k), field_.mul(f, m.at(r, k))));
        }
        piv.push_back(c);
        ++r;
    }
    FpMatrix out(field_, piv.size(), cols_);
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t k = 0; k < cols_; ++k) out.set(i, k, m.at(i, k));
    if (pivots) *pivots = piv;
    return out;
}

std::size_t FpMatrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

std::vector<std::vector<std::int64_t>> FpMatrix::kernel_basis() const {
    std::vector<std::size_t> piv;
    FpMatrix r = rref(&piv);
    std::vector<bool> is_piv(cols_, false);
    for (std::size_t c : piv) is_piv[c] = true;
    std::vector<std::vector<std::int64_t>> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_piv[c]) continue;
        std::vector<std::int64_t> v(cols_, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = field_.neg(r.at(i, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::int64_t> QuotientBasis::project(std::span<const std::int64_t> v) const {
    if (v.size() != ambient) fail(Errc::length_mismatch, "vector length does not match ambient dimension");
    std::vector<std::int64_t> w(v.begin(), v.end());
    const PrimeField& f = rref.field();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        std::int64_t c = w[pivots[i]];
        if (c == 0) continue;
        for (std::size_t k = 0; k < ambient; ++k) w[k] = f.sub(w[k], f.mul(c, rref.at(i, k)));
    }
    std::vector<std::int64_t> out(reps.size(), 0);
    for (std::size_t i = 0; i < reps.size(); ++i) out[i] = w[reps[i]];
    return out;
}

QuotientBasis quotient_basis(const FpMatrix& span_rows, std::size_t ambient_dim) {
    if (span_rows.rows() > 0 && span_rows.cols() != ambient_dim)
        fail(Errc::length_mismatch, "span vectors do not live in the ambient space");
    std::vector<std::size_t> piv;
    FpMatrix r = span_rows.rows() > 0 ? span_rows.rref(&piv) : FpMatrix(span_rows.field(), 0, ambient_dim);
    QuotientBasis q{std::move(r), std::move(piv), {}, ambient_dim};
    std::vector<bool> is_piv(ambient_dim, false);
    for (std::size_t c : q.pivots) is_piv[c] = true;
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_piv[c]) q.reps.push_back(c);
    return q;
}

} // namespace srtk
