#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "srtk/errors.hpp"

namespace srtk {

/// Arithmetic in the prime field GF(p). Elements are residues in [0, p).
///
/// The modulus is validated at construction; all operations assume (and
/// preserve) fully reduced operands.
class PrimeField {
public:
    explicit PrimeField(std::int64_t p);

    std::int64_t p() const { return p_; }

    std::int64_t reduce(std::int64_t a) const {
        a %= p_;
        return a < 0 ? a + p_ : a;
    }
    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a - b;
        return s < 0 ? s + p_ : s;
    }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p_);
    }
    std::int64_t pow(std::int64_t a, std::int64_t e) const;
    std::int64_t inv(std::int64_t a) const;

    static bool is_prime(std::int64_t p);

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::int64_t p_;
};

/// Dense row-major matrix over GF(p).
///
/// Row reduction uses deterministic pivoting (first nonzero entry in scan
/// order), so echelon forms, ranks and kernel bases are reproducible.
class FpMatrix {
public:
    FpMatrix(const PrimeField& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FpMatrix identity(const PrimeField& f, std::size_t k);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v) { a_[r * cols_ + c] = field_.reduce(v); }

    std::span<const std::int64_t> row(std::size_t r) const {
        return std::span<const std::int64_t>(a_.data() + r * cols_, cols_);
    }

    void append_row(std::span<const std::int64_t> v);

    bool is_zero() const;
    FpMatrix transposed() const;
    FpMatrix times(const FpMatrix& rhs) const;
    std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const; // M * v

    std::size_t rank() const;

    /// Reduced row echelon form; zero rows removed. If `pivots` is non-null it
    /// receives the pivot column of each remaining row, in order.
    FpMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;

    /// Basis of the right null space, one vector per non-pivot column.
    std::vector<std::vector<std::int64_t>> kernel_basis() const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<std::int64_t> a_;
};

/// Echelonized description of a subspace W of GF(p)^ambient, used to work in
/// the quotient GF(p)^ambient / W. The unit vectors at the non-pivot
/// coordinates (`reps`) represent a basis of the quotient.
struct QuotientBasis {
    FpMatrix rref;                    // rank x ambient, pivot entries normalized to 1
    std::vector<std::size_t> pivots;  // pivot column of each rref row
    std::vector<std::size_t> reps;    // non-pivot columns, ascending
    std::size_t ambient = 0;

    std::size_t quotient_dim() const { return reps.size(); }
    std::size_t rank() const { return pivots.size(); }

    /// Coordinates of v + W with respect to the representative basis.
    std::vector<std::int64_t> project(std::span<const std::int64_t> v) const;
};

/// Deterministic pivot/non-pivot classification of the span of `span_rows`
/// inside GF(p)^ambient_dim.
QuotientBasis quotient_basis(const FpMatrix& span_rows, std::size_t ambient_dim);

} // namespace srtk
