#pragma once

#include "pforge/gf.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pforge {

// Thrown when an operation would exceed a configured resource cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Length-n word over F_q. Symbols are nibble packed, two per byte with the
// even coordinate in the high nibble, so comparing packed bytes is the
// same as comparing symbol sequences lexicographically.
//
// Coordinates are 1-based in the public *1 accessors and in everything
// derived from them (supports, line/point indices, file formats); the
// plain get/set pair is 0-based for internal loops.
class FqVector {
public:
    FqVector(FieldPtr field, int n);
    FqVector(FieldPtr field, std::span<const Symbol> symbols);
    static FqVector unit(const FieldPtr& field, int n, int coord1, Symbol value);

    int length() const { return n_; }
    const FieldPtr& field() const { return field_; }

    Symbol get(int i) const {
        const std::uint8_t b = packed_[std::size_t(i) >> 1];
        return (i & 1) ? Symbol(b & 0xF) : Symbol(b >> 4);
    }
    void set(int i, Symbol s) {
        std::uint8_t& b = packed_[std::size_t(i) >> 1];
        if (i & 1)
            b = std::uint8_t((b & 0xF0) | s);
        else
            b = std::uint8_t((b & 0x0F) | (s << 4));
    }
    Symbol at1(int coord1) const { return get(coord1 - 1); }
    void set1(int coord1, Symbol s) { set(coord1 - 1, s); }

    std::vector<Symbol> symbols() const;

    bool is_zero() const;
    int weight() const;
    std::vector<int> support1() const;
    static int distance(const FqVector& a, const FqVector& b);

    FqVector& operator+=(const FqVector& o);
    FqVector& operator-=(const FqVector& o);
    FqVector& scale(Symbol a);
    // *this += a * x
    FqVector& axpy(Symbol a, const FqVector& x);
    friend FqVector operator+(FqVector a, const FqVector& b) { return a += b; }
    friend FqVector operator-(FqVector a, const FqVector& b) { return a -= b; }

    // p(x) = x_1 + x_2 + ... + x_n in the field.
    Symbol coordinate_sum() const;

    // Base-q integer with coordinate 1 as the most significant digit.
    // Caller must ensure q^n fits in 64 bits.
    std::uint64_t radix_index() const;

    FqVector punctured(int coord1) const;
    FqVector appended(Symbol s) const;
    // Copy with sigma applied to the symbol at one coordinate.
    FqVector with_permuted_coord(int coord1, const FieldPermutation& sigma) const;

    std::strong_ordering operator<=>(const FqVector& o) const;
    bool operator==(const FqVector& o) const;

    std::string to_string() const;  // symbols separated by single spaces

private:
    void check_compatible(const FqVector& o) const;

    FieldPtr field_;
    int n_;
    std::vector<std::uint8_t> packed_;
};

class FqMatrix {
public:
    FqMatrix(FieldPtr field, int rows, int cols);
    static FqMatrix identity(const FieldPtr& field, int n);
    static FqMatrix from_rows(std::span<const FqVector> rows);
    static FqMatrix from_entries(FieldPtr field, int rows, int cols,
                                 std::span<const Symbol> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Symbol at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }
    void set(int r, int c, Symbol s) { a_[std::size_t(r) * cols_ + c] = s; }

    FqVector row_vector(int r) const;
    std::vector<Symbol> column(int c) const;
    FqMatrix vstack(const FqMatrix& below) const;

    // M * x for a length-cols vector; returns length-rows result.
    std::vector<Symbol> mul_vec(std::span<const Symbol> x) const;

    bool operator==(const FqMatrix& o) const;

private:
    FieldPtr field_;
    int rows_, cols_;
    std::vector<Symbol> a_;
};

struct RrefResult {
    FqMatrix rref;
    int rank;
    std::vector<int> pivot_cols;  // 0-based, ascending
};

// Gauss-Jordan elimination. Pivot choice is deterministic: leftmost
// unresolved column, lowest remaining row with a nonzero entry.
RrefResult rank_rref(const FqMatrix& m);

// Rows spanning the right kernel {x : M x^T = 0}.
FqMatrix kernel_basis(const FqMatrix& m);

// A row space in reduced form supporting repeated membership and
// coefficient queries. Coefficients are reported over the original rows.
class RowSpace {
public:
    explicit RowSpace(const FqMatrix& basis);

    int rank() const { return rank_; }
    int ambient_length() const { return reduced_.cols(); }
    bool contains(const FqVector& v) const;
    // Coefficients c with v = sum c_i * basis_row_i, or nullopt.
    std::optional<std::vector<Symbol>> express(const FqVector& v) const;
    const FqMatrix& reduced() const { return reduced_; }

private:
    FqMatrix reduced_;     // rank x n, in rref
    FqMatrix transform_;   // rank x original_rows, reduced = transform * basis
    std::vector<int> pivots_;
    int rank_;
};

struct SpanWitness {
    bool member = false;
    std::vector<Symbol> coefficients;
};

SpanWitness in_span(const FqMatrix& basis, const FqVector& v);

// Incremental rank computation over a stream of vectors.
class RankAccumulator {
public:
    RankAccumulator(FieldPtr field, int n);
    // Returns true (and keeps the vector) when it enlarges the span.
    bool insert(const FqVector& v);
    int rank() const { return int(rows_.size()); }

private:
    FieldPtr field_;
    int n_;
    std::vector<FqVector> rows_;   // reduced, pivot-normalized
    std::vector<int> pivots_;
};

// A finite set of equal-length words, stored sorted and deduplicated.
class ExplicitCode {
public:
    ExplicitCode(FieldPtr field, int n, std::vector<FqVector> words);

    int length() const { return n_; }
    std::size_t size() const { return words_.size(); }
    const FieldPtr& field() const { return field_; }
    const FqVector& word(std::size_t i) const { return words_[i]; }
    const std::vector<FqVector>& words() const { return words_; }

    bool contains(const FqVector& w) const;
    std::optional<std::size_t> index_of(const FqVector& w) const;

    bool operator==(const ExplicitCode& o) const;

private:
    FieldPtr field_;
    int n_;
    std::vector<FqVector> words_;
};

struct VectorStats {
    int weight = 0;
    std::vector<int> support1;
    std::optional<int> distance;
};

VectorStats vector_stats(const FqVector& x, const FqVector* y = nullptr);

// Appends the coordinate sum p(x) to every word.
ExplicitCode extend_code(const ExplicitCode& c);

// base^exp, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow_u64(std::uint64_t base, int exp);

// Visits shift + every linear combination of the basis rows, starting at
// the all-zero combination and stepping one coefficient at a time.
void for_each_in_span(const FqMatrix& basis, const FqVector& shift,
                      const std::function<void(const FqVector&)>& fn);

}  // namespace pforge
