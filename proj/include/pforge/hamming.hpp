#pragma once

#include "pforge/linalg.hpp"

#include <memory>
#include <utility>

namespace pforge {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t(1) << 26;

// Points of PG(m-1, q) in a fixed canonical order: each point is the
// representative of its projective line whose topmost nonzero entry is 1,
// and points are sorted ascending by the base-q value of the column read
// top to bottom (top digit most significant). Point indices are 1-based
// and double as parity-check coordinates.
class ProjectiveOrder {
public:
    ProjectiveOrder(FieldPtr field, int m);

    const FieldPtr& field() const { return field_; }
    int m() const { return m_; }
    int num_points() const { return n_; }

    std::span<const Symbol> point(int p1) const;
    int value_of_point(int p1) const { return values_[p1 - 1]; }

    // Unique decomposition z = alpha * h_p of a nonzero vector.
    std::pair<int, Symbol> decompose(std::span<const Symbol> z) const;

    int value_of(std::span<const Symbol> z) const;

private:
    FieldPtr field_;
    int m_, n_;
    std::vector<std::vector<Symbol>> points_;          // [n][m], top first
    std::vector<int> values_;
    std::vector<std::pair<int, Symbol>> decomp_;       // by vector value
};

class HammingCode;
using HammingPtr = std::shared_ptr<const HammingCode>;

// The q-ary Hamming code of length n = (q^m - 1)/(q - 1): parity-check
// columns are the canonical projective points, the generator basis is the
// kernel of the parity-check matrix, both deterministic for given (q, m).
class HammingCode {
public:
    const FieldPtr& field() const { return field_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int dim() const { return n_ - m_; }
    const ProjectiveOrder& order() const { return order_; }
    const FqMatrix& parity_check() const { return parity_; }
    const FqMatrix& generator() const { return generator_; }
    // 1-based coordinates whose columns are the standard basis vectors
    // e_1, ..., e_m (in that order).
    const std::vector<int>& distinguished() const { return distinguished_; }

    std::vector<Symbol> syndrome(const FqVector& x) const;
    bool is_codeword(const FqVector& x) const;

    struct Decoded {
        FqVector codeword;
        bool corrected = false;
        int coord1 = 0;       // error position when corrected
        Symbol magnitude = 0; // error value when corrected
    };
    // Total: every word of F_q^n is within distance 1 of exactly one
    // codeword. Convention: syndrome alpha * h_i is repaired by
    // subtracting alpha at coordinate i.
    Decoded decode(const FqVector& x) const;

    FqVector codeword_from_message(std::span<const Symbol> message) const;
    ExplicitCode enumerate(std::uint64_t word_cap = kDefaultEnumerationCap) const;

private:
    friend HammingPtr build_hamming(FieldPtr field, int m);
    HammingCode(FieldPtr field, int m);

    FieldPtr field_;
    int m_, n_;
    ProjectiveOrder order_;
    FqMatrix parity_;
    FqMatrix generator_;
    std::vector<int> distinguished_;
};

HammingPtr build_hamming(int q, int m);
HammingPtr build_hamming(FieldPtr field, int m);

// The q+1 points of the line through two distinct points, ascending.
std::vector<int> line_points(const ProjectiveOrder& o, int x1, int y1);

// The q^2+q+1 points of the plane spanned by three non-collinear points.
std::vector<int> plane_points(const ProjectiveOrder& o, int x1, int y1, int z1);

// The (n-1)/q lines through a point; together they cover every other
// point exactly once.
std::vector<std::vector<int>> pencil(const ProjectiveOrder& o, int i1);

// Basis (q-1 rows) of the subcode supported on a line.
FqMatrix line_subcode_basis(const HammingCode& code, std::span<const int> line);

// Points h with w . h = 0 for a nonzero functional w in F_q^m.
std::vector<int> hyperplane_points(const ProjectiveOrder& o, std::span<const Symbol> w);

// m with n = (q^m - 1)/(q - 1), if n has that form (m = 1 gives n = 1).
std::optional<int> hamming_length_parameter(int q, long long n);

}  // namespace pforge
