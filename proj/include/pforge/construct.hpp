#pragma once

#include "pforge/components.hpp"

namespace pforge {

// Value assignment lambda on the words of a code, keyed by the word's
// index in canonical (sorted) order. Seeded assignments take the first
// SplitMix64 substream output for (seed, index) reduced mod q, so files
// built from the same seed are identical everywhere.
class LambdaFunction {
public:
    static LambdaFunction zero();
    static LambdaFunction from_table(std::vector<Symbol> table);
    static LambdaFunction seeded(std::uint64_t seed);

    Symbol value(const ExplicitCode& domain, std::size_t word_index) const;
    bool is_zero() const { return kind_ == Kind::zero; }

private:
    enum class Kind { zero, table, seeded };
    Kind kind_ = Kind::zero;
    std::vector<Symbol> table_;
    std::uint64_t seed_ = 0;
};

// {(u | u+v | p(u)+lambda(v)) : u in F_2^n, v in C1} for a binary
// 1-perfect C1; output has length 2n+1 and is 1-perfect. A nonlinear
// lambda makes the output nonlinear.
ExplicitCode vasiliev(const ExplicitCode& c1, const LambdaFunction& lambda,
                      std::uint64_t word_cap = kDefaultEnumerationCap);

// The n+1 cosets of a binary Hamming code partition F_2^n; class k is the
// translate by e_k, class 0 is the code itself. phi maps a word to its
// class via syndrome decoding.
struct CosetPartition {
    HammingPtr base;
    std::vector<ExplicitCode> classes;
    int phi(const FqVector& u) const;
};

CosetPartition coset_partition(int m);

// {(u | v | p(u)) : u in F_2^n, v in class pi(phi1(u)) of the second
// partition}; 1-perfect of length 2n+1.
ExplicitCode doubling(const CosetPartition& p1, const CosetPartition& p2,
                      std::span<const int> pi,
                      std::uint64_t word_cap = kDefaultEnumerationCap);

// q-ary extension: words (u_1 | ... | u_{q-1} | v + sum u_i |
// sum alpha_i p(u_i) + lambda(v)) over all u_i in F_q^n and v in C1, with
// alpha_1..alpha_{q-1} the nonzero elements in index order. Output length
// qn+1, 1-perfect. Coincides with vasiliev when q = 2.
ExplicitCode lindstrom_schonheim(const ExplicitCode& c1, const LambdaFunction& lambda,
                                 std::uint64_t word_cap = kDefaultEnumerationCap);

struct SwitchPart {
    ExplicitCode block;
    int coord1;
    FieldPermutation sigma;
};

// Removes each block (validated to be an i-component of c, blocks
// pairwise disjoint) and reinserts it with sigma applied at its
// coordinate. Output size always equals |c|.
ExplicitCode switch_components(const ExplicitCode& c, std::span<const SwitchPart> parts,
                               std::size_t graph_cap = kDefaultGraphCap);

// Chooses a permutation per codeword of the inner code. Seeded
// assignments derive a Fisher-Yates shuffle from substream (seed, index).
class SigmaAssignment {
public:
    static SigmaAssignment identity();
    static SigmaAssignment seeded(std::uint64_t seed);
    static SigmaAssignment from_tables(std::vector<FieldPermutation> per_word);

    FieldPermutation at(const FieldPtr& field, std::size_t word_index) const;

private:
    enum class Kind { identity, seeded, tables };
    Kind kind_ = Kind::identity;
    std::uint64_t seed_ = 0;
    std::vector<FieldPermutation> tables_;
};

// Union of permuted principal-component cosets of the next Hamming code,
// one per word of a 1-perfect inner code C1 of length n; the inner word
// occupies the first n coordinates (the hyperplane block of the canonical
// column order) and the switch coordinate must lie outside it. Output
// length qn+1, 1-perfect.
ExplicitCode generalized_ls(const ExplicitCode& c1, int coord1,
                            const SigmaAssignment& sigmas,
                            std::uint64_t word_cap = kDefaultEnumerationCap);

// Weight-1 word alpha * e_i for the unique decomposition z = alpha * h_i.
FqVector xi_map(const HammingCode& code, std::span<const Symbol> z);

enum class FullRankVariant { char_two, general };

// The m coset representatives c_1..c_m built from xi-sums over the
// distinguished columns; each is a codeword with symbol 1 at its own
// distinguished coordinate. char_two requires characteristic 2; general
// works over any characteristic.
std::vector<FqVector> full_rank_shifts(const HammingCode& code, FullRankVariant variant);

// Hamming code with an admissible family of switched component cosets:
// members are the switched cosets plus all codewords outside the removed
// cosets. Supports membership and rank work without enumeration.
class ImplicitSwitchedCode {
public:
    struct Component {
        int coord1;
        FieldPermutation sigma;
        FqVector shift;
        FqMatrix basis;
    };

    ImplicitSwitchedCode(HammingPtr base, std::vector<Component> family);

    const HammingCode& base() const { return *base_; }
    const HammingPtr& base_ptr() const { return base_; }
    std::span<const Component> family() const { return family_; }
    int n() const { return base_->n(); }

    bool contains(const FqVector& x) const;
    ExplicitCode enumerate(std::uint64_t word_cap = kDefaultEnumerationCap) const;

private:
    HammingPtr base_;
    std::vector<Component> family_;
    std::vector<RowSpace> spaces_;
    std::vector<std::vector<Symbol>> sigma_inv_;
};

// Full-rank 1-perfect code: switches the m principal components at the
// distinguished coordinates by permutations with sigma(1) != 1, shifted
// by the full_rank_shifts family. Requires m >= 4; the variant follows
// the field characteristic.
ImplicitSwitchedCode full_rank_code(int q, int m, std::span<const FieldPermutation> sigmas);

}  // namespace pforge
