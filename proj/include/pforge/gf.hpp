#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace pforge {

// Element index in [0, q). Index 0 is the zero element, index 1 the one
// element. The element with coefficient vector (c_0, ..., c_{k-1}) over
// F_p has index sum c_i * p^i, so prime fields read as residues.
using Symbol = std::uint8_t;

inline constexpr int kMaxFieldOrder = 16;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// A small finite field F_q with q = p^k <= 16. All arithmetic is table
// driven; tables are built once at construction and never mutated, so a
// Field can be shared freely across threads.
class Field {
public:
    // Uses the fixed built-in modulus for (p, k). Every prime power
    // q <= 16 has one, which keeps element indices stable across runs.
    static FieldPtr make(int p, int k);
    static FieldPtr make(int p, int k, const std::vector<Symbol>& modulus);
    static FieldPtr of_order(int q);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    bool char_two() const { return p_ == 2; }
    // Monic degree-k modulus, coefficients low degree first (size k+1).
    const std::vector<Symbol>& modulus() const { return modulus_; }

    Symbol add(Symbol a, Symbol b) const { return add_[idx2(a, b)]; }
    Symbol sub(Symbol a, Symbol b) const { return sub_[idx2(a, b)]; }
    Symbol mul(Symbol a, Symbol b) const { return mul_[idx2(a, b)]; }
    Symbol div(Symbol a, Symbol b) const;
    Symbol neg(Symbol a) const { return neg_[a]; }
    Symbol inv(Symbol a) const;

    // exp/log realize multiplication on nonzero elements:
    // mul(a, b) = exp[(log[a] + log[b]) mod (q-1)].
    const std::vector<Symbol>& exp_table() const { return exp_; }
    const std::vector<Symbol>& log_table() const { return log_; }

    // Nibble-parallel helpers for packed words (two symbols per byte).
    std::uint8_t add_packed(std::uint8_t a, std::uint8_t b) const {
        return padd_[(std::size_t(a) << 8) | b];
    }
    std::uint8_t sub_packed(std::uint8_t a, std::uint8_t b) const {
        return psub_[(std::size_t(a) << 8) | b];
    }
    std::uint8_t scale_packed(Symbol s, std::uint8_t a) const { return pscale_[s][a]; }

    bool same(const Field& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

    std::string describe() const;  // e.g. "F_9 = F_3[x]/(x^2 + 1)"

private:
    Field(int p, int k, std::vector<Symbol> modulus);
    std::size_t idx2(Symbol a, Symbol b) const { return std::size_t(a) * q_ + b; }

    int p_, k_, q_;
    std::vector<Symbol> modulus_;
    std::vector<Symbol> add_, sub_, mul_, neg_, inv_;
    std::vector<Symbol> exp_, log_;
    std::vector<std::uint8_t> padd_, psub_;
    std::array<std::array<std::uint8_t, 256>, 16> pscale_{};
};

struct FieldElement {
    const Field* field = nullptr;
    Symbol idx = 0;
};

FieldElement element(const FieldPtr& f, Symbol s);
FieldElement operator+(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a, FieldElement b);
FieldElement operator*(FieldElement a, FieldElement b);
FieldElement operator/(FieldElement a, FieldElement b);
FieldElement neg(FieldElement a);
FieldElement inv(FieldElement a);
bool operator==(FieldElement a, FieldElement b);

// A bijection on the q element indices.
class FieldPermutation {
public:
    FieldPermutation(FieldPtr field, std::vector<Symbol> table);

    static FieldPermutation identity(const FieldPtr& f);
    // Swaps the elements 0 and 1; the unique nontrivial permutation when q = 2.
    static FieldPermutation transposition01(const FieldPtr& f);
    // Fixes 0 and cycles 1 -> 2 -> ... -> q-1 -> 1; moves 1 whenever q >= 3.
    static FieldPermutation shift_cycle(const FieldPtr& f);

    Symbol operator()(Symbol s) const { return table_[s]; }
    const std::vector<Symbol>& table() const { return table_; }
    const FieldPtr& field() const { return field_; }

    FieldPermutation inverse() const;
    // (this ∘ inner)(x) = this(inner(x))
    FieldPermutation compose(const FieldPermutation& inner) const;
    bool fixes_one() const { return table_[1] == 1; }
    bool is_identity() const;

    bool operator==(const FieldPermutation& o) const;

private:
    FieldPtr field_;
    std::vector<Symbol> table_;
};

}  // namespace pforge
