#pragma once

#include "pforge/construct.hpp"

namespace pforge {

inline constexpr std::uint64_t kDefaultCellCap = std::uint64_t(1) << 28;
inline constexpr std::uint64_t kDefaultPairOpCap = std::uint64_t(1) << 34;

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    enum class Kind { exact, sampled };
    Kind kind = Kind::exact;
    int q = 0;
    int n = 0;
    int m = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::string text() const;          // one line per check
    std::string summary_line() const;  // single machine-readable line
};

// Exact 1-perfectness: marks the radius-1 ball of every codeword in a
// 2-bit-per-cell array over F_q^n; passes iff every cell is marked
// exactly once and |C| = q^{n-m}. A pass certifies minimum distance >= 3
// and perfect covering together.
VerificationReport verify_perfect(const ExplicitCode& c, int m,
                                  std::uint64_t cell_cap = kDefaultCellCap);

// Exact brute-force minimum over distinct pairs.
int min_distance(const ExplicitCode& c, std::uint64_t pair_op_cap = kDefaultPairOpCap);

// For each of `trials` pseudorandom vectors, counts codewords in its
// radius-1 ball via membership queries; passes iff every count is exactly
// one. Trial t draws from substream (seed, t).
VerificationReport sampled_perfect_check(const ImplicitSwitchedCode& code,
                                         std::uint64_t trials, std::uint64_t seed,
                                         int threads = 1);

struct RankCertificate {
    int rank = 0;
    std::vector<FqVector> witnesses;          // independent, membership-verified
    std::vector<std::string> membership_notes;
};

RankCertificate rank_certificate(const ExplicitCode& c);
// Samples codewords of the base Hamming code outside the removed cosets
// until n-m independent witnesses accumulate, then appends the m switched
// coset representatives. Every witness is re-verified by membership.
RankCertificate rank_certificate(const ImplicitSwitchedCode& c, std::uint64_t seed,
                                 std::uint64_t draw_budget = 1000000);

struct LinearityResult {
    bool linear = true;
    bool zero_missing = false;
    // Indices of the first violating pair (sum leaves the code), or word
    // index + scalar for a violating multiple.
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    std::optional<std::pair<std::size_t, Symbol>> scalar_case;
    std::string witness;
};

LinearityResult linearity_check(const ExplicitCode& c,
                                std::uint64_t pair_op_cap = kDefaultPairOpCap);

// Lower bound (q!)^(q^e) with e = n1 - m1 - 1 for the inner length
// n1 = (n-1)/q with its own parameter m1; vacuous when e < 0.
struct CountingBound {
    int q = 0;
    long long n = 0;
    int m_outer = 0;
    int m_inner = 0;
    long long inner_length = 0;
    bool vacuous = false;           // exponent e came out negative
    long long factorial_base = 0;   // q!
    long long exponent_power = -1;  // e, bound = (q!)^(q^e)
    std::optional<std::uint64_t> exponent_value;  // q^e when it fits in 64 bits
    std::string decimal;            // expansion when it has <= 10^4 digits
    std::string to_string() const;
};

CountingBound code_count_lower_bound(int q, long long n);

// Checks that translates of a principal component meet the set of words
// supported on a hyperplane (not through the component's coordinate) in
// exactly one vector. trials = 0 runs the exhaustive version.
VerificationReport hyperplane_intersection_check(const HammingPtr& code, int i1,
                                                 std::span<const Symbol> w,
                                                 std::uint64_t trials, std::uint64_t seed);

}  // namespace pforge
