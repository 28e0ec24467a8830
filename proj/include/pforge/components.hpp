#pragma once

#include "pforge/hamming.hpp"
#include "pforge/rng.hpp"

namespace pforge {

inline constexpr std::size_t kDefaultGraphCap = std::size_t(1) << 17;

// Coset basis + shift of the subspace spanned by the Hamming code's
// weight-3 codewords with a 1 at one coordinate. The basis is kept in
// reduced form; its rank is q^{m-1} - 1.
struct PrincipalComponent {
    HammingPtr code;
    int coord1 = 0;
    FqMatrix basis;
    FqVector shift;
};

PrincipalComponent principal_component(const HammingPtr& code, int coord1);
PrincipalComponent principal_component(const HammingPtr& code, int coord1, FqVector shift);

// Blocks of word indices (into the source code's sorted order) forming a
// partition. Blocks are sorted internally and ordered by smallest member.
struct ComponentPartition {
    int coord1 = 0;
    std::vector<std::vector<std::size_t>> blocks;
};

// Connected components of the minimum-distance graph of the code
// punctured at one coordinate. Words that collide after puncturing are
// merged unconditionally; other edges join pairs at exactly the minimum
// positive punctured distance.
ComponentPartition i_components(const ExplicitCode& c, int coord1,
                                std::size_t size_cap = kDefaultGraphCap);

// Refinement by a symbol permutation: blocks are the C-sides of the
// connected components of the bipartite graph between C and the code with
// sigma applied at the coordinate, with edges at distance exactly 2.
ComponentPartition i_sigma_components(const ExplicitCode& c, int coord1,
                                      const FieldPermutation& sigma,
                                      std::size_t size_cap = kDefaultGraphCap);

// Exact coset-intersection test: for components at distinct coordinates
// r, s the cosets are disjoint iff shift_r - shift_s is outside the sum
// of the two spans; at equal coordinates, outside the single span.
bool coset_disjoint(const PrincipalComponent& a, const PrincipalComponent& b);

struct AdmissibilityResult {
    bool ok = true;
    std::size_t first_index = 0, second_index = 0;  // positions in the family
    int first_coord1 = 0, second_coord1 = 0;
    std::string to_string() const;
};

// All-pairs disjointness in deterministic order; reports the first
// violating pair.
AdmissibilityResult admissible_check(std::span<const PrincipalComponent> family);

// For u in the span of the component's basis: every nonzero coordinate
// x != i sees a third nonzero coordinate on the line through i and x.
// Valid inputs always satisfy this; exposed as a property-test oracle.
bool line_neighbor_property(const PrincipalComponent& comp, const FqVector& u);

// For u in the span of two components' bases at distinct coordinates i,
// j: every nonzero coordinate x off the line through i and j sees another
// nonzero coordinate in the plane spanned by i, j, x.
bool plane_neighbor_property(const PrincipalComponent& a, const PrincipalComponent& b,
                             const FqVector& u);

// Uniform element of the row space (random coefficient per basis row).
FqVector random_combination(const FqMatrix& basis, SplitMix64& rng);

}  // namespace pforge
