#include "pforge/components.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pforge {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t i) {
        std::size_t r = i;
        while (parent[r] != r) r = parent[r];
        while (parent[i] != r) {
            const std::size_t next = parent[i];
            parent[i] = r;
            i = next;
        }
        return r;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
    std::vector<std::size_t> parent, size;
};

// Group the first `count` vertices by their union-find root; blocks come
// out sorted internally and ordered by smallest member.
std::vector<std::vector<std::size_t>> blocks_of(UnionFind& uf, std::size_t count) {
    std::map<std::size_t, std::vector<std::size_t>> grouped;
    for (std::size_t i = 0; i < count; ++i) grouped[uf.find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> blocks;
    blocks.reserve(grouped.size());
    for (auto& [root, members] : grouped) blocks.push_back(std::move(members));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

}  // namespace

PrincipalComponent principal_component(const HammingPtr& code, int coord1) {
    return principal_component(code, coord1, FqVector(code->field(), code->n()));
}

PrincipalComponent principal_component(const HammingPtr& code, int coord1, FqVector shift) {
    require(coord1 >= 1 && coord1 <= code->n(), "coordinate out of range");
    require(shift.length() == code->n(), "shift length mismatch");
    if (!code->is_codeword(shift))
        throw std::invalid_argument("component shift must be a codeword");

    const auto lines = pencil(code->order(), coord1);
    FqMatrix stacked(code->field(), 0, code->n());
    for (const auto& line : lines) {
        const FqMatrix sub = line_subcode_basis(*code, line);
        stacked = stacked.rows() == 0 ? sub : stacked.vstack(sub);
    }
    auto rr = rank_rref(stacked);

    const int q = code->field()->q();
    int expected = 1;
    for (int i = 0; i < code->m() - 1; ++i) expected *= q;
    --expected;  // q^{m-1} - 1
    if (rr.rank != expected)
        throw std::logic_error("principal component has unexpected dimension");

    FqMatrix basis(code->field(), rr.rank, code->n());
    for (int r = 0; r < rr.rank; ++r)
        for (int c = 0; c < code->n(); ++c) basis.set(r, c, rr.rref.at(r, c));
    return {code, coord1, std::move(basis), std::move(shift)};
}

ComponentPartition i_components(const ExplicitCode& c, int coord1, std::size_t size_cap) {
    require(c.size() >= 2, "component partition needs at least two codewords");
    require(coord1 >= 1 && coord1 <= c.length(), "coordinate out of range");
    if (c.size() > size_cap)
        throw CapExceeded("code too large for the all-pairs component graph");

    const std::size_t n = c.size();
    std::vector<FqVector> punctured;
    punctured.reserve(n);
    for (const auto& w : c.words()) punctured.push_back(w.punctured(coord1));

    UnionFind uf(n);
    int dmin = std::numeric_limits<int>::max();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const int d = FqVector::distance(punctured[a], punctured[b]);
            if (d == 0) {
                uf.unite(a, b);  // words differing only at the punctured coordinate
            } else if (d < dmin) {
                dmin = d;
                edges.assign(1, {a, b});
            } else if (d == dmin) {
                edges.emplace_back(a, b);
            }
        }
    }
    for (const auto& [a, b] : edges) uf.unite(a, b);
    return {coord1, blocks_of(uf, n)};
}

ComponentPartition i_sigma_components(const ExplicitCode& c, int coord1,
                                      const FieldPermutation& sigma,
                                      std::size_t size_cap) {
    require(c.size() >= 2, "component partition needs at least two codewords");
    require(coord1 >= 1 && coord1 <= c.length(), "coordinate out of range");
    require(sigma.field()->same(*c.field()), "permutation field mismatch");
    if (c.size() > size_cap)
        throw CapExceeded("code too large for the all-pairs component graph");

    const std::size_t n = c.size();
    std::vector<FqVector> image;
    image.reserve(n);
    for (const auto& w : c.words()) image.push_back(w.with_permuted_coord(coord1, sigma));

    UnionFind uf(2 * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (FqVector::distance(c.word(a), image[b]) == 2) uf.unite(a, n + b);
    return {coord1, blocks_of(uf, n)};
}

bool coset_disjoint(const PrincipalComponent& a, const PrincipalComponent& b) {
    require(a.code->field()->same(*b.code->field()) && a.code->m() == b.code->m(),
            "components belong to different Hamming codes");
    const FqVector delta = a.shift - b.shift;
    if (a.coord1 == b.coord1) return !RowSpace(a.basis).contains(delta);
    return !RowSpace(a.basis.vstack(b.basis)).contains(delta);
}

AdmissibilityResult admissible_check(std::span<const PrincipalComponent> family) {
    require(!family.empty(), "admissibility check needs a nonempty family");
    for (std::size_t r = 0; r < family.size(); ++r)
        for (std::size_t s = r + 1; s < family.size(); ++s)
            if (!coset_disjoint(family[r], family[s]))
                return {false, r, s, family[r].coord1, family[s].coord1};
    return {};
}

std::string AdmissibilityResult::to_string() const {
    if (ok) return "admissible";
    std::ostringstream os;
    os << "components " << first_index + 1 << " and " << second_index + 1
       << " intersect (coordinates " << first_coord1 << ", " << second_coord1 << ")";
    return os.str();
}

bool line_neighbor_property(const PrincipalComponent& comp, const FqVector& u) {
    if (!RowSpace(comp.basis).contains(u))
        throw std::invalid_argument("vector is outside the component span");
    const auto& order = comp.code->order();
    const int i1 = comp.coord1;
    for (int x1 : u.support1()) {
        if (x1 == i1) continue;
        bool found = false;
        for (int y1 : line_points(order, i1, x1)) {
            if (y1 == i1 || y1 == x1) continue;
            if (u.at1(y1) != 0) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

bool plane_neighbor_property(const PrincipalComponent& a, const PrincipalComponent& b,
                             const FqVector& u) {
    require(a.coord1 != b.coord1, "plane property needs distinct coordinates");
    if (!RowSpace(a.basis.vstack(b.basis)).contains(u))
        throw std::invalid_argument("vector is outside the component-sum span");
    const auto& order = a.code->order();
    const int i1 = a.coord1, j1 = b.coord1;
    const auto line_ij = line_points(order, i1, j1);
    for (int x1 : u.support1()) {
        if (std::binary_search(line_ij.begin(), line_ij.end(), x1)) continue;
        bool found = false;
        for (int y1 : plane_points(order, i1, j1, x1)) {
            if (y1 == i1 || y1 == j1 || y1 == x1) continue;
            if (u.at1(y1) != 0) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

FqVector random_combination(const FqMatrix& basis, SplitMix64& rng) {
    const int q = basis.field()->q();
    FqVector acc(basis.field(), basis.cols());
    for (int r = 0; r < basis.rows(); ++r) {
        const Symbol c = Symbol(rng.below(std::uint64_t(q)));
        if (c != 0) acc.axpy(c, basis.row_vector(r));
    }
    return acc;
}

}  // namespace pforge
