#pragma once

#include "pforge/linalg.hpp"

#include <initializer_list>
#include <vector>

namespace pforge::test {

inline FqVector vec(const FieldPtr& f, std::initializer_list<int> symbols) {
    std::vector<Symbol> s;
    s.reserve(symbols.size());
    for (int v : symbols) s.push_back(Symbol(v));
    return FqVector(f, s);
}

inline ExplicitCode code_of(const FieldPtr& f, int n,
                            std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<FqVector> words;
    for (const auto& r : rows) words.push_back(vec(f, r));
    return ExplicitCode(f, n, std::move(words));
}

// Brute-force pairwise minimum distance, independent of the library path.
inline int brute_min_distance(const ExplicitCode& c) {
    int best = c.length() + 1;
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b) {
            int d = 0;
            for (int i = 0; i < c.length(); ++i)
                if (c.word(a).get(i) != c.word(b).get(i)) ++d;
            if (d < best) best = d;
        }
    return best;
}

// The length-7 binary Hamming code in (u | u+v | p(u)) coordinates,
// built directly from its definition.
inline ExplicitCode uuv_hamming7(const FieldPtr& f2) {
    std::vector<FqVector> words;
    for (int uc = 0; uc < 8; ++uc) {
        const int u[3] = {(uc >> 2) & 1, (uc >> 1) & 1, uc & 1};
        const int pu = (u[0] + u[1] + u[2]) & 1;
        for (int v : {0, 1}) {
            std::vector<Symbol> w(7);
            for (int i = 0; i < 3; ++i) {
                w[i] = Symbol(u[i]);
                w[3 + i] = Symbol(u[i] ^ v);
            }
            w[6] = Symbol(pu);
            words.emplace_back(f2, w);
        }
    }
    return ExplicitCode(f2, 7, std::move(words));
}

// The two 7-component blocks of that code, in sorted order: the span of
// the triples through coordinate 7, and its translate by 0001110.
inline const std::vector<std::vector<int>>& component7_low() {
    static const std::vector<std::vector<int>> rows = {
        {0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 1, 1}, {0, 1, 0, 0, 1, 0, 1},
        {0, 1, 1, 0, 1, 1, 0}, {1, 0, 0, 1, 0, 0, 1}, {1, 0, 1, 1, 0, 1, 0},
        {1, 1, 0, 1, 1, 0, 0}, {1, 1, 1, 1, 1, 1, 1}};
    return rows;
}

inline const std::vector<std::vector<int>>& component7_high() {
    static const std::vector<std::vector<int>> rows = {
        {0, 0, 0, 1, 1, 1, 0}, {0, 0, 1, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 1},
        {0, 1, 1, 1, 0, 0, 0}, {1, 0, 0, 0, 1, 1, 1}, {1, 0, 1, 0, 1, 0, 0},
        {1, 1, 0, 0, 0, 1, 0}, {1, 1, 1, 0, 0, 0, 1}};
    return rows;
}

inline ExplicitCode rows_to_code(const FieldPtr& f, int n,
                                 const std::vector<std::vector<int>>& rows) {
    std::vector<FqVector> words;
    for (const auto& r : rows) {
        std::vector<Symbol> s(r.begin(), r.end());
        words.emplace_back(f, s);
    }
    return ExplicitCode(f, n, std::move(words));
}

}  // namespace pforge::test
