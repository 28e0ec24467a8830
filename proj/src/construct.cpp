#include "pforge/construct.hpp"

#include "pforge/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pforge {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Precondition guard shared by the extension constructions.
void require_one_perfect(const ExplicitCode& c, const std::string& who) {
    const int q = c.field()->q();
    const auto m = hamming_length_parameter(q, c.length());
    require(m.has_value(), who + ": input length is not of 1-perfect form");
    const auto report = verify_perfect(c, *m);
    if (!report.passed())
        throw std::invalid_argument(who + ": input code is not 1-perfect");
}

FqVector word_from_counter(const FieldPtr& f, int n, std::uint64_t counter) {
    const std::uint64_t q = std::uint64_t(f->q());
    FqVector w(f, n);
    for (int i = n - 1; i >= 0; --i) {
        w.set(i, Symbol(counter % q));
        counter /= q;
    }
    return w;
}

}  // namespace

LambdaFunction LambdaFunction::zero() { return LambdaFunction{}; }

LambdaFunction LambdaFunction::from_table(std::vector<Symbol> table) {
    LambdaFunction l;
    l.kind_ = Kind::table;
    l.table_ = std::move(table);
    return l;
}

LambdaFunction LambdaFunction::seeded(std::uint64_t seed) {
    LambdaFunction l;
    l.kind_ = Kind::seeded;
    l.seed_ = seed;
    return l;
}

Symbol LambdaFunction::value(const ExplicitCode& domain, std::size_t word_index) const {
    switch (kind_) {
        case Kind::zero:
            return 0;
        case Kind::table:
            require(table_.size() == domain.size(), "lambda table does not cover the code");
            require(table_[word_index] < domain.field()->q(), "lambda value out of range");
            return table_[word_index];
        case Kind::seeded: {
            auto rng = substream(seed_, word_index);
            return Symbol(rng.next() % std::uint64_t(domain.field()->q()));
        }
    }
    return 0;
}

ExplicitCode vasiliev(const ExplicitCode& c1, const LambdaFunction& lambda,
                      std::uint64_t word_cap) {
    require(c1.field()->q() == 2, "vasiliev requires a binary input code");
    require_one_perfect(c1, "vasiliev");

    const auto& f = c1.field();
    const int n = c1.length();
    const auto u_count = checked_pow_u64(2, n);
    if (!u_count || *u_count > word_cap / c1.size())
        throw CapExceeded("vasiliev output exceeds the word cap");

    std::vector<FqVector> words;
    words.reserve(std::size_t(*u_count * c1.size()));
    for (std::uint64_t uc = 0; uc < *u_count; ++uc) {
        const FqVector u = word_from_counter(f, n, uc);
        const Symbol pu = u.coordinate_sum();
        for (std::size_t iv = 0; iv < c1.size(); ++iv) {
            const FqVector& v = c1.word(iv);
            FqVector w(f, 2 * n + 1);
            for (int i = 0; i < n; ++i) {
                w.set(i, u.get(i));
                w.set(n + i, f->add(u.get(i), v.get(i)));
            }
            w.set(2 * n, f->add(pu, lambda.value(c1, iv)));
            words.push_back(std::move(w));
        }
    }
    return ExplicitCode(f, 2 * n + 1, std::move(words));
}

int CosetPartition::phi(const FqVector& u) const {
    const auto decoded = base->decode(u);
    return decoded.corrected ? decoded.coord1 : 0;
}

CosetPartition coset_partition(int m) {
    auto base = build_hamming(2, m);
    const auto code = base->enumerate();
    std::vector<ExplicitCode> classes;
    classes.reserve(base->n() + 1);
    classes.push_back(code);
    for (int k = 1; k <= base->n(); ++k) {
        std::vector<FqVector> words;
        words.reserve(code.size());
        const FqVector ek = FqVector::unit(base->field(), base->n(), k, 1);
        for (const auto& w : code.words()) words.push_back(w + ek);
        classes.emplace_back(base->field(), base->n(), std::move(words));
    }
    return {std::move(base), std::move(classes)};
}

ExplicitCode doubling(const CosetPartition& p1, const CosetPartition& p2,
                      std::span<const int> pi, std::uint64_t word_cap) {
    const int n = p1.base->n();
    require(p2.base->n() == n, "partition lengths differ");
    require(int(pi.size()) == n + 1, "pi must permute {0, ..., n}");
    std::vector<bool> seen(n + 1, false);
    for (int v : pi) {
        require(v >= 0 && v <= n && !seen[v], "pi is not a bijection");
        seen[v] = true;
    }

    const auto& f = p1.base->field();
    const auto u_count = checked_pow_u64(2, n);
    const std::uint64_t class_size = p2.classes[0].size();
    if (!u_count || *u_count > word_cap / class_size)
        throw CapExceeded("doubling output exceeds the word cap");

    std::vector<FqVector> words;
    words.reserve(std::size_t(*u_count * class_size));
    for (std::uint64_t uc = 0; uc < *u_count; ++uc) {
        const FqVector u = word_from_counter(f, n, uc);
        const Symbol pu = u.coordinate_sum();
        const auto& cls = p2.classes[std::size_t(pi[std::size_t(p1.phi(u))])];
        for (const auto& v : cls.words()) {
            FqVector w(f, 2 * n + 1);
            for (int i = 0; i < n; ++i) {
                w.set(i, u.get(i));
                w.set(n + i, v.get(i));
            }
            w.set(2 * n, pu);
            words.push_back(std::move(w));
        }
    }
    return ExplicitCode(f, 2 * n + 1, std::move(words));
}

ExplicitCode lindstrom_schonheim(const ExplicitCode& c1, const LambdaFunction& lambda,
                                 std::uint64_t word_cap) {
    require_one_perfect(c1, "extension construction");

    const auto& f = c1.field();
    const int q = f->q();
    const int n = c1.length();
    const int out_len = q * n + 1;

    const auto u_total = checked_pow_u64(std::uint64_t(q), (q - 1) * n);
    if (!u_total || *u_total > word_cap / c1.size())
        throw CapExceeded("extension output exceeds the word cap");
    const std::uint64_t block_count = checked_pow_u64(std::uint64_t(q), n).value();

    std::vector<FqVector> words;
    words.reserve(std::size_t(*u_total * c1.size()));
    std::vector<FqVector> blocks(q - 1, FqVector(f, n));
    for (std::uint64_t counter = 0; counter < *u_total; ++counter) {
        std::uint64_t t = counter;
        for (int b = 0; b < q - 1; ++b) {
            blocks[b] = word_from_counter(f, n, t % block_count);
            t /= block_count;
        }
        FqVector block_sum(f, n);
        Symbol weighted = 0;  // sum alpha_b * p(u_b), alpha_b = b+1 in index order
        for (int b = 0; b < q - 1; ++b) {
            block_sum += blocks[b];
            weighted = f->add(weighted, f->mul(Symbol(b + 1), blocks[b].coordinate_sum()));
        }
        for (std::size_t iv = 0; iv < c1.size(); ++iv) {
            FqVector w(f, out_len);
            for (int b = 0; b < q - 1; ++b)
                for (int i = 0; i < n; ++i) w.set(b * n + i, blocks[b].get(i));
            const FqVector tail = c1.word(iv) + block_sum;
            for (int i = 0; i < n; ++i) w.set((q - 1) * n + i, tail.get(i));
            w.set(q * n, f->add(weighted, lambda.value(c1, iv)));
            words.push_back(std::move(w));
        }
    }
    return ExplicitCode(f, out_len, std::move(words));
}

ExplicitCode switch_components(const ExplicitCode& c, std::span<const SwitchPart> parts,
                               std::size_t graph_cap) {
    require(!parts.empty(), "switching needs at least one component");
    std::map<int, ComponentPartition> partitions;
    std::vector<bool> removed(c.size(), false);

    for (const auto& part : parts) {
        require(part.block.length() == c.length() && part.block.field()->same(*c.field()),
                "block does not match the code");
        require(part.sigma.field()->same(*c.field()), "sigma field mismatch");
        auto it = partitions.find(part.coord1);
        if (it == partitions.end())
            it = partitions.emplace(part.coord1, i_components(c, part.coord1, graph_cap)).first;

        // The block must be exactly one block of the partition at its
        // coordinate.
        std::vector<std::size_t> indices;
        indices.reserve(part.block.size());
        for (const auto& w : part.block.words()) {
            const auto idx = c.index_of(w);
            require(idx.has_value(), "block word is not a codeword");
            indices.push_back(*idx);
        }
        const auto& blocks = it->second.blocks;
        const bool is_component =
            std::any_of(blocks.begin(), blocks.end(),
                        [&](const auto& blk) { return blk == indices; });
        require(is_component, "block is not an i-component of the code");

        for (std::size_t idx : indices) {
            require(!removed[idx], "switched blocks overlap");
            removed[idx] = true;
        }
    }

    std::vector<FqVector> words;
    words.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!removed[i]) words.push_back(c.word(i));
    for (const auto& part : parts)
        for (const auto& w : part.block.words())
            words.push_back(w.with_permuted_coord(part.coord1, part.sigma));

    ExplicitCode out(c.field(), c.length(), std::move(words));
    if (out.size() != c.size())
        throw std::runtime_error("switched code lost words: blocks were not disjoint "
                                 "from the kept part");
    return out;
}

SigmaAssignment SigmaAssignment::identity() { return SigmaAssignment{}; }

SigmaAssignment SigmaAssignment::seeded(std::uint64_t seed) {
    SigmaAssignment s;
    s.kind_ = Kind::seeded;
    s.seed_ = seed;
    return s;
}

SigmaAssignment SigmaAssignment::from_tables(std::vector<FieldPermutation> per_word) {
    SigmaAssignment s;
    s.kind_ = Kind::tables;
    s.tables_ = std::move(per_word);
    return s;
}

FieldPermutation SigmaAssignment::at(const FieldPtr& field, std::size_t word_index) const {
    switch (kind_) {
        case Kind::identity:
            return FieldPermutation::identity(field);
        case Kind::tables:
            require(word_index < tables_.size(), "sigma table does not cover the code");
            return tables_[word_index];
        case Kind::seeded: {
            auto rng = substream(seed_, word_index);
            std::vector<Symbol> table(field->q());
            for (int i = 0; i < field->q(); ++i) table[i] = Symbol(i);
            for (int i = field->q() - 1; i >= 1; --i) {
                const auto j = rng.below(std::uint64_t(i) + 1);
                std::swap(table[i], table[j]);
            }
            return FieldPermutation(field, std::move(table));
        }
    }
    return FieldPermutation::identity(field);
}

ExplicitCode generalized_ls(const ExplicitCode& c1, int coord1,
                            const SigmaAssignment& sigmas, std::uint64_t word_cap) {
    require_one_perfect(c1, "component extension");
    const auto& f = c1.field();
    const int q = f->q();
    const int n = c1.length();
    const int m = hamming_length_parameter(q, n).value();

    const auto base = build_hamming(f, m + 1);
    const int out_len = base->n();  // q*n + 1

    // In the canonical column order the first n points form the
    // hyperplane carrying the inner code, so the switch coordinate must
    // lie beyond it.
    require(coord1 > n && coord1 <= out_len,
            "switch coordinate must lie outside the inner-code block (n+1 .. qn+1)");

    const auto comp = principal_component(base, coord1);
    const auto coset_size = checked_pow_u64(std::uint64_t(q), comp.basis.rows());
    if (!coset_size || *coset_size > word_cap / c1.size())
        throw CapExceeded("component extension output exceeds the word cap");

    std::vector<FqVector> words;
    words.reserve(std::size_t(*coset_size * c1.size()));
    for (std::size_t ic = 0; ic < c1.size(); ++ic) {
        FqVector shift(f, out_len);
        for (int i = 0; i < n; ++i) shift.set(i, c1.word(ic).get(i));
        const FieldPermutation sigma = sigmas.at(f, ic);
        for_each_in_span(comp.basis, shift, [&](const FqVector& w) {
            words.push_back(w.with_permuted_coord(coord1, sigma));
        });
    }
    ExplicitCode out(f, out_len, std::move(words));
    if (out.size() != std::size_t(*coset_size * c1.size()))
        throw std::runtime_error("component cosets were not pairwise disjoint");
    return out;
}

FqVector xi_map(const HammingCode& code, std::span<const Symbol> z) {
    const auto [coord1, alpha] = code.order().decompose(z);
    return FqVector::unit(code.field(), code.n(), coord1, alpha);
}

namespace {

// Accumulates +/- xi(z) terms into a length-n word.
class XiSum {
public:
    explicit XiSum(const HammingCode& code)
        : code_(code), acc_(code.field(), code.n()) {}

    // z given as coefficients over the distinguished columns e_1..e_m.
    XiSum& add(std::span<const Symbol> z, bool negate = false) {
        FqVector term = xi_map(code_, z);
        if (negate) term.scale(code_.field()->neg(1));
        acc_ += term;
        return *this;
    }
    FqVector take() { return std::move(acc_); }

private:
    const HammingCode& code_;
    FqVector acc_;
};

std::vector<Symbol> combo(int m, std::initializer_list<std::pair<int, int>> terms) {
    // coefficient list over e_1..e_m; terms are (1-based index, signed coeff)
    std::vector<Symbol> z(m, 0);
    for (auto [j, c] : terms) z[j - 1] = Symbol(c);
    return z;
}

std::vector<Symbol> range_sum(int m, int from, int to) {
    std::vector<Symbol> z(m, 0);
    for (int j = from; j <= to; ++j) z[j - 1] = 1;
    return z;
}

}  // namespace

std::vector<FqVector> full_rank_shifts(const HammingCode& code, FullRankVariant variant) {
    const int m = code.m();
    require(m >= 4, "full-rank family needs m >= 4");
    const auto& f = code.field();
    if (variant == FullRankVariant::char_two)
        require(f->char_two(), "char_two variant needs a characteristic-2 field");
    const Symbol minus1 = f->neg(1);

    std::vector<FqVector> shifts;
    shifts.reserve(m);
    const bool c2 = variant == FullRankVariant::char_two;
    for (int j = 1; j <= m; ++j) {
        XiSum sum(code);
        if (j == 1) {
            sum.add(combo(m, {{1, 1}}));
            sum.add(combo(m, {{1, 1}, {2, 1}, {3, 1}}));
            if (c2) {
                sum.add(combo(m, {{1, 1}, {2, 1}, {4, 1}}));
                sum.add(combo(m, {{1, 1}, {3, 1}, {4, 1}}));
            } else {
                sum.add(combo(m, {{1, 1}, {2, 1}, {4, minus1}}), true);
                sum.add(combo(m, {{1, 1}, {3, 1}, {4, 1}}), true);
            }
        } else if (j == 2) {
            sum.add(combo(m, {{1, 1}}));
            sum.add(combo(m, {{2, 1}}));
            if (c2) {
                sum.add(combo(m, {{1, 1}, {3, 1}, {4, 1}}));
                sum.add(combo(m, {{2, 1}, {3, 1}, {4, 1}}));
            } else {
                sum.add(combo(m, {{1, 1}, {3, minus1}, {4, minus1}}), true);
                sum.add(combo(m, {{2, 1}, {3, 1}, {4, 1}}), true);
            }
        } else if (j == 4) {
            if (c2) {
                sum.add(combo(m, {{1, 1}}));
                sum.add(combo(m, {{2, 1}}));
                sum.add(combo(m, {{3, 1}}));
                sum.add(combo(m, {{4, 1}}));
                sum.add(combo(m, {{1, 1}, {2, 1}, {3, 1}}));
                sum.add(combo(m, {{1, 1}, {2, 1}, {4, 1}}));
                sum.add(combo(m, {{1, 1}, {3, 1}, {4, 1}}));
                sum.add(combo(m, {{2, 1}, {3, 1}, {4, 1}}));
            } else {
                sum.add(combo(m, {{1, 1}}));
                sum.add(combo(m, {{2, 1}}), true);
                sum.add(combo(m, {{3, 1}}), true);
                sum.add(combo(m, {{4, 1}}));
                sum.add(combo(m, {{1, 1}, {2, 1}, {3, 1}}));
                sum.add(combo(m, {{1, 1}, {2, 1}, {4, 1}}), true);
                sum.add(combo(m, {{1, 1}, {3, 1}, {4, 1}}), true);
                sum.add(combo(m, {{2, 1}, {3, 1}, {4, 1}}));
            }
        } else if (j % 2 == 1) {
            for (int i = 1; i <= j; ++i) sum.add(combo(m, {{i, 1}}));
            sum.add(range_sum(m, 1, j), !c2);
        } else {
            for (int i = 1; i <= j; ++i) sum.add(combo(m, {{i, 1}}));
            sum.add(range_sum(m, 1, j / 2), !c2);
            sum.add(range_sum(m, j / 2 + 1, j), !c2);
        }
        FqVector cj = sum.take();
        if (!code.is_codeword(cj))
            throw std::logic_error("full-rank shift is not a codeword");
        if (cj.at1(code.distinguished()[j - 1]) != 1)
            throw std::logic_error("full-rank shift misses its distinguished coordinate");
        shifts.push_back(std::move(cj));
    }
    return shifts;
}

ImplicitSwitchedCode::ImplicitSwitchedCode(HammingPtr base, std::vector<Component> family)
    : base_(std::move(base)), family_(std::move(family)) {
    std::vector<PrincipalComponent> as_components;
    spaces_.reserve(family_.size());
    sigma_inv_.reserve(family_.size());
    for (const auto& comp : family_) {
        require(comp.coord1 >= 1 && comp.coord1 <= base_->n(), "coordinate out of range");
        require(comp.sigma.field()->same(*base_->field()), "sigma field mismatch");
        require(comp.shift.length() == base_->n(), "shift length mismatch");
        require(comp.basis.cols() == base_->n(), "basis width mismatch");
        if (!base_->is_codeword(comp.shift))
            throw std::invalid_argument("component shift must be a codeword");
        for (int r = 0; r < comp.basis.rows(); ++r)
            if (!base_->is_codeword(comp.basis.row_vector(r)))
                throw std::invalid_argument("component basis row is not a codeword");
        spaces_.emplace_back(comp.basis);
        sigma_inv_.push_back(comp.sigma.inverse().table());
        as_components.push_back({base_, comp.coord1, comp.basis, comp.shift});
    }
    if (!family_.empty()) {
        const auto adm = admissible_check(as_components);
        if (!adm.ok)
            throw std::invalid_argument("component family is not admissible: " +
                                        adm.to_string());
    }
}

bool ImplicitSwitchedCode::contains(const FqVector& x) const {
    require(x.length() == base_->n(), "membership query length mismatch");
    const Field& f = *base_->field();
    const auto& H = base_->parity_check();
    const auto syn = base_->syndrome(x);

    // Switched cosets first: undoing sigma at the coordinate shifts the
    // syndrome by (sigma^{-1}(x_i) - x_i) * h_i.
    for (std::size_t s = 0; s < family_.size(); ++s) {
        const auto& comp = family_[s];
        const int col = comp.coord1 - 1;
        const Symbol xi = x.get(col);
        const Symbol undone = sigma_inv_[s][xi];
        const Symbol delta = f.sub(undone, xi);
        bool zero = true;
        for (int r = 0; r < base_->m() && zero; ++r)
            if (f.add(syn[r], f.mul(delta, H.at(r, col))) != 0) zero = false;
        if (!zero) continue;
        FqVector undone_word = x;
        undone_word.set(col, undone);
        if (spaces_[s].contains(undone_word - comp.shift)) return true;
    }

    if (std::any_of(syn.begin(), syn.end(), [](Symbol v) { return v != 0; })) return false;
    for (std::size_t s = 0; s < family_.size(); ++s)
        if (spaces_[s].contains(x - family_[s].shift)) return false;
    return true;
}

ExplicitCode ImplicitSwitchedCode::enumerate(std::uint64_t word_cap) const {
    const auto count = checked_pow_u64(std::uint64_t(base_->field()->q()), base_->dim());
    if (!count || *count > word_cap)
        throw CapExceeded("implicit code enumeration exceeds the word cap");

    std::vector<FqVector> words;
    words.reserve(*count);
    for_each_in_span(base_->generator(), FqVector(base_->field(), base_->n()),
                     [&](const FqVector& w) {
                         for (std::size_t s = 0; s < family_.size(); ++s)
                             if (spaces_[s].contains(w - family_[s].shift)) return;
                         words.push_back(w);
                     });
    for (std::size_t s = 0; s < family_.size(); ++s) {
        const auto& comp = family_[s];
        for_each_in_span(comp.basis, comp.shift, [&](const FqVector& w) {
            words.push_back(w.with_permuted_coord(comp.coord1, comp.sigma));
        });
    }
    ExplicitCode out(base_->field(), base_->n(), std::move(words));
    if (out.size() != *count)
        throw std::runtime_error("implicit enumeration produced the wrong code size");
    return out;
}

ImplicitSwitchedCode full_rank_code(int q, int m, std::span<const FieldPermutation> sigmas) {
    require(m >= 4, "full-rank construction needs m >= 4");
    auto base = build_hamming(q, m);
    require(sigmas.size() == std::size_t(m), "need one permutation per distinguished coordinate");
    for (const auto& sigma : sigmas) {
        require(sigma.field()->same(*base->field()), "sigma field mismatch");
        require(!sigma.fixes_one(), "each permutation must move the element 1");
    }
    const auto variant =
        base->field()->char_two() ? FullRankVariant::char_two : FullRankVariant::general;
    const auto shifts = full_rank_shifts(*base, variant);

    std::vector<ImplicitSwitchedCode::Component> family;
    family.reserve(m);
    for (int j = 0; j < m; ++j) {
        const int coord1 = base->distinguished()[j];
        auto comp = principal_component(base, coord1);
        family.push_back({coord1, sigmas[j], shifts[j], std::move(comp.basis)});
    }
    return ImplicitSwitchedCode(std::move(base), std::move(family));
}

}  // namespace pforge
