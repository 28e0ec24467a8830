#include "pforge/gf.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pforge {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

using Poly = std::vector<int>;  // coefficients mod p, low degree first

int poly_degree(const Poly& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

// Remainder of a modulo the monic polynomial b.
Poly poly_mod(Poly a, const Poly& b, int p) {
    const int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        const int c = a[da];
        for (int i = 0; i <= db; ++i) {
            const int t = (a[da - db + i] - c * b[i]) % p;
            a[da - db + i] = (t + p) % p;
        }
    }
    a.resize(db > 0 ? db : 1, 0);
    return a;
}

bool poly_is_zero(const Poly& a) { return poly_degree(a) < 0; }

// Trial division against all monic polynomials of degree <= k/2.
bool is_irreducible(const Poly& modulus, int p, int k) {
    for (int d = 1; d <= k / 2; ++d) {
        int combos = 1;
        for (int i = 0; i < d; ++i) combos *= p;
        for (int c = 0; c < combos; ++c) {
            Poly divisor(d + 1, 0);
            int t = c;
            for (int i = 0; i < d; ++i) { divisor[i] = t % p; t /= p; }
            divisor[d] = 1;
            if (poly_is_zero(poly_mod(Poly(modulus.begin(), modulus.end()), divisor, p)))
                return false;
        }
    }
    return true;
}

Poly idx_to_poly(int idx, int p, int k) {
    Poly c(k, 0);
    for (int i = 0; i < k; ++i) { c[i] = idx % p; idx /= p; }
    return c;
}

int poly_to_idx(const Poly& c, int p, int k) {
    int idx = 0;
    for (int i = k - 1; i >= 0; --i) idx = idx * p + c[i];
    return idx;
}

std::vector<Symbol> builtin_modulus(int p, int k) {
    if (k == 1) return {0, 1};  // x
    static const std::map<std::pair<int, int>, std::vector<Symbol>> table = {
        {{2, 2}, {1, 1, 1}},        // x^2 + x + 1
        {{2, 3}, {1, 1, 0, 1}},     // x^3 + x + 1
        {{2, 4}, {1, 1, 0, 0, 1}},  // x^4 + x + 1
        {{3, 2}, {1, 0, 1}},        // x^2 + 1
    };
    auto it = table.find({p, k});
    if (it == table.end())
        throw std::invalid_argument("no built-in modulus for p=" + std::to_string(p) +
                                    " k=" + std::to_string(k));
    return it->second;
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Field::Field(int p, int k, std::vector<Symbol> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    require(is_prime(p_), "field characteristic must be prime, got " + std::to_string(p_));
    require(k_ >= 1, "extension degree must be >= 1");
    int q = 1;
    for (int i = 0; i < k_; ++i) q *= p_;
    require(q >= 2 && q <= kMaxFieldOrder,
            "field order " + std::to_string(q) + " outside supported range [2, 16]");
    q_ = q;

    require(int(modulus_.size()) == k_ + 1, "modulus must have degree k");
    require(modulus_.back() == 1, "modulus must be monic");
    Poly mod_poly(modulus_.begin(), modulus_.end());
    for (int c : mod_poly) require(c >= 0 && c < p_, "modulus coefficient out of range");
    require(is_irreducible(mod_poly, p_, k_), "modulus is reducible over F_p");

    add_.resize(std::size_t(q_) * q_);
    sub_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        const Poly pa = idx_to_poly(a, p_, k_);
        for (int b = 0; b < q_; ++b) {
            const Poly pb = idx_to_poly(b, p_, k_);
            Poly s(k_, 0), d(k_, 0);
            for (int i = 0; i < k_; ++i) {
                s[i] = (pa[i] + pb[i]) % p_;
                d[i] = ((pa[i] - pb[i]) % p_ + p_) % p_;
            }
            add_[idx2(Symbol(a), Symbol(b))] = Symbol(poly_to_idx(s, p_, k_));
            sub_[idx2(Symbol(a), Symbol(b))] = Symbol(poly_to_idx(d, p_, k_));
            Poly m = poly_mod(poly_mul(pa, pb, p_), mod_poly, p_);
            m.resize(k_, 0);
            mul_[idx2(Symbol(a), Symbol(b))] = Symbol(poly_to_idx(m, p_, k_));
        }
        neg_[a] = sub_[idx2(0, Symbol(a))];
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[idx2(Symbol(a), Symbol(b))] == 1) { inv_[a] = Symbol(b); break; }

    // Find the smallest-index generator and lay out exp/log.
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    for (int g = 1; g < q_; ++g) {
        int ord = 1;
        Symbol x = Symbol(g);
        while (x != 1) { x = mul(x, Symbol(g)); ++ord; }
        if (ord == q_ - 1) {
            Symbol e = 1;
            for (int i = 0; i < q_ - 1; ++i) {
                exp_[i] = e;
                log_[e] = Symbol(i);
                e = mul(e, Symbol(g));
            }
            break;
        }
    }

    // Nibble-parallel tables; nibbles outside [0, q) never occur in packed
    // words and map to 0.
    padd_.resize(65536);
    psub_.resize(65536);
    auto nib_ok = [this](int v) { return v < q_; };
    for (int a = 0; a < 256; ++a) {
        const int ah = a >> 4, al = a & 0xF;
        for (int b = 0; b < 256; ++b) {
            const int bh = b >> 4, bl = b & 0xF;
            const int sh = (nib_ok(ah) && nib_ok(bh)) ? add(Symbol(ah), Symbol(bh)) : 0;
            const int sl = (nib_ok(al) && nib_ok(bl)) ? add(Symbol(al), Symbol(bl)) : 0;
            const int dh = (nib_ok(ah) && nib_ok(bh)) ? sub(Symbol(ah), Symbol(bh)) : 0;
            const int dl = (nib_ok(al) && nib_ok(bl)) ? sub(Symbol(al), Symbol(bl)) : 0;
            padd_[(std::size_t(a) << 8) | b] = std::uint8_t((sh << 4) | sl);
            psub_[(std::size_t(a) << 8) | b] = std::uint8_t((dh << 4) | dl);
        }
        for (int s = 0; s < q_; ++s) {
            const int mh = nib_ok(ah) ? mul(Symbol(s), Symbol(ah)) : 0;
            const int ml = nib_ok(al) ? mul(Symbol(s), Symbol(al)) : 0;
            pscale_[s][a] = std::uint8_t((mh << 4) | ml);
        }
    }
}

FieldPtr Field::make(int p, int k) { return make(p, k, builtin_modulus(p, k)); }

FieldPtr Field::make(int p, int k, const std::vector<Symbol>& modulus) {
    return FieldPtr(new Field(p, k, modulus));
}

FieldPtr Field::of_order(int q) {
    require(q >= 2 && q <= kMaxFieldOrder, "field order must be in [2, 16]");
    int p = 2;
    while (q % p != 0) ++p;
    int k = 0, t = q;
    while (t > 1) {
        require(t % p == 0, "field order " + std::to_string(q) + " is not a prime power");
        t /= p;
        ++k;
    }
    return make(p, k);
}

Symbol Field::div(Symbol a, Symbol b) const {
    if (b == 0) throw std::invalid_argument("division by zero field element");
    return mul(a, inv_[b]);
}

Symbol Field::inv(Symbol a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero field element");
    return inv_[a];
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    if (k_ > 1) {
        os << " = F_" << p_ << "[x]/(";
        bool first = true;
        for (int i = k_; i >= 0; --i) {
            if (modulus_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || modulus_[i] != 1) os << int(modulus_[i]);
            if (i >= 1) {
                os << "x";
                if (i > 1) os << "^" << i;
            }
        }
        os << ")";
    }
    return os.str();
}

namespace {
void require_same(FieldElement a, FieldElement b) {
    if (a.field == nullptr || b.field == nullptr || !a.field->same(*b.field))
        throw std::invalid_argument("field elements belong to different fields");
}
}  // namespace

FieldElement element(const FieldPtr& f, Symbol s) {
    if (s >= f->q()) throw std::invalid_argument("element index out of range");
    return {f.get(), s};
}

FieldElement operator+(FieldElement a, FieldElement b) {
    require_same(a, b);
    return {a.field, a.field->add(a.idx, b.idx)};
}

FieldElement operator-(FieldElement a, FieldElement b) {
    require_same(a, b);
    return {a.field, a.field->sub(a.idx, b.idx)};
}

FieldElement operator*(FieldElement a, FieldElement b) {
    require_same(a, b);
    return {a.field, a.field->mul(a.idx, b.idx)};
}

FieldElement operator/(FieldElement a, FieldElement b) {
    require_same(a, b);
    return {a.field, a.field->div(a.idx, b.idx)};
}

FieldElement neg(FieldElement a) { return {a.field, a.field->neg(a.idx)}; }

FieldElement inv(FieldElement a) { return {a.field, a.field->inv(a.idx)}; }

bool operator==(FieldElement a, FieldElement b) {
    require_same(a, b);
    return a.idx == b.idx;
}

FieldPermutation::FieldPermutation(FieldPtr field, std::vector<Symbol> table)
    : field_(std::move(field)), table_(std::move(table)) {
    const int q = field_->q();
    require(int(table_.size()) == q,
            "permutation table must have length q = " + std::to_string(q));
    std::vector<bool> seen(q, false);
    for (Symbol s : table_) {
        require(s < q, "permutation entry out of range");
        require(!seen[s], "permutation table is not a bijection");
        seen[s] = true;
    }
}

FieldPermutation FieldPermutation::identity(const FieldPtr& f) {
    std::vector<Symbol> t(f->q());
    for (int i = 0; i < f->q(); ++i) t[i] = Symbol(i);
    return FieldPermutation(f, std::move(t));
}

FieldPermutation FieldPermutation::transposition01(const FieldPtr& f) {
    auto p = identity(f);
    std::vector<Symbol> t = p.table();
    std::swap(t[0], t[1]);
    return FieldPermutation(f, std::move(t));
}

FieldPermutation FieldPermutation::shift_cycle(const FieldPtr& f) {
    const int q = f->q();
    std::vector<Symbol> t(q);
    t[0] = 0;
    for (int i = 1; i < q; ++i) t[i] = Symbol(i == q - 1 ? 1 : i + 1);
    return FieldPermutation(f, std::move(t));
}

FieldPermutation FieldPermutation::inverse() const {
    std::vector<Symbol> t(table_.size());
    for (std::size_t i = 0; i < table_.size(); ++i) t[table_[i]] = Symbol(i);
    return FieldPermutation(field_, std::move(t));
}

FieldPermutation FieldPermutation::compose(const FieldPermutation& inner) const {
    if (!field_->same(*inner.field_))
        throw std::invalid_argument("composing permutations of different fields");
    std::vector<Symbol> t(table_.size());
    for (std::size_t i = 0; i < table_.size(); ++i) t[i] = table_[inner.table_[i]];
    return FieldPermutation(field_, std::move(t));
}

bool FieldPermutation::is_identity() const {
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (table_[i] != i) return false;
    return true;
}

bool FieldPermutation::operator==(const FieldPermutation& o) const {
    return field_->same(*o.field_) && table_ == o.table_;
}

}  // namespace pforge
