#include "pforge/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pforge {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Count bytes whose two nibbles both match between a and b, SWAR style:
// fold each differing nibble down to its lowest bit and popcount.
int packed_distance(const std::uint8_t* a, const std::uint8_t* b, std::size_t bytes) {
    int dist = 0;
    std::size_t i = 0;
    for (; i + 8 <= bytes; i += 8) {
        std::uint64_t x, y;
        std::memcpy(&x, a + i, 8);
        std::memcpy(&y, b + i, 8);
        const std::uint64_t d = x ^ y;
        const std::uint64_t m = (d | (d >> 1) | (d >> 2) | (d >> 3)) & 0x1111111111111111ULL;
        dist += std::popcount(m);
    }
    if (i < bytes) {
        std::uint64_t x = 0, y = 0;
        std::memcpy(&x, a + i, bytes - i);
        std::memcpy(&y, b + i, bytes - i);
        const std::uint64_t d = x ^ y;
        const std::uint64_t m = (d | (d >> 1) | (d >> 2) | (d >> 3)) & 0x1111111111111111ULL;
        dist += std::popcount(m);
    }
    return dist;
}

}  // namespace

FqVector::FqVector(FieldPtr field, int n)
    : field_(std::move(field)), n_(n), packed_((std::size_t(n) + 1) / 2, 0) {
    require(n >= 0, "vector length must be nonnegative");
}

FqVector::FqVector(FieldPtr field, std::span<const Symbol> symbols)
    : FqVector(std::move(field), int(symbols.size())) {
    const int q = field_->q();
    for (int i = 0; i < n_; ++i) {
        require(symbols[i] < q, "symbol index out of range for field");
        set(i, symbols[i]);
    }
}

FqVector FqVector::unit(const FieldPtr& field, int n, int coord1, Symbol value) {
    require(coord1 >= 1 && coord1 <= n, "unit coordinate out of range");
    FqVector v(field, n);
    v.set1(coord1, value);
    return v;
}

std::vector<Symbol> FqVector::symbols() const {
    std::vector<Symbol> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = get(i);
    return out;
}

bool FqVector::is_zero() const {
    for (std::uint8_t b : packed_)
        if (b != 0) return false;
    return true;
}

int FqVector::weight() const {
    static const std::uint8_t zeros[8] = {0};
    int w = 0;
    std::size_t i = 0;
    for (; i + 8 <= packed_.size(); i += 8) w += packed_distance(packed_.data() + i, zeros, 8);
    if (i < packed_.size()) w += packed_distance(packed_.data() + i, zeros, packed_.size() - i);
    return w;
}

std::vector<int> FqVector::support1() const {
    std::vector<int> s;
    for (int i = 0; i < n_; ++i)
        if (get(i) != 0) s.push_back(i + 1);
    return s;
}

int FqVector::distance(const FqVector& a, const FqVector& b) {
    a.check_compatible(b);
    return packed_distance(a.packed_.data(), b.packed_.data(), a.packed_.size());
}

void FqVector::check_compatible(const FqVector& o) const {
    if (n_ != o.n_) throw std::invalid_argument("vector length mismatch");
    if (!field_->same(*o.field_)) throw std::invalid_argument("vector field mismatch");
}

FqVector& FqVector::operator+=(const FqVector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < packed_.size(); ++i)
        packed_[i] = field_->add_packed(packed_[i], o.packed_[i]);
    return *this;
}

FqVector& FqVector::operator-=(const FqVector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < packed_.size(); ++i)
        packed_[i] = field_->sub_packed(packed_[i], o.packed_[i]);
    return *this;
}

FqVector& FqVector::scale(Symbol a) {
    for (auto& b : packed_) b = field_->scale_packed(a, b);
    return *this;
}

FqVector& FqVector::axpy(Symbol a, const FqVector& x) {
    check_compatible(x);
    if (a == 0) return *this;
    for (std::size_t i = 0; i < packed_.size(); ++i)
        packed_[i] = field_->add_packed(packed_[i], field_->scale_packed(a, x.packed_[i]));
    return *this;
}

Symbol FqVector::coordinate_sum() const {
    Symbol s = 0;
    for (int i = 0; i < n_; ++i) s = field_->add(s, get(i));
    return s;
}

std::uint64_t FqVector::radix_index() const {
    const std::uint64_t q = std::uint64_t(field_->q());
    std::uint64_t v = 0;
    for (int i = 0; i < n_; ++i) v = v * q + get(i);
    return v;
}

FqVector FqVector::punctured(int coord1) const {
    require(coord1 >= 1 && coord1 <= n_, "puncture coordinate out of range");
    FqVector out(field_, n_ - 1);
    int j = 0;
    for (int i = 0; i < n_; ++i) {
        if (i == coord1 - 1) continue;
        out.set(j++, get(i));
    }
    return out;
}

FqVector FqVector::appended(Symbol s) const {
    FqVector out(field_, n_ + 1);
    for (int i = 0; i < n_; ++i) out.set(i, get(i));
    out.set(n_, s);
    return out;
}

FqVector FqVector::with_permuted_coord(int coord1, const FieldPermutation& sigma) const {
    require(coord1 >= 1 && coord1 <= n_, "permuted coordinate out of range");
    FqVector out = *this;
    out.set1(coord1, sigma(at1(coord1)));
    return out;
}

std::strong_ordering FqVector::operator<=>(const FqVector& o) const {
    check_compatible(o);
    const int c = std::memcmp(packed_.data(), o.packed_.data(), packed_.size());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool FqVector::operator==(const FqVector& o) const {
    return n_ == o.n_ && field_->same(*o.field_) && packed_ == o.packed_;
}

std::string FqVector::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        if (i) os << ' ';
        os << int(get(i));
    }
    return os.str();
}

FqMatrix::FqMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(std::size_t(rows) * cols, 0) {
    require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
}

FqMatrix FqMatrix::identity(const FieldPtr& field, int n) {
    FqMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FqMatrix FqMatrix::from_rows(std::span<const FqVector> rows) {
    require(!rows.empty(), "from_rows needs at least one row");
    FqMatrix m(rows[0].field(), int(rows.size()), rows[0].length());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].length() == m.cols_, "row length mismatch");
        for (int c = 0; c < m.cols_; ++c) m.set(int(r), c, rows[r].get(c));
    }
    return m;
}

FqMatrix FqMatrix::from_entries(FieldPtr field, int rows, int cols,
                                std::span<const Symbol> entries) {
    require(entries.size() == std::size_t(rows) * cols, "entry count mismatch");
    FqMatrix m(std::move(field), rows, cols);
    const int q = m.field_->q();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        require(entries[i] < q, "matrix entry out of range for field");
        m.a_[i] = entries[i];
    }
    return m;
}

FqVector FqMatrix::row_vector(int r) const {
    return FqVector(field_, std::span<const Symbol>(a_.data() + std::size_t(r) * cols_,
                                                    std::size_t(cols_)));
}

std::vector<Symbol> FqMatrix::column(int c) const {
    std::vector<Symbol> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

FqMatrix FqMatrix::vstack(const FqMatrix& below) const {
    require(cols_ == below.cols_ && field_->same(*below.field_), "vstack shape mismatch");
    FqMatrix m(field_, rows_ + below.rows_, cols_);
    std::copy(a_.begin(), a_.end(), m.a_.begin());
    std::copy(below.a_.begin(), below.a_.end(), m.a_.begin() + a_.size());
    return m;
}

std::vector<Symbol> FqMatrix::mul_vec(std::span<const Symbol> x) const {
    require(x.size() == std::size_t(cols_), "mul_vec length mismatch");
    std::vector<Symbol> y(rows_, 0);
    for (int r = 0; r < rows_; ++r) {
        Symbol acc = 0;
        const Symbol* row = a_.data() + std::size_t(r) * cols_;
        for (int c = 0; c < cols_; ++c) acc = field_->add(acc, field_->mul(row[c], x[c]));
        y[r] = acc;
    }
    return y;
}

bool FqMatrix::operator==(const FqMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_->same(*o.field_) && a_ == o.a_;
}

RrefResult rank_rref(const FqMatrix& m) {
    const Field& f = *m.field();
    FqMatrix a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < a.cols(); ++j) {
                const Symbol t = a.at(r, j);
                a.set(r, j, a.at(pivot, j));
                a.set(pivot, j, t);
            }
        const Symbol scale = f.inv(a.at(r, c));
        if (scale != 1)
            for (int j = 0; j < a.cols(); ++j) a.set(r, j, f.mul(scale, a.at(r, j)));
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            const Symbol t = a.at(i, c);
            if (t == 0) continue;
            for (int j = 0; j < a.cols(); ++j)
                a.set(i, j, f.sub(a.at(i, j), f.mul(t, a.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

FqMatrix kernel_basis(const FqMatrix& m) {
    const auto rr = rank_rref(m);
    const Field& f = *m.field();
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;

    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    FqMatrix basis(m.field(), int(free_cols.size()), n);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        basis.set(int(k), fc, 1);
        for (int r = 0; r < rr.rank; ++r)
            basis.set(int(k), rr.pivot_cols[r], f.neg(rr.rref.at(r, fc)));
    }
    return basis;
}

RowSpace::RowSpace(const FqMatrix& basis)
    : reduced_(basis.field(), 0, basis.cols()),
      transform_(basis.field(), 0, basis.rows()) {
    // Reduce the augmented block [basis | I] so witnesses come out in
    // terms of the original rows.
    const int n = basis.cols();
    const int k = basis.rows();
    FqMatrix aug(basis.field(), k, n + k);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < n; ++c) aug.set(r, c, basis.at(r, c));
        aug.set(r, n + r, 1);
    }
    // Eliminate using only the first n columns for pivot selection.
    const Field& f = *basis.field();
    int rank = 0;
    std::vector<int> pivots;
    for (int c = 0; c < n && rank < k; ++c) {
        int pivot = -1;
        for (int i = rank; i < k; ++i)
            if (aug.at(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < n + k; ++j) {
                const Symbol t = aug.at(rank, j);
                aug.set(rank, j, aug.at(pivot, j));
                aug.set(pivot, j, t);
            }
        const Symbol scale = f.inv(aug.at(rank, c));
        if (scale != 1)
            for (int j = 0; j < n + k; ++j) aug.set(rank, j, f.mul(scale, aug.at(rank, j)));
        for (int i = 0; i < k; ++i) {
            if (i == rank) continue;
            const Symbol t = aug.at(i, c);
            if (t == 0) continue;
            for (int j = 0; j < n + k; ++j)
                aug.set(i, j, f.sub(aug.at(i, j), f.mul(t, aug.at(rank, j))));
        }
        pivots.push_back(c);
        ++rank;
    }
    rank_ = rank;
    pivots_ = std::move(pivots);
    reduced_ = FqMatrix(basis.field(), rank, n);
    transform_ = FqMatrix(basis.field(), rank, k);
    for (int r = 0; r < rank; ++r) {
        for (int c = 0; c < n; ++c) reduced_.set(r, c, aug.at(r, c));
        for (int c = 0; c < k; ++c) transform_.set(r, c, aug.at(r, n + c));
    }
}

bool RowSpace::contains(const FqVector& v) const {
    if (v.length() != reduced_.cols()) throw std::invalid_argument("dimension mismatch");
    FqVector residual = v;
    const Field& f = *reduced_.field();
    for (int r = 0; r < rank_; ++r) {
        const Symbol c = residual.get(pivots_[r]);
        if (c == 0) continue;
        residual.axpy(f.neg(c), reduced_.row_vector(r));
    }
    return residual.is_zero();
}

std::optional<std::vector<Symbol>> RowSpace::express(const FqVector& v) const {
    if (v.length() != reduced_.cols()) throw std::invalid_argument("dimension mismatch");
    FqVector residual = v;
    const Field& f = *reduced_.field();
    std::vector<Symbol> reduced_coeffs(rank_, 0);
    for (int r = 0; r < rank_; ++r) {
        const Symbol c = residual.get(pivots_[r]);
        if (c == 0) continue;
        reduced_coeffs[r] = c;
        residual.axpy(f.neg(c), reduced_.row_vector(r));
    }
    if (!residual.is_zero()) return std::nullopt;
    std::vector<Symbol> out(transform_.cols(), 0);
    for (int r = 0; r < rank_; ++r) {
        if (reduced_coeffs[r] == 0) continue;
        for (int c = 0; c < transform_.cols(); ++c)
            out[c] = f.add(out[c], f.mul(reduced_coeffs[r], transform_.at(r, c)));
    }
    return out;
}

SpanWitness in_span(const FqMatrix& basis, const FqVector& v) {
    RowSpace space(basis);
    auto coeffs = space.express(v);
    if (!coeffs) return {false, {}};
    return {true, std::move(*coeffs)};
}

RankAccumulator::RankAccumulator(FieldPtr field, int n)
    : field_(std::move(field)), n_(n) {}

bool RankAccumulator::insert(const FqVector& v) {
    if (v.length() != n_) throw std::invalid_argument("dimension mismatch");
    FqVector residual = v;
    const Field& f = *field_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Symbol c = residual.get(pivots_[r]);
        if (c == 0) continue;
        residual.axpy(f.neg(c), rows_[r]);
    }
    if (residual.is_zero()) return false;
    int pivot = 0;
    while (residual.get(pivot) == 0) ++pivot;
    residual.scale(f.inv(residual.get(pivot)));
    // Keep earlier rows reduced against the new pivot.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Symbol c = rows_[r].get(pivot);
        if (c != 0) rows_[r].axpy(f.neg(c), residual);
    }
    // Insert sorted by pivot column.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(residual));
    pivots_.insert(pivots_.begin() + pos, pivot);
    return true;
}

ExplicitCode::ExplicitCode(FieldPtr field, int n, std::vector<FqVector> words)
    : field_(std::move(field)), n_(n), words_(std::move(words)) {
    for (const auto& w : words_) {
        require(w.length() == n_, "codeword length mismatch");
        require(w.field()->same(*field_), "codeword field mismatch");
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool ExplicitCode::contains(const FqVector& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

std::optional<std::size_t> ExplicitCode::index_of(const FqVector& w) const {
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || !(*it == w)) return std::nullopt;
    return std::size_t(it - words_.begin());
}

bool ExplicitCode::operator==(const ExplicitCode& o) const {
    return n_ == o.n_ && field_->same(*o.field_) && words_ == o.words_;
}

VectorStats vector_stats(const FqVector& x, const FqVector* y) {
    VectorStats s;
    s.weight = x.weight();
    s.support1 = x.support1();
    if (y != nullptr) s.distance = FqVector::distance(x, *y);
    return s;
}

ExplicitCode extend_code(const ExplicitCode& c) {
    std::vector<FqVector> out;
    out.reserve(c.size());
    for (const auto& w : c.words()) out.push_back(w.appended(w.coordinate_sum()));
    return ExplicitCode(c.field(), c.length() + 1, std::move(out));
}

std::optional<std::uint64_t> checked_pow_u64(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            return std::nullopt;
        r *= base;
    }
    return r;
}

void for_each_in_span(const FqMatrix& basis, const FqVector& shift,
                      const std::function<void(const FqVector&)>& fn) {
    const int q = basis.field()->q();
    const int k = basis.rows();
    std::vector<FqVector> rows;
    rows.reserve(k);
    for (int r = 0; r < k; ++r) rows.push_back(basis.row_vector(r));

    const auto total = checked_pow_u64(std::uint64_t(q), k);
    if (!total) throw CapExceeded("span enumeration does not fit in 64 bits");

    FqVector current = shift;
    std::vector<int> digits(k, 0);
    fn(current);
    for (std::uint64_t it = 1; it < *total; ++it) {
        // Base-q odometer: the q-th addition of a row cancels (char divides q).
        int d = 0;
        for (;;) {
            current += rows[d];
            if (++digits[d] < q) break;
            digits[d] = 0;
            ++d;
        }
        fn(current);
    }
}

}  // namespace pforge
