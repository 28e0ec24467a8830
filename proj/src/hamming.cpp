#include "pforge/hamming.hpp"

#include <algorithm>
#include <stdexcept>

namespace pforge {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

int int_pow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

ProjectiveOrder::ProjectiveOrder(FieldPtr field, int m)
    : field_(std::move(field)), m_(m) {
    require(m_ >= 1, "projective order needs m >= 1");
    const int q = field_->q();
    const int total = int_pow(q, m_);
    n_ = (total - 1) / (q - 1);

    points_.reserve(n_);
    values_.reserve(n_);
    decomp_.assign(total, {0, 0});

    // Walking values in ascending order visits normalized representatives
    // in sorted order directly.
    for (int value = 1; value < total; ++value) {
        std::vector<Symbol> z(m_);
        int t = value;
        for (int j = m_ - 1; j >= 0; --j) { z[j] = Symbol(t % q); t /= q; }
        int top = 0;
        while (z[top] == 0) ++top;
        if (z[top] == 1) {
            points_.push_back(z);
            values_.push_back(value);
        }
    }
    require(int(points_.size()) == n_, "projective point count mismatch");

    const Field& f = *field_;
    for (int p = 0; p < n_; ++p) {
        for (int a = 1; a < q; ++a) {
            std::vector<Symbol> z(m_);
            for (int j = 0; j < m_; ++j) z[j] = f.mul(Symbol(a), points_[p][j]);
            decomp_[value_of(z)] = {p + 1, Symbol(a)};
        }
    }
}

std::span<const Symbol> ProjectiveOrder::point(int p1) const {
    require(p1 >= 1 && p1 <= n_, "point index out of range");
    return points_[p1 - 1];
}

int ProjectiveOrder::value_of(std::span<const Symbol> z) const {
    const int q = field_->q();
    int v = 0;
    for (Symbol s : z) v = v * q + s;
    return v;
}

std::pair<int, Symbol> ProjectiveOrder::decompose(std::span<const Symbol> z) const {
    require(int(z.size()) == m_, "vector length mismatch");
    const int v = value_of(z);
    require(v != 0, "cannot decompose the zero vector");
    return decomp_[v];
}

HammingCode::HammingCode(FieldPtr field, int m)
    : field_(std::move(field)), m_(m), order_(field_, m),
      parity_(field_, m, order_.num_points()),
      generator_(field_, 0, 0) {
    require(m_ >= 2, "Hamming parameter m must be at least 2");
    n_ = order_.num_points();
    for (int c = 0; c < n_; ++c) {
        const auto pt = order_.point(c + 1);
        for (int r = 0; r < m_; ++r) parity_.set(r, c, pt[r]);
    }
    generator_ = kernel_basis(parity_);

    distinguished_.resize(m_);
    for (int j = 0; j < m_; ++j) {
        std::vector<Symbol> e(m_, 0);
        e[j] = 1;
        distinguished_[j] = order_.decompose(e).first;
    }
}

std::vector<Symbol> HammingCode::syndrome(const FqVector& x) const {
    require(x.length() == n_, "syndrome length mismatch");
    const Field& f = *field_;
    std::vector<Symbol> s(m_, 0);
    for (int c = 0; c < n_; ++c) {
        const Symbol xc = x.get(c);
        if (xc == 0) continue;
        for (int r = 0; r < m_; ++r)
            s[r] = f.add(s[r], f.mul(xc, parity_.at(r, c)));
    }
    return s;
}

bool HammingCode::is_codeword(const FqVector& x) const {
    const auto s = syndrome(x);
    return std::all_of(s.begin(), s.end(), [](Symbol v) { return v == 0; });
}

HammingCode::Decoded HammingCode::decode(const FqVector& x) const {
    const auto s = syndrome(x);
    if (std::all_of(s.begin(), s.end(), [](Symbol v) { return v == 0; }))
        return {x, false, 0, 0};
    const auto [coord1, alpha] = order_.decompose(s);
    FqVector fixed = x;
    fixed.set1(coord1, field_->sub(fixed.at1(coord1), alpha));
    return {std::move(fixed), true, coord1, alpha};
}

FqVector HammingCode::codeword_from_message(std::span<const Symbol> message) const {
    require(int(message.size()) == dim(), "message length mismatch");
    FqVector w(field_, n_);
    for (int r = 0; r < dim(); ++r)
        if (message[r] != 0) w.axpy(message[r], generator_.row_vector(r));
    return w;
}

ExplicitCode HammingCode::enumerate(std::uint64_t word_cap) const {
    const auto count = checked_pow_u64(std::uint64_t(field_->q()), dim());
    if (!count || *count > word_cap)
        throw CapExceeded("Hamming code enumeration exceeds the word cap");
    std::vector<FqVector> words;
    words.reserve(*count);
    for_each_in_span(generator_, FqVector(field_, n_),
                     [&](const FqVector& w) { words.push_back(w); });
    return ExplicitCode(field_, n_, std::move(words));
}

HammingPtr build_hamming(FieldPtr field, int m) {
    return HammingPtr(new HammingCode(std::move(field), m));
}

HammingPtr build_hamming(int q, int m) { return build_hamming(Field::of_order(q), m); }

std::vector<int> line_points(const ProjectiveOrder& o, int x1, int y1) {
    require(x1 != y1, "a line needs two distinct points");
    const Field& f = *o.field();
    const int q = f.q();
    const auto hx = o.point(x1);
    const auto hy = o.point(y1);
    std::vector<int> pts = {x1, y1};
    std::vector<Symbol> z(o.m());
    for (int b = 1; b < q; ++b) {
        for (int j = 0; j < o.m(); ++j) z[j] = f.add(hx[j], f.mul(Symbol(b), hy[j]));
        pts.push_back(o.decompose(z).first);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<int> plane_points(const ProjectiveOrder& o, int x1, int y1, int z1) {
    require(x1 != y1 && y1 != z1 && x1 != z1, "a plane needs three distinct points");
    const auto line = line_points(o, x1, y1);
    require(!std::binary_search(line.begin(), line.end(), z1),
            "plane points must not be collinear");
    const Field& f = *o.field();
    const int q = f.q();
    const auto hx = o.point(x1);
    const auto hy = o.point(y1);
    const auto hz = o.point(z1);
    std::vector<int> pts;
    pts.reserve(q * q + q + 1);
    std::vector<Symbol> v(o.m());
    // Normalized combinations (1, b, c), (0, 1, c), (0, 0, 1).
    for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) {
            for (int j = 0; j < o.m(); ++j)
                v[j] = f.add(hx[j], f.add(f.mul(Symbol(b), hy[j]), f.mul(Symbol(c), hz[j])));
            pts.push_back(o.decompose(v).first);
        }
    for (int c = 0; c < q; ++c) {
        for (int j = 0; j < o.m(); ++j) v[j] = f.add(hy[j], f.mul(Symbol(c), hz[j]));
        pts.push_back(o.decompose(v).first);
    }
    pts.push_back(z1);
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<std::vector<int>> pencil(const ProjectiveOrder& o, int i1) {
    require(i1 >= 1 && i1 <= o.num_points(), "point index out of range");
    std::vector<bool> covered(o.num_points() + 1, false);
    std::vector<std::vector<int>> lines;
    for (int x = 1; x <= o.num_points(); ++x) {
        if (x == i1 || covered[x]) continue;
        auto line = line_points(o, i1, x);
        for (int p : line)
            if (p != i1) covered[p] = true;
        lines.push_back(std::move(line));
    }
    return lines;
}

FqMatrix line_subcode_basis(const HammingCode& code, std::span<const int> line) {
    const int q = code.field()->q();
    require(int(line.size()) == q + 1, "line has wrong size");
    const auto& H = code.parity_check();
    FqMatrix sub(code.field(), code.m(), int(line.size()));
    for (std::size_t j = 0; j < line.size(); ++j) {
        const int c = line[j];
        require(c >= 1 && c <= code.n(), "line point out of range");
        for (int r = 0; r < code.m(); ++r) sub.set(r, int(j), H.at(r, c - 1));
    }
    const FqMatrix local = kernel_basis(sub);
    FqMatrix basis(code.field(), local.rows(), code.n());
    for (int r = 0; r < local.rows(); ++r)
        for (std::size_t j = 0; j < line.size(); ++j)
            basis.set(r, line[j] - 1, local.at(r, int(j)));
    return basis;
}

std::optional<int> hamming_length_parameter(int q, long long n) {
    long long length = 0, power = 1;
    for (int m = 1; m <= 62; ++m) {
        length += power;  // (q^m - 1)/(q - 1) = 1 + q + ... + q^{m-1}
        if (length == n) return m;
        if (length > n) return std::nullopt;
        power *= q;
    }
    return std::nullopt;
}

std::vector<int> hyperplane_points(const ProjectiveOrder& o, std::span<const Symbol> w) {
    require(int(w.size()) == o.m(), "functional length mismatch");
    require(std::any_of(w.begin(), w.end(), [](Symbol s) { return s != 0; }),
            "hyperplane functional must be nonzero");
    const Field& f = *o.field();
    std::vector<int> pts;
    for (int p = 1; p <= o.num_points(); ++p) {
        const auto h = o.point(p);
        Symbol acc = 0;
        for (int j = 0; j < o.m(); ++j) acc = f.add(acc, f.mul(w[j], h[j]));
        if (acc == 0) pts.push_back(p);
    }
    return pts;
}

}  // namespace pforge
