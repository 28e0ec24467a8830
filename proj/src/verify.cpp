#include "pforge/verify.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pforge {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Two bits per cell: 0 unseen, 1 covered once, 2 covered more than once.
class MarkArray {
public:
    explicit MarkArray(std::uint64_t cells) : bits_((cells + 3) / 4, 0) {}

    // Returns the state before marking.
    int mark(std::uint64_t cell) {
        std::uint8_t& b = bits_[cell >> 2];
        const int shift = int(cell & 3) * 2;
        const int state = (b >> shift) & 3;
        if (state < 2) b = std::uint8_t((b & ~(3 << shift)) | ((state + 1) << shift));
        return state;
    }

    int state(std::uint64_t cell) const {
        return (bits_[cell >> 2] >> (int(cell & 3) * 2)) & 3;
    }

private:
    std::vector<std::uint8_t> bits_;
};

std::string cell_to_word(std::uint64_t cell, int q, int n) {
    std::vector<int> symbols(n);
    for (int i = n - 1; i >= 0; --i) {
        symbols[i] = int(cell % q);
        cell /= q;
    }
    std::ostringstream os;
    for (int i = 0; i < n; ++i) {
        if (i) os << ' ';
        os << symbols[i];
    }
    return os.str();
}

}  // namespace

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::string VerificationReport::text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << "check " << c.name << ": " << (c.pass ? "ok" : "FAIL");
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    os << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string VerificationReport::summary_line() const {
    std::ostringstream os;
    os << (passed() ? "PASS" : "FAIL");
    os << " kind=" << (kind == Kind::exact ? "exact" : "sampled");
    os << " q=" << q << " n=" << n;
    if (m > 0) os << " m=" << m;
    if (kind == Kind::sampled) os << " trials=" << trials << " seed=" << seed;
    for (const auto& c : checks) os << " " << c.name << "=" << (c.pass ? "ok" : "fail");
    return os.str();
}

VerificationReport verify_perfect(const ExplicitCode& c, int m, std::uint64_t cell_cap) {
    const int q = c.field()->q();
    const int n = c.length();
    require(m >= 1, "verification parameter m must be >= 1");
    const auto expected_len = hamming_length_parameter(q, n);
    require(expected_len.has_value() && *expected_len == m,
            "code length is not (q^m - 1)/(q - 1) for the given m");

    const auto cells = checked_pow_u64(std::uint64_t(q), n);
    if (!cells || *cells > cell_cap)
        throw CapExceeded("q^n exceeds the marking cell cap");
    const auto expected_size = checked_pow_u64(std::uint64_t(q), n - m);

    VerificationReport report;
    report.kind = VerificationReport::Kind::exact;
    report.q = q;
    report.n = n;
    report.m = m;

    {
        std::ostringstream os;
        os << "|C| = " << c.size() << ", expected q^(n-m) = " << *expected_size;
        report.checks.push_back(
            {"cardinality", c.size() == *expected_size, os.str()});
    }

    std::vector<std::uint64_t> pow(n);
    for (int j = 0; j < n; ++j) {
        std::uint64_t p = 1;
        for (int t = 0; t < n - 1 - j; ++t) p *= q;
        pow[j] = p;
    }

    MarkArray marks(*cells);
    bool collision = false;
    std::uint64_t collision_cell = 0;
    for (const auto& w : c.words()) {
        const std::uint64_t center = w.radix_index();
        if (marks.mark(center) != 0 && !collision) {
            collision = true;
            collision_cell = center;
        }
        for (int j = 0; j < n; ++j) {
            const Symbol s = w.get(j);
            for (int a = 0; a < q; ++a) {
                if (a == s) continue;
                const std::uint64_t cell =
                    center + (std::uint64_t(a) - s) * pow[j];  // wraps consistently
                if (marks.mark(cell) != 0 && !collision) {
                    collision = true;
                    collision_cell = cell;
                }
            }
        }
    }

    bool gap = false;
    std::uint64_t gap_cell = 0;
    for (std::uint64_t cell = 0; cell < *cells; ++cell)
        if (marks.state(cell) == 0) {
            gap = true;
            gap_cell = cell;
            break;
        }

    report.checks.push_back({"balls-disjoint", !collision,
                             collision ? "doubly covered word: " +
                                             cell_to_word(collision_cell, q, n)
                                       : ""});
    report.checks.push_back(
        {"cover", !gap,
         gap ? "uncovered word: " + cell_to_word(gap_cell, q, n) : ""});
    return report;
}

int min_distance(const ExplicitCode& c, std::uint64_t pair_op_cap) {
    require(c.size() >= 2, "minimum distance needs at least two codewords");
    const std::uint64_t pairs = std::uint64_t(c.size()) * (c.size() - 1) / 2;
    if (pairs > pair_op_cap / std::uint64_t(c.length()))
        throw CapExceeded("pairwise distance scan exceeds the op cap");
    int best = c.length() + 1;
    for (std::size_t a = 0; a < c.size() && best > 1; ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b) {
            const int d = FqVector::distance(c.word(a), c.word(b));
            if (d < best) {
                best = d;
                if (best == 1) break;
            }
        }
    return best;
}

VerificationReport sampled_perfect_check(const ImplicitSwitchedCode& code,
                                         std::uint64_t trials, std::uint64_t seed,
                                         int threads) {
    require(trials >= 1, "sampled check needs at least one trial");
    const int n = code.n();
    const int q = code.base().field()->q();
    const auto& f = code.base().field();

    struct Failure {
        std::uint64_t trial;
        std::string word;
        int count;
    };

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::vector<Failure>& out) {
        for (std::uint64_t t = lo; t < hi; ++t) {
            auto rng = substream(seed, t);
            FqVector x(f, n);
            for (int i = 0; i < n; ++i) x.set(i, Symbol(rng.below(q)));
            int count = code.contains(x) ? 1 : 0;
            for (int j = 1; j <= n; ++j) {
                const Symbol s = x.at1(j);
                for (int a = 0; a < q; ++a) {
                    if (Symbol(a) == s) continue;
                    FqVector y = x;
                    y.set1(j, Symbol(a));
                    if (code.contains(y)) ++count;
                }
            }
            if (count != 1) out.push_back({t, x.to_string(), count});
        }
    };

    std::vector<Failure> failures;
    if (threads <= 1) {
        run_range(0, trials, failures);
    } else {
        const std::uint64_t worker_count = std::min<std::uint64_t>(threads, trials);
        std::vector<std::vector<Failure>> partial(worker_count);
        std::vector<std::thread> pool;
        for (std::uint64_t w = 0; w < worker_count; ++w) {
            const std::uint64_t lo = trials * w / worker_count;
            const std::uint64_t hi = trials * (w + 1) / worker_count;
            pool.emplace_back(run_range, lo, hi, std::ref(partial[w]));
        }
        for (auto& th : pool) th.join();
        for (auto& p : partial)
            failures.insert(failures.end(), p.begin(), p.end());
    }

    VerificationReport report;
    report.kind = VerificationReport::Kind::sampled;
    report.q = q;
    report.n = n;
    report.m = code.base().m();
    report.trials = trials;
    report.seed = seed;
    std::string detail;
    if (!failures.empty()) {
        std::ostringstream os;
        os << failures.size() << " failing trial(s); first: trial " << failures[0].trial
           << " word " << failures[0].word << " saw " << failures[0].count
           << " codewords in its ball";
        detail = os.str();
    }
    report.checks.push_back({"ball-count", failures.empty(), detail});
    return report;
}

RankCertificate rank_certificate(const ExplicitCode& c) {
    RankCertificate cert;
    RankAccumulator acc(c.field(), c.length());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (acc.insert(c.word(i))) {
            cert.witnesses.push_back(c.word(i));
            cert.membership_notes.push_back("codeword " + std::to_string(i) +
                                            " of the explicit list");
        }
    cert.rank = acc.rank();
    return cert;
}

RankCertificate rank_certificate(const ImplicitSwitchedCode& c, std::uint64_t seed,
                                 std::uint64_t draw_budget) {
    const auto& base = c.base();
    const auto& f = base.field();
    const int q = f->q();
    const int target = base.dim();

    RankCertificate cert;
    RankAccumulator acc(f, base.n());
    auto rng = substream(seed, 0);
    std::vector<Symbol> message(target);

    std::uint64_t draws = 0;
    while (acc.rank() < target) {
        if (draws++ >= draw_budget)
            throw std::runtime_error("rank sampling budget exhausted before n-m "
                                     "independent witnesses were found");
        for (auto& s : message) s = Symbol(rng.below(q));
        FqVector w = base.codeword_from_message(message);
        if (!c.contains(w)) continue;  // landed in a removed coset
        if (acc.insert(w)) {
            cert.witnesses.push_back(w);
            cert.membership_notes.push_back("base codeword outside the removed cosets");
        }
    }

    for (const auto& comp : c.family()) {
        FqVector rep = comp.shift.with_permuted_coord(comp.coord1, comp.sigma);
        if (!c.contains(rep))
            throw std::logic_error("switched coset representative failed membership");
        acc.insert(rep);
        cert.witnesses.push_back(std::move(rep));
        cert.membership_notes.push_back(
            "switched representative at coordinate " + std::to_string(comp.coord1));
    }
    cert.rank = acc.rank();
    return cert;
}

LinearityResult linearity_check(const ExplicitCode& c, std::uint64_t pair_op_cap) {
    const int q = c.field()->q();
    const std::uint64_t ops =
        (std::uint64_t(c.size()) * (c.size() - 1) / 2 + std::uint64_t(q) * c.size());
    if (ops > pair_op_cap / std::uint64_t(std::max(1, c.length())))
        throw CapExceeded("linearity scan exceeds the op cap");

    LinearityResult res;
    const FqVector zero(c.field(), c.length());
    if (!c.contains(zero)) {
        res.linear = false;
        res.zero_missing = true;
        res.witness = "zero word is missing";
        return res;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        for (int a = 2; a < q; ++a) {
            FqVector scaled = c.word(i);
            scaled.scale(Symbol(a));
            if (!c.contains(scaled)) {
                res.linear = false;
                res.scalar_case = {i, Symbol(a)};
                res.witness = std::to_string(a) + " * codeword " + std::to_string(i) +
                              " leaves the code";
                return res;
            }
        }
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!c.contains(c.word(i) + c.word(j))) {
                res.linear = false;
                res.pair = {i, j};
                res.witness = "codewords " + std::to_string(i) + " + " +
                              std::to_string(j) + " leave the code";
                return res;
            }
    return res;
}

CountingBound code_count_lower_bound(int q, long long n) {
    CountingBound b;
    b.q = q;
    b.n = n;
    const auto m = hamming_length_parameter(q, n);
    require(m.has_value() && *m >= 2, "n is not a 1-perfect length for this q");
    b.m_outer = *m;
    b.inner_length = (n - 1) / q;
    const auto m_inner = hamming_length_parameter(q, b.inner_length);
    require(m_inner.has_value(), "inner length is not of 1-perfect form");
    b.m_inner = *m_inner;

    long long fact = 1;
    for (int i = 2; i <= q; ++i) fact *= i;
    b.factorial_base = fact;
    b.exponent_power = b.inner_length - b.m_inner - 1;
    if (b.exponent_power < 0) {
        b.vacuous = true;
        return b;
    }
    b.exponent_value = checked_pow_u64(std::uint64_t(q), int(b.exponent_power));

    if (b.exponent_value) {
        const double digits =
            double(*b.exponent_value) * std::log10(double(fact));
        if (digits <= 10000.0) {
            boost::multiprecision::cpp_int big = 1;
            for (std::uint64_t i = 0; i < *b.exponent_value; ++i) big *= fact;
            b.decimal = big.str();
        }
    }
    return b;
}

std::string CountingBound::to_string() const {
    std::ostringstream os;
    os << "N(" << q << ", " << n << ") >= (" << q << "!)^(" << q << "^" << exponent_power
       << ")";
    if (vacuous) {
        os << "  [vacuous: exponent " << exponent_power << " is negative; inner length "
           << inner_length << " with parameter " << m_inner << "]";
        return os.str();
    }
    os << " = " << factorial_base << "^";
    if (exponent_value)
        os << *exponent_value;
    else
        os << "(" << q << "^" << exponent_power << ")";
    if (!decimal.empty()) os << " = " << decimal;
    os << "  [inner length " << inner_length << ", inner parameter " << m_inner << "]";
    return os.str();
}

VerificationReport hyperplane_intersection_check(const HammingPtr& code, int i1,
                                                 std::span<const Symbol> w,
                                                 std::uint64_t trials,
                                                 std::uint64_t seed) {
    const auto pts = hyperplane_points(code->order(), w);
    require(!std::binary_search(pts.begin(), pts.end(), i1),
            "the component coordinate must lie outside the hyperplane");
    const auto comp = principal_component(code, i1);
    const auto& f = code->field();
    const int q = f->q();

    const auto supported = [&](const FqVector& v) {
        for (int s1 : v.support1())
            if (!std::binary_search(pts.begin(), pts.end(), s1)) return false;
        return true;
    };

    VerificationReport report;
    report.q = q;
    report.n = code->n();
    report.m = code->m();
    bool ok = true;
    std::string detail;

    if (trials == 0) {
        report.kind = VerificationReport::Kind::exact;
        // All r in the span against all u supported on the hyperplane:
        // r + u stays supported iff r = 0.
        std::vector<FqVector> span_elems;
        for_each_in_span(comp.basis, FqVector(f, code->n()),
                         [&](const FqVector& r) { span_elems.push_back(r); });
        const auto u_total = checked_pow_u64(std::uint64_t(q), int(pts.size()));
        if (!u_total || *u_total > (std::uint64_t(1) << 22))
            throw CapExceeded("hyperplane support too large for the exhaustive check");
        for (std::uint64_t uc = 0; uc < *u_total && ok; ++uc) {
            FqVector u(f, code->n());
            std::uint64_t t = uc;
            for (int p1 : pts) {
                u.set1(p1, Symbol(t % q));
                t /= q;
            }
            for (const auto& r : span_elems) {
                const bool inside = supported(r + u);
                if (inside != r.is_zero()) {
                    ok = false;
                    detail = "witness coset element: " + (r + u).to_string();
                    break;
                }
            }
        }
    } else {
        report.kind = VerificationReport::Kind::sampled;
        report.trials = trials;
        report.seed = seed;
        for (std::uint64_t t = 0; t < trials && ok; ++t) {
            auto rng = substream(seed, t);
            FqVector u(f, code->n());
            for (int p1 : pts) u.set1(p1, Symbol(rng.below(q)));
            const FqVector r = random_combination(comp.basis, rng);
            const bool inside = supported(r + u);
            if (inside != r.is_zero()) {
                ok = false;
                detail = "trial " + std::to_string(t) +
                         " witness: " + (r + u).to_string();
            }
        }
    }
    report.checks.push_back({"unique-intersection", ok, detail});
    return report;
}

}  // namespace pforge
