#include "pforge/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pforge::io {

namespace {

constexpr const char* kCodeMagic = "# perfect-forge code v1";
constexpr const char* kMatrixMagic = "# perfect-forge matrix v1";
constexpr const char* kImplicitMagic = "# perfect-forge implicit v1";

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument("file format: " + msg);
}

class LineReader {
public:
    explicit LineReader(const std::string& text) : in_(text) {}

    // Next non-empty line; returns false at end of input.
    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    }

    std::string expect(const std::string& what) {
        std::string line;
        require(next(line), "unexpected end of input, expected " + what);
        return line;
    }

private:
    std::istringstream in_;
};

// Parses "key=value" tokens from a header line into sequential fields.
long long header_field(const std::string& line, const std::string& key) {
    const std::string needle = key + "=";
    std::size_t pos = 0;
    while (pos < line.size()) {
        const std::size_t end = line.find(' ', pos);
        const std::string tok = line.substr(pos, end == std::string::npos ? end : end - pos);
        if (tok.rfind(needle, 0) == 0) {
            long long value = 0;
            const char* first = tok.data() + needle.size();
            const char* last = tok.data() + tok.size();
            const auto res = std::from_chars(first, last, value);
            require(res.ec == std::errc() && res.ptr == last,
                    "bad integer for " + key + " in '" + line + "'");
            return value;
        }
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    throw std::invalid_argument("file format: missing " + key + "= in '" + line + "'");
}

std::vector<Symbol> parse_symbols(const std::string& line, int expected, int q) {
    std::vector<Symbol> out;
    out.reserve(expected);
    std::istringstream is(line);
    int v;
    while (is >> v) {
        require(v >= 0 && v < q, "symbol out of range in '" + line + "'");
        out.push_back(Symbol(v));
    }
    require(int(out.size()) == expected,
            "expected " + std::to_string(expected) + " symbols in '" + line + "'");
    return out;
}

FieldPtr field_from_header(const std::string& header) {
    const int q = int(header_field(header, "q"));
    const int p = int(header_field(header, "p"));
    const int k = int(header_field(header, "k"));
    auto f = Field::make(p, k);
    require(f->q() == q, "q does not match p^k");
    return f;
}

std::string field_header(const Field& f) {
    std::ostringstream os;
    os << "q=" << f.q() << " p=" << f.p() << " k=" << f.k();
    return os.str();
}

}  // namespace

std::string code_to_string(const ExplicitCode& c) {
    std::ostringstream os;
    os << kCodeMagic << "\n";
    os << field_header(*c.field()) << " n=" << c.length() << " count=" << c.size() << "\n";
    for (const auto& w : c.words()) os << w.to_string() << "\n";
    return os.str();
}

ExplicitCode code_from_string(const std::string& text) {
    LineReader reader(text);
    require(reader.expect("magic line") == kCodeMagic, "not a code file");
    const std::string header = reader.expect("header line");
    auto f = field_from_header(header);
    const int n = int(header_field(header, "n"));
    const auto count = header_field(header, "count");

    std::vector<FqVector> words;
    words.reserve(std::size_t(count));
    std::string line;
    while (reader.next(line)) words.emplace_back(f, parse_symbols(line, n, f->q()));
    require(long long(words.size()) == count, "word count does not match header");
    return ExplicitCode(std::move(f), n, std::move(words));
}

std::string matrix_to_string(const FqMatrix& m) {
    std::ostringstream os;
    os << kMatrixMagic << "\n";
    os << field_header(*m.field()) << " rows=" << m.rows() << " cols=" << m.cols() << "\n";
    for (int r = 0; r < m.rows(); ++r) os << m.row_vector(r).to_string() << "\n";
    return os.str();
}

FqMatrix matrix_from_string(const std::string& text) {
    LineReader reader(text);
    require(reader.expect("magic line") == kMatrixMagic, "not a matrix file");
    const std::string header = reader.expect("header line");
    auto f = field_from_header(header);
    const int rows = int(header_field(header, "rows"));
    const int cols = int(header_field(header, "cols"));

    std::vector<Symbol> entries;
    entries.reserve(std::size_t(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        const auto row = parse_symbols(reader.expect("matrix row"), cols, f->q());
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return FqMatrix::from_entries(std::move(f), rows, cols, entries);
}

std::string implicit_to_string(const ImplicitSwitchedCode& c) {
    const auto& base = c.base();
    std::ostringstream os;
    os << kImplicitMagic << "\n";
    os << field_header(*base.field()) << " n=" << base.n() << " m=" << base.m()
       << " components=" << c.family().size() << "\n";
    os << "[H] rows=" << base.m() << " cols=" << base.n() << "\n";
    for (int r = 0; r < base.m(); ++r) os << base.parity_check().row_vector(r).to_string() << "\n";
    for (const auto& comp : c.family()) {
        os << "[component] i=" << comp.coord1 << "\n";
        os << "sigma=";
        for (Symbol s : comp.sigma.table()) os << ' ' << int(s);
        os << "\n";
        os << "shift= " << comp.shift.to_string() << "\n";
        os << "[basis] rows=" << comp.basis.rows() << " cols=" << comp.basis.cols() << "\n";
        for (int r = 0; r < comp.basis.rows(); ++r)
            os << comp.basis.row_vector(r).to_string() << "\n";
    }
    return os.str();
}

ImplicitSwitchedCode implicit_from_string(const std::string& text) {
    LineReader reader(text);
    require(reader.expect("magic line") == kImplicitMagic, "not an implicit code file");
    const std::string header = reader.expect("header line");
    auto f = field_from_header(header);
    const int n = int(header_field(header, "n"));
    const int m = int(header_field(header, "m"));
    const auto count = header_field(header, "components");

    auto base = build_hamming(f, m);
    require(base->n() == n, "n does not match (q^m - 1)/(q - 1)");

    const std::string hline = reader.expect("[H] section");
    require(hline.rfind("[H]", 0) == 0, "expected [H] section");
    require(int(header_field(hline, "rows")) == m && int(header_field(hline, "cols")) == n,
            "[H] dimensions mismatch");
    for (int r = 0; r < m; ++r) {
        const auto row = parse_symbols(reader.expect("H row"), n, f->q());
        for (int cidx = 0; cidx < n; ++cidx)
            require(base->parity_check().at(r, cidx) == row[cidx],
                    "parity-check matrix is not in canonical column order");
    }

    std::vector<ImplicitSwitchedCode::Component> family;
    for (long long k = 0; k < count; ++k) {
        const std::string chead = reader.expect("[component] section");
        require(chead.rfind("[component]", 0) == 0, "expected [component] section");
        const int coord1 = int(header_field(chead, "i"));

        const std::string sline = reader.expect("sigma line");
        require(sline.rfind("sigma=", 0) == 0, "expected sigma= line");
        const auto sigma_table = parse_symbols(sline.substr(6), f->q(), f->q());

        const std::string tline = reader.expect("shift line");
        require(tline.rfind("shift=", 0) == 0, "expected shift= line");
        const auto shift_syms = parse_symbols(tline.substr(6), n, f->q());

        const std::string bline = reader.expect("[basis] section");
        require(bline.rfind("[basis]", 0) == 0, "expected [basis] section");
        const int rows = int(header_field(bline, "rows"));
        require(int(header_field(bline, "cols")) == n, "[basis] width mismatch");
        std::vector<Symbol> entries;
        entries.reserve(std::size_t(rows) * n);
        for (int r = 0; r < rows; ++r) {
            const auto row = parse_symbols(reader.expect("basis row"), n, f->q());
            entries.insert(entries.end(), row.begin(), row.end());
        }
        family.push_back({coord1, FieldPermutation(f, sigma_table),
                          FqVector(f, shift_syms),
                          FqMatrix::from_entries(f, rows, n, entries)});
    }
    return ImplicitSwitchedCode(std::move(base), std::move(family));
}

bool looks_like_implicit(const std::string& text) {
    return text.rfind(kImplicitMagic, 0) == 0;
}

bool looks_like_code(const std::string& text) {
    return text.rfind(kCodeMagic, 0) == 0;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << text;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

void write_code(const std::filesystem::path& path, const ExplicitCode& c) {
    write_text_atomic(path, code_to_string(c));
}

ExplicitCode read_code(const std::filesystem::path& path) {
    return code_from_string(read_text(path));
}

void write_matrix(const std::filesystem::path& path, const FqMatrix& m) {
    write_text_atomic(path, matrix_to_string(m));
}

FqMatrix read_matrix(const std::filesystem::path& path) {
    return matrix_from_string(read_text(path));
}

void write_implicit(const std::filesystem::path& path, const ImplicitSwitchedCode& c) {
    write_text_atomic(path, implicit_to_string(c));
}

ImplicitSwitchedCode read_implicit(const std::filesystem::path& path) {
    return implicit_from_string(read_text(path));
}

}  // namespace pforge::io
