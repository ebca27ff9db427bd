#include "qbp/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qbp/rng.hpp"

namespace qbp {

std::string export_alist(const SparseMatrix& h) {
    const std::size_t n = h.cols, m = h.rows;
    std::vector<std::vector<std::uint32_t>> col_rows(n);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::uint32_t c : h.row_cols[r]) col_rows[c].push_back(static_cast<std::uint32_t>(r));
    }
    std::size_t max_col = 0, max_row = 0;
    for (const auto& c : col_rows) max_col = std::max(max_col, c.size());
    for (const auto& r : h.row_cols) max_row = std::max(max_row, r.size());

    std::string out;
    auto line_of = [&out](const auto& f) {
        f();
        out += "\n";
    };
    line_of([&] { out += std::to_string(n) + " " + std::to_string(m); });
    line_of([&] { out += std::to_string(max_col) + " " + std::to_string(max_row); });
    line_of([&] {
        for (std::size_t c = 0; c < n; ++c) out += (c ? " " : "") + std::to_string(col_rows[c].size());
    });
    line_of([&] {
        for (std::size_t r = 0; r < m; ++r) out += (r ? " " : "") + std::to_string(h.row_cols[r].size());
    });
    auto index_lines = [&](const std::vector<std::vector<std::uint32_t>>& lists, std::size_t pad) {
        for (const auto& l : lists) {
            line_of([&] {
                for (std::size_t i = 0; i < pad; ++i)
                    out += (i ? " " : "") + std::to_string(i < l.size() ? l[i] + 1 : 0);
            });
        }
    };
    index_lines(col_rows, max_col);
    index_lines(h.row_cols, max_row);
    return out;
}

namespace {

struct TokenReader {
    const std::string& text;
    std::size_t pos = 0;

    explicit TokenReader(const std::string& t) : text(t) {}

    long long next_int(const char* what) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) throw ParseError(std::string("expected ") + what, pos);
        long long value = 0;
        auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc())
            throw ParseError(std::string("expected integer for ") + what, pos);
        pos = static_cast<std::size_t>(p - text.data());
        return value;
    }

    std::size_t next_count(const char* what) {
        long long v = next_int(what);
        if (v < 0) throw ParseError(std::string("negative ") + what, pos);
        return static_cast<std::size_t>(v);
    }
};

}  // namespace

SparseMatrix import_alist(const std::string& text) {
    TokenReader tok(text);
    const std::size_t n = tok.next_count("column count");
    const std::size_t m = tok.next_count("row count");
    const std::size_t max_col = tok.next_count("max column weight");
    const std::size_t max_row = tok.next_count("max row weight");

    std::vector<std::size_t> col_w(n), row_w(m);
    for (std::size_t c = 0; c < n; ++c) col_w[c] = tok.next_count("column weight");
    for (std::size_t r = 0; r < m; ++r) row_w[r] = tok.next_count("row weight");

    SparseMatrix h(m, n);
    std::vector<std::vector<std::uint32_t>> col_rows(n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < max_col; ++i) {
            std::size_t v = tok.next_count("column entry");
            if (v == 0) continue;  // padding
            if (v > m) throw ParseError("row index out of range", tok.pos);
            col_rows[c].push_back(static_cast<std::uint32_t>(v - 1));
        }
        if (col_rows[c].size() != col_w[c])
            throw ParseError("column weight disagrees with its entry list", tok.pos);
    }
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<std::uint32_t> row;
        for (std::size_t i = 0; i < max_row; ++i) {
            std::size_t v = tok.next_count("row entry");
            if (v == 0) continue;
            if (v > n) throw ParseError("column index out of range", tok.pos);
            row.push_back(static_cast<std::uint32_t>(v - 1));
        }
        if (row.size() != row_w[r])
            throw ParseError("row weight disagrees with its entry list", tok.pos);
        h.set_row(r, std::move(row));
    }
    // Cross-check the two index sections.
    std::vector<std::vector<std::uint32_t>> from_rows(n);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::uint32_t c : h.row_cols[r]) from_rows[c].push_back(static_cast<std::uint32_t>(r));
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::uint32_t> sorted = col_rows[c];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != from_rows[c])
            throw ParseError("column and row sections disagree", tok.pos);
    }
    return h;
}

std::string export_mtx(const SparseMatrix& h) {
    std::string out = "%%MatrixMarket matrix coordinate integer general\n";
    out += std::to_string(h.rows) + " " + std::to_string(h.cols) + " " + std::to_string(h.nnz()) + "\n";
    for (std::size_t r = 0; r < h.rows; ++r) {
        for (std::uint32_t c : h.row_cols[r])
            out += std::to_string(r + 1) + " " + std::to_string(c + 1) + " 1\n";
    }
    return out;
}

SparseMatrix import_mtx(const std::string& text) {
    if (text.rfind("%%MatrixMarket", 0) != 0) throw ParseError("missing MatrixMarket header", 0);
    std::size_t header_end = text.find('\n');
    if (header_end == std::string::npos) throw ParseError("truncated header", text.size());
    const std::string header = text.substr(0, header_end);
    const bool pattern = header.find(" pattern") != std::string::npos;

    // Skip comment lines after the header.
    std::size_t body = header_end + 1;
    while (body < text.size() && text[body] == '%') {
        std::size_t eol = text.find('\n', body);
        body = eol == std::string::npos ? text.size() : eol + 1;
    }

    TokenReader tok(text);
    tok.pos = body;
    const std::size_t m = tok.next_count("row count");
    const std::size_t n = tok.next_count("column count");
    const std::size_t nnz = tok.next_count("entry count");
    std::vector<std::vector<std::uint32_t>> rows(m);
    for (std::size_t e = 0; e < nnz; ++e) {
        const std::size_t r = tok.next_count("row index");
        const std::size_t c = tok.next_count("column index");
        if (!pattern && tok.next_int("entry value") != 1)
            throw ParseError("entries must be 1", tok.pos);
        if (r < 1 || r > m || c < 1 || c > n) throw ParseError("entry out of range", tok.pos);
        rows[r - 1].push_back(static_cast<std::uint32_t>(c - 1));
    }
    SparseMatrix h(m, n);
    for (std::size_t r = 0; r < m; ++r) h.set_row(r, std::move(rows[r]));
    return h;
}

ClassicalCode parse_code_spec(const std::string& spec) {
    auto starts = [&](const char* prefix) { return spec.rfind(prefix, 0) == 0; };
    if (starts("rep:")) {
        TokenReader tok(spec);
        tok.pos = 4;
        long long L = tok.next_int("repetition length");
        if (tok.pos != spec.size()) throw ParseError("trailing characters in rep spec", tok.pos);
        if (L < 2) throw ParseError("rep length must be at least 2", 4);
        if (L > 1 << 20) throw ParseError("rep length unreasonably large", 4);
        return repetition_code(static_cast<int>(L));
    }
    if (starts("alist:")) {
        const std::string path = spec.substr(6);
        if (path.empty()) throw ParseError("missing alist path", 6);
        std::string text;
        try {
            text = read_file(path);
        } catch (const std::exception& e) {
            throw ParseError(std::string("unreadable alist file (") + e.what() + ")", 6);
        }
        return make_classical_code(import_alist(text));
    }
    if (starts("random:")) {
        TokenReader tok(spec);
        tok.pos = 7;
        const std::size_t n = tok.next_count("bit count");
        if (tok.pos >= spec.size() || spec[tok.pos] != 'x')
            throw ParseError("expected 'x' between dimensions", tok.pos);
        ++tok.pos;
        const std::size_t m = tok.next_count("check count");
        if (tok.pos >= spec.size() || spec[tok.pos] != ':')
            throw ParseError("expected ':' before seed", tok.pos);
        ++tok.pos;
        const std::uint64_t seed = static_cast<std::uint64_t>(tok.next_int("seed"));
        if (tok.pos != spec.size()) throw ParseError("trailing characters in random spec", tok.pos);
        if (n == 0 || m == 0) throw ParseError("random code dimensions must be positive", 7);
        if (n > 4096 || m > 4096) throw ParseError("random code dimensions too large", 7);
        SplitMix64 rng(seed);
        SparseMatrix h(m, n);
        for (std::size_t r = 0; r < m; ++r) {
            std::vector<std::uint32_t> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (rng.next() & 1) row.push_back(static_cast<std::uint32_t>(c));
            }
            h.set_row(r, std::move(row));
        }
        return make_classical_code(std::move(h));
    }
    throw ParseError("unknown code spec (expected rep:, alist: or random:)", 0);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) throw std::runtime_error("read failure on " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out.good()) throw std::runtime_error("write failure on " + path);
}

}  // namespace qbp
