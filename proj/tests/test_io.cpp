#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "qbp/io.hpp"

#include "helpers.hpp"

using namespace qbp;
using namespace qbp::test;

namespace {

SparseMatrix random_sparse(std::size_t rows, std::size_t cols, SplitMix64& rng) {
    SparseMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<std::uint32_t> row;
        for (std::size_t c = 0; c < cols; ++c) {
            if (rng.below(3) == 0) row.push_back(static_cast<std::uint32_t>(c));
        }
        m.set_row(r, std::move(row));
    }
    return m;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("qbp_test_" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("alist export of rep(3)") {
    ClassicalCode c = repetition_code(3);
    std::string text = export_alist(c.h);
    CHECK(text ==
          "3 3\n"
          "2 2\n"
          "2 2 2\n"
          "2 2 2\n"
          "1 3\n"
          "1 2\n"
          "2 3\n"
          "1 2\n"
          "2 3\n"
          "1 3\n");
    CHECK(import_alist(text) == c.h);
}

TEST_CASE("alist round trip on random matrices") {
    SplitMix64 rng(61);
    for (int it = 0; it < 50; ++it) {
        SparseMatrix m = random_sparse(1 + rng.below(12), 1 + rng.below(12), rng);
        CHECK(import_alist(export_alist(m)) == m);
    }
}

TEST_CASE("alist of the empty matrix") {
    SparseMatrix m(0, 0);
    std::string text = export_alist(m);
    CHECK(text.rfind("0 0\n0 0\n", 0) == 0);
    CHECK(import_alist(text) == m);
}

TEST_CASE("alist rejects malformed input") {
    CHECK_THROWS_AS(import_alist("3"), ParseError);
    CHECK_THROWS_AS(import_alist("1 1\n1 1\n2\n1\n1\n1\n"), ParseError);  // weight disagrees
}

TEST_CASE("mtx round trip") {
    SplitMix64 rng(62);
    for (int it = 0; it < 20; ++it) {
        SparseMatrix m = random_sparse(1 + rng.below(10), 1 + rng.below(10), rng);
        CHECK(import_mtx(export_mtx(m)) == m);
    }
    CHECK_THROWS_AS(import_mtx("not a matrix"), ParseError);
}

TEST_CASE("parse_code_spec rep") {
    ClassicalCode c = parse_code_spec("rep:3");
    CHECK(c.n_bits == 3);
    CHECK(c.n_checks == 3);
    for (const auto& row : c.h.row_cols) CHECK(row.size() == 2);

    CHECK_THROWS_AS(parse_code_spec("rep:1"), ParseError);
    CHECK_THROWS_AS(parse_code_spec("rep:x"), ParseError);
    CHECK_THROWS_AS(parse_code_spec("rep:3 "), ParseError);
    CHECK_THROWS_AS(parse_code_spec("bogus:3"), ParseError);
}

TEST_CASE("parse_code_spec alist round trip") {
    TempDir tmp;
    const std::string path = (tmp.path / "rep3.alist").string();
    write_file(path, export_alist(repetition_code(3).h));
    ClassicalCode c = parse_code_spec("alist:" + path);
    CHECK(c.h == repetition_code(3).h);

    CHECK_THROWS_AS(parse_code_spec("alist:/nonexistent/file.alist"), ParseError);
}

TEST_CASE("parse_code_spec random is deterministic") {
    ClassicalCode a = parse_code_spec("random:6x4:99");
    ClassicalCode b = parse_code_spec("random:6x4:99");
    CHECK(a.h == b.h);
    CHECK(a.n_bits == 6);
    CHECK(a.n_checks == 4);
    ClassicalCode c = parse_code_spec("random:6x4:100");
    CHECK(a.h != c.h);

    CHECK_THROWS_AS(parse_code_spec("random:6x4"), ParseError);
    CHECK_THROWS_AS(parse_code_spec("random:0x4:1"), ParseError);
}

TEST_CASE("exports are byte-identical across runs") {
    ClassicalCode c = parse_code_spec("random:8x5:7");
    CHECK(export_alist(c.h) == export_alist(parse_code_spec("random:8x5:7").h));
    CHECK(export_mtx(c.h) == export_mtx(parse_code_spec("random:8x5:7").h));
}
