#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbp/bootstrap.hpp"
#include "qbp/gf2.hpp"
#include "qbp/poly.hpp"

#include <json.hpp>

namespace qbp {

/// Classical linear code as a parity-check matrix (checks x bits).
struct ClassicalCode {
    std::size_t n_bits = 0;
    std::size_t n_checks = 0;
    SparseMatrix h;
    // bit -> incident checks, kept in sync with h
    std::vector<std::vector<std::uint32_t>> bit_checks;
};

ClassicalCode make_classical_code(SparseMatrix h);

/// Cyclic repetition code on L bits: check i couples bits i and i+1 mod L.
/// L = 1 is rejected (the check would couple a bit with itself and cancel).
ClassicalCode repetition_code(int L);

/// Basis element of a tensor-product chain group: a direction set S plus one
/// local index per factor (a bit index of code i when i is in S, a check
/// index otherwise). Doubles as a lattice cell label when every factor is a
/// length-L repetition code.
struct CellLabel {
    Monomial directions = 0;
    std::vector<std::uint32_t> locals;

    bool operator==(const CellLabel&) const = default;
};

std::string render_cell(const CellLabel& c);

/// Canonical indexing of the degree-k chain group: sectors ordered by
/// lexicographic direction set, elements by mixed radix with factor 1 most
/// significant.
class TensorBasis {
public:
    struct Sector {
        Monomial directions = 0;
        std::size_t offset = 0;
        std::size_t size = 0;
        std::vector<std::uint32_t> radix;    // per factor
        std::vector<std::size_t> stride;     // per factor
    };

    TensorBasis(const std::vector<ClassicalCode>& codes, int degree);

    std::size_t size() const { return total_; }
    int degree() const { return degree_; }
    const std::vector<Sector>& sectors() const { return sectors_; }

    const Sector& sector_of(Monomial directions) const;
    std::size_t rank_of(Monomial directions, const std::vector<std::uint32_t>& locals) const;
    CellLabel label_of(std::size_t rank) const;

private:
    int degree_ = 0;
    std::size_t total_ = 0;
    std::vector<Sector> sectors_;
};

std::vector<CellLabel> enumerate_basis(const std::vector<ClassicalCode>& codes, int degree);

/// Instantiates a boundary polynomial as the sparse matrix of the map from
/// the degree-`from_degree` chain group to the one `deg(f)` lower: a term
/// d^S sends (T, locals) to zero unless S is inside T, and otherwise applies
/// each code's bit->checks incidence on the S factors.
SparseMatrix instantiate(const Poly& f, const std::vector<ClassicalCode>& codes, int from_degree);

struct ZBlockLabel {
    Monomial support = 0;        // direction subset the block lives on
    std::size_t generator = 0;   // generator index within the level
    std::size_t rows = 0;
    std::string generator_text;
};

struct CssCode {
    std::size_t n_qubits = 0;
    SparseMatrix h_x;  // X-checks x qubits
    SparseMatrix h_z;  // Z-checks x qubits
    std::vector<CellLabel> qubit_labels;
    std::vector<ZBlockLabel> z_blocks;
};

/// Assembles the CSS code of a solved fork complex over the given input
/// codes. X-checks come from instantiating e_{q-w}(p); Z-check rows are laid
/// out per (level, subset, generator, block element) in canonical order.
/// The h_x h_z^T = 0 condition is re-verified before returning.
CssCode build_css(const ForkComplexSpec& spec, const std::vector<ClassicalCode>& codes);

/// The length-3 tensor-product segment around degree q with both maps given
/// by e_1(p); the reference construction for the q - w = 1 family.
CssCode hgp_reference(const std::vector<ClassicalCode>& codes, int q);

nlohmann::ordered_json css_metadata(const CssCode& code, int p, int q, int w);

}  // namespace qbp
