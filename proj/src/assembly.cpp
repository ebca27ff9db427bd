#include "qbp/assembly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qbp {

ClassicalCode make_classical_code(SparseMatrix h) {
    ClassicalCode c;
    c.n_bits = h.cols;
    c.n_checks = h.rows;
    c.bit_checks.assign(h.cols, {});
    for (std::size_t r = 0; r < h.rows; ++r) {
        for (std::uint32_t b : h.row_cols[r]) c.bit_checks[b].push_back(static_cast<std::uint32_t>(r));
    }
    c.h = std::move(h);
    return c;
}

ClassicalCode repetition_code(int L) {
    if (L < 2) throw std::invalid_argument("repetition_code: L must be at least 2");
    SparseMatrix h(static_cast<std::size_t>(L), static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) {
        h.set_row(static_cast<std::size_t>(i),
                  {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>((i + 1) % L)});
    }
    return make_classical_code(std::move(h));
}

std::string render_cell(const CellLabel& c) {
    static const char* axis = "xyzw";
    std::string dirs;
    for (int i : monomial_indices(c.directions)) {
        if (!dirs.empty()) dirs += ",";
        if (i <= 4) dirs += axis[i - 1];
        else dirs += "d" + std::to_string(i);
    }
    std::string pos;
    for (std::size_t i = 0; i < c.locals.size(); ++i) {
        if (i) pos += ",";
        pos += std::to_string(c.locals[i]);
    }
    return "A={" + dirs + "}@(" + pos + ")";
}

TensorBasis::TensorBasis(const std::vector<ClassicalCode>& codes, int degree) : degree_(degree) {
    const int p = static_cast<int>(codes.size());
    if (degree < 0 || degree > p) throw std::invalid_argument("TensorBasis: degree out of range");
    std::size_t offset = 0;
    for (Monomial dirs : monomials_of_degree(full_support(p), degree)) {
        Sector s;
        s.directions = dirs;
        s.offset = offset;
        s.radix.resize(static_cast<std::size_t>(p));
        s.stride.assign(static_cast<std::size_t>(p), 0);
        for (int i = 0; i < p; ++i) {
            bool in = (dirs >> i) & 1;
            s.radix[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(
                in ? codes[static_cast<std::size_t>(i)].n_bits : codes[static_cast<std::size_t>(i)].n_checks);
        }
        std::size_t sz = 1;
        for (int i = p - 1; i >= 0; --i) {
            s.stride[static_cast<std::size_t>(i)] = sz;
            sz *= s.radix[static_cast<std::size_t>(i)];
        }
        s.size = sz;
        offset += sz;
        sectors_.push_back(std::move(s));
    }
    total_ = offset;
}

const TensorBasis::Sector& TensorBasis::sector_of(Monomial directions) const {
    auto it = std::lower_bound(sectors_.begin(), sectors_.end(), directions,
                               [](const Sector& s, Monomial m) { return monomial_lex_less(s.directions, m); });
    if (it == sectors_.end() || it->directions != directions)
        throw std::invalid_argument("TensorBasis: unknown direction set");
    return *it;
}

std::size_t TensorBasis::rank_of(Monomial directions, const std::vector<std::uint32_t>& locals) const {
    const Sector& s = sector_of(directions);
    if (locals.size() != s.radix.size()) throw std::invalid_argument("TensorBasis: locals size mismatch");
    std::size_t r = s.offset;
    for (std::size_t i = 0; i < locals.size(); ++i) {
        if (locals[i] >= s.radix[i]) throw std::invalid_argument("TensorBasis: local index out of range");
        r += locals[i] * s.stride[i];
    }
    return r;
}

CellLabel TensorBasis::label_of(std::size_t rank) const {
    for (const Sector& s : sectors_) {
        if (rank < s.offset || rank >= s.offset + s.size) continue;
        std::size_t rem = rank - s.offset;
        CellLabel c;
        c.directions = s.directions;
        c.locals.resize(s.radix.size());
        for (std::size_t i = 0; i < s.radix.size(); ++i) {
            c.locals[i] = static_cast<std::uint32_t>(rem / s.stride[i]);
            rem %= s.stride[i];
        }
        return c;
    }
    throw std::out_of_range("TensorBasis: rank out of range");
}

std::vector<CellLabel> enumerate_basis(const std::vector<ClassicalCode>& codes, int degree) {
    TensorBasis basis(codes, degree);
    std::vector<CellLabel> out;
    out.reserve(basis.size());
    for (const auto& s : basis.sectors()) {
        CellLabel c;
        c.directions = s.directions;
        c.locals.assign(s.radix.size(), 0);
        for (std::size_t e = 0; e < s.size; ++e) {
            out.push_back(c);
            // odometer, last factor fastest
            for (std::size_t i = s.radix.size(); i-- > 0;) {
                if (++c.locals[i] < s.radix[i]) break;
                c.locals[i] = 0;
            }
        }
    }
    return out;
}

namespace {

// Appends the images of (dirs, locals) under the monomial term `mono`
// (requires mono inside dirs): the cartesian product of bit->checks
// incidences over the factors named by mono.
void apply_term(const std::vector<ClassicalCode>& codes, const TensorBasis& out_basis,
                Monomial dirs, const std::vector<std::uint32_t>& locals, Monomial mono,
                std::vector<std::size_t>& out_ranks) {
    std::vector<int> factors = monomial_indices(mono);
    std::vector<const std::vector<std::uint32_t>*> choices;
    choices.reserve(factors.size());
    for (int i : factors) {
        const auto& incident = codes[static_cast<std::size_t>(i - 1)].bit_checks[locals[static_cast<std::size_t>(i - 1)]];
        if (incident.empty()) return;  // boundary of this bit vanishes
        choices.push_back(&incident);
    }
    std::vector<std::uint32_t> img = locals;
    std::vector<std::size_t> pick(factors.size(), 0);
    const Monomial out_dirs = dirs & ~mono;
    while (true) {
        for (std::size_t k = 0; k < factors.size(); ++k)
            img[static_cast<std::size_t>(factors[k] - 1)] = (*choices[k])[pick[k]];
        out_ranks.push_back(out_basis.rank_of(out_dirs, img));
        std::size_t k = factors.size();
        while (k-- > 0) {
            if (++pick[k] < choices[k]->size()) break;
            pick[k] = 0;
            if (k == 0) return;
        }
        if (factors.empty()) return;
    }
}

// GF(2) cancellation of repeated ranks.
void cancel_mod2(std::vector<std::size_t>& v) {
    std::sort(v.begin(), v.end());
    std::size_t o = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) % 2) v[o++] = v[i];
        i = j;
    }
    v.resize(o);
}

}  // namespace

SparseMatrix instantiate(const Poly& f, const std::vector<ClassicalCode>& codes, int from_degree) {
    const int p = static_cast<int>(codes.size());
    if (f.degree < 0 || f.degree > from_degree || from_degree > p)
        throw std::invalid_argument("instantiate: degree mismatch");
    if ((f.support() & ~full_support(p)) != 0)
        throw std::invalid_argument("instantiate: polynomial uses variables beyond the code list");

    TensorBasis in_basis(codes, from_degree);
    TensorBasis out_basis(codes, from_degree - f.degree);
    SparseMatrix m(out_basis.size(), in_basis.size());

    std::vector<std::size_t> ranks;
    for (const auto& s : in_basis.sectors()) {
        std::vector<std::uint32_t> locals(s.radix.size(), 0);
        for (std::size_t e = 0; e < s.size; ++e) {
            const std::size_t col = s.offset + e;
            ranks.clear();
            for (Monomial term : f.terms) {
                if ((term & ~s.directions) == 0)
                    apply_term(codes, out_basis, s.directions, locals, term, ranks);
            }
            cancel_mod2(ranks);
            for (std::size_t r : ranks) m.row_cols[r].push_back(static_cast<std::uint32_t>(col));
            for (std::size_t i = s.radix.size(); i-- > 0;) {
                if (++locals[i] < s.radix[i]) break;
                locals[i] = 0;
            }
        }
    }
    return m;
}

namespace {

std::map<int, int> order_preserving_map(int t_small, Monomial target_subset) {
    std::vector<int> targets = monomial_indices(target_subset);
    std::map<int, int> m;
    for (int i = 0; i < t_small; ++i) m[i + 1] = targets[static_cast<std::size_t>(i)];
    return m;
}

void verify_commutation(const CssCode& code, const char* what) {
    if (!matmul(code.h_x, transpose(code.h_z)).is_zero())
        throw std::logic_error(std::string(what) + ": X and Z checks fail to commute");
}

}  // namespace

CssCode build_css(const ForkComplexSpec& spec, const std::vector<ClassicalCode>& codes) {
    const int p = spec.p;
    if (static_cast<int>(codes.size()) != p)
        throw std::invalid_argument("build_css: need exactly p input codes");

    CssCode code;
    code.h_x = instantiate(elementary_symmetric(p, spec.q - spec.w), codes, spec.q);
    TensorBasis qubits(codes, spec.q);
    code.n_qubits = qubits.size();
    code.qubit_labels = enumerate_basis(codes, spec.q);

    code.h_z = SparseMatrix(0, qubits.size());
    std::vector<std::size_t> ranks;
    for (const LevelSolution& lvl : spec.levels) {
        for (Monomial sub : monomials_of_degree(full_support(p), lvl.t)) {
            for (std::size_t gi = 0; gi < lvl.canonical_generators.size(); ++gi) {
                const Poly gen = relabel(lvl.canonical_generators[gi], order_preserving_map(lvl.t, sub));
                // block sector: bits on `sub`, checks elsewhere
                std::vector<std::uint32_t> radix(static_cast<std::size_t>(p));
                std::size_t block_size = 1;
                for (int i = 0; i < p; ++i) {
                    bool in = (sub >> i) & 1;
                    radix[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(
                        in ? codes[static_cast<std::size_t>(i)].n_bits
                           : codes[static_cast<std::size_t>(i)].n_checks);
                    block_size *= radix[static_cast<std::size_t>(i)];
                }
                std::vector<std::uint32_t> locals(static_cast<std::size_t>(p), 0);
                for (std::size_t e = 0; e < block_size; ++e) {
                    ranks.clear();
                    for (Monomial term : gen.terms)
                        apply_term(codes, qubits, sub, locals, term, ranks);
                    cancel_mod2(ranks);
                    std::vector<std::uint32_t> row(ranks.begin(), ranks.end());
                    code.h_z.row_cols.push_back(std::move(row));
                    for (std::size_t i = radix.size(); i-- > 0;) {
                        if (++locals[i] < radix[i]) break;
                        locals[i] = 0;
                    }
                }
                code.z_blocks.push_back(ZBlockLabel{sub, gi, block_size,
                                                    render_poly(lvl.canonical_generators[gi])});
            }
        }
    }
    code.h_z.rows = code.h_z.row_cols.size();

    verify_commutation(code, "build_css");
    return code;
}

CssCode hgp_reference(const std::vector<ClassicalCode>& codes, int q) {
    const int p = static_cast<int>(codes.size());
    if (q < 1 || q > p - 1) throw std::invalid_argument("hgp_reference: need 1 <= q <= p-1");

    const Poly d1 = elementary_symmetric(p, 1);
    CssCode code;
    code.h_x = instantiate(d1, codes, q);
    code.h_z = transpose(instantiate(d1, codes, q + 1));
    TensorBasis qubits(codes, q);
    code.n_qubits = qubits.size();
    code.qubit_labels = enumerate_basis(codes, q);

    for (const auto& s : TensorBasis(codes, q + 1).sectors()) {
        std::vector<Monomial> terms;
        for (int i : monomial_indices(s.directions)) terms.push_back(Monomial(1) << (i - 1));
        code.z_blocks.push_back(ZBlockLabel{s.directions, 0, s.size, render_poly(Poly{1, terms})});
    }

    verify_commutation(code, "hgp_reference");
    return code;
}

nlohmann::ordered_json css_metadata(const CssCode& code, int p, int q, int w) {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["q"] = q;
    j["w"] = w;
    j["n"] = code.n_qubits;
    j["x_checks"] = code.h_x.rows;
    j["z_checks"] = code.h_z.rows;
    j["z_blocks"] = nlohmann::ordered_json::array();
    for (const ZBlockLabel& b : code.z_blocks) {
        nlohmann::ordered_json jb;
        jb["support"] = monomial_indices(b.support);
        jb["generator"] = b.generator_text;
        jb["rows"] = b.rows;
        j["z_blocks"].push_back(std::move(jb));
    }
    return j;
}

}  // namespace qbp
