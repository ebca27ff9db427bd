#include "qbp/bootstrap.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qbp {

void validate_triple(int p, int q, int w) {
    if (!(p > q && q > w && w >= 0))
        throw std::invalid_argument("QBP triple requires p > q > w >= 0");
    if (p > kMaxVariables) throw std::invalid_argument("triple exceeds supported variable count");
}

std::vector<Poly> solve_level(int p, int q, int w, int t) {
    validate_triple(p, q, w);
    if (!(t > q && t <= p)) throw std::invalid_argument("solve_level requires q < t <= p");

    // Restriction of e_{q-w}(p) to {1..t} is e_{q-w}(t).
    Poly tau = elementary_symmetric(t, q - w);
    MulMatrix mm = multiplication_matrix(tau, t - q, full_support(t));
    BitMatrix kernel = nullspace_basis(mm.m);

    std::vector<Poly> basis;
    basis.reserve(kernel.rows());
    for (std::size_t r = 0; r < kernel.rows(); ++r)
        basis.push_back(vector_to_poly(kernel.row_copy(r), mm.in_basis, t - q));
    return basis;
}

namespace {

std::map<int, int> order_preserving_map(int t_small, Monomial target_subset) {
    std::vector<int> targets = monomial_indices(target_subset);
    std::map<int, int> m;
    for (int i = 0; i < t_small; ++i) m[i + 1] = targets[static_cast<std::size_t>(i)];
    return m;
}

}  // namespace

std::vector<Poly> filter_primitive(const std::vector<Poly>& v_sol,
                                   const std::vector<LevelSolution>& lower_levels,
                                   int t, int q) {
    const Monomial support = full_support(t);
    const int d_sol = t - q;
    const std::vector<Monomial> basis = monomials_of_degree(support, d_sol);

    // V_red: each lower generator, on every size-t' subset of {1..t},
    // multiplied by the full monomial on the complementary indices.
    Eliminator red(basis.size());
    for (const LevelSolution& lvl : lower_levels) {
        if (lvl.t >= t) throw std::invalid_argument("filter_primitive: lower level not below t");
        for (const Poly& g : lvl.canonical_generators) {
            for (Monomial sub : monomials_of_degree(support, lvl.t)) {
                Poly embedded = relabel(g, order_preserving_map(lvl.t, sub));
                Monomial cof = support & ~sub;
                Poly prod = poly_product(embedded, Poly{monomial_degree(cof), {cof}});
                if ((prod.support() & ~support) != 0)
                    throw std::logic_error("filter_primitive: embedding left the support");
                red.insert(poly_to_vector(prod, basis));
            }
        }
    }

    // Quotient representatives: mutually reduced rows, each first reduced
    // against V_red so its V_red-pivot coordinates vanish.
    Eliminator prim(basis.size());
    for (const Poly& f : v_sol) {
        if ((f.support() & ~support) != 0)
            throw std::invalid_argument("filter_primitive: solution outside {1..t}");
        prim.insert(red.reduce(poly_to_vector(f, basis)));
    }

    std::vector<std::size_t> order(prim.rank());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return prim.pivots()[a] < prim.pivots()[b]; });

    std::vector<Poly> out;
    out.reserve(order.size());
    for (std::size_t i : order) out.push_back(vector_to_poly(prim.rows()[i], basis, d_sol));
    return out;
}

std::vector<Poly> greedy_reduce(std::vector<Poly> basis) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                Poly candidate = poly_add(basis[i], basis[j]);
                if (candidate.weight() < basis[i].weight()) {
                    basis[i] = std::move(candidate);
                    changed = true;
                }
            }
        }
    }
    return basis;
}

ForkComplexSpec solve_fork(int p, int q, int w) {
    validate_triple(p, q, w);
    ForkComplexSpec spec{p, q, w, {}};
    for (int t = q + 1; t <= p; ++t) {
        std::vector<Poly> v_sol = solve_level(p, q, w, t);
        std::vector<Poly> v_prim = filter_primitive(v_sol, spec.levels, t, q);
        spec.levels.push_back(LevelSolution{t, greedy_reduce(std::move(v_prim))});
    }
    return spec;
}

nlohmann::ordered_json fork_to_json(const ForkComplexSpec& spec) {
    nlohmann::ordered_json j;
    j["p"] = spec.p;
    j["q"] = spec.q;
    j["w"] = spec.w;
    j["levels"] = nlohmann::ordered_json::array();
    for (const LevelSolution& lvl : spec.levels) {
        nlohmann::ordered_json jl;
        jl["t"] = lvl.t;
        jl["generators"] = nlohmann::ordered_json::array();
        for (const Poly& g : lvl.canonical_generators) jl["generators"].push_back(render_poly(g));
        j["levels"].push_back(std::move(jl));
    }
    return j;
}

std::string fork_to_json_text(const ForkComplexSpec& spec) {
    return fork_to_json(spec).dump(2) + "\n";
}

}  // namespace qbp
