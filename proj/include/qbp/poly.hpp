#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbp/gf2.hpp"

namespace qbp {

/// Squarefree monomial in the formal variables d1..d63: bit (i-1) set means
/// variable i appears. The empty mask is the unit.
using Monomial = std::uint64_t;

inline constexpr int kMaxVariables = 63;

Monomial monomial_from_indices(const std::vector<int>& indices);
std::vector<int> monomial_indices(Monomial m);
int monomial_degree(Monomial m);

/// Product of squarefree monomials: union when disjoint, nullopt (zero)
/// when a variable is shared.
std::optional<Monomial> monomial_product(Monomial a, Monomial b);

/// Lexicographic order on the sorted index tuples, e.g. d1*d4 < d2*d3.
bool monomial_lex_less(Monomial a, Monomial b);

/// All degree-k monomials supported inside `support`, in lexicographic order.
std::vector<Monomial> monomials_of_degree(Monomial support, int k);

/// Mask {1..t}.
Monomial full_support(int t);

/// Homogeneous GF(2) polynomial in d1..dp. Terms are lex-sorted and
/// duplicate-free; the empty term set is the zero polynomial, which keeps a
/// degree tag from context and is compatible with any homogeneity check.
struct Poly {
    int degree = 0;
    std::vector<Monomial> terms;

    bool is_zero() const { return terms.empty(); }
    Monomial support() const;
    std::size_t weight() const { return terms.size(); }

    bool operator==(const Poly&) const = default;
};

/// Canonicalizes (sorts, cancels duplicate pairs) and checks homogeneity.
Poly make_poly(int degree, std::vector<Monomial> terms);

Poly poly_add(const Poly& f, const Poly& g);
Poly poly_product(const Poly& f, const Poly& g);

/// Sum of all C(t,k) degree-k squarefree monomials on {1..t}; e_0 is the unit.
Poly elementary_symmetric(int t, int k);

/// Terms of f whose variables all lie in `support`.
Poly restrict_to(const Poly& f, Monomial support);

/// Applies an index bijection to every variable of f. Indices absent from
/// the map stay fixed; the map must be injective on the support of f.
Poly relabel(const Poly& f, const std::map<int, int>& index_map);

struct MulMatrix {
    BitMatrix m;  // rows indexed by out_basis, columns by in_basis
    std::vector<Monomial> in_basis;
    std::vector<Monomial> out_basis;
};

/// Matrix of multiplication by tau from degree d_sol to degree
/// d_sol + deg(tau) on `support`, both bases in lexicographic order.
/// Degree overflow past |support| yields an empty out_basis and zero rows.
MulMatrix multiplication_matrix(const Poly& tau, int d_sol, Monomial support);

/// Encodes a homogeneous polynomial as a coefficient vector over `basis`.
BitVector poly_to_vector(const Poly& f, const std::vector<Monomial>& basis);
Poly vector_to_poly(const BitVector& v, const std::vector<Monomial>& basis, int degree);

/// "d1*d2 + d1*d3"; the unit renders as "1" and zero as "0".
std::string render_monomial(Monomial m);
std::string render_poly(const Poly& f);

}  // namespace qbp
