#include "qbp/poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qbp {

Monomial monomial_from_indices(const std::vector<int>& indices) {
    Monomial m = 0;
    for (int i : indices) {
        if (i < 1 || i > kMaxVariables) throw std::invalid_argument("monomial index out of range");
        Monomial bit = Monomial(1) << (i - 1);
        if (m & bit) throw std::invalid_argument("monomial index repeated");
        m |= bit;
    }
    return m;
}

std::vector<int> monomial_indices(Monomial m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

int monomial_degree(Monomial m) { return std::popcount(m); }

std::optional<Monomial> monomial_product(Monomial a, Monomial b) {
    if (a & b) return std::nullopt;
    return a | b;
}

bool monomial_lex_less(Monomial a, Monomial b) {
    while (a && b) {
        int ia = std::countr_zero(a);
        int ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::vector<Monomial> monomials_of_degree(Monomial support, int k) {
    std::vector<int> vars = monomial_indices(support);
    int t = static_cast<int>(vars.size());
    std::vector<Monomial> out;
    if (k < 0 || k > t) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Monomial m = 0;
        for (int i : idx) m |= Monomial(1) << (vars[static_cast<std::size_t>(i)] - 1);
        out.push_back(m);
        // next k-combination of {0..t-1} in lexicographic order
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == t - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

Monomial full_support(int t) {
    if (t < 0 || t > kMaxVariables) throw std::invalid_argument("support size out of range");
    return t == 0 ? 0 : (~Monomial(0) >> (kWordBits - static_cast<unsigned>(t)));
}

Monomial Poly::support() const {
    Monomial s = 0;
    for (Monomial m : terms) s |= m;
    return s;
}

Poly make_poly(int degree, std::vector<Monomial> terms) {
    if (degree < 0) throw std::invalid_argument("negative polynomial degree");
    std::sort(terms.begin(), terms.end(), monomial_lex_less);
    // GF(2) cancellation: drop pairs of equal terms.
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2) kept.push_back(terms[i]);
        i = j;
    }
    for (Monomial m : kept) {
        if (monomial_degree(m) != degree)
            throw std::invalid_argument("polynomial is not homogeneous of the stated degree");
    }
    return Poly{degree, std::move(kept)};
}

Poly poly_add(const Poly& f, const Poly& g) {
    if (!f.is_zero() && !g.is_zero() && f.degree != g.degree)
        throw std::invalid_argument("poly_add: degree mismatch");
    int deg = f.is_zero() ? g.degree : f.degree;
    std::vector<Monomial> terms;
    terms.reserve(f.terms.size() + g.terms.size());
    terms.insert(terms.end(), f.terms.begin(), f.terms.end());
    terms.insert(terms.end(), g.terms.begin(), g.terms.end());
    return make_poly(deg, std::move(terms));
}

Poly poly_product(const Poly& f, const Poly& g) {
    std::vector<Monomial> terms;
    for (Monomial a : f.terms) {
        for (Monomial b : g.terms) {
            if (auto m = monomial_product(a, b)) terms.push_back(*m);
        }
    }
    return make_poly(f.degree + g.degree, std::move(terms));
}

Poly elementary_symmetric(int t, int k) {
    if (t < 0 || t > kMaxVariables) throw std::invalid_argument("elementary_symmetric: bad variable count");
    if (k < 0 || k > t) throw std::invalid_argument("elementary_symmetric: degree exceeds variable count");
    return Poly{k, monomials_of_degree(full_support(t), k)};
}

Poly restrict_to(const Poly& f, Monomial support) {
    std::vector<Monomial> terms;
    for (Monomial m : f.terms) {
        if ((m & ~support) == 0) terms.push_back(m);
    }
    return Poly{f.degree, std::move(terms)};
}

Poly relabel(const Poly& f, const std::map<int, int>& index_map) {
    for (const auto& [from, to] : index_map) {
        if (from < 1 || from > kMaxVariables || to < 1 || to > kMaxVariables)
            throw std::invalid_argument("relabel: index out of range");
    }
    // Injectivity on the support: distinct support indices must land apart.
    std::vector<int> sup = monomial_indices(f.support());
    std::vector<int> images;
    for (int i : sup) {
        auto it = index_map.find(i);
        images.push_back(it == index_map.end() ? i : it->second);
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
        throw std::invalid_argument("relabel: map not injective on the support");

    std::vector<Monomial> terms;
    for (Monomial m : f.terms) {
        Monomial out = 0;
        for (int i : monomial_indices(m)) {
            auto it = index_map.find(i);
            int j = it == index_map.end() ? i : it->second;
            out |= Monomial(1) << (j - 1);
        }
        terms.push_back(out);
    }
    return make_poly(f.degree, std::move(terms));
}

MulMatrix multiplication_matrix(const Poly& tau, int d_sol, Monomial support) {
    if ((tau.support() & ~support) != 0)
        throw std::invalid_argument("multiplication_matrix: tau not supported inside support");
    MulMatrix mm;
    mm.in_basis = monomials_of_degree(support, d_sol);
    mm.out_basis = monomials_of_degree(support, d_sol + tau.degree);
    mm.m = BitMatrix(mm.out_basis.size(), mm.in_basis.size());
    for (std::size_t j = 0; j < mm.in_basis.size(); ++j) {
        Poly col = poly_product(tau, Poly{d_sol, {mm.in_basis[j]}});
        for (Monomial m : col.terms) {
            auto it = std::lower_bound(mm.out_basis.begin(), mm.out_basis.end(), m, monomial_lex_less);
            mm.m.set(static_cast<std::size_t>(it - mm.out_basis.begin()), j);
        }
    }
    return mm;
}

BitVector poly_to_vector(const Poly& f, const std::vector<Monomial>& basis) {
    BitVector v(basis.size());
    for (Monomial m : f.terms) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m, monomial_lex_less);
        if (it == basis.end() || *it != m)
            throw std::invalid_argument("poly_to_vector: term outside basis");
        v.set(static_cast<std::size_t>(it - basis.begin()));
    }
    return v;
}

Poly vector_to_poly(const BitVector& v, const std::vector<Monomial>& basis, int degree) {
    std::vector<Monomial> terms;
    std::size_t i = v.first_set();
    while (i != kNpos) {
        terms.push_back(basis.at(i));
        i = v.first_set(i + 1);
    }
    return Poly{degree, std::move(terms)};
}

std::string render_monomial(Monomial m) {
    if (m == 0) return "1";
    std::string s;
    for (int i : monomial_indices(m)) {
        if (!s.empty()) s += "*";
        s += "d" + std::to_string(i);
    }
    return s;
}

std::string render_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (Monomial m : f.terms) {
        if (!s.empty()) s += " + ";
        s += render_monomial(m);
    }
    return s;
}

}  // namespace qbp
