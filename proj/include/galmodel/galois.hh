/**
 * @file galois.hh
 * @brief Exact enumeration of Gal(L/K) by level-wise embedding extension,
 *        the fixed-field certificate, and orbits of the group action.
 */
#ifndef GALMODEL_GALOIS_HH
#define GALMODEL_GALOIS_HH

#include <galmodel/roots.hh>

namespace galmodel {

/// automorphism of L fixing K pointwise, stored by generator images
struct FieldAutomorphism {
    std::vector<FieldElement> images; // one per tower generator; K-level generators map to themselves

    FieldElement operator()(const FieldElement& x) const { return substitute_gens(x, images); }
};

inline FieldElement apply_aut(const FieldAutomorphism& sigma, const FieldElement& x) {
    return sigma(x);
}

struct GaloisGroup {
    FieldTower tower;
    std::vector<FieldAutomorphism> elements; // element 0 is the identity
    std::vector<std::vector<size_t>> table;  // table[i][j] = index of elements[i] composed after elements[j]

    size_t order() const { return elements.size(); }

    size_t compose(size_t i, size_t j) const { return table[i][j]; }

    size_t inverse_of(size_t i) const {
        for (size_t j = 0; j < order(); ++j)
            if (table[i][j] == 0) return j;
        throw InternalError("GaloisGroup: element without inverse");
    }
};

/// the K-basis of L: monomials in the L-level generators, index mixed-radix
inline std::vector<FieldElement> l_part_basis(const FieldTower& T) {
    std::vector<FieldElement> basis;
    const size_t nL = T.degree_over_base();
    for (size_t idx = 0; idx < nL; ++idx) {
        size_t rest = idx;
        FieldElement b = T.one();
        for (size_t i = T.base_mark(); i < T.gen_count(); ++i) {
            size_t d = size_t(T.gen_info(i).deg);
            size_t e = rest % d;
            rest /= d;
            if (e) b = b * T.gen(i).pow(long(e));
        }
        basis.push_back(b);
    }
    return basis;
}

/**
 * All automorphisms of L over K, found by extending embeddings one generator
 * at a time; candidate images are the roots of the transported minimal
 * polynomials. Deterministic ordering: identity first, the rest sorted by
 * the coordinate tuples of their generator images.
 */
inline GaloisGroup enumerate_gal(const FieldTower& T, const Budgets& budget = {}) {
    GaloisGroup G;
    G.tower = T;

    std::vector<FieldElement> identity_images;
    for (size_t i = 0; i < T.gen_count(); ++i) identity_images.push_back(T.gen(i));

    std::vector<std::vector<FieldElement>> partial{identity_images};
    for (size_t i = T.base_mark(); i < T.gen_count(); ++i) {
        std::vector<std::vector<FieldElement>> next;
        for (const auto& imgs : partial) {
            // transport the minimal polynomial of generator i through the partial map
            std::vector<FieldElement> m = T.gen_min_poly(i);
            TowerPoly transported;
            transported.reserve(m.size());
            for (const auto& c : m) transported.push_back(substitute_gens(c, imgs));
            for (const auto& root : roots_in_tower(transported, T, budget)) {
                std::vector<FieldElement> ext = imgs;
                ext[i] = root;
                next.push_back(std::move(ext));
            }
        }
        partial = std::move(next);
    }

    for (auto& imgs : partial) {
        FieldAutomorphism sigma{std::move(imgs)};
        // bijectivity on the K-basis of L
        std::vector<FieldElement> basis = l_part_basis(T);
        const size_t nL = basis.size();
        Mat<TowerField> M(nL, std::vector<FieldElement>(nL, T.zero()));
        for (size_t j = 0; j < nL; ++j) {
            std::vector<FieldElement> col = sigma(basis[j]).flatten_over(T.base_mark());
            for (size_t r = 0; r < nL; ++r) M[r][j] = col[r];
        }
        if (rank(TowerField{T}, M) != nL)
            throw InternalError("enumerate_gal: embedding is not bijective");
        G.elements.push_back(std::move(sigma));
    }

    auto image_cmp = [](const FieldAutomorphism& a, const FieldAutomorphism& b) {
        for (size_t i = 0; i < a.images.size(); ++i) {
            int c = a.images[i].cmp(b.images[i]);
            if (c != 0) return c < 0;
        }
        return false;
    };
    std::sort(G.elements.begin(), G.elements.end(), image_cmp);
    for (size_t i = 0; i < G.elements.size(); ++i) {
        bool is_id = true;
        for (size_t g = 0; g < T.gen_count() && is_id; ++g)
            is_id = G.elements[i].images[g] == T.gen(g);
        if (is_id) {
            std::rotate(G.elements.begin(), G.elements.begin() + long(i), G.elements.begin() + long(i) + 1);
            break;
        }
    }

    // composition table; closure failure would be a kernel bug
    const size_t n = G.elements.size();
    G.table.assign(n, std::vector<size_t>(n, n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            std::vector<FieldElement> comp;
            comp.reserve(T.gen_count());
            for (size_t g = 0; g < T.gen_count(); ++g)
                comp.push_back(G.elements[i](G.elements[j].images[g]));
            size_t found = n;
            for (size_t k = 0; k < n && found == n; ++k) {
                bool same = true;
                for (size_t g = 0; g < T.gen_count() && same; ++g)
                    same = comp[g] == G.elements[k].images[g];
                if (same) found = k;
            }
            if (found == n) throw InternalError("enumerate_gal: composition left the enumerated set");
            G.table[i][j] = found;
        }
    }
    if (G.order() > T.degree_over_base())
        throw InternalError("enumerate_gal: more automorphisms than the extension degree");
    return G;
}

struct FixedFieldReport {
    bool certified = false;   // the joint fixed subspace is exactly K
    size_t fixed_dimension = 0; // dim_K of the fixed subspace
};

/**
 * Decide the paper-level Galois property: K must be the full fixed subfield.
 * Computed as the joint kernel of (sigma - id) on the K-basis of L.
 */
inline FixedFieldReport fixed_field_certify(const GaloisGroup& G, const FieldTower& T) {
    const std::vector<FieldElement> basis = l_part_basis(T);
    const size_t nL = basis.size();
    TowerField K{T};
    Mat<TowerField> stacked;
    for (const auto& sigma : G.elements) {
        for (size_t r = 0; r < nL; ++r) stacked.emplace_back(nL, T.zero());
        size_t base_row = stacked.size() - nL;
        for (size_t j = 0; j < nL; ++j) {
            FieldElement moved = sigma(basis[j]) - basis[j];
            std::vector<FieldElement> col = moved.flatten_over(T.base_mark());
            for (size_t r = 0; r < nL; ++r) stacked[base_row + r][j] = col[r];
        }
    }
    FixedFieldReport rep;
    if (stacked.empty()) { // trivial extension: L = K
        rep.certified = true;
        rep.fixed_dimension = nL;
        return rep;
    }
    Mat<TowerField> kernel = kernel_basis(K, stacked);
    rep.fixed_dimension = kernel.size();
    rep.certified = kernel.size() == 1;
    return rep;
}

/// orbit of a set of elements under the group, deduplicated and ordered
inline std::vector<FieldElement> orbit(const GaloisGroup& G, const std::vector<FieldElement>& xs) {
    std::vector<FieldElement> out;
    for (const auto& x : xs)
        for (const auto& sigma : G.elements) {
            FieldElement y = sigma(x);
            bool seen = false;
            for (const auto& z : out) seen = seen || z == y;
            if (!seen) out.push_back(std::move(y));
        }
    std::sort(out.begin(), out.end(),
              [](const FieldElement& a, const FieldElement& b) { return a.cmp(b) < 0; });
    // stability under further action
    for (const auto& sigma : G.elements)
        for (const auto& x : out) {
            FieldElement y = sigma(x);
            bool seen = false;
            for (const auto& z : out) seen = seen || z == y;
            if (!seen) throw InternalError("orbit: output not stable under the group action");
        }
    return out;
}

} // namespace galmodel

#endif
