/**
 * @file oracle.hpp
 * @brief Independent brute-force ground truth: ball intersections, subspace
 *        enumeration, exhaustive root counts.
 *
 * Everything here is deliberately dumb and exact. The routines never reuse
 * the algebraic shortcuts they are meant to check; ball counts walk the whole
 * code, root counts evaluate at every point, and subspace streams emit
 * canonical reduced-echelon representatives so each subspace appears once.
 */

#ifndef RANKMETRIC_ORACLE_HPP
#define RANKMETRIC_ORACLE_HPP

#include "rankmetric/codes.hpp"
#include "rankmetric/guard.hpp"

namespace rankmetric {

/// Product-formula Gaussian binomial used for the enumeration guard; the
/// full bound calculator lives with the adversary module.
inline BigInt gaussian_binomial_count(std::uint32_t n, std::uint32_t r, const BigInt& q) {
    if (r > n) return 0;
    BigInt num = 1, den = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        BigInt qp = 1;
        for (std::uint32_t j = 0; j < n - i; ++j) qp *= q;
        num *= qp - 1;
        BigInt qd = 1;
        for (std::uint32_t j = 0; j < i + 1; ++j) qd *= q;
        den *= qd - 1;
    }
    return num / den;
}

/// Exact |{c in code : rk(center - c) <= tau}| by full enumeration.
inline BigInt ball_intersection_count(const RankCode& code, const Word& center, std::uint32_t tau,
                                      const EnumGuard& guard = {}) {
    if (center.size() != code.n()) throw std::invalid_argument("center length mismatch");
    BigInt count = 0;
    code.for_each_codeword(guard, [&](const Word& w) {
        if (rank_distance(center, w) <= tau) ++count;
    });
    return count;
}

/**
 * Visit every r-dimensional F_q-subspace of the span of S exactly once.
 *
 * Representatives are canonical: the basis rows form the reduced row echelon
 * form of the subspace in the coordinates of S's basis, and pivot-column
 * sets are visited in lexicographic order with free entries counted in
 * mixed-radix order. Two runs always produce the same stream.
 */
template <typename Fn>
void for_each_subspace(const Subspace& S, std::uint32_t r, const EnumGuard& guard, Fn&& fn) {
    const FieldTower& tw = S.tower();
    const std::uint32_t dim = S.dim();
    if (r > dim) throw std::invalid_argument("subspace dimension exceeds the ambient dimension");
    guard.check(gaussian_binomial_count(dim, r, BigInt(tw.q())), "subspace enumeration");
    if (r == 0) {
        fn(Subspace(tw, {}));
        return;
    }
    // embedded F_q scalars indexed by encoding
    std::vector<FieldElement> scalars;
    for (std::uint64_t v = 0; v < tw.q(); ++v) scalars.push_back(tw.embed(tw.element(Level::fq, v)));

    std::vector<std::uint32_t> pivots(r);
    for (std::uint32_t i = 0; i < r; ++i) pivots[i] = i;
    while (true) {
        // free positions of the echelon pattern: (row i, col j) with
        // j > pivots[i] and j not a pivot column
        std::vector<bool> is_pivot(dim, false);
        for (auto pcol : pivots) is_pivot[pcol] = true;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;
        for (std::uint32_t i = 0; i < r; ++i)
            for (std::uint32_t j = pivots[i] + 1; j < dim; ++j)
                if (!is_pivot[j]) free_pos.push_back({i, j});

        std::vector<std::uint32_t> vals(free_pos.size(), 0);
        while (true) {
            std::vector<FieldElement> basis;
            basis.reserve(r);
            for (std::uint32_t i = 0; i < r; ++i) {
                FieldElement acc = S.basis()[pivots[i]];
                for (std::size_t t = 0; t < free_pos.size(); ++t)
                    if (free_pos[t].first == i && vals[t] != 0)
                        acc += scalars[vals[t]] * S.basis()[free_pos[t].second];
                basis.push_back(acc);
            }
            fn(Subspace(tw, std::move(basis)));
            std::size_t t = 0;
            while (t < vals.size() && ++vals[t] == tw.q()) vals[t++] = 0;
            if (t == vals.size()) break;
        }
        // next pivot combination, lexicographic
        std::int32_t i = static_cast<std::int32_t>(r) - 1;
        while (i >= 0 && pivots[i] == dim - r + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (std::uint32_t j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

inline std::vector<Subspace> enumerate_subspaces(const Subspace& S, std::uint32_t r,
                                                 const EnumGuard& guard = {}) {
    std::vector<Subspace> out;
    for_each_subspace(S, r, guard, [&](Subspace u) { out.push_back(std::move(u)); });
    return out;
}

/// Exact number of zeros of f on the ambient space, by evaluation at every
/// point. A count that is not a power of q signals an arithmetic bug and
/// throws.
inline BigInt root_count(const SigmaPoly& f, const Subspace& ambient, const EnumGuard& guard = {}) {
    guard.check(ambient.size(), "root count");
    BigInt zeros = 0;
    ambient.for_each_element([&](const FieldElement& x) {
        if (f.eval(x).is_zero()) ++zeros;
    });
    if (!f.is_zero()) {
        BigInt t = zeros;
        const BigInt q = ambient.tower().q();
        while (t > 1 && t % q == 0) t /= q;
        if (t != 1)
            throw std::logic_error("root count " + zeros.str() + " is not a power of q — arithmetic bug");
    }
    return zeros;
}

}  // namespace rankmetric

#endif  // RANKMETRIC_ORACLE_HPP
