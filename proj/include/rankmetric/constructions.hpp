/**
 * @file constructions.hpp
 * @brief Explicit families of sigma-subspace polynomials that agree on their
 *        top coefficients: the pigeonhole, trace, and trinomial families.
 *
 * These are the raw material for the adversarial words: a family of monic
 * polynomials of one sigma-degree whose pairwise differences have small
 * degree, with kernels of known dimension inside a fixed ambient space.
 */

#ifndef RANKMETRIC_CONSTRUCTIONS_HPP
#define RANKMETRIC_CONSTRUCTIONS_HPP

#include <map>

#include "rankmetric/oracle.hpp"

namespace rankmetric {

enum class FamilyKind { pigeonhole, trace, trinomial };

inline std::string kind_tag(FamilyKind k) {
    switch (k) {
        case FamilyKind::pigeonhole: return "pigeonhole";
        case FamilyKind::trace: return "trace";
        default: return "trinomial";
    }
}

/**
 * A family of sigma-polynomials of one degree agreeing on all coefficients
 * from index agree_from upward (shared_tail holds those common values, the
 * last of which is the leading 1 for unshifted families). kernel_dim is the
 * common F_q-dimension of the members' kernels.
 */
struct PolyFamily {
    FamilyKind kind;
    std::vector<SigmaPoly> members;       // deterministic order
    std::uint32_t degree = 0;             // common sigma-degree
    std::uint32_t agree_from = 0;         // members agree on coeffs [agree_from .. degree]
    std::vector<FieldElement> shared_tail;
    std::uint32_t kernel_dim = 0;
    bool shifted = false;                 // true after composing with x^sigma

    std::size_t size() const { return members.size(); }
};

/// The classes of all subspace polynomials of r-dimensional subspaces of S,
/// keyed by the g coefficients right below the leading one.
struct PigeonholePartition {
    std::map<std::vector<std::uint64_t>, std::vector<SigmaPoly>> classes;
    BigInt total = 0;  // number of enumerated subspace polynomials
};

inline PigeonholePartition pigeonhole_partition(const Subspace& S, std::uint32_t r, std::uint32_t g,
                                                std::uint32_t s, const EnumGuard& guard = {}) {
    if (g > r) throw std::invalid_argument("need g <= r");
    if (r >= S.dim()) throw std::invalid_argument("need r < n = dim(S)");
    PigeonholePartition part;
    for_each_subspace(S, r, guard, [&](const Subspace& U) {
        SigmaPoly f = subspace_polynomial(U, s);
        std::vector<std::uint64_t> key;
        key.reserve(g);
        for (std::uint32_t i = r - g; i < r; ++i) key.push_back(f.coeff(i).encoding());
        part.classes[std::move(key)].push_back(std::move(f));
        ++part.total;
    });
    return part;
}

/**
 * A largest class of the partition above. By the pigeonhole principle its
 * size is at least ceil( [n r]_q / q^{m g} ) where n = dim(S); with g = 0
 * the family is all [n r]_q subspace polynomials. Ties break toward the
 * smallest class key, so the result is deterministic.
 */
inline PolyFamily pigeonhole_family(const Subspace& S, std::uint32_t r, std::uint32_t g, std::uint32_t s,
                                    const EnumGuard& guard = {}) {
    PigeonholePartition part = pigeonhole_partition(S, r, g, s, guard);
    const std::vector<SigmaPoly>* best = nullptr;
    for (const auto& [key, cls] : part.classes)
        if (!best || cls.size() > best->size()) best = &cls;
    PolyFamily fam;
    fam.kind = FamilyKind::pigeonhole;
    fam.members = *best;
    std::sort(fam.members.begin(), fam.members.end());
    fam.degree = r;
    fam.agree_from = r - g;
    for (std::uint32_t i = r - g; i <= r; ++i) fam.shared_tail.push_back(fam.members.front().coeff(i));
    fam.kernel_dim = r;
    return fam;
}

/**
 * The trace family: for t | n and n | m the deduplicated set
 *
 *   f_beta = sum_{i=0}^{n/t - 1} beta^{sigma^{it} - sigma^{n-t}} x^{sigma^{it}},
 *   beta in F_{q^n}^*,
 *
 * of exactly (q^n - 1)/(q^t - 1) monic sigma-subspace polynomials of
 * sigma-degree n-t with kernels of dimension n-t inside the embedded
 * F_{q^n}. f_alpha = f_beta iff alpha/beta lies in F_{q^t}^*, so members are
 * indexed by the smallest beta of each coset (in the top-field encoding).
 */
inline PolyFamily trace_family(const FieldTower& tower, std::uint32_t t, std::uint32_t s) {
    const std::uint32_t n = tower.n();
    if (t == 0 || n % t != 0) throw std::invalid_argument("trace family needs t | n");
    if (tower.m() % n != 0) throw std::invalid_argument("trace family needs n | m");
    const auto subfield = tower.embedded_subfield_elements();  // sorted by encoding

    // F_{q^t}^* inside the embedded subfield: fixed points of sigma^t
    std::vector<FieldElement> ft_star;
    for (const auto& z : subfield)
        if (!z.is_zero() && tower.frobenius(z, (std::uint64_t)s * t) == z) ft_star.push_back(z);

    PolyFamily fam;
    fam.kind = FamilyKind::trace;
    fam.degree = n - t;
    fam.kernel_dim = n - t;
    fam.agree_from = (n >= 2 * t) ? n - 2 * t + 1 : 0;

    std::set<std::uint64_t> seen;
    for (const auto& beta : subfield) {
        if (beta.is_zero() || seen.count(beta.encoding())) continue;
        for (const auto& u : ft_star) seen.insert((beta * u).encoding());
        std::vector<FieldElement> coeffs(n - t + 1, tower.zero());
        const FieldElement denom = tower.frobenius(beta, (std::uint64_t)s * (n - t)).inverse();
        for (std::uint32_t i = 0; i < n / t; ++i)
            coeffs[i * t] = tower.frobenius(beta, (std::uint64_t)s * i * t) * denom;
        fam.members.emplace_back(tower, s, std::move(coeffs));
    }
    for (std::uint32_t i = fam.agree_from; i <= fam.degree; ++i)
        fam.shared_tail.push_back(fam.members.front().coeff(i));
    return fam;
}

/**
 * The trinomial family over the embedded F_{q^n}, for n = (t-1)t + 1 with
 * t-1 a power of the characteristic and n | m:
 *
 *   x^{q^t} - b x^q - a x,  N_{q^n/q}(a) = (-1)^{t-1},  b = -a^{e},
 *   e = (q^n - q)/(q^t - 1) + 1,
 *
 * a set of (q^n - 1)/(q - 1) subspace polynomials of q-degree t (twist
 * s = 1), each with q^t roots inside the embedded F_{q^n} and no more over
 * F_{q^m}. The exponent carries the extra +1: the bare quotient fails the
 * stated root count (checked by brute force at q=2 t=2, q=2 t=3, q=3 t=2).
 */
inline PolyFamily trinomial_family(const FieldTower& tower, std::uint32_t t) {
    const std::uint32_t n = tower.n();
    if (t < 2) throw std::invalid_argument("trinomial family needs t >= 2");
    if (n != (t - 1) * t + 1)
        throw std::invalid_argument("trinomial family needs n = (t-1)t + 1, got n = " + std::to_string(n));
    {
        std::uint32_t v = t - 1;
        while (v % tower.p() == 0) v /= tower.p();
        if (v != 1)
            throw std::invalid_argument("trinomial family needs t-1 to be a power of the characteristic " +
                                        std::to_string(tower.p()));
    }
    if (tower.m() % n != 0) throw std::invalid_argument("trinomial family needs n | m");

    BigInt qn = 1;
    for (std::uint32_t i = 0; i < n; ++i) qn *= tower.q();
    BigInt qt = 1;
    for (std::uint32_t i = 0; i < t; ++i) qt *= tower.q();
    const BigInt exp_b = (qn - tower.q()) / (qt - 1) + 1;
    const BigInt norm_exp = (qn - 1) / (BigInt(tower.q()) - 1);
    const FieldElement target = (t - 1) % 2 == 0 ? tower.one() : -tower.one();

    PolyFamily fam;
    fam.kind = FamilyKind::trinomial;
    fam.degree = t;
    fam.kernel_dim = t;
    fam.agree_from = 2;

    for (const auto& a : tower.embedded_subfield_elements()) {
        if (a.is_zero() || a.pow(norm_exp) != target) continue;
        const FieldElement b = -a.pow(exp_b);
        std::vector<FieldElement> coeffs(t + 1, tower.zero());
        coeffs[0] = -a;
        coeffs[1] = -b;
        coeffs[t] = tower.one();
        fam.members.emplace_back(tower, 1, std::move(coeffs));
    }
    for (std::uint32_t i = fam.agree_from; i <= fam.degree; ++i)
        fam.shared_tail.push_back(fam.members.front().coeff(i));
    return fam;
}

/// Compose every member on the right with x^sigma. Coefficients shift up by
/// one index, the constant coefficient becomes zero, the sigma-degree grows
/// by one, and the root count is unchanged (x -> x^sigma is a bijection), so
/// the results are no longer subspace polynomials.
inline PolyFamily shift_compose(const PolyFamily& fam) {
    if (fam.members.empty()) throw std::invalid_argument("cannot shift an empty family");
    const FieldTower& tw = fam.members.front().tower();
    const std::uint32_t s = fam.members.front().twist();
    PolyFamily out;
    out.kind = fam.kind;
    out.degree = fam.degree + 1;
    out.agree_from = fam.agree_from + 1;
    out.kernel_dim = fam.kernel_dim;
    out.shifted = true;
    const SigmaPoly xs = SigmaPoly::monomial(tw, s, 1, tw.one());
    for (const auto& f : fam.members) out.members.push_back(compose(f, xs));
    for (const auto& c : fam.shared_tail) out.shared_tail.push_back(c);
    return out;
}

}  // namespace rankmetric

#endif  // RANKMETRIC_CONSTRUCTIONS_HPP
