/**
 * @file codes.hpp
 * @brief Rank-metric MRD code families and evaluation words.
 *
 * A code is held intensionally as a family tag plus parameters; the
 * polynomial set is
 *
 *     f1(a) x + a_1 x^{sigma} + ... + a_{k-1} x^{sigma^{k-1}} + f2(a) x^{sigma^k}
 *
 * and the code in F_{q^m}^n is its image under g -> (g(alpha_1),...,g(alpha_n))
 * for an F_q-independent evaluation tuple alpha. Membership of a word is
 * decided algebraically: interpolate the unique sigma-degree <= n-1
 * polynomial through the word and match the family's coefficient pattern.
 * Exhaustive enumeration exists only as an oracle-side operation.
 */

#ifndef RANKMETRIC_CODES_HPP
#define RANKMETRIC_CODES_HPP

#include <cstdint>
#include <string>

#include "rankmetric/guard.hpp"
#include "rankmetric/linearized.hpp"

namespace rankmetric {

/// The supported families: Delsarte-Gabidulin (f1 = a, f2 = 0, s = 1), its
/// generalized form (any s), the twisted family (f2 = eta a^{q^h}), the
/// additively twisted one (f2 = eta a^{p^h}), the even-m subfield family
/// (f1, f2 drawn from F_{q^{m/2}}), and a container code known to include
/// the two-dimensional Gabidulin code.
enum class CodeFamily { gabidulin, gen_gabidulin, twisted, add_twisted, subfield_twisted, contains_g2 };

inline std::string family_tag(CodeFamily f) {
    switch (f) {
        case CodeFamily::gabidulin: return "G";
        case CodeFamily::gen_gabidulin: return "Gsigma";
        case CodeFamily::twisted: return "H";
        case CodeFamily::add_twisted: return "Hbar";
        case CodeFamily::subfield_twisted: return "D";
        default: return "customG2";
    }
}

inline CodeFamily family_from_tag(const std::string& tag) {
    if (tag == "G") return CodeFamily::gabidulin;
    if (tag == "Gsigma") return CodeFamily::gen_gabidulin;
    if (tag == "H") return CodeFamily::twisted;
    if (tag == "Hbar") return CodeFamily::add_twisted;
    if (tag == "D") return CodeFamily::subfield_twisted;
    if (tag == "customG2") return CodeFamily::contains_g2;
    throw std::invalid_argument("unknown code family tag: " + tag);
}

/// A vector in F_{q^m}^n.
struct Word {
    std::vector<FieldElement> entries;

    std::size_t size() const { return entries.size(); }

    Word operator-(const Word& o) const {
        if (entries.size() != o.entries.size()) throw std::invalid_argument("word length mismatch");
        Word r;
        r.entries.reserve(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) r.entries.push_back(entries[i] - o.entries[i]);
        return r;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.entries == b.entries; }
    friend bool operator<(const Word& a, const Word& b) {
        return std::lexicographical_compare(a.entries.begin(), a.entries.end(), b.entries.begin(),
                                            b.entries.end());
    }
};

/// rk(w) = dim_{F_q} of the span of the entries.
inline std::uint32_t rank_weight(const Word& w) {
    if (w.entries.empty()) return 0;
    const FieldTower& tw = w.entries.front().tower();
    detail::FqMat mat(tw, w.entries.size(), tw.m());
    std::vector<std::uint32_t> row(tw.m());
    for (std::size_t r = 0; r < w.entries.size(); ++r) {
        tw.fq_coords(w.entries[r], row.data());
        for (std::uint32_t c = 0; c < tw.m(); ++c) mat.at(r, c) = row[c];
    }
    return static_cast<std::uint32_t>(mat.rank());
}

inline std::uint32_t rank_distance(const Word& u, const Word& v) { return rank_weight(u - v); }

/// Extra family parameters; eta and h for the twisted families, the optional
/// complement polynomials for contains_g2.
struct FamilyParams {
    std::optional<FieldElement> eta;
    std::uint32_t h = 0;
    std::vector<SigmaPoly> complement;
};

/// q^{mk}, checked against the rank-metric Singleton bound with d = n-k+1.
inline BigInt singleton_size(std::uint32_t m, std::uint32_t n, std::uint32_t k, const BigInt& q) {
    if (k < 1 || k > n || n > m) throw std::invalid_argument("need 1 <= k <= n <= m");
    BigInt size = 1;
    for (std::uint32_t i = 0; i < m * k; ++i) size *= q;
    // the bound: q^{max(m,n) (min(m,n) - d + 1)} with d = n-k+1; equality by construction
    BigInt bound = 1;
    for (std::uint32_t i = 0; i < m * (n - (n - k + 1) + 1); ++i) bound *= q;
    if (size != bound) throw std::logic_error("Singleton bound not attained");
    return size;
}

class RankCode {
   public:
    /**
     * Validates the family condition and builds the code.
     *
     * Twisted (H):     N_{q^m/q}(eta) != (-1)^{mk}
     * Add-twisted:     N_{q^m/p}(eta) != (-1)^{mk}
     * Subfield (D):    m even, q odd, N_{q^m/q}(eta) a non-square in F_q
     *
     * alpha defaults to the embedded polynomial basis of F_{q^n}; an
     * arbitrary F_q-independent tuple may be supplied (required when n does
     * not divide m).
     */
    RankCode(const FieldTower& tower, CodeFamily family, std::uint32_t k, std::uint32_t s,
             FamilyParams params = {}, std::optional<std::vector<FieldElement>> alpha = std::nullopt)
        : tw_(&tower), family_(family), k_(k), s_(s), params_(std::move(params)) {
        if (alpha) {
            alpha_ = std::move(*alpha);
        } else {
            if (!tower.has_embedding())
                throw std::domain_error("default evaluation tuple needs n | m; supply alpha explicitly");
            alpha_ = Subspace::embedded_subfield(tower).basis();
        }
        n_ = static_cast<std::uint32_t>(alpha_.size());
        if (k_ < 1 || k_ > n_ || n_ > tower.m()) throw std::invalid_argument("need 1 <= k <= n <= m");
        Subspace span(tower, alpha_);               // verifies F_q-independence
        s_ = SigmaPoly(tower, s_).twist();          // normalizes and enforces gcd(s, m) = 1
        validate_family();
        moore_ = moore_matrix(alpha_, s_, n_);
    }

    const FieldTower& tower() const { return *tw_; }
    CodeFamily family() const { return family_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t d() const { return n_ - k_ + 1; }
    std::uint32_t twist() const { return s_; }
    std::uint32_t h() const { return params_.h; }
    const std::optional<FieldElement>& eta() const { return params_.eta; }
    const std::vector<FieldElement>& alpha() const { return alpha_; }
    const std::vector<SigmaPoly>& complement() const { return params_.complement; }

    /// Maximum dimension of a generalized-Gabidulin subcode, as known by
    /// construction (metadata only; equivalence is not tested).
    std::uint32_t gabidulin_index() const {
        switch (family_) {
            case CodeFamily::gabidulin:
            case CodeFamily::gen_gabidulin: return k_;
            case CodeFamily::contains_g2: return 2;
            default: return k_ - 1;
        }
    }

    BigInt code_size() const {
        if (family_ == CodeFamily::contains_g2)
            return singleton_size(tw_->m(), n_, 2, tw_->q()) + BigInt(params_.complement.size());
        return singleton_size(tw_->m(), n_, k_, tw_->q());
    }

    /// True Gabidulin codes evaluate any polynomial of sigma-degree <= k-1;
    /// the twisted families couple the constant and degree-k coefficients.
    bool poly_in_family(const SigmaPoly& f) const {
        if (f.twist() != s_ && !f.is_zero()) return false;
        switch (family_) {
            case CodeFamily::gabidulin:
            case CodeFamily::gen_gabidulin:
                return f.degree() <= static_cast<int>(k_) - 1;
            case CodeFamily::contains_g2: {
                if (f.degree() <= 1) return true;
                for (const auto& g : params_.complement)
                    if (g == f) return true;
                return false;
            }
            case CodeFamily::subfield_twisted: {
                // a = c_0 and b = c_k / eta from F_{q^{m/2}}, middles free
                if (f.degree() > static_cast<int>(k_)) return false;
                return in_half_subfield(f.coeff(0)) &&
                       in_half_subfield(f.coeff(k_) * params_.eta->inverse());
            }
            default: {
                // twisted / add_twisted: coefficients above k vanish, c_k = f2(c_0)
                if (f.degree() > static_cast<int>(k_)) return false;
                return f.coeff(k_) == twist_image(f.coeff(0));
            }
        }
    }

    /// The evaluation word c_g = (g(alpha_1), ..., g(alpha_n)).
    Word codeword(const SigmaPoly& g) const {
        Word w;
        w.entries.reserve(n_);
        for (std::uint32_t i = 0; i < n_; ++i) {
            FieldElement acc = tw_->zero();
            const int dg = g.degree();
            for (int j = 0; j <= dg; ++j) {
                const FieldElement& c = g.coeffs()[j];
                if (!c.is_zero())
                    acc += c * (static_cast<std::uint32_t>(j) < n_ ? moore_[i][j]
                                                                   : tw_->frobenius(alpha_[i], (std::uint64_t)s_ * j));
            }
            w.entries.push_back(acc);
        }
        return w;
    }

    /// The unique sigma-degree <= n-1 polynomial through (alpha_i, w_i).
    SigmaPoly interpolant(const Word& w) const {
        if (w.size() != n_) throw std::invalid_argument("word length mismatch");
        return interpolate(alpha_, w.entries, s_);
    }

    /// Algebraic membership: interpolate and match the coefficient pattern.
    /// For the twisted families this needs k <= n-1 so that the degree-k
    /// coefficient is visible in the transversal.
    bool contains(const Word& w) const {
        if (w.size() != n_) throw std::invalid_argument("word length mismatch");
        if (family_ != CodeFamily::gabidulin && family_ != CodeFamily::gen_gabidulin && k_ >= n_)
            throw std::domain_error("membership needs k <= n-1 for twisted families");
        return poly_in_family(interpolant(w));
    }

    /**
     * Visit every codeword once, in a fixed parameter order (mixed-radix
     * little-endian over the free coefficients). The guard is checked
     * against the code size before the first visit.
     */
    template <typename Fn>
    void for_each_codeword(const EnumGuard& guard, Fn&& fn) const {
        guard.check(code_size(), "codeword enumeration");
        const std::uint64_t Q = tw_->level_size(Level::fqm);
        switch (family_) {
            case CodeFamily::gabidulin:
            case CodeFamily::gen_gabidulin: {
                std::vector<std::uint64_t> digits(k_, 0);
                odometer(digits, std::vector<std::uint64_t>(k_, Q), [&](const std::vector<std::uint64_t>& d) {
                    std::vector<FieldElement> c;
                    c.reserve(k_);
                    for (auto v : d) c.push_back(tw_->element(Level::fqm, v));
                    fn(codeword(SigmaPoly(*tw_, s_, std::move(c))));
                });
                return;
            }
            case CodeFamily::contains_g2: {
                std::vector<std::uint64_t> digits(2, 0);
                odometer(digits, std::vector<std::uint64_t>(2, Q), [&](const std::vector<std::uint64_t>& d) {
                    std::vector<FieldElement> c{tw_->element(Level::fqm, d[0]), tw_->element(Level::fqm, d[1])};
                    fn(codeword(SigmaPoly(*tw_, s_, std::move(c))));
                });
                for (const auto& g : params_.complement) fn(codeword(g));
                return;
            }
            case CodeFamily::subfield_twisted: {
                const auto half = half_subfield_elements();
                std::vector<std::uint64_t> radices(k_ + 1, Q);
                radices[0] = radices[1] = half.size();  // a, b from the subfield; middles free
                std::vector<std::uint64_t> digits(k_ + 1, 0);
                odometer(digits, radices, [&](const std::vector<std::uint64_t>& dgt) {
                    std::vector<FieldElement> c(k_ + 1, tw_->zero());
                    c[0] = half[dgt[0]];
                    c[k_] = *params_.eta * half[dgt[1]];
                    for (std::uint32_t i = 1; i < k_; ++i) c[i] = tw_->element(Level::fqm, dgt[i + 1]);
                    fn(codeword(SigmaPoly(*tw_, s_, std::move(c))));
                });
                return;
            }
            default: {  // twisted / add_twisted: parameters (a, a_1..a_{k-1})
                std::vector<std::uint64_t> digits(k_, 0);
                odometer(digits, std::vector<std::uint64_t>(k_, Q), [&](const std::vector<std::uint64_t>& d) {
                    std::vector<FieldElement> c(k_ + 1, tw_->zero());
                    c[0] = tw_->element(Level::fqm, d[0]);
                    for (std::uint32_t i = 1; i < k_; ++i) c[i] = tw_->element(Level::fqm, d[i]);
                    c[k_] = twist_image(c[0]);
                    fn(codeword(SigmaPoly(*tw_, s_, std::move(c))));
                });
                return;
            }
        }
    }

    /// Minimum rank weight over the nonzero codewords (the families are
    /// additive, so this is the minimum distance). Asserts the MRD value
    /// n-k+1 for the validated families.
    std::uint32_t min_distance_exhaustive(const EnumGuard& guard = {}) const {
        std::uint32_t best = n_ + 1;
        for_each_codeword(guard, [&](const Word& w) {
            const std::uint32_t wt = rank_weight(w);
            if (wt != 0 && wt < best) best = wt;  // the zero codeword does not count
        });
        if (family_ != CodeFamily::contains_g2 && best != d())
            throw std::logic_error("exhaustive minimum distance " + std::to_string(best) +
                                   " differs from the MRD value " + std::to_string(d()));
        return best;
    }

   private:
    FieldElement twist_image(const FieldElement& a) const {
        switch (family_) {
            case CodeFamily::twisted: {
                BigInt e = 1;
                for (std::uint32_t i = 0; i < params_.h; ++i) e *= tw_->q();
                return *params_.eta * a.pow(e);
            }
            case CodeFamily::add_twisted: {
                BigInt e = 1;
                for (std::uint32_t i = 0; i < params_.h; ++i) e *= tw_->p();
                return *params_.eta * a.pow(e);
            }
            case CodeFamily::subfield_twisted:
                // f2(b) = eta b with its own free parameter; handled by the caller
                return tw_->zero();
            default: return tw_->zero();
        }
    }

    bool in_half_subfield(const FieldElement& x) const {
        // y in F_{q^{m/2}} iff y^{q^{m/2}} = y
        return tw_->frobenius(x, tw_->m() / 2) == x;
    }

    std::vector<FieldElement> half_subfield_elements() const {
        std::vector<FieldElement> out;
        const std::uint64_t Q = tw_->level_size(Level::fqm);
        for (std::uint64_t v = 0; v < Q; ++v) {
            FieldElement x = tw_->element(Level::fqm, v);
            if (in_half_subfield(x)) out.push_back(x);
        }
        return out;
    }

    template <typename Fn>
    static void odometer(std::vector<std::uint64_t>& digits, const std::vector<std::uint64_t>& radices, Fn&& fn) {
        while (true) {
            fn(const_cast<const std::vector<std::uint64_t>&>(digits));
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == radices[i]) digits[i++] = 0;
            if (i == digits.size()) break;
        }
    }

    FieldElement minus_one_pow_mk() const {
        // (-1)^{mk} as an element of the top field
        return (static_cast<std::uint64_t>(tw_->m()) * k_) % 2 == 0 ? tw_->one() : -tw_->one();
    }

    void validate_family() {
        switch (family_) {
            case CodeFamily::gabidulin:
                if (s_ % tw_->m() != 1 && tw_->m() > 1)
                    throw std::invalid_argument("family G fixes s = 1; use Gsigma for other twists");
                return;
            case CodeFamily::gen_gabidulin: return;
            case CodeFamily::contains_g2: {
                for (const auto& g : params_.complement) g.require_compatible(SigmaPoly(*tw_, s_));
                return;
            }
            case CodeFamily::twisted: {
                require_eta();
                if (tw_->q() == 2)
                    throw std::domain_error(
                        "family H is impossible over q = 2: N_{q^m/q}(eta) = 1 = (-1)^{mk} for every nonzero eta");
                const FieldElement nrm = tw_->norm_to_fq(*params_.eta);
                if (nrm == minus_one_pow_mk())
                    throw std::domain_error("family H needs N_{q^m/q}(eta) != (-1)^{mk}; got norm encoding " +
                                            std::to_string(nrm.encoding()));
                return;
            }
            case CodeFamily::add_twisted: {
                require_eta();
                if (tw_->p() == 2)
                    throw std::domain_error(
                        "family Hbar is impossible in characteristic 2: N_{q^m/p}(eta) = 1 = (-1)^{mk}");
                const FieldElement nrm = tw_->norm_to_fp(*params_.eta);
                if (nrm == minus_one_pow_mk())
                    throw std::domain_error("family Hbar needs N_{q^m/p}(eta) != (-1)^{mk}; got norm encoding " +
                                            std::to_string(nrm.encoding()));
                return;
            }
            case CodeFamily::subfield_twisted: {
                require_eta();
                if (tw_->m() % 2 != 0) throw std::invalid_argument("family D needs m even");
                if (tw_->q() % 2 == 0) throw std::domain_error("family D needs q odd (non-squares must exist)");
                const FieldElement nrm = tw_->norm_to_fq(*params_.eta);
                // square in F_q^* iff nrm^{(q-1)/2} = 1
                if (nrm.is_zero() || nrm.pow(BigInt((tw_->q() - 1) / 2)) == tw_->one())
                    throw std::domain_error("family D needs N_{q^m/q}(eta) to be a non-square in F_q; got norm encoding " +
                                            std::to_string(nrm.encoding()));
                return;
            }
        }
    }

    void require_eta() {
        if (!params_.eta) throw std::invalid_argument("this family needs the parameter eta");
        if (params_.eta->is_zero()) throw std::invalid_argument("eta must be nonzero");
        if (params_.eta->level() != Level::fqm) throw std::invalid_argument("eta must live in F_{q^m}");
        if (k_ + 1 > n_)
            throw std::invalid_argument("twisted families need k <= n-1 (degree-k coefficient must stay visible)");
    }

    const FieldTower* tw_;
    CodeFamily family_;
    std::uint32_t k_, s_, n_ = 0;
    FamilyParams params_;
    std::vector<FieldElement> alpha_;
    std::vector<std::vector<FieldElement>> moore_;
};

}  // namespace rankmetric

#endif  // RANKMETRIC_CODES_HPP
