/**
 * @file linearized.hpp
 * @brief Sigma-linearized polynomials over F_{q^m} and F_q-subspaces.
 *
 * A sigma-polynomial sum c_i x^{sigma^i} with sigma: x -> x^{q^s} acts as an
 * F_q-linear endomorphism of F_{q^m}. Exponent arithmetic is carried out mod
 * m throughout, i.e. in the quotient by x^{q^m} - x, and all operations
 * require equal twists s. The module also provides the Moore matrix, the
 * unique monic subspace polynomial of a subspace, the degree-n annihilator of
 * an n-dimensional subspace, and reduction into the transversal of
 * sigma-degree <= n-1 representatives.
 */

#ifndef RANKMETRIC_LINEARIZED_HPP
#define RANKMETRIC_LINEARIZED_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>

#include "rankmetric/galois.hpp"

namespace rankmetric {

namespace detail {

/// Dense matrix over F_q (entries are F_q encodings) with just enough
/// elimination machinery for rank, RREF, and nullspace computations.
class FqMat {
   public:
    FqMat(const FieldTower& tower, std::size_t rows, std::size_t cols)
        : tw_(&tower), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t piv = row;
            while (piv < rows_ && at(piv, col) == 0) ++piv;
            if (piv == rows_) continue;
            swap_rows(piv, row);
            const std::uint32_t ip = tw_->fq_inv(at(row, col));
            for (std::size_t c = col; c < cols_; ++c) at(row, c) = tw_->fq_mul(at(row, c), ip);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || at(r, col) == 0) continue;
                const std::uint32_t f = at(r, col);
                for (std::size_t c = col; c < cols_; ++c)
                    at(r, c) = tw_->fq_sub(at(r, c), tw_->fq_mul(f, at(row, c)));
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        FqMat tmp = *this;
        return tmp.rref().size();
    }

    /// Basis of {v : M v = 0} as coordinate vectors of length cols().
    std::vector<std::vector<std::uint32_t>> nullspace() const {
        FqMat tmp = *this;
        const auto pivots = tmp.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<std::uint32_t>> basis;
        for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
            if (is_pivot[free_col]) continue;
            std::vector<std::uint32_t> v(cols_, 0);
            v[free_col] = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i)
                v[pivots[i]] = tw_->fq_neg(tmp.at(i, free_col));
            basis.push_back(std::move(v));
        }
        return basis;
    }

   private:
    void swap_rows(std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
    }

    const FieldTower* tw_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

}  // namespace detail

/**
 * A sigma-linearized polynomial c_0 x + c_1 x^sigma + ... + c_l x^{sigma^l}
 * over F_{q^m}, sigma = x -> x^{q^s} with gcd(s, m) = 1. Immutable value
 * type; coefficients are stored dense with the trailing zeros trimmed, so
 * degree() is the index of the last nonzero coefficient (-1 for zero).
 */
class SigmaPoly {
   public:
    SigmaPoly(const FieldTower& tower, std::uint32_t twist)
        : tw_(&tower), s_(normalize_twist(tower, twist)) {}

    SigmaPoly(const FieldTower& tower, std::uint32_t twist, std::vector<FieldElement> coeffs)
        : tw_(&tower), s_(normalize_twist(tower, twist)), c_(std::move(coeffs)) {
        for (const auto& c : c_)
            if (c.level() != Level::fqm) throw std::invalid_argument("sigma-poly coefficients must be in F_{q^m}");
        if (c_.size() > tower.m()) throw std::invalid_argument("sigma-degree must be < m after reduction");
        trim();
    }

    static SigmaPoly zero(const FieldTower& tower, std::uint32_t twist) { return SigmaPoly(tower, twist); }

    /// The identity map x (i.e. c_0 = 1).
    static SigmaPoly identity(const FieldTower& tower, std::uint32_t twist) {
        return monomial(tower, twist, 0, tower.one());
    }

    static SigmaPoly monomial(const FieldTower& tower, std::uint32_t twist, std::uint32_t i,
                              const FieldElement& coeff) {
        std::vector<FieldElement> c(i + 1, tower.zero());
        c[i] = coeff;
        return SigmaPoly(tower, twist, std::move(c));
    }

    const FieldTower& tower() const { return *tw_; }
    std::uint32_t twist() const { return s_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == tw_->one(); }

    FieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : tw_->zero(); }
    const std::vector<FieldElement>& coeffs() const { return c_; }

    FieldElement eval(const FieldElement& x) const {
        if (x.level() != Level::fqm) throw std::invalid_argument("evaluation point must be in F_{q^m}");
        FieldElement acc = tw_->zero();
        FieldElement y = x;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i].is_zero()) acc += c_[i] * y;
            if (i + 1 < c_.size()) y = tw_->frobenius(y, s_);
        }
        return acc;
    }

    SigmaPoly operator+(const SigmaPoly& o) const {
        require_compatible(o);
        std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), tw_->zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return SigmaPoly(*tw_, s_, std::move(r));
    }

    SigmaPoly operator-(const SigmaPoly& o) const {
        require_compatible(o);
        std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), tw_->zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return SigmaPoly(*tw_, s_, std::move(r));
    }

    SigmaPoly scaled(const FieldElement& lambda) const {
        std::vector<FieldElement> r = c_;
        for (auto& ci : r) ci *= lambda;
        return SigmaPoly(*tw_, s_, std::move(r));
    }

    friend bool operator==(const SigmaPoly& a, const SigmaPoly& b) {
        return a.s_ == b.s_ && a.c_ == b.c_;
    }
    friend bool operator!=(const SigmaPoly& a, const SigmaPoly& b) { return !(a == b); }

    /// Sorted-container key: (twist, degree, encodings).
    friend bool operator<(const SigmaPoly& a, const SigmaPoly& b) {
        if (a.s_ != b.s_) return a.s_ < b.s_;
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i].encoding() != b.c_[i].encoding()) return a.c_[i].encoding() < b.c_[i].encoding();
        return false;
    }

    void require_compatible(const SigmaPoly& o) const {
        if (tw_ != o.tw_) throw std::invalid_argument("sigma-polys over different towers");
        if (s_ != o.s_) throw std::invalid_argument("mismatched twists");
    }

   private:
    static std::uint32_t normalize_twist(const FieldTower& tower, std::uint32_t s) {
        const std::uint32_t m = tower.m();
        s %= m;
        if (m > 1 && std::gcd(s, m) != 1)
            throw std::invalid_argument("twist s must satisfy gcd(s, m) = 1");
        return m == 1 ? 1 : s;
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const FieldTower* tw_;
    std::uint32_t s_;
    std::vector<FieldElement> c_;
};

/// Composition f(g(x)) in the quotient by x^{q^m} - x: sigma-exponents are
/// reduced mod m. Twists must match.
inline SigmaPoly compose(const SigmaPoly& f, const SigmaPoly& g) {
    f.require_compatible(g);
    const FieldTower& tw = f.tower();
    const std::uint32_t m = tw.m();
    std::vector<FieldElement> r(m, tw.zero());
    for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(f.degree(), 0)); ++i) {
        const FieldElement fi = f.coeff(i);
        if (fi.is_zero()) continue;
        for (std::size_t j = 0; j <= static_cast<std::size_t>(std::max(g.degree(), 0)); ++j) {
            const FieldElement gj = g.coeff(j);
            if (gj.is_zero()) continue;
            const std::size_t k = (i + j) % m;
            r[k] += fi * tw.frobenius(gj, f.twist() * i);
        }
    }
    if (f.is_zero() || g.is_zero()) return SigmaPoly::zero(tw, f.twist());
    return SigmaPoly(tw, f.twist(), std::move(r));
}

/// Right division: f = compose(quot, g) + rem with deg rem < deg g.
inline std::pair<SigmaPoly, SigmaPoly> right_divide(const SigmaPoly& f, const SigmaPoly& g) {
    f.require_compatible(g);
    if (g.is_zero()) throw std::domain_error("right division by the zero polynomial");
    const FieldTower& tw = f.tower();
    const std::uint32_t s = f.twist();
    SigmaPoly rem = f;
    SigmaPoly quot = SigmaPoly::zero(tw, s);
    const int dg = g.degree();
    while (rem.degree() >= dg) {
        const std::uint32_t j = static_cast<std::uint32_t>(rem.degree() - dg);
        // eliminate the lead: t * (g_lead)^{sigma^j} = rem_lead
        const FieldElement t = rem.coeff(rem.degree()) * tw.frobenius(g.coeff(dg), (std::uint64_t)s * j).inverse();
        const SigmaPoly mono = SigmaPoly::monomial(tw, s, j, t);
        quot = quot + mono;
        rem = rem - compose(mono, g);
    }
    return {std::move(quot), std::move(rem)};
}

/**
 * An F_q-subspace of F_{q^m}, held as an independent basis (independence is
 * verified at construction). Element enumeration and the canonical key follow
 * the integer encoding order of the tower.
 */
class Subspace {
   public:
    Subspace(const FieldTower& tower, std::vector<FieldElement> basis) : tw_(&tower), basis_(std::move(basis)) {
        for (const auto& b : basis_)
            if (b.level() != Level::fqm) throw std::invalid_argument("subspace basis must live in F_{q^m}");
        if (!basis_.empty()) {
            detail::FqMat mat(tower, basis_.size(), tower.m());
            for (std::size_t r = 0; r < basis_.size(); ++r) tower.fq_coords(basis_[r], &coords_row(mat, r));
            if (mat.rank() != basis_.size())
                throw std::invalid_argument("subspace basis is F_q-dependent");
        }
    }

    /// The whole of F_{q^m} as an F_q-space, basis 1, x, ..., x^{m-1}.
    static Subspace full_space(const FieldTower& tower) {
        std::vector<FieldElement> b;
        FieldElement xp = tower.one();
        const FieldElement g = tower.generator(Level::fqm);
        for (std::uint32_t i = 0; i < tower.m(); ++i) {
            b.push_back(xp);
            xp *= g;
        }
        return Subspace(tower, std::move(b));
    }

    /// The embedded copy of F_{q^n}, basis the embedded 1, x, ..., x^{n-1}.
    static Subspace embedded_subfield(const FieldTower& tower) {
        std::vector<FieldElement> b;
        FieldElement xp = tower.one(Level::fqn);
        const FieldElement g = tower.generator(Level::fqn);
        for (std::uint32_t i = 0; i < tower.n(); ++i) {
            b.push_back(tower.embed(xp));
            xp *= g;
        }
        return Subspace(tower, std::move(b));
    }

    const FieldTower& tower() const { return *tw_; }
    std::uint32_t dim() const { return static_cast<std::uint32_t>(basis_.size()); }
    const std::vector<FieldElement>& basis() const { return basis_; }
    BigInt size() const {
        BigInt r = 1;
        for (std::uint32_t i = 0; i < dim(); ++i) r *= tw_->q();
        return r;
    }

    /// Visit every element exactly once (all F_q-combinations of the basis,
    /// in mixed-radix order over the scalar encodings).
    template <typename Fn>
    void for_each_element(Fn&& fn) const {
        const std::uint64_t q = tw_->q();
        std::vector<std::uint32_t> digits(dim(), 0);
        // embedded F_q scalars, indexed by encoding
        std::vector<FieldElement> scalars;
        scalars.reserve(q);
        for (std::uint64_t v = 0; v < q; ++v) scalars.push_back(tw_->embed(tw_->element(Level::fq, v)));
        while (true) {
            FieldElement acc = tw_->zero();
            for (std::size_t i = 0; i < digits.size(); ++i)
                if (digits[i]) acc += scalars[digits[i]] * basis_[i];
            fn(acc);
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
            if (i == digits.size()) break;
        }
        if (dim() == 0) return;  // single zero element already visited
    }

    bool contains(const FieldElement& x) const {
        if (x.is_zero()) return true;
        detail::FqMat mat(*tw_, dim() + 1, tw_->m());
        for (std::size_t r = 0; r < dim(); ++r) tw_->fq_coords(basis_[r], &coords_row(mat, r));
        tw_->fq_coords(x, &coords_row(mat, dim()));
        return mat.rank() == dim();
    }

   private:
    static std::uint32_t& coords_row(detail::FqMat& mat, std::size_t r) { return mat.at(r, 0); }

    const FieldTower* tw_;
    std::vector<FieldElement> basis_;
};

/// The Moore matrix: entry (i, j) = elems[i]^{sigma^j}, j = 0..cols-1.
inline std::vector<std::vector<FieldElement>> moore_matrix(const std::vector<FieldElement>& elems,
                                                           std::uint32_t s, std::uint32_t cols) {
    if (elems.empty()) throw std::invalid_argument("Moore matrix of an empty list");
    const FieldTower& tw = elems.front().tower();
    std::vector<std::vector<FieldElement>> mat(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        mat[i].reserve(cols);
        FieldElement v = elems[i];
        for (std::uint32_t j = 0; j < cols; ++j) {
            mat[i].push_back(v);
            if (j + 1 < cols) v = tw.frobenius(v, s);
        }
    }
    return mat;
}

namespace detail {

/// Solve A x = rhs by Gaussian elimination over F_{q^m}; returns x and
/// whether A was invertible.
inline bool solve_inplace(std::vector<std::vector<FieldElement>>& A, std::vector<FieldElement>& rhs) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A[piv][col].is_zero()) ++piv;
        if (piv == n) return false;
        std::swap(A[piv], A[col]);
        std::swap(rhs[piv], rhs[col]);
        const FieldElement ip = A[col][col].inverse();
        for (auto& v : A[col]) v *= ip;
        rhs[col] *= ip;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col].is_zero()) continue;
            const FieldElement f = A[r][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    return true;
}

}  // namespace detail

/// Basis of {x in ambient : f(x) = 0} as an F_q-subspace.
inline Subspace kernel_basis(const SigmaPoly& f, const Subspace& ambient) {
    const FieldTower& tw = ambient.tower();
    if (f.is_zero()) return ambient;
    const std::uint32_t r = ambient.dim();
    // matrix of f restricted to the ambient basis, in F_q coordinates
    detail::FqMat mat(tw, tw.m(), r);
    std::vector<std::uint32_t> col(tw.m());
    for (std::uint32_t j = 0; j < r; ++j) {
        tw.fq_coords(f.eval(ambient.basis()[j]), col.data());
        for (std::uint32_t i = 0; i < tw.m(); ++i) mat.at(i, j) = col[i];
    }
    std::vector<FieldElement> kernel;
    for (const auto& lambda : mat.nullspace()) {
        FieldElement acc = tw.zero();
        for (std::uint32_t j = 0; j < r; ++j) {
            if (lambda[j] == 0) continue;
            acc += tw.embed(tw.element(Level::fq, lambda[j])) * ambient.basis()[j];
        }
        kernel.push_back(acc);
    }
    return Subspace(tw, std::move(kernel));
}

/**
 * The unique monic sigma-polynomial of sigma-degree r = dim(U) whose root
 * set in F_{q^m} is exactly U. Computed by solving the Moore system for the
 * non-leading coefficients. Requires gcd(s, m) = 1 (enforced by SigmaPoly);
 * a dependent basis surfaces as a singular Moore system.
 */
inline SigmaPoly subspace_polynomial(const Subspace& U, std::uint32_t s) {
    const FieldTower& tw = U.tower();
    const std::uint32_t r = U.dim();
    if (r == 0) return SigmaPoly::identity(tw, s);
    auto A = moore_matrix(U.basis(), s, r);
    std::vector<FieldElement> rhs;
    rhs.reserve(r);
    for (const auto& u : U.basis()) rhs.push_back(-tw.frobenius(u, (std::uint64_t)s * r));
    if (!detail::solve_inplace(A, rhs)) throw std::domain_error("dependent basis: Moore system is singular");
    rhs.push_back(tw.one());
    return SigmaPoly(tw, s, std::move(rhs));
}

/// The annihilator of an n-dimensional subspace S: the monic sigma-degree-n
/// polynomial vanishing exactly on the span of S. Reduction modulo it
/// identifies sigma-polynomials with their evaluations on S.
inline SigmaPoly annihilator(const Subspace& S, std::uint32_t s) {
    if (S.dim() > S.tower().m()) throw std::invalid_argument("subspace dimension exceeds m");
    return subspace_polynomial(S, s);
}

/// The unique sigma-polynomial of sigma-degree <= n-1 agreeing with f on the
/// span of S (the canonical transversal representative); idempotent.
inline SigmaPoly reduce_mod_annihilator(const SigmaPoly& f, const Subspace& S) {
    if (f.degree() < static_cast<int>(S.dim())) return f;
    return right_divide(f, annihilator(S, f.twist())).second;
}

/// The sigma-polynomial of sigma-degree <= n-1 through the points
/// (alpha_i, values_i); unique because alpha is F_q-independent.
inline SigmaPoly interpolate(const std::vector<FieldElement>& alpha, const std::vector<FieldElement>& values,
                             std::uint32_t s) {
    if (alpha.empty() || alpha.size() != values.size())
        throw std::invalid_argument("interpolation needs equally many points and values");
    const FieldTower& tw = alpha.front().tower();
    auto A = moore_matrix(alpha, s, static_cast<std::uint32_t>(alpha.size()));
    std::vector<FieldElement> rhs = values;
    if (!detail::solve_inplace(A, rhs))
        throw std::domain_error("interpolation points are F_q-dependent");
    return SigmaPoly(tw, s, std::move(rhs));
}

}  // namespace rankmetric

#endif  // RANKMETRIC_LINEARIZED_HPP
