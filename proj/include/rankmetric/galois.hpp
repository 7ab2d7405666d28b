/**
 * @file galois.hpp
 * @brief Exact arithmetic in the finite field tower F_p <= F_q <= F_{q^n} <= F_{q^m}.
 *
 * All four levels are represented as F_p[x]/(modulus) with little-endian
 * coefficient vectors over F_p. An element is identified with its integer
 * encoding sum coeffs[i] * p^i; the total order on field elements is the
 * order of these encodings. Default moduli are the lexicographically
 * smallest irreducible polynomials under the same encoding, and the default
 * embedding F_{q^n} -> F_{q^m} maps the generator to the smallest root of
 * modulus_qn in F_{q^m}, so that equal construction inputs always produce
 * bit-identical towers.
 *
 * Towers are immutable after construction and safe to share across threads;
 * FieldElement is a plain value type.
 */

#ifndef RANKMETRIC_GALOIS_HPP
#define RANKMETRIC_GALOIS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rankmetric {

using BigInt = boost::multiprecision::cpp_int;

/// Tower levels, ordered by inclusion: F_p <= F_q <= F_{q^n} <= F_{q^m}.
enum class Level : std::uint8_t { fp = 0, fq = 1, fqn = 2, fqm = 3 };

inline const char* level_name(Level lv) {
    switch (lv) {
        case Level::fp: return "F_p";
        case Level::fq: return "F_q";
        case Level::fqn: return "F_q^n";
        default: return "F_q^m";
    }
}

namespace detail {

// Dense polynomials over F_p, little-endian digit vectors. Used only for
// tower setup (moduli, Frobenius tables, embeddings), never in hot paths.
using FpPoly = std::vector<std::uint32_t>;

inline void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_add(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = (i < a.size() ? a[i] : 0u) + (std::uint64_t)(i < b.size() ? b[i] : 0u);
        r[i] = static_cast<std::uint32_t>(s % p);
    }
    fp_trim(r);
    return r;
}

inline FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = (i < a.size() ? a[i] : 0u) + (std::uint64_t)p - (i < b.size() ? b[i] : 0u);
        r[i] = static_cast<std::uint32_t>(s % p);
    }
    fp_trim(r);
    return r;
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + (std::uint64_t)a[i] * b[j]) % p);
    }
    fp_trim(r);
    return r;
}

inline std::uint32_t fp_unit_inv(std::uint32_t a, std::uint32_t p) {
    // Fermat; p prime, a != 0.
    std::uint64_t r = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& f, std::uint32_t p) {
    fp_trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint32_t inv_lead = fp_unit_inv(f.back(), p);
    while (a.size() > df) {
        const std::uint64_t c = (std::uint64_t)a.back() * inv_lead % p;
        if (c != 0) {
            const std::size_t shift = a.size() - 1 - df;
            for (std::size_t i = 0; i < f.size(); ++i) {
                const std::uint64_t s = a[shift + i] + (p - (std::uint32_t)(c * f[i] % p)) % p;
                a[shift + i] = static_cast<std::uint32_t>(s % p);
            }
        }
        a.pop_back();
        fp_trim(a);
        if (a.size() <= df) break;
    }
    return a;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint32_t p) {
    return fp_mod(fp_mul(a, b, p), f, p);
}

inline FpPoly fp_powmod(FpPoly base, BigInt e, const FpPoly& f, std::uint32_t p) {
    FpPoly r{1};
    base = fp_mod(std::move(base), f, p);
    while (e > 0) {
        if ((e & 1) != 0) r = fp_mulmod(r, base, f, p);
        base = fp_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

/// Deterministic (Rabin) irreducibility test over F_p; exact, no randomness.
inline bool fp_is_irreducible(const FpPoly& f, std::uint32_t p) {
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    const FpPoly x{0, 1};
    BigInt pd = 1;
    for (std::size_t i = 0; i < deg; ++i) pd *= p;
    FpPoly t = fp_powmod(x, pd, f, p);
    if (!fp_sub(t, x, p).empty()) return false;
    for (std::uint64_t r : prime_divisors(deg)) {
        BigInt pe = 1;
        for (std::size_t i = 0; i < deg / r; ++i) pe *= p;
        FpPoly u = fp_sub(fp_powmod(x, pe, f, p), x, p);
        FpPoly g = fp_gcd(f, u, p);
        if (g.size() > 1) return false;
    }
    return true;
}

inline std::uint64_t fp_encode(const FpPoly& a, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

inline FpPoly fp_decode(std::uint64_t v, std::uint32_t p) {
    FpPoly a;
    while (v) {
        a.push_back(static_cast<std::uint32_t>(v % p));
        v /= p;
    }
    return a;
}

/// Lexicographically smallest monic irreducible of the given degree, in the
/// integer encoding (so the scan is simply over consecutive encodings).
inline FpPoly fp_smallest_irreducible(std::uint32_t p, std::uint32_t deg) {
    if (deg == 1) return {0, 1};  // x
    std::uint64_t base = 1;
    for (std::uint32_t i = 0; i < deg; ++i) base *= p;
    for (std::uint64_t enc = base; enc < 2 * base; ++enc) {
        FpPoly f = fp_decode(enc, p);
        if (fp_is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

inline bool is_prime_u32(std::uint32_t v) {
    if (v < 2) return false;
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

/// One level of the tower: F_p[x]/(modulus) with per-level Frobenius tables.
struct LevelCtx {
    std::uint32_t p = 0;
    std::uint32_t deg = 0;        // degree over F_p
    std::uint64_t size = 0;       // p^deg
    FpPoly modulus;               // monic, deg+1 coefficients
    std::uint64_t modulus_enc = 0;
    // frob[e] holds the matrix of x -> x^{p^e} as encoded columns:
    // frob[e][j] = encoding of (x^j)^{p^e} mod modulus, 0 <= e, j < deg.
    std::vector<std::vector<std::uint64_t>> frob;

    void unpack(std::uint64_t v, std::uint32_t* out) const {
        for (std::uint32_t i = 0; i < deg; ++i) {
            out[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
    }

    std::uint64_t pack(const std::uint32_t* digits) const {
        std::uint64_t v = 0;
        for (std::uint32_t i = deg; i-- > 0;) v = v * p + digits[i];
        return v;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        if (p == 2) return a ^ b;
        std::uint32_t da[64], db[64];
        unpack(a, da);
        unpack(b, db);
        for (std::uint32_t i = 0; i < deg; ++i) da[i] = (da[i] + db[i]) % p;
        return pack(da);
    }

    std::uint64_t neg(std::uint64_t a) const {
        if (p == 2) return a;
        std::uint32_t da[64];
        unpack(a, da);
        for (std::uint32_t i = 0; i < deg; ++i) da[i] = (p - da[i]) % p;
        return pack(da);
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (a == 0 || b == 0) return 0;
        if (p == 2) {
            std::uint64_t r = 0, x = a;
            while (b) {
                if (b & 1) r ^= x;
                x <<= 1;
                b >>= 1;
            }
            for (std::uint32_t bit = 2 * deg - 2; bit >= deg && bit < 64; --bit)
                if ((r >> bit) & 1) r ^= modulus_enc << (bit - deg);
            return r;
        }
        std::uint32_t da[64], db[64];
        unpack(a, da);
        unpack(b, db);
        std::uint64_t conv[127] = {0};
        for (std::uint32_t i = 0; i < deg; ++i) {
            if (da[i] == 0) continue;
            for (std::uint32_t j = 0; j < deg; ++j) conv[i + j] += (std::uint64_t)da[i] * db[j];
        }
        for (std::uint32_t i = 0; i < 2 * deg - 1; ++i) conv[i] %= p;
        for (std::uint32_t i = 2 * deg - 2; i >= deg && i < 127; --i) {
            const std::uint64_t c = conv[i];
            if (c == 0) continue;
            for (std::uint32_t j = 0; j <= deg; ++j) {
                std::uint64_t& slot = conv[i - deg + j];
                slot = (slot + (std::uint64_t)(p - 1) * c % p * modulus[j]) % p;
            }
        }
        std::uint32_t dr[64];
        for (std::uint32_t i = 0; i < deg; ++i) dr[i] = static_cast<std::uint32_t>(conv[i]);
        return pack(dr);
    }

    std::uint64_t pow_u64(std::uint64_t a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        e %= (size - 1);
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return pow_u64(a, size - 2);
    }

    // x -> x^{p^e}, e reduced mod deg by the caller.
    std::uint64_t frob_apply(std::uint64_t v, std::uint32_t e) const {
        if (e == 0 || v == 0) return v;
        const auto& cols = frob[e];
        if (p == 2) {
            std::uint64_t acc = 0;
            for (std::uint32_t j = 0; v; ++j, v >>= 1)
                if (v & 1) acc ^= cols[j];
            return acc;
        }
        std::uint32_t dv[64];
        unpack(v, dv);
        std::uint64_t acc = 0;
        for (std::uint32_t j = 0; j < deg; ++j) {
            if (dv[j] == 0) continue;
            // scalar multiple of a column: digit c < p acts as the constant c
            std::uint64_t col = cols[j];
            std::uint64_t term = mul(col, dv[j]);  // encoding of constant c is c itself
            acc = add(acc, term);
        }
        return acc;
    }

    void build(std::uint32_t p_, std::uint32_t deg_, FpPoly mod) {
        p = p_;
        deg = deg_;
        modulus = std::move(mod);
        size = 1;
        for (std::uint32_t i = 0; i < deg; ++i) {
            if (size > (std::uint64_t(1) << 32) / p + 1) throw std::invalid_argument("field level exceeds 2^32 elements");
            size *= p;
        }
        if (size > (std::uint64_t(1) << 32)) throw std::invalid_argument("field level exceeds 2^32 elements");
        modulus_enc = fp_encode(modulus, p);
        // frob[0] = identity (columns are the encodings of x^j); frob[1] from x^p
        frob.assign(deg, std::vector<std::uint64_t>(deg, 0));
        for (std::uint32_t j = 0; j < deg; ++j) {
            std::uint64_t xj = 1;
            for (std::uint32_t i = 0; i < j; ++i) xj *= p;
            frob[0][j] = xj;
        }
        if (deg > 1) {
            FpPoly xp = fp_powmod(FpPoly{0, 1}, BigInt(p), modulus, p);
            FpPoly acc{1};
            for (std::uint32_t j = 0; j < deg; ++j) {
                frob[1][j] = fp_encode(acc, p);
                acc = fp_mulmod(acc, xp, modulus, p);
            }
            for (std::uint32_t e = 2; e < deg; ++e)
                for (std::uint32_t j = 0; j < deg; ++j) frob[e][j] = frob_apply(frob[e - 1][j], 1);
        }
    }
};

}  // namespace detail

class FieldTower;

/// An element of one tower level; a value type carrying its level tag and
/// integer encoding. Arithmetic requires matching towers and levels; mixing
/// levels without an explicit embed throws.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(const FieldTower* tower, Level level, std::uint64_t encoding)
        : tower_(tower), level_(level), enc_(encoding) {}

    const FieldTower& tower() const { return *tower_; }
    Level level() const { return level_; }
    std::uint64_t encoding() const { return enc_; }
    bool is_zero() const { return enc_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(const BigInt& e) const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.level_ == b.level_ && a.enc_ == b.enc_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    friend bool operator<(const FieldElement& a, const FieldElement& b) {
        return a.level_ != b.level_ ? a.level_ < b.level_ : a.enc_ < b.enc_;
    }

   private:
    const FieldTower* tower_ = nullptr;
    Level level_ = Level::fqm;
    std::uint64_t enc_ = 0;
};

/**
 * The field tower F_p <= F_q <= F_{q^n} <= F_{q^m}, q = p^ell.
 *
 * The embedding F_{q^n} -> F_{q^m} is materialized when n | m; requesting it
 * otherwise throws. Construction validates primality of p and irreducibility
 * of the moduli (supplied or default), so a successfully built tower is
 * arithmetically sound by construction.
 */
class FieldTower {
   public:
    FieldTower(std::uint32_t p, std::uint32_t ell, std::uint32_t n, std::uint32_t m,
               std::optional<std::vector<std::uint32_t>> modulus_qn = std::nullopt,
               std::optional<std::vector<std::uint32_t>> modulus_qm = std::nullopt)
        : p_(p), ell_(ell), n_(n), m_(m) {
        if (!detail::is_prime_u32(p)) throw std::invalid_argument("p is not prime: " + std::to_string(p));
        if (p >= (1u << 16)) throw std::invalid_argument("p too large (supported: p < 2^16)");
        if (ell == 0 || n == 0 || m == 0) throw std::invalid_argument("ell, n, m must be positive");
        q_ = 1;
        for (std::uint32_t i = 0; i < ell; ++i) q_ *= p;

        levels_[0].build(p, 1, {0, 1});
        levels_[1].build(p, ell, ell == 1 ? detail::FpPoly{0, 1} : detail::fp_smallest_irreducible(p, ell));
        levels_[2].build(p, ell * n, checked_modulus(std::move(modulus_qn), ell * n, "modulus_qn"));
        levels_[3].build(p, ell * m, checked_modulus(std::move(modulus_qm), ell * m, "modulus_qm"));

        build_fq_embedding();
        if (m_ % n_ == 0) build_qn_embedding();
        build_fq_coordinates();
    }

    FieldTower(const FieldTower&) = delete;
    FieldTower& operator=(const FieldTower&) = delete;

    std::uint32_t p() const { return p_; }
    std::uint32_t ell() const { return ell_; }
    std::uint64_t q() const { return q_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t m() const { return m_; }
    bool has_embedding() const { return !embed_qn_pows_.empty(); }

    std::uint32_t level_degree(Level lv) const { return ctx(lv).deg; }
    std::uint64_t level_size(Level lv) const { return ctx(lv).size; }
    /// Modulus of a level as little-endian coefficients over F_p.
    std::vector<std::uint32_t> level_modulus(Level lv) const {
        const auto& mod = ctx(lv).modulus;
        return {mod.begin(), mod.end()};
    }

    FieldElement element(Level lv, std::uint64_t encoding) const {
        if (encoding >= ctx(lv).size) throw std::invalid_argument("encoding out of range for level");
        return FieldElement(this, lv, encoding);
    }
    FieldElement zero(Level lv = Level::fqm) const { return FieldElement(this, lv, 0); }
    FieldElement one(Level lv = Level::fqm) const { return FieldElement(this, lv, 1); }
    /// The residue class of x, which generates the level over F_p.
    FieldElement generator(Level lv) const { return FieldElement(this, lv, ctx(lv).deg > 1 ? p_ : 1); }

    std::uint64_t add(Level lv, std::uint64_t a, std::uint64_t b) const { return ctx(lv).add(a, b); }
    std::uint64_t sub(Level lv, std::uint64_t a, std::uint64_t b) const { return ctx(lv).sub(a, b); }
    std::uint64_t neg(Level lv, std::uint64_t a) const { return ctx(lv).neg(a); }
    std::uint64_t mul(Level lv, std::uint64_t a, std::uint64_t b) const { return ctx(lv).mul(a, b); }
    std::uint64_t inv(Level lv, std::uint64_t a) const { return ctx(lv).inv(a); }

    std::uint64_t pow(Level lv, std::uint64_t a, const BigInt& e) const {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (a == 0) return e == 0 ? 1 : 0;
        const std::uint64_t ord = ctx(lv).size - 1;
        return ctx(lv).pow_u64(a, static_cast<std::uint64_t>(e % ord));
    }

    /// x -> x^{q^s} on any level (the s-fold q-power Frobenius).
    FieldElement frobenius(const FieldElement& x, std::uint64_t s) const {
        const auto& c = ctx(x.level());
        const std::uint32_t e = static_cast<std::uint32_t>((std::uint64_t)ell_ * s % c.deg);
        return FieldElement(this, x.level(), c.frob_apply(x.encoding(), e));
    }

    /// N_{q^m/q}(x) = x^{1+q+...+q^{m-1}}; the result lies in the embedded F_q.
    FieldElement norm_to_fq(const FieldElement& x) const {
        require_level(x, Level::fqm);
        const std::uint64_t e = (ctx(Level::fqm).size - 1) / (q_ - 1);
        return FieldElement(this, Level::fqm, ctx(Level::fqm).pow_u64(x.encoding(), e));
    }

    /// N_{q^m/p}(x) = x^{1+p+...+p^{m ell - 1}}; lands in the embedded F_p.
    FieldElement norm_to_fp(const FieldElement& x) const {
        require_level(x, Level::fqm);
        const std::uint64_t e = (ctx(Level::fqm).size - 1) / (p_ - 1);
        return FieldElement(this, Level::fqm, ctx(Level::fqm).pow_u64(x.encoding(), e));
    }

    /// Embed an element of F_p, F_q, or F_{q^n} into F_{q^m}. The F_{q^n}
    /// route requires n | m (an embedding materialized at construction).
    FieldElement embed(const FieldElement& x) const {
        switch (x.level()) {
            case Level::fqm: return x;
            case Level::fp: return FieldElement(this, Level::fqm, x.encoding());
            case Level::fq: return FieldElement(this, Level::fqm, embed_with(embed_fq_pows_, x.encoding()));
            default:
                if (!has_embedding())
                    throw std::domain_error("no embedding F_{q^n} -> F_{q^m} materialized (n does not divide m)");
                return FieldElement(this, Level::fqm, embed_with(embed_qn_pows_, x.encoding()));
        }
    }

    /// Coordinates of a top-field element over F_q with respect to the basis
    /// 1, x, ..., x^{m-1}; entries are F_q encodings (< q).
    void fq_coords(const FieldElement& x, std::uint32_t* out) const {
        require_level(x, Level::fqm);
        const auto& c = ctx(Level::fqm);
        if (ell_ == 1) {
            c.unpack(x.encoding(), out);
            return;
        }
        std::uint32_t digits[64];
        c.unpack(x.encoding(), digits);
        const std::uint32_t dm = c.deg;
        std::uint32_t sol[64];
        for (std::uint32_t r = 0; r < dm; ++r) {
            std::uint64_t acc = 0;
            const std::uint32_t* row = &coord_inv_[r * dm];
            for (std::uint32_t i = 0; i < dm; ++i) acc += (std::uint64_t)row[i] * digits[i];
            sol[r] = static_cast<std::uint32_t>(acc % p_);
        }
        // group blocks of ell F_p digits into F_q encodings
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint64_t v = 0;
            for (std::uint32_t j = ell_; j-- > 0;) v = v * p_ + sol[i * ell_ + j];
            out[i] = static_cast<std::uint32_t>(v);
        }
    }

    std::vector<std::uint32_t> fq_coords(const FieldElement& x) const {
        std::vector<std::uint32_t> out(m_);
        fq_coords(x, out.data());
        return out;
    }

    FieldElement from_fq_coords(std::span<const std::uint32_t> coords) const {
        if (coords.size() != m_) throw std::invalid_argument("coordinate vector must have length m");
        FieldElement acc = zero();
        FieldElement xpow = one();
        const FieldElement gen = generator(Level::fqm);
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (coords[i] != 0) {
                FieldElement lambda(this, Level::fqm, embed_with(embed_fq_pows_, coords[i]));
                acc += lambda * xpow;
            }
            xpow *= gen;
        }
        return acc;
    }

    // F_q scalar arithmetic on encodings (< q), used by the F_q linear algebra.
    std::uint32_t fq_add(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(ctx(Level::fq).add(a, b));
    }
    std::uint32_t fq_sub(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(ctx(Level::fq).sub(a, b));
    }
    std::uint32_t fq_mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(ctx(Level::fq).mul(a, b));
    }
    std::uint32_t fq_neg(std::uint32_t a) const { return static_cast<std::uint32_t>(ctx(Level::fq).neg(a)); }
    std::uint32_t fq_inv(std::uint32_t a) const { return static_cast<std::uint32_t>(ctx(Level::fq).inv(a)); }

    /// All elements of the embedded copy of F_{q^n} inside F_{q^m}, sorted by
    /// top-field encoding. Requires the embedding.
    std::vector<FieldElement> embedded_subfield_elements() const {
        if (!has_embedding()) throw std::domain_error("no embedding materialized");
        std::vector<FieldElement> out;
        out.reserve(ctx(Level::fqn).size);
        for (std::uint64_t v = 0; v < ctx(Level::fqn).size; ++v)
            out.push_back(embed(FieldElement(this, Level::fqn, v)));
        std::sort(out.begin(), out.end());
        return out;
    }

   private:
    friend class FieldElement;

    const detail::LevelCtx& ctx(Level lv) const { return levels_[static_cast<std::size_t>(lv)]; }

    void require_level(const FieldElement& x, Level lv) const {
        if (x.level() != lv)
            throw std::invalid_argument(std::string("element must live in ") + level_name(lv));
    }

    detail::FpPoly checked_modulus(std::optional<std::vector<std::uint32_t>> user, std::uint32_t deg,
                                   const char* which) {
        if (!user) return deg == 1 ? detail::FpPoly{0, 1} : detail::fp_smallest_irreducible(p_, deg);
        detail::FpPoly f(user->begin(), user->end());
        detail::fp_trim(f);
        for (auto& c : f) c %= p_;
        if (f.size() != deg + 1)
            throw std::invalid_argument(std::string(which) + " must have degree " + std::to_string(deg));
        if (f.back() != 1) throw std::invalid_argument(std::string(which) + " must be monic");
        if (!detail::fp_is_irreducible(f, p_))
            throw std::domain_error(std::string(which) + " is reducible over F_p");
        return f;
    }

    std::uint64_t embed_with(const std::vector<std::uint64_t>& pows, std::uint64_t enc) const {
        const auto& top = ctx(Level::fqm);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; enc != 0 && i < pows.size(); ++i, enc /= p_) {
            const std::uint32_t c = static_cast<std::uint32_t>(enc % p_);
            if (c) acc = top.add(acc, top.mul(pows[i], c));
        }
        return acc;
    }

    // Smallest root of `poly` (a polynomial over F_p) in the top field.
    std::uint64_t smallest_root_in_top(const detail::FpPoly& poly) const {
        const auto& top = ctx(Level::fqm);
        for (std::uint64_t v = 0; v < top.size; ++v) {
            std::uint64_t acc = 0;
            for (std::size_t i = poly.size(); i-- > 0;) acc = top.add(top.mul(acc, v), poly[i]);
            if (acc == 0) return v;
        }
        throw std::logic_error("modulus has no root in the top field");  // impossible when degrees divide
    }

    void build_fq_embedding() {
        embed_fq_pows_.resize(ell_);
        if (ell_ == 1) {
            embed_fq_pows_[0] = 1;
            return;
        }
        const std::uint64_t root = smallest_root_in_top(ctx(Level::fq).modulus);
        std::uint64_t acc = 1;
        for (std::uint32_t i = 0; i < ell_; ++i) {
            embed_fq_pows_[i] = acc;
            acc = ctx(Level::fqm).mul(acc, root);
        }
    }

    void build_qn_embedding() {
        const std::uint32_t dn = ctx(Level::fqn).deg;
        const std::uint64_t root = smallest_root_in_top(ctx(Level::fqn).modulus);
        embed_qn_pows_.resize(dn);
        std::uint64_t acc = 1;
        for (std::uint32_t i = 0; i < dn; ++i) {
            embed_qn_pows_[i] = acc;
            acc = ctx(Level::fqm).mul(acc, root);
        }
    }

    void build_fq_coordinates() {
        if (ell_ == 1) return;  // coordinates coincide with F_p digits
        const auto& top = ctx(Level::fqm);
        const std::uint32_t dm = top.deg;
        // columns indexed by (i, j): x^i * e_j with e_j the embedded F_q basis
        std::vector<std::uint32_t> mat(dm * 2 * dm, 0);  // [A | I] for Gauss-Jordan
        std::uint64_t xpow = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            for (std::uint32_t j = 0; j < ell_; ++j) {
                const std::uint64_t colv = top.mul(xpow, embed_fq_pows_[j]);
                std::uint32_t digits[64];
                top.unpack(colv, digits);
                const std::uint32_t col = i * ell_ + j;
                for (std::uint32_t r = 0; r < dm; ++r) mat[r * 2 * dm + col] = digits[r];
            }
            xpow = top.mul(xpow, top.frob[0][1]);  // multiply by x
        }
        for (std::uint32_t r = 0; r < dm; ++r) mat[r * 2 * dm + dm + r] = 1;
        // Gauss-Jordan over F_p
        for (std::uint32_t col = 0; col < dm; ++col) {
            std::uint32_t piv = col;
            while (piv < dm && mat[piv * 2 * dm + col] == 0) ++piv;
            if (piv == dm) throw std::logic_error("coordinate basis is singular");
            if (piv != col)
                for (std::uint32_t c = 0; c < 2 * dm; ++c) std::swap(mat[piv * 2 * dm + c], mat[col * 2 * dm + c]);
            const std::uint32_t ip = detail::fp_unit_inv(mat[col * 2 * dm + col], p_);
            for (std::uint32_t c = 0; c < 2 * dm; ++c)
                mat[col * 2 * dm + c] = static_cast<std::uint32_t>((std::uint64_t)mat[col * 2 * dm + c] * ip % p_);
            for (std::uint32_t r = 0; r < dm; ++r) {
                if (r == col) continue;
                const std::uint32_t f = mat[r * 2 * dm + col];
                if (f == 0) continue;
                for (std::uint32_t c = 0; c < 2 * dm; ++c) {
                    std::uint64_t v = mat[r * 2 * dm + c] + (std::uint64_t)(p_ - f) * mat[col * 2 * dm + c];
                    mat[r * 2 * dm + c] = static_cast<std::uint32_t>(v % p_);
                }
            }
        }
        coord_inv_.resize(dm * dm);
        for (std::uint32_t r = 0; r < dm; ++r)
            for (std::uint32_t c = 0; c < dm; ++c) coord_inv_[r * dm + c] = mat[r * 2 * dm + dm + c];
    }

    std::uint32_t p_, ell_, n_, m_;
    std::uint64_t q_;
    std::array<detail::LevelCtx, 4> levels_;
    std::vector<std::uint64_t> embed_fq_pows_;   // powers of the F_q root in the top field
    std::vector<std::uint64_t> embed_qn_pows_;   // powers of the F_{q^n} root; empty when n does not divide m
    std::vector<std::uint32_t> coord_inv_;       // inverse of the F_q-basis matrix over F_p (ell > 1 only)
};

inline FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (tower_ != o.tower_ || level_ != o.level_)
        throw std::invalid_argument("cross-level field operation without explicit embed");
    return FieldElement(tower_, level_, tower_->ctx(level_).add(enc_, o.enc_));
}

inline FieldElement FieldElement::operator-(const FieldElement& o) const {
    if (tower_ != o.tower_ || level_ != o.level_)
        throw std::invalid_argument("cross-level field operation without explicit embed");
    return FieldElement(tower_, level_, tower_->ctx(level_).sub(enc_, o.enc_));
}

inline FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (tower_ != o.tower_ || level_ != o.level_)
        throw std::invalid_argument("cross-level field operation without explicit embed");
    return FieldElement(tower_, level_, tower_->ctx(level_).mul(enc_, o.enc_));
}

inline FieldElement FieldElement::operator-() const {
    return FieldElement(tower_, level_, tower_->ctx(level_).neg(enc_));
}

inline FieldElement FieldElement::inverse() const {
    return FieldElement(tower_, level_, tower_->ctx(level_).inv(enc_));
}

inline FieldElement FieldElement::pow(const BigInt& e) const {
    return FieldElement(tower_, level_, tower_->pow(level_, enc_, e));
}

inline FieldElement frobenius(const FieldElement& x, std::uint64_t s) { return x.tower().frobenius(x, s); }

}  // namespace rankmetric

#endif  // RANKMETRIC_GALOIS_HPP
