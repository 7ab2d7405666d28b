/**
 * @file selftest.hpp
 * @brief The acceptance suite: eight end-to-end checks at desk-scale
 *        parameters, each with its exact expected outcome.
 *
 * The same battery backs the `selftest` CLI subcommand and the acceptance
 * test binary. Every check is self-contained: it builds its own tower and
 * code, states the exact values it expects, and reports a one-line verdict.
 */

#ifndef RANKMETRIC_SELFTEST_HPP
#define RANKMETRIC_SELFTEST_HPP

#include <chrono>
#include <random>
#include <set>

#include "rankmetric/io.hpp"

namespace rankmetric {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

namespace selftest_detail {

template <typename Fn>
CriterionResult timed(int id, std::string name, double time_limit_s, Fn&& fn) {
    CriterionResult res;
    res.id = id;
    res.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    try {
        res.detail = fn();
        res.pass = true;
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (res.pass && res.seconds > time_limit_s) {
        res.pass = false;
        res.detail += " [exceeded the " + std::to_string(time_limit_s) + "s budget]";
    }
    return res;
}

inline void expect(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

/// Smallest eta (by encoding) passing the family's norm condition.
inline FieldElement find_eta(const FieldTower& tw, CodeFamily family, std::uint32_t k) {
    for (std::uint64_t v = 1; v < tw.level_size(Level::fqm); ++v) {
        FieldElement eta = tw.element(Level::fqm, v);
        try {
            FamilyParams params;
            params.eta = eta;
            params.h = 1;
            RankCode probe(tw, family, k, 1, params);
            return eta;
        } catch (const std::domain_error&) {
            continue;
        }
    }
    throw std::runtime_error("no admissible eta exists");
}

inline SigmaPoly random_poly(const FieldTower& tw, std::uint32_t s, std::uint32_t max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> coeff(0, tw.level_size(Level::fqm) - 1);
    std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
    const std::uint32_t d = deg(rng);
    std::vector<FieldElement> c;
    c.reserve(d + 1);
    for (std::uint32_t i = 0; i <= d; ++i) c.push_back(tw.element(Level::fqm, coeff(rng)));
    return SigmaPoly(tw, s, std::move(c));
}

}  // namespace selftest_detail

inline std::vector<CriterionResult> run_acceptance(const EnumGuard& guard = {}) {
    using selftest_detail::expect;
    using selftest_detail::find_eta;
    using selftest_detail::random_poly;
    using selftest_detail::timed;

    std::vector<CriterionResult> out;

    out.push_back(timed(1, "MRD minimum distances by exhaustive rank-weight scan", 60.0, [&] {
        FieldTower t16(2, 1, 4, 4);
        RankCode g42(t16, CodeFamily::gabidulin, 2, 1);
        expect(g42.min_distance_exhaustive(guard) == 3, "G_{4,2} over F_16: expected distance 3");

        FieldTower t64(2, 1, 6, 6);
        RankCode g63(t64, CodeFamily::gabidulin, 3, 1);
        expect(g63.min_distance_exhaustive(guard) == 4, "G_{6,3} over F_64: expected distance 4");

        FieldTower t81(3, 1, 4, 4);
        FamilyParams dp;
        dp.eta = find_eta(t81, CodeFamily::subfield_twisted, 2);
        RankCode d42(t81, CodeFamily::subfield_twisted, 2, 1, dp);
        expect(d42.min_distance_exhaustive(guard) == 3, "D_{4,2} over F_81: expected distance 3");
        return std::string("G_{4,2}: 3, G_{6,3}: 4, D_{4,2}(eta=") + std::to_string(dp.eta->encoding()) + "): 3";
    }));

    out.push_back(timed(2, "trace strategy on G_{4,2} at tau = 2 (5 codewords in one ball)", 5.0, [&] {
        FieldTower tw(2, 1, 4, 4);
        RankCode code(tw, CodeFamily::gabidulin, 2, 1);
        AdversaryReport rep = build_adversary(code, Strategy::trace_gab, 2);
        expect(rep.list.size() == 5, "expected exactly 5 list members, got " + std::to_string(rep.list.size()));
        expect(rep.claimed_bound == 5, "claimed bound should be (2^4-1)/(2^2-1) = 5");
        expect(rep.checks.all(), "builder checks failed: " + rep.witness);
        rep = verify_adversary(code, std::move(rep), /*use_oracle=*/true, guard);
        expect(rep.valid(), "verification failed: " + rep.witness);
        expect(rep.oracle_count && *rep.oracle_count >= 5, "oracle ball count below 5");
        return "5 distinct codewords in B_2(c_R), center outside, oracle count " + rep.oracle_count->str();
    }));

    out.push_back(timed(3, "trinomial strategy on G_{7,2} at tau = 4 (127 codewords in one ball)", 30.0, [&] {
        FieldTower tw(2, 1, 7, 7);
        RankCode code(tw, CodeFamily::gabidulin, 2, 1);
        expect(trinomial_radius(7) == std::optional<std::uint32_t>(4), "trinomial radius of 7 must be 4");
        AdversaryReport rep = build_adversary(code, Strategy::trinomial, 4);
        expect(rep.list.size() == 127, "expected exactly 127 list members, got " + std::to_string(rep.list.size()));
        expect(rep.claimed_bound == 127, "claimed bound should be (2^7-1)/(2-1) = 127");
        expect(rep.checks.all(), "builder checks failed: " + rep.witness);
        rep = verify_adversary(code, std::move(rep), /*use_oracle=*/true, guard);
        expect(rep.valid(), "verification failed: " + rep.witness);
        expect(rep.oracle_count && *rep.oracle_count >= 127, "oracle ball count below 127");
        return "127 distinct codewords in B_4(c_R), oracle count " + rep.oracle_count->str();
    }));

    out.push_back(timed(4, "trinomial families have exactly q^t roots", 30.0, [&] {
        FieldTower t128(2, 1, 7, 7);
        PolyFamily tri7 = trinomial_family(t128, 3);
        expect(tri7.size() == 127, "expected 127 trinomials over F_{2^7}");
        const Subspace f128 = Subspace::full_space(t128);
        for (const auto& f : tri7.members)
            expect(root_count(f, f128, guard) == 8, "a trinomial over F_{2^7} missed the 8-root count");

        FieldTower t8(2, 1, 3, 3);
        PolyFamily tri3 = trinomial_family(t8, 2);
        expect(tri3.size() == 7, "expected 7 trinomials over F_8");
        const Subspace f8 = Subspace::full_space(t8);
        for (const auto& f : tri3.members)
            expect(root_count(f, f8, guard) == 4, "a trinomial over F_8 missed the 4-root count");
        return "127 trinomials with 8 roots each (F_{2^7}); 7 with 4 roots each (F_8)";
    }));

    out.push_back(timed(5, "trace-gen strategy on twisted H_{6,3} over F_{3^6} at tau = 2", 30.0, [&] {
        FieldTower tw(3, 1, 6, 6);
        FamilyParams params;
        params.eta = find_eta(tw, CodeFamily::twisted, 3);
        params.h = 1;
        RankCode code(tw, CodeFamily::twisted, 3, 1, params);
        AdversaryReport rep = build_adversary(code, Strategy::trace_gen, 2);
        expect(rep.list.size() == 28, "expected exactly 28 list members, got " + std::to_string(rep.list.size()));
        expect(rep.claimed_bound == 28, "claimed bound should be (3^6-1)/(3^3-1) = 28");
        expect(rep.ball_radius == 3, "ball radius should be tau+1 = 3");
        expect(rep.checks.all(), "builder checks failed: " + rep.witness);
        // algebraic verification only; the code has 3^18 words, beyond enumeration
        rep = verify_adversary(code, std::move(rep), /*use_oracle=*/false);
        expect(rep.valid(), "verification failed: " + rep.witness);
        for (const auto& w : rep.list) {
            expect(code.contains(w), "a list member fails contains()");
            expect(rank_distance(rep.center, w) <= 3, "a list member exceeds rank distance 3");
        }
        expect(!code.contains(rep.center), "center must stay outside the code");
        return "28 distinct members of H_{6,3}(eta=" + std::to_string(params.eta->encoding()) +
               ",1) in B_3(c_R), center outside";
    }));

    out.push_back(timed(6, "pigeonhole partition at n=4, r=2, g=1, q=2, m=4", 10.0, [&] {
        FieldTower tw(2, 1, 4, 4);
        const Subspace S = Subspace::embedded_subfield(tw);
        PigeonholePartition part = pigeonhole_partition(S, 2, 1, 1, guard);
        const BigInt gb = gaussian_binomial(4, 2, 2);
        expect(gb == 35, "[4 choose 2]_2 must be 35");
        expect(part.total == gb, "partition must cover all 35 subspace polynomials");
        BigInt enumerated = 0;
        for_each_subspace(S, 2, guard, [&](const Subspace&) { ++enumerated; });
        expect(enumerated == 35, "subspace enumeration must yield 35 subspaces");
        PolyFamily fam = pigeonhole_family(S, 2, 1, 1, guard);
        expect(fam.size() >= 3, "largest class must reach ceil(35/16) = 3; got " + std::to_string(fam.size()));
        std::size_t covered = 0;
        for (const auto& [key, cls] : part.classes) covered += cls.size();
        expect(covered == 35, "classes must partition all 35 polynomials");
        return "35 subspace polynomials in " + std::to_string(part.classes.size()) +
               " classes; largest class " + std::to_string(fam.size()) + " >= 3";
    }));

    out.push_back(timed(7, "randomized property suites (1000 cases each, fixed seeds)", 120.0, [&] {
        FieldTower t16(2, 1, 4, 4);
        FieldTower t16b(2, 1, 2, 4);  // proper subfield chain F_4 < F_16
        const Subspace full16 = Subspace::full_space(t16);
        const Subspace sub4 = Subspace::embedded_subfield(t16b);

        {  // right_divide reconstruction
            std::mt19937_64 rng(0x5eed0001);
            for (int it = 0; it < 1000; ++it) {
                SigmaPoly f = random_poly(t16, 1, 3, rng);
                SigmaPoly g = random_poly(t16, 1, 3, rng);
                if (g.is_zero()) g = SigmaPoly::identity(t16, 1);
                auto [quot, rem] = right_divide(f, g);
                expect(rem.degree() < g.degree() || rem.is_zero(), "remainder degree must drop below the divisor");
                expect(compose(quot, g) + rem == f, "f = quot o g + rem must hold identically");
            }
        }
        {  // reduction into the transversal: agreement on U_S and idempotence
            std::mt19937_64 rng(0x5eed0002);
            for (int it = 0; it < 1000; ++it) {
                const bool proper = (it % 2) == 0;
                const FieldTower& tw = proper ? t16b : t16;
                const Subspace& S = proper ? sub4 : full16;
                SigmaPoly f = random_poly(tw, 1, tw.m() - 1, rng);
                SigmaPoly red = reduce_mod_annihilator(f, S);
                expect(red.degree() < static_cast<int>(S.dim()) || red.is_zero(),
                       "reduction must land in the transversal");
                expect(reduce_mod_annihilator(red, S) == red, "reduction must be idempotent");
                bool agree = true;
                S.for_each_element([&](const FieldElement& x) { agree = agree && f.eval(x) == red.eval(x); });
                expect(agree, "reduction must agree with f on U_S");
            }
        }
        {  // rank of an evaluation word vs kernel dimension
            std::mt19937_64 rng(0x5eed0003);
            RankCode g42(t16, CodeFamily::gabidulin, 2, 1);
            const Subspace span(t16, g42.alpha());
            for (int it = 0; it < 1000; ++it) {
                SigmaPoly P = random_poly(t16, 1, 3, rng);
                const Word w = g42.codeword(P);
                const std::uint32_t lhs = rank_weight(w);
                const std::uint32_t rhs = 4 - kernel_basis(P, span).dim();
                expect(lhs == rhs, "rk(c_P) must equal n - dim(ker P on U_S)");
            }
        }
        {  // injectivity of the reduction on G_{4,2}: q^{mk} distinct images
            FieldTower tw(2, 1, 4, 4);
            RankCode code(tw, CodeFamily::gabidulin, 2, 1);
            const Subspace S = Subspace::embedded_subfield(tw);
            std::set<SigmaPoly> images;
            std::set<Word> words;
            for (std::uint64_t a0 = 0; a0 < 16; ++a0)
                for (std::uint64_t a1 = 0; a1 < 16; ++a1) {
                    SigmaPoly f(tw, 1, {tw.element(Level::fqm, a0), tw.element(Level::fqm, a1)});
                    images.insert(reduce_mod_annihilator(f, S));
                    words.insert(code.codeword(f));
                }
            expect(images.size() == 256 && words.size() == 256,
                   "reduction must be injective on the 256 codeword polynomials");
        }
        {  // norm multiplicativity
            std::mt19937_64 rng(0x5eed0004);
            FieldTower t81(3, 1, 4, 4);
            std::uniform_int_distribution<std::uint64_t> pick(0, 80);
            for (int it = 0; it < 1000; ++it) {
                FieldElement x = t81.element(Level::fqm, pick(rng));
                FieldElement y = t81.element(Level::fqm, pick(rng));
                expect(t81.norm_to_fq(x * y) == t81.norm_to_fq(x) * t81.norm_to_fq(y),
                       "N(xy) = N(x)N(y) must hold");
                expect(t81.norm_to_fp(x * y) == t81.norm_to_fp(x) * t81.norm_to_fp(y),
                       "N_p(xy) = N_p(x)N_p(y) must hold");
            }
        }
        {  // frobenius additivity
            std::mt19937_64 rng(0x5eed0005);
            FieldTower t64(2, 1, 6, 6);
            std::uniform_int_distribution<std::uint64_t> pick(0, 63);
            std::uniform_int_distribution<std::uint32_t> spick(0, 11);
            for (int it = 0; it < 1000; ++it) {
                FieldElement x = t64.element(Level::fqm, pick(rng));
                FieldElement y = t64.element(Level::fqm, pick(rng));
                const std::uint32_t s = spick(rng);
                expect(t64.frobenius(x + y, s) == t64.frobenius(x, s) + t64.frobenius(y, s),
                       "frobenius must be additive");
            }
        }
        return "6 property suites passed (1000 cases each)";
    }));

    out.push_back(timed(8, "radius threshold at (m,n,d) = (7,7,5)", 5.0, [&] {
        const RadiusThreshold r = radius_threshold(7, 7, 5, 0.0);
        expect(r.value > 3.25 && r.value < 3.27, "threshold must lie in (3.25, 3.27)");
        const double exact = 7.0 - std::sqrt(14.0);
        expect(std::abs(r.value - exact) < 1e-6, "threshold must equal 7 - sqrt(14) to 1e-6");
        expect(r.first_integer == 4, "ceiling must be 4, matching the trinomial radius of n = 7");
        std::ostringstream os;
        os.precision(10);
        os << "threshold " << r.value << ", first integer radius 4";
        return os.str();
    }));

    return out;
}

}  // namespace rankmetric

#endif  // RANKMETRIC_SELFTEST_HPP
