#pragma once

#include <json.hpp>

#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "algnum.hpp"
#include "cuspgeom.hpp"
#include "groups.hpp"
#include "moebius.hpp"

namespace orbikit {

struct Claim {
    std::string id;
    std::string claim;
    std::string computed;
    std::string expected;
    std::string tolerance;
    bool pass;
};

struct VerificationReport {
    std::string case_id;
    std::vector<Claim> claims;

    bool pass() const
    {
        return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
    }

    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json j;
        j["case"] = case_id;
        j["pass"] = pass();
        j["claims"] = nlohmann::ordered_json::array();
        for (const auto& c : claims)
            j["claims"].push_back({{"id", c.id},
                                   {"claim", c.claim},
                                   {"computed", c.computed},
                                   {"expected", c.expected},
                                   {"tolerance", c.tolerance},
                                   {"pass", c.pass}});
        return j;
    }

    std::string to_text() const
    {
        std::string s = case_id + ": " + (pass() ? "PASS" : "FAIL") + "\n";
        for (const auto& c : claims) {
            s += "  [" + std::string(c.pass ? "pass" : "FAIL") + "] " + c.id + " " + c.claim + "\n";
            s += "      computed " + c.computed + "\n      expected " + c.expected;
            if (!c.tolerance.empty()) s += " (tol " + c.tolerance + ")";
            s += "\n";
        }
        return s;
    }
};

namespace detail {

inline constexpr int report_digits = 24;

template <unsigned Bits>
Real<Bits> claim_tolerance()
{
    return Bits >= 128 ? Real<Bits>("1e-20") : Real<Bits>("1e-12");
}

template <unsigned Bits>
std::string tolerance_string(const Real<Bits>& tol)
{
    std::ostringstream out;
    out << std::scientific << std::setprecision(0) << static_cast<double>(tol);
    return out.str();
}

template <unsigned Bits>
Claim numeric_claim(std::string id, std::string text, const Real<Bits>& got, const Real<Bits>& want, const Real<Bits>& tol)
{
    return {std::move(id), std::move(text), format_fixed(got, report_digits), format_fixed(want, report_digits), tolerance_string(tol), abs(got - want) <= tol};
}

template <unsigned Bits>
Claim complex_claim(std::string id, std::string text, const Complex<Bits>& got, const Complex<Bits>& want, const Real<Bits>& tol)
{
    auto c = numeric_claim<Bits>(std::move(id), std::move(text), Real<Bits>(0), Real<Bits>(0), tol);
    c.computed = format_complex(got, report_digits);
    c.expected = format_complex(want, report_digits);
    c.pass = abs(got - want) <= tol;
    return c;
}

inline Claim exact_claim(std::string id, std::string text, std::string got, std::string want)
{
    bool ok = got == want;
    return {std::move(id), std::move(text), std::move(got), std::move(want), "exact", ok};
}

inline RationalPoly int_poly(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return RationalPoly(std::move(v));
}

}  // namespace detail

struct Lemma51Options {
    double b_perturbation = 0;
};

template <unsigned Bits = default_bits>
VerificationReport verify_lemma51(const Lemma51Options& opts = {})
{
    using R = Real<Bits>;
    using C = Complex<Bits>;
    using M = Moebius<C>;
    const R tol = detail::claim_tolerance<Bits>();
    VerificationReport rep{"lemma51", {}};

    C b = sqrt21_b<Bits>() + C(R(opts.b_perturbation));
    auto group = sqrt21_group<Bits>(b);
    const M& t = group.generators[0].g;
    const M& gamma = group.generators[2].g;
    const R q7 = sqrt(sqrt(R(7)));

    rep.claims.push_back(detail::complex_claim<Bits>("i.det", "det(gamma) = 1", gamma.det(), C(1), tol));
    rep.claims.push_back(detail::numeric_claim<Bits>("i.abs_b", "|b| = 1", abs(b), R(1), tol));

    auto s0 = isometric_sphere<Bits>(gamma);
    auto s1 = isometric_sphere<Bits>(gamma.conjugate(t));
    rep.claims.push_back(detail::complex_claim<Bits>("ii.center_gamma", "isometric sphere of gamma is centered at 0", s0.center, C(0), tol));
    rep.claims.push_back(detail::numeric_claim<Bits>("ii.radius_gamma", "isometric sphere of gamma has radius 1", s0.radius, R(1), tol));
    rep.claims.push_back(
        detail::complex_claim<Bits>("ii.center_tgt", "isometric sphere of t gamma t^-1 is centered at 7^(1/4)", s1.center, C(q7), tol));
    rep.claims.push_back(detail::numeric_claim<Bits>("ii.radius_tgt", "isometric sphere of t gamma t^-1 has radius 1", s1.radius, R(1), tol));

    C lambda = C(1) / sqrt(b);
    auto g = M::diagonal(lambda);
    auto t2 = t.conjugate(g);
    const R s3 = sqrt(R(3));
    C alpha = sqrt(C(R(14)) / C(R(5), s3));
    rep.claims.push_back(detail::complex_claim<Bits>("iii.upper_entry", "g t g^-1 = (1 alpha; 0 1) with alpha = sqrt(14/(5+i sqrt(3)))", t2.b(), alpha, tol));
    rep.claims.push_back(detail::complex_claim<Bits>("iii.lower_left", "g t g^-1 is upper triangular", t2.c(), C(0), tol));
    auto gamma2 = gamma.conjugate(g);
    rep.claims.push_back(detail::complex_claim<Bits>("iii.gamma_prime", "g gamma g^-1 has upper-right entry i", gamma2.b(), C(R(0), R(1)), tol));

    auto k = NumberField::create(detail::int_poly({3, 0, 1}), 0.0, 1.7320508075688772);
    AlgNum s(k, std::vector<Rational>{Rational(0), Rational(1)});
    AlgNum a2 = Rational(1, 2) * (AlgNum(k, std::vector<Rational>{Rational(5)}) - s);
    AlgNum residual = a2 * a2 - Rational(5) * a2 + AlgNum(k, std::vector<Rational>{Rational(7)});
    rep.claims.push_back(detail::exact_claim("iv.quadratic_residual", "alpha^2 = (5 - i sqrt(3))/2 satisfies q^2 - 5q + 7 = 0 in Q(sqrt(-3))",
                                             residual.to_string(), "0"));
    rep.claims.push_back(detail::complex_claim<Bits>("iv.alpha_squared", "alpha^2 = (5 - i sqrt(3))/2 numerically", alpha * alpha,
                                                     C(R(5) / 2, -s3 / 2), tol));
    auto field = NumberField::create(detail::int_poly({7, 0, -5, 0, 1}), convert<root_bits>(alpha));
    AlgNum a(field, std::vector<Rational>{Rational(0), Rational(1)});
    rep.claims.push_back(detail::exact_claim("iv.minpoly", "minimal polynomial of alpha", minimal_polynomial(a).to_string("q"),
                                             detail::int_poly({7, 0, -5, 0, 1}).to_string("q")));
    rep.claims.push_back(detail::complex_claim<Bits>("iv.embedding", "the field generator embeds as alpha", embed<Bits>(a), alpha, tol));

    auto report = integrality_and_unit_test(a);
    rep.claims.push_back(detail::exact_claim("v.kind", "alpha is an algebraic integer but not a unit", to_string(report.kind), "integral_nonunit"));
    rep.claims.push_back(detail::exact_claim("v.constant_term", "constant term of the minimal polynomial", report.constant_term.str(), "7"));
    auto norm = normalize_meridian<Bits>(a);
    rep.claims.push_back(detail::exact_claim("v.obstruction", "normalizing (1 alpha; 0 1) to (1 1; 0 1) is obstructed",
                                             std::holds_alternative<ObstructionReport>(norm) ? "obstruction_report" : "conjugator",
                                             "obstruction_report"));
    return rep;
}

template <unsigned Bits = default_bits>
VerificationReport verify_lemma53()
{
    using R = Real<Bits>;
    using C = Complex<Bits>;
    using M = Moebius<C>;
    const R tol = detail::claim_tolerance<Bits>();
    VerificationReport rep{"lemma53", {}};
    const R s3 = sqrt(R(3));

    const std::pair<const char*, R> thetas[] = {{"0", R(0)}, {"pi/7", pi<Bits>() / 7}, {"1", R(1)}};
    for (const auto& [label, theta] : thetas) {
        auto group = tetrahedral_case1_group<Bits>(theta);
        const M& gamma = group.generators[0].g;
        const M& r = group.generators[1].g;
        C tr = (gamma * r).trace();
        C formula = C(R(0), R(-1)) * C(s3 / 2, R(1) / 2) * C(cos(theta), -sin(theta));
        std::string id = std::string("i.theta=") + label;
        rep.claims.push_back(detail::numeric_claim<Bits>(id + ".trace", "tr(gamma r) = -i ((sqrt(3)+i)/2) e^(-i theta) up to sign (distance)",
                                                         std::min(abs(tr - formula), abs(tr + formula)), R(0), tol));
        rep.claims.push_back(detail::numeric_claim<Bits>(id + ".modulus", "|tr(gamma r)| = 1", abs(tr), R(1), tol));
    }

    auto group = tetrahedral_case1_group<Bits>();
    const M& gamma = group.generators[0].g;
    const M& r = group.generators[1].g;
    const M& t = group.generators[2].g;
    auto rtr = t.conjugate(r);
    C w = detail::omega<Bits>();
    rep.claims.push_back(detail::complex_claim<Bits>("ii.rtr", "r t r^-1 translates by omega^2 sqrt(3)", rtr.b(), w * w * s3, tol));
    rep.claims.push_back(detail::numeric_claim<Bits>("ii.sphere_radius", "r gamma r^-1 has an isometric sphere of radius 1",
                                                     isometric_sphere<Bits>(gamma.conjugate(r)).radius, R(1), tol));
    rep.claims.push_back(detail::numeric_claim<Bits>("ii.lattice_area", "translation lattice <sqrt(3), omega sqrt(3)> has area 3 sqrt(3)/2",
                                                     group.lattice.area(), 3 * s3 / 2, tol));

    // Q(zeta) with zeta = exp(i pi / 6) contains both omega = zeta^2 - 1 and sqrt(3) = 2 zeta - zeta^3.
    auto z12 = NumberField::create(detail::int_poly({1, 0, -1, 0, 1}), 0.8660254037844386, 0.5);
    AlgNum zeta(z12, std::vector<Rational>{Rational(0), Rational(1)});
    AlgNum root3 = Rational(2) * zeta - zeta.pow(3);
    AlgNum om = zeta * zeta - zeta.one();
    rep.claims.push_back(detail::exact_claim("ii.sqrt3_squared", "(2 zeta - zeta^3)^2 = 3", (root3 * root3).to_string(), "3"));
    rep.claims.push_back(detail::exact_claim("ii.omega_cubed", "(zeta^2 - 1)^3 = 1", om.pow(3).to_string(), "1"));
    for (const auto& [name, x] : {std::pair<std::string, AlgNum>{"sqrt(3)", root3}, {"omega sqrt(3)", om * root3}}) {
        auto rp = integrality_and_unit_test(x);
        rep.claims.push_back(detail::exact_claim("ii.nonunit." + name, name + " is an algebraic integer but not a unit (minpoly " +
                                                                          rp.minpoly.to_string("q") + ")",
                                                 to_string(rp.kind), "integral_nonunit"));
        auto q = integrality_and_unit_test(x / root3);
        rep.claims.push_back(detail::exact_claim("ii.divisible." + name, name + " / sqrt(3) is an algebraic integer",
                                                 q.kind == IntegralityReport::Kind::not_integral ? "not_integral" : "integral", "integral"));
    }

    auto case2 = tetrahedral_case2_group<Bits>();
    std::vector<M> elems{M::identity(C(1))};
    std::vector<M> letters;
    for (const auto& g : case2.generators) {
        letters.push_back(g.g);
        letters.push_back(g.g.inverse());
    }
    std::vector<M> frontier = elems;
    for (int depth = 0; depth < 3; ++depth) {
        std::vector<M> next;
        for (const auto& e : frontier)
            for (const auto& l : letters) next.push_back(e * l);
        elems.insert(elems.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    R worst = 0;
    for (const auto& e : elems) {
        C tr = e.trace();
        R bb = 2 * tr.imag() / s3;
        R aa = tr.real() + bb / 2;
        worst = std::max(worst, std::max(abs(aa - round(aa)), abs(bb - round(bb))));
    }
    rep.claims.push_back(detail::numeric_claim<Bits>("iii.case2_traces",
                                                     "traces of all " + std::to_string(elems.size()) +
                                                         " words of length <= 3 in gamma', r', t lie in Z[omega] (max distance)",
                                                     worst, R(0), tol));

    rep.claims.push_back(detail::numeric_claim<Bits>("iv.covolume", "cusp volume sqrt(3)/4 bounds covolume below by v0/2",
                                                     volume_lower_bound_from_cusp(s3 / 4), v0<Bits>() / 2, tol));
    return rep;
}

template <unsigned Bits = default_bits>
VerificationReport verify_thm2()
{
    using R = Real<Bits>;
    using C = Complex<Bits>;
    const R tol = detail::claim_tolerance<Bits>();
    VerificationReport rep{"thm2", {}};
    const R s3 = sqrt(R(3));
    const C w = detail::omega<Bits>();

    auto deg = min_cover_degree(CuspType::S2_333, CoverScenario::manifold_cover);
    std::string ns;
    for (long n = 1; n <= 6; ++n)
        if (deg.admits(3 * n)) ns += (ns.empty() ? "" : ",") + std::to_string(n);
    rep.claims.push_back(detail::exact_claim("i.n", "n <= 6 with 3n a multiple of 12", "{" + ns + "}", "{4}"));

    PeripheralLattice<Bits> lat(C(1), w * R(4), 1, R(1));
    auto slopes = exceptional_slope_candidates(lat);
    rep.claims.push_back(detail::exact_claim("ii.count", "slopes of length <= 6 on <1, 4 omega> at c = 1", std::to_string(slopes.size()), "10"));
    auto pair_str = [](const auto& s) { return "(" + std::to_string(s.m) + "," + std::to_string(s.n) + ")"; };
    rep.claims.push_back(detail::exact_claim("ii.shortest", "two shortest slopes are the meridian and 2 + 4 omega",
                                             slopes.size() >= 2 ? pair_str(slopes[0]) + " " + pair_str(slopes[1]) : "", "(1,0) (2,1)"));
    rep.claims.push_back(detail::numeric_claim<Bits>("ii.length", "|2 + 4 omega| = 2 sqrt(3)", abs(C(2) + w * R(4)), 2 * s3, tol));

    rep.claims.push_back(detail::numeric_claim<Bits>("iii.c_max", "c |2 + 4 omega| = 6 at c = sqrt(3)", translation_length(C(2) + w * R(4), s3),
                                                     R(6), tol));
    R area = lat.area();
    R vmin = cusp_volume(area, R(1)), vmax = cusp_volume(area, s3);
    rep.claims.push_back(detail::numeric_claim<Bits>("iii.vol_min", "manifold cusp volume at c = 1", vmin, s3, tol));
    rep.claims.push_back(detail::numeric_claim<Bits>("iii.vol_max", "manifold cusp volume at c = sqrt(3)", vmax, 3 * s3, tol));
    rep.claims.push_back(detail::numeric_claim<Bits>("iii.quot_min", "orbifold cusp volume at c = 1 (degree 12)", vmin / 12, s3 / 12, tol));
    rep.claims.push_back(detail::numeric_claim<Bits>("iii.quot_max", "orbifold cusp volume at c = sqrt(3) (degree 12)", vmax / 12, s3 / 4, tol));

    const double lo = static_cast<double>(vmin / 12), hi = static_cast<double>(vmax / 12);
    rep.claims.push_back(detail::exact_claim("iv.endpoint_min", "classification of sqrt(3)/12",
                                             to_string(classify_rigid_cusp_volume(CuspType::S2_333, lo).kind), "ArithmeticSmall"));
    rep.claims.push_back(detail::exact_claim("iv.endpoint_max", "classification of sqrt(3)/4",
                                             to_string(classify_rigid_cusp_volume(CuspType::S2_333, hi).kind), "AtThreshold"));
    const auto& table = cusp_volume_table(CuspType::S2_333);
    std::vector<double> candidates;
    for (const auto& e : table.entries) candidates.push_back(e.value);
    candidates.push_back(table.threshold);
    std::set<std::string> survivors;
    for (double v : candidates) {
        if (v < lo - 1e-12 || v > hi + 1e-12) continue;
        auto cls = classify_rigid_cusp_volume(CuspType::S2_333, v);
        if (cls.kind == CuspVolumeClass::Kind::ArithmeticSmall) continue;
        survivors.insert(cls.entry + " -> " + to_string(cls.kind));
    }
    std::string got;
    for (const auto& s : survivors) got += (got.empty() ? "" : "; ") + s;
    std::set<std::string> want{"sqrt(3)(3+sqrt(5))/24 -> Tetrahedral_5_2_2", "sqrt(21)/12 -> Sqrt21Family", "sqrt(3)/4 -> AtThreshold"};
    std::string exp;
    for (const auto& s : want) exp += (exp.empty() ? "" : "; ") + s;
    rep.claims.push_back(detail::exact_claim("iv.survivors", "non-arithmetic listed volumes in the interval", got, exp));

    for (long n : {4L, 5L, 6L}) {
        PeripheralLattice<Bits> big(C(1), w * R(2 * n), 1, R(1));
        auto s = exceptional_slope_candidates(big);
        std::string list;
        for (const auto& x : s) list += (list.empty() ? "" : " ") + pair_str(x);
        rep.claims.push_back(detail::exact_claim("v.n=" + std::to_string(n), "only the meridian has length <= 6 on <1, " + std::to_string(2 * n) + " omega>",
                                                 list, "(1,0)"));
    }
    return rep;
}

template <unsigned Bits = default_bits>
std::vector<VerificationReport> verify_all()
{
    return {verify_lemma51<Bits>(), verify_lemma53<Bits>(), verify_thm2<Bits>()};
}

}  // namespace orbikit
