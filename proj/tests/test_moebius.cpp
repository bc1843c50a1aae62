#include <catch_amalgamated.hpp>

#include <orbikit/quadratic.hpp>

#include <random>

#include "fixtures.hpp"

using namespace orbikit;
using namespace fixtures;

namespace {

using C = Complex<128>;
using R = Real<128>;
using NM = Moebius<C>;

const R tight("1e-30");

C polar(const R& r, const R& theta) { return C(r * cos(theta), r * sin(theta)); }

C ii() { return C(0, 1); }

NM gamma_rotation(const R& theta)
{
    return NM(C(0), ii() * polar(1, theta), ii() * polar(1, -theta), C(0));
}

NM order3_rotation()
{
    C w = polar(1, 2 * pi<128>() / 3);
    C y(sqrt(R(3)) / 2, R("0.5"));
    return NM(w, y, C(0), C(1) / w);
}

// Random element of SL(2, Z[i]) as a product of elementary matrices.
Moebius<AlgNum> random_unimodular(const FieldPtr& f, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> small(-2, 2);
    Moebius<AlgNum> h = Moebius<AlgNum>::identity(AlgNum(f, Rational(1)));
    AlgNum one(f, Rational(1)), zero(f, Rational(0));
    for (int k = 0; k < 4; ++k) {
        AlgNum x = elem(f, {small(rng), small(rng)});
        if (k % 2 == 0) h = h * Moebius<AlgNum>(one, x, zero, one);
        else h = h * Moebius<AlgNum>(one, zero, x, one);
    }
    return h;
}

AlgNum gauss(long x, long y) { return elem(gaussian_field(), {x, y}); }

}  // namespace

TEST_CASE("conjugating the unit translation by diag(1/sqrt x, sqrt x) divides the translation by x")
{
    C x = embed<128>(AlgNum::generator(eisenstein_field()));
    C s = sqrt(x);
    NM mu(C(1), C(1), C(0), C(1));
    NM h = NM::unchecked(C(1) / s, C(0), C(0), s);
    NM conj = group_arith(GroupOp::conjugate, mu, std::optional<NM>(h));
    CHECK(abs(conj.b() - C(1) / x) < tight);
    CHECK(abs(conj.c()) < tight);
}

TEST_CASE("composition with the inverse is the identity")
{
    NM g = gamma_rotation(R("0.3")) * order3_rotation();
    CHECK(group_arith(GroupOp::compose, g, std::optional<NM>(g.inverse())).is_identity());
    Moebius<AlgNum> e(gauss(1, 1), gauss(0, 1), gauss(1, 0), gauss(1, 0));
    CHECK(e.det() == gauss(1, 0));
    CHECK((e * e.inverse()).is_identity());
}

TEST_CASE("trace of gamma times the order-3 rotation has modulus one")
{
    for (R theta : {R(0), pi<128>() / 7, R(1)}) {
        NM g = gamma_rotation(theta) * order3_rotation();
        CHECK(abs(abs(g.trace()) - 1) < tight);
    }
}

TEST_CASE("classification of standard elements")
{
    using K = Classification::Kind;
    CHECK(classify(NM(C(1), C(1), C(0), C(1))).kind == K::parabolic);
    C ell = polar(1, pi<128>() / 6);
    auto r = classify(NM(ell, C(0), C(0), C(1) / ell));
    CHECK(r.kind == K::elliptic);
    CHECK(r.order == 6);
    CHECK(classify(NM(C(2), C(0), C(0), C(R("0.5")))).kind == K::loxodromic);
    CHECK(classify(NM(C(-1), C(0), C(0), C(-1))).kind == K::identity);
    CHECK(classify(order3_rotation()).order == 3);
    CHECK(classify(gamma_rotation(R(1))).order == 2);
    C five = polar(1, 2 * pi<128>() / 5);
    CHECK(classify(NM(five, C(0), C(0), C(1) / five)).order == 5);
}

TEST_CASE("exact classification")
{
    using K = Classification::Kind;
    auto f = eisenstein_field();
    AlgNum w = AlgNum::generator(f), one = w.one(), zero = w.zero();
    CHECK(classify(Moebius<AlgNum>(one, w, zero, one)).kind == K::parabolic);
    CHECK(classify(Moebius<AlgNum>(w, zero, zero, w * w)) == Classification{K::elliptic, 3});
    CHECK(classify(Moebius<AlgNum>(-one, zero, zero, -one)).kind == K::identity);
    AlgNum two(f, Rational(2));
    CHECK(classify(Moebius<AlgNum>(two, zero, zero, two.inverse())).kind == K::loxodromic);
}

TEST_CASE("classification is invariant under conjugation")
{
    std::mt19937_64 rng(11);
    auto f = gaussian_field();
    std::vector<Moebius<AlgNum>> samples = {
        Moebius<AlgNum>(gauss(1, 0), gauss(1, 1), gauss(0, 0), gauss(1, 0)),
        Moebius<AlgNum>(gauss(0, 0), gauss(-1, 0), gauss(1, 0), gauss(0, 0)),
        Moebius<AlgNum>(gauss(0, 0), gauss(-1, 0), gauss(1, 0), gauss(1, 0)),
        Moebius<AlgNum>(gauss(2, 0), gauss(1, 0), gauss(1, 0), gauss(1, 0)),
        Moebius<AlgNum>(gauss(0, 1), gauss(0, 0), gauss(0, 0), gauss(0, -1)),
    };
    for (const auto& g : samples) {
        Classification base = classify(g);
        for (int k = 0; k < 20; ++k) {
            auto h = random_unimodular(f, rng);
            CHECK(classify(g.conjugate(h)) == base);
            CHECK(classify(g.conjugate(h).to_numeric<128>()) == base);
        }
    }
}

TEST_CASE("isometric spheres")
{
    R s7 = sqrt(sqrt(R(7)));
    C b = sqrt(C(5, sqrt(R(3)))) / sqrt(2 * sqrt(R(7)));
    CHECK(abs(abs(b) - 1) < tight);
    NM gam(C(0), ii() * b, ii() / b, C(0));
    NM t(C(1), C(s7), C(0), C(1));
    auto s1 = isometric_sphere(gam);
    CHECK(abs(s1.center) < tight);
    CHECK(abs(s1.radius - 1) < tight);
    auto s2 = isometric_sphere(gam.conjugate(t));
    CHECK(abs(s2.center - C(s7)) < tight);
    CHECK(abs(s2.radius - 1) < tight);
    auto s3 = isometric_sphere(NM(C(0), C(-1), C(1), C(0)));
    CHECK(abs(s3.center) < tight);
    CHECK(abs(s3.radius - 1) < tight);
    CHECK_THROWS_AS(isometric_sphere(t), FixesInfinity);
}

TEST_CASE("horoball images")
{
    C b = sqrt(C(5, sqrt(R(3)))) / sqrt(2 * sqrt(R(7)));
    NM gam(C(0), ii() * b, ii() / b, C(0));
    auto ball = horoball_image(gam, R(1));
    CHECK_FALSE(ball.at_infinity);
    CHECK(abs(ball.center) < tight);
    CHECK(abs(ball.size - 1) < tight);
    auto inf = horoball_image(NM(C(1), C(1), C(0), C(1)), R(1));
    CHECK(inf.at_infinity);
    CHECK(abs(inf.size - 1) < tight);
}

TEST_CASE("sphere radii and horoball diameters on random words")
{
    std::mt19937_64 rng(5);
    std::vector<NM> gens = {gamma_rotation(R("0.4")), order3_rotation(), NM(C(1), C(sqrt(R(3))), C(0), C(1))};
    std::uniform_int_distribution<int> pick(0, 5), shift(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        NM g = NM::identity(C(1));
        for (int k = 0; k < 5; ++k) {
            int i = pick(rng);
            g = g * (i < 3 ? gens[i] : gens[i - 3].inverse());
        }
        if (g.fixes_infinity()) continue;
        CHECK(abs(isometric_sphere(g).radius - isometric_sphere(g.inverse()).radius) < R("1e-25"));
        NM u(C(1), C(shift(rng), shift(rng)), C(0), C(1));
        auto b1 = horoball_image(g, R(1)), b2 = horoball_image(u * g, R(1));
        CHECK(abs(b1.size - b2.size) < R("1e-25"));
        CHECK(abs(b2.center - b1.center - u.b()) < R("1e-25"));
    }
}

TEST_CASE("mode mismatch and unimodularity")
{
    AnyMoebius<128> ex = Moebius<AlgNum>::identity(gauss(1, 0));
    AnyMoebius<128> nu = NM::identity(C(1));
    CHECK_THROWS_AS(group_arith<128>(GroupOp::compose, ex, std::optional<AnyMoebius<128>>(nu)), ModeMismatch);
    CHECK_NOTHROW(group_arith<128>(GroupOp::compose, nu, std::optional<AnyMoebius<128>>(nu)));
    CHECK_THROWS_AS(NM(C(2), C(0), C(0), C(1)), NotUnimodular);
    CHECK_THROWS_AS(Moebius<AlgNum>(gauss(2, 0), gauss(0, 0), gauss(0, 0), gauss(1, 0)), NotUnimodular);
}

TEST_CASE("canonical representative under sign")
{
    NM g = order3_rotation();
    NM ng = g.negated();
    CHECK(same_element(g, ng));
    auto c1 = g.canonical(), c2 = ng.canonical();
    for (int i = 0; i < 4; ++i) CHECK(abs(c1.entries()[i] - c2.entries()[i]) < tight);
    R arg0 = arg(c1.a());
    CHECK(arg0 >= 0);
    CHECK(arg0 < pi<128>());
}

TEST_CASE("upper triangularization in Z[i]")
{
    auto ring = QuadraticRing::standard(1);
    AlgNum one = ring.make(1, 0);
    auto trivial = upper_triangularize({one, ring.make(0, 0)}, ring);
    CHECK(trivial.conjugator.is_identity());

    ParabolicFixedData mu{ring.make(1, 1), ring.make(0, 1)};
    auto tri = upper_triangularize(mu, ring);
    const auto& h = tri.conjugator;
    CHECK(tri.comaximal);
    CHECK(h.det() == one);
    CHECK(h.a() * mu.beta + h.b() * mu.gamma == one);
    auto conj = mu.meridian().conjugate(h);
    CHECK(conj.c().is_zero());
    CHECK(conj.trace() == ring.make(2, 0));
}

TEST_CASE("upper triangularization along the principal path")
{
    auto ring = QuadraticRing::standard(3);
    AlgNum w = AlgNum::generator(ring.field());
    ParabolicFixedData mu{ring.make(2, 0), ring.make(0, 2)};
    auto tri = upper_triangularize(mu, ring);
    CHECK_FALSE(tri.comaximal);
    CHECK(ring.norm(tri.gcd) == 4);
    const auto& h = tri.conjugator;
    CHECK(h.det() == w.one());
    CHECK(mu.meridian().conjugate(h).c().is_zero());
    // Up to the unit relating the computed gcd to 2, the lower row is (-omega, 1).
    AlgNum u = ring.make(2, 0) / tri.gcd;
    CHECK(ring.is_unit(u));
    CHECK(-h.c() == w * u);
    CHECK(h.d() == u);
}

TEST_CASE("upper triangularization property over all supported rings")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coef(-7, 7);
    for (long d : {1L, 2L, 3L, 7L, 11L}) {
        auto ring = QuadraticRing::standard(d);
        for (int trial = 0; trial < 40; ++trial) {
            AlgNum beta = ring.make(coef(rng), coef(rng)), gamma = ring.make(coef(rng), coef(rng));
            if (beta.is_zero() && gamma.is_zero()) continue;
            if (trial % 4 == 0) {
                AlgNum k = ring.make(coef(rng), coef(rng));
                if (!k.is_zero()) {
                    beta = beta * k;
                    gamma = gamma * k;
                }
            }
            if (beta.is_zero()) continue;
            ParabolicFixedData mu{beta, gamma};
            auto tri = upper_triangularize(mu, ring);
            CHECK(tri.conjugator.det() == beta.one());
            for (const auto& e : tri.conjugator.entries()) CHECK(ring.contains(e));
            CHECK(mu.meridian().conjugate(tri.conjugator).c().is_zero());
            auto tr2 = mu.meridian().trace();
            CHECK(tr2 * tr2 == ring.make(4, 0));
        }
    }
}

TEST_CASE("euclidean division and unsupported rings")
{
    auto ring = QuadraticRing::standard(11);
    AlgNum a = ring.make(17, -5), b = ring.make(3, 2);
    auto [q, r] = ring.divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(ring.norm(r) < ring.norm(b));
    auto bez = ring.xgcd(a, b);
    CHECK(bez.x * a + bez.y * b == bez.gcd);
    CHECK(ring.divides(bez.gcd, a));
    CHECK_THROWS_AS(QuadraticRing::from_field(NumberField::create(poly({5, 0, 1}), 0.0, 2.2)), NonEuclideanRing);
    CHECK_THROWS_AS(QuadraticRing::from_field(NumberField::create(poly({3, 0, 1}), 0.0, 1.7)), NonEuclideanRing);
}

TEST_CASE("meridian normalization")
{
    auto f = eisenstein_field();
    auto id = normalize_meridian(AlgNum(f, Rational(1)));
    REQUIRE(std::holds_alternative<NM>(id));
    CHECK(std::get<NM>(id).is_identity());

    auto obst = normalize_meridian(AlgNum::generator(alpha_field()));
    REQUIRE(std::holds_alternative<ObstructionReport>(obst));
    CHECK(std::get<ObstructionReport>(obst).constant_term == 7);
    CHECK(std::get<ObstructionReport>(obst).minpoly == poly({7, 0, -5, 0, 1}));

    AlgNum w = AlgNum::generator(f);
    auto res = normalize_meridian(w);
    REQUIRE(std::holds_alternative<NM>(res));
    const NM& h = std::get<NM>(res);
    C e = polar(1, pi<128>() / 3);
    CHECK(same_element(h, NM::unchecked(C(1) / e, C(0), C(0), e)));
    NM mu(C(1), embed<128>(w), C(0), C(1));
    CHECK(same_element(mu.conjugate(h), NM(C(1), C(1), C(0), C(1))));
}
