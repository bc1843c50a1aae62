#include <catch_amalgamated.hpp>

#include <orbikit/so3geom.hpp>

#include <cmath>
#include <numbers>

using namespace orbikit;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = 1e-12;

void check(const AxisAngles& got, double a, double b, double c)
{
    CHECK_THAT(got.alpha, WithinAbs(a, eps));
    CHECK_THAT(got.beta, WithinAbs(b, eps));
    CHECK_THAT(got.gamma, WithinAbs(c, eps));
}

}  // namespace

TEST_CASE("dihedral triples give two right angles")
{
    for (int n = 2; n <= 12; ++n) check(axis_angles(2, 2, n), pi / 2, pi / 2, pi / n);
    check(axis_angles(2, 2, 2), pi / 2, pi / 2, pi / 2);
}

TEST_CASE("polyhedral triples")
{
    check(axis_angles(2, 3, 3), std::acos(1 / 3.0), std::acos(1 / std::sqrt(3.0)), std::acos(1 / std::sqrt(3.0)));
    check(axis_angles(2, 3, 4), std::acos(1 / std::sqrt(3.0)), pi / 4, std::acos(std::sqrt(2.0) / std::sqrt(3.0)));
    const double s = std::sin(pi / 5), c = std::cos(pi / 5);
    check(axis_angles(2, 3, 5), std::acos(c / (std::sqrt(3.0) * s)), std::acos(1 / (2 * s)), std::acos(2 * c / std::sqrt(3.0)));
}

TEST_CASE("permuting orders permutes angles")
{
    const int triples[][3] = {{2, 3, 3}, {2, 3, 4}, {2, 3, 5}, {2, 2, 7}};
    for (const auto& t : triples) {
        int p[3] = {t[0], t[1], t[2]};
        auto base = axis_angles(p[0], p[1], p[2]);
        double ref[3] = {base.alpha, base.beta, base.gamma};
        int idx[3] = {0, 1, 2};
        do {
            auto got = axis_angles(p[idx[0]], p[idx[1]], p[idx[2]]);
            check(got, ref[idx[0]], ref[idx[1]], ref[idx[2]]);
        } while (std::next_permutation(idx, idx + 3));
    }
}

TEST_CASE("angles lie in (0, pi]")
{
    for (int n = 2; n <= 30; ++n)
        for (auto t : {std::array{2, 2, n}, std::array{n, 2, 2}}) {
            auto a = axis_angles(t[0], t[1], t[2]);
            for (double x : {a.alpha, a.beta, a.gamma}) {
                CHECK(x > 0);
                CHECK(x <= pi);
            }
        }
}

TEST_CASE("non-spherical triples are rejected")
{
    CHECK_THROWS_AS(axis_angles(2, 3, 6), NotSpherical);
    CHECK_THROWS_AS(axis_angles(3, 3, 3), NotSpherical);
    CHECK_THROWS_AS(axis_angles(2, 4, 4), NotSpherical);
    CHECK_THROWS_AS(axis_angles(1, 2, 2), NotSpherical);
}

TEST_CASE("perpendicular axis exists only for dihedral groups")
{
    CHECK(has_perpendicular_axis(Isotropy::dihedral(4)));
    CHECK(has_perpendicular_axis(Isotropy::dihedral(2)));
    CHECK_FALSE(has_perpendicular_axis(Isotropy::a4()));
    CHECK_FALSE(has_perpendicular_axis(Isotropy::s4()));
    CHECK_FALSE(has_perpendicular_axis(Isotropy::a5()));
    CHECK_FALSE(has_perpendicular_axis(Isotropy::cyclic(5)));
}
