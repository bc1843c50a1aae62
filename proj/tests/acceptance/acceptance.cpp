#include <orbikit/cuspgeom.hpp>
#include <orbikit/cuspkill.hpp>
#include <orbikit/grouppres.hpp>
#include <orbikit/horoball.hpp>
#include <orbikit/so3geom.hpp>
#include <orbikit/verify.hpp>

#include "../graph_fixtures.hpp"
#include "../snf_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

using namespace orbikit;
using R = Real<default_bits>;
using C = Complex<default_bits>;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome horoball_inventory()
{
    Outcome o;
    auto t0 = Clock::now();
    OrbitOptions opts;
    opts.depth = 4;
    opts.min_diameter = 0.1;
    auto d = orbit_horoballs(sqrt21_group(), opts);
    double elapsed = seconds_since(t0);
    const R q7 = sqrt(sqrt(R(7))), s3 = sqrt(R(3)), s7 = sqrt(R(7));
    struct Want {
        std::string name;
        C z;
        R diameter;
    };
    const Want want[] = {{"O", C(0), R(1)},
                         {"D", C(q7), R(1)},
                         {"X", C(R(5), s3) / (2 * s7), 1 / s7},
                         {"Y", C(q7 / 2, q7 / (2 * s3)), R(3) / 7}};
    for (const auto& w : want) {
        bool found = false;
        std::string nearest;
        R best = 1e9;
        for (const auto& b : d.balls) {
            R dist = abs(b.center - w.z);
            if (dist <= 1e-9 && abs(b.diameter - w.diameter) <= 1e-9) found = true;
            if (dist < best) {
                best = dist;
                nearest = format_complex(b.center, 9) + " diameter " + format_fixed(b.diameter, 9);
            }
        }
        o.expect(found, "no ball at " + w.name + " = " + format_complex(w.z, 9) + " with diameter " + format_fixed(w.diameter, 9) +
                            "; nearest ball " + nearest);
    }
    o.expect(elapsed < 10, "runtime " + std::to_string(elapsed) + " s");
    return o;
}

Outcome exact_obstruction()
{
    Outcome o;
    auto k = NumberField::create(RationalPoly({Rational(3), Rational(0), Rational(1)}), 0.0, 1.7320508075688772);
    AlgNum s(k, std::vector<Rational>{Rational(0), Rational(1)});
    AlgNum a2 = Rational(1, 2) * (AlgNum(k, std::vector<Rational>{Rational(5)}) - s);
    AlgNum residual = a2 * a2 - Rational(5) * a2 + AlgNum(k, std::vector<Rational>{Rational(7)});
    o.expect(residual.is_zero(), "residual " + residual.to_string());
    C alpha = sqrt(C(R(5) / 2, -sqrt(R(3)) / 2));
    auto f = NumberField::create(RationalPoly({Rational(7), Rational(0), Rational(-5), Rational(0), Rational(1)}), convert<root_bits>(alpha));
    auto rep = integrality_and_unit_test(AlgNum(f, std::vector<Rational>{Rational(0), Rational(1)}));
    o.expect(rep.kind == IntegralityReport::Kind::integral_nonunit, "kind " + to_string(rep.kind));
    o.expect(rep.constant_term == 7, "constant term " + rep.constant_term.str());
    return o;
}

Outcome cusp_kill_corpus()
{
    Outcome o;
    const std::pair<const char*, Verdict> corpus[] = {{"dihedral_residual_236", Verdict::NonTrivial},
                                                      {"four_loop_dihedral_244", Verdict::NonTrivial},
                                                      {"four_loop_a4_244", Verdict::NonTrivial},
                                                      {"three_loop_333", Verdict::NonTrivial},
                                                      {"tetrahedral_cluster_333", Verdict::Trivial}};
    for (const auto& [name, want] : corpus) {
        auto g = fixtures::load_graph(name);
        o.expect(cusp_kill(g).verdict == want, std::string(name) + " verdict " + to_string(cusp_kill(g).verdict));
        for (std::uint64_t seed = 1; seed <= 1000; ++seed)
            if (cusp_kill(g, {seed, false}).verdict != want) {
                o.expect(false, std::string(name) + " verdict changes under seed " + std::to_string(seed));
                break;
            }
    }
    return o;
}

Outcome abelianization_checks()
{
    Outcome o;
    o.expect(abelianization(fixtures::load_graph("four_loop_244")).to_string() == "Z/4", "four-loop graph");
    o.expect(peripheral_abelianization(CuspType::S2_333).to_string() == "Z/3 x Z/3", "S2(3,3,3) peripheral group");
    o.expect(peripheral_abelianization(CuspType::S2_244).to_string() == "Z/2 x Z/4", "S2(2,4,4) peripheral group");
    std::mt19937_64 rng(2024);
    int count = 0;
    for (int i = 0; i < 200000 && count < 200; ++i) {
        auto g = fixtures::random_graph(rng, {CuspType::S2_244, 10, 0.5, false});
        if (cusp_kill(g, {std::nullopt, false}).verdict != Verdict::Trivial) continue;
        ++count;
        std::string s = abelianization(g).to_string();
        o.expect((s == "Z/4") == g.has_cusp_loop(4), "corpus graph " + std::to_string(count) + " gives " + s);
    }
    o.expect(count == 200, "corpus has only " + std::to_string(count) + " graphs");
    return o;
}

Outcome snf_oracle()
{
    Outcome o;
    auto t0 = Clock::now();
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dim(1, 4), entry(-5, 5);
    for (int trial = 0; trial < 500; ++trial) {
        int r = dim(rng), c = dim(rng);
        oracle::Mat m(r, std::vector<std::int64_t>(c));
        IntMatrix im(r, std::vector<Integer>(c));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) im[i][j] = m[i][j] = entry(rng);
        auto g = quotient_group(im, r);
        auto brute = oracle::quotient_order_by_enumeration(m);
        Integer got = g.free_rank() ? Integer(0) : g.order();
        o.expect(brute ? got == *brute : got == 0, "matrix " + std::to_string(trial));
    }
    double elapsed = seconds_since(t0);
    o.expect(elapsed < 5, "runtime " + std::to_string(elapsed) + " s");
    return o;
}

Outcome angle_table()
{
    Outcome o;
    const double pi = std::numbers::pi, s5 = std::sin(pi / 5), c5 = std::cos(pi / 5);
    auto close = [&](const AxisAngles& a, double x, double y, double z, const std::string& what) {
        o.expect(std::abs(a.alpha - x) <= 1e-12 && std::abs(a.beta - y) <= 1e-12 && std::abs(a.gamma - z) <= 1e-12, what);
    };
    for (int n = 2; n <= 8; ++n) close(axis_angles(2, 2, n), pi / 2, pi / 2, pi / n, "(2,2," + std::to_string(n) + ")");
    close(axis_angles(2, 3, 3), std::acos(1 / 3.0), std::acos(1 / std::sqrt(3.0)), std::acos(1 / std::sqrt(3.0)), "(2,3,3)");
    close(axis_angles(2, 3, 4), std::acos(1 / std::sqrt(3.0)), pi / 4, std::acos(std::sqrt(2.0) / std::sqrt(3.0)), "(2,3,4)");
    close(axis_angles(2, 3, 5), std::acos(c5 / (std::sqrt(3.0) * s5)), std::acos(1 / (2 * s5)), std::acos(2 * c5 / std::sqrt(3.0)), "(2,3,5)");
    return o;
}

Outcome slope_filter()
{
    Outcome o;
    const C w(R(-1) / 2, sqrt(R(3)) / 2);
    auto brute = [](const PeripheralLattice<default_bits>& lat) {
        std::set<std::pair<long, long>> out;
        for (long m = -40; m <= 40; ++m)
            for (long n = -40; n <= 40; ++n)
                if (std::gcd(m, n) == 1 && lat.c * abs(lat.point(m, n)) <= 6 * (1 + R("1e-30")))
                    out.insert((n > 0 || (n == 0 && m > 0)) ? std::pair(m, n) : std::pair(-m, -n));
        return out;
    };
    auto run = [&](long k, const R& c, std::size_t want, const std::string& what) {
        PeripheralLattice<default_bits> lat(C(1), w * R(k), 1, c);
        auto s = exceptional_slope_candidates(lat);
        std::set<std::pair<long, long>> got;
        for (const auto& x : s) got.insert({x.m, x.n});
        o.expect(s.size() == want, what + ": " + std::to_string(s.size()) + " slopes");
        o.expect(got == brute(lat), what + ": brute force disagrees");
    };
    run(4, R(1), 10, "<1, 4 omega> at c = 1");
    run(4, sqrt(R(3)), 2, "<1, 4 omega> at c = sqrt(3)");
    run(8, R(1), 1, "<1, 8 omega> at c = 1");
    return o;
}

Outcome volume_pipeline()
{
    Outcome o;
    const R s3 = sqrt(R(3)), tol = tolerance<default_bits>();
    o.expect(abs(cusp_volume(2 * s3, R(1)) - s3) <= tol, "cusp volume at c = 1");
    o.expect(abs(cusp_volume(2 * s3, s3) - 3 * s3) <= tol, "cusp volume at c = sqrt(3)");
    o.expect(abs(volume_lower_bound_from_cusp(s3 / 4) - v0() / 2) <= R("1e-15"), "v0/2 bound");
    for (auto t : {CuspType::S2_236, CuspType::S2_333, CuspType::S2_244}) {
        const auto& table = cusp_volume_table(t);
        for (const auto& e : table.entries) {
            auto cls = classify_rigid_cusp_volume(t, e.value, 1e-9);
            o.expect(cls.kind == e.kind && cls.entry == e.symbol, to_string(t) + " " + e.symbol);
        }
        o.expect(classify_rigid_cusp_volume(t, table.threshold, 1e-9).kind == CuspVolumeClass::Kind::AtThreshold,
                 to_string(t) + " threshold " + table.threshold_symbol);
    }
    return o;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome verify_end_to_end()
{
    Outcome o;
    const std::string cli = ORBIKIT_CLI;
    const std::string a = "acceptance_verify_a.json", b = "acceptance_verify_b.json";
    auto t0 = Clock::now();
    int rc1 = std::system((cli + " --precision 128 verify --all --json " + a + " > /dev/null").c_str());
    double elapsed = seconds_since(t0);
    int rc2 = std::system((cli + " --precision 128 verify --all --json " + b + " > /dev/null").c_str());
    o.expect(rc1 == 0 && rc2 == 0, "verify --all exit codes " + std::to_string(rc1) + ", " + std::to_string(rc2));
    std::string ja = slurp(a), jb = slurp(b);
    o.expect(!ja.empty() && ja == jb, "JSON reports differ between runs");
    o.expect(elapsed < 60, "runtime " + std::to_string(elapsed) + " s");
    std::remove(a.c_str());
    std::remove(b.c_str());
    return o;
}

}  // namespace

int main()
{
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"1 horoball diagram inventory", horoball_inventory},
        {"2 exact integrality obstruction", exact_obstruction},
        {"3 cusp-kill corpus and order independence", cusp_kill_corpus},
        {"4 abelianization", abelianization_checks},
        {"5 smith normal form vs coset enumeration", snf_oracle},
        {"6 axis angle table", angle_table},
        {"7 slope filter", slope_filter},
        {"8 volume pipeline", volume_pipeline},
        {"9 verify --all end to end", verify_end_to_end},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome out;
        try {
            out = run();
        }
        catch (const std::exception& e) {
            out.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (out.pass ? "PASS " : "FAIL ") << name << "\n";
        for (const auto& n : out.notes) std::cout << "     " << n << "\n";
        failed += !out.pass;
    }
    std::cout << (9 - failed) << "/9 criteria pass\n";
    return failed == 0 ? 0 : 1;
}
