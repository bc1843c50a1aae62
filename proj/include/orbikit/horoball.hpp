#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cuspgeom.hpp"
#include "groups.hpp"
#include "moebius.hpp"

namespace orbikit {

struct Window {
    double x0, y0, x1, y1;

    bool contains(double x, double y, double tol = 1e-9) const
    {
        return x >= x0 - tol && x <= x1 + tol && y >= y0 - tol && y <= y1 + tol;
    }
};

template <unsigned Bits = default_bits>
struct DiagramBall {
    Complex<Bits> center;
    Real<Bits> diameter;
    std::string word;  // a group element whose image of the ball at infinity is this ball, up to translation
};

template <unsigned Bits = default_bits>
struct DiagramSphere {
    Complex<Bits> center;
    Real<Bits> radius;
    std::string word;
};

struct NonDiscreteSuspicion {
    std::string first, second;
    std::string message;
};

template <unsigned Bits = default_bits>
struct HoroballDiagram {
    std::vector<DiagramBall<Bits>> balls;
    std::vector<DiagramSphere<Bits>> isometric_spheres;
    PeripheralLattice<Bits> lattice;
    Window window;
    std::vector<NonDiscreteSuspicion> warnings;
    std::vector<NamedPoint<Bits>> labels;
};

struct OrbitOptions {
    int depth = 4;
    double min_diameter = 0.1;
    std::optional<Window> window;
    double dedup_tol = 1e-9;
};

namespace detail {

template <unsigned Bits>
std::pair<Real<Bits>, Real<Bits>> lattice_coords(const PeripheralLattice<Bits>& lat, const Complex<Bits>& z)
{
    const auto &g1 = lat.gen1, &g2 = lat.gen2;
    Real<Bits> det = g1.real() * g2.imag() - g1.imag() * g2.real();
    return {(z.real() * g2.imag() - z.imag() * g2.real()) / det, (g1.real() * z.imag() - g1.imag() * z.real()) / det};
}

// Representative of z modulo the lattice in the half-open fundamental parallelogram.
template <unsigned Bits>
Complex<Bits> reduce_mod_lattice(const PeripheralLattice<Bits>& lat, const Complex<Bits>& z, double tol)
{
    auto [x, y] = lattice_coords(lat, z);
    auto wrap = [&](Real<Bits> u) {
        u -= floor(u);
        if (u > 1 - tol) u = 0;
        if (u < tol) u = 0;
        return u;
    };
    x = wrap(x);
    y = wrap(y);
    return lat.gen1 * x + lat.gen2 * y;
}

template <unsigned Bits>
bool same_mod_lattice(const PeripheralLattice<Bits>& lat, const Complex<Bits>& a, const Complex<Bits>& b, double tol)
{
    for (long m = -1; m <= 1; ++m)
        for (long n = -1; n <= 1; ++n)
            if (abs(a - b - lat.point(m, n)) <= tol) return true;
    return false;
}

template <unsigned Bits>
Window default_window(const PeripheralLattice<Bits>& lat)
{
    double xs[4], ys[4];
    Complex<Bits> corners[4] = {Complex<Bits>(0), lat.gen1, lat.gen1 + lat.gen2, lat.gen2};
    for (int k = 0; k < 4; ++k) {
        xs[k] = static_cast<double>(corners[k].real());
        ys[k] = static_cast<double>(corners[k].imag());
    }
    return {*std::min_element(xs, xs + 4), *std::min_element(ys, ys + 4), *std::max_element(xs, xs + 4), *std::max_element(ys, ys + 4)};
}

// All lattice translates of z whose real and imaginary parts fall in the window.
template <unsigned Bits>
std::vector<Complex<Bits>> translates_in_window(const PeripheralLattice<Bits>& lat, const Complex<Bits>& z, const Window& w, double tol)
{
    long lo[2] = {0, 0}, hi[2] = {0, 0};
    bool first = true;
    for (double cx : {w.x0, w.x1})
        for (double cy : {w.y0, w.y1}) {
            auto [x, y] = lattice_coords(lat, Complex<Bits>(Real<Bits>(cx), Real<Bits>(cy)) - z);
            long fx = static_cast<long>(floor(x)), fy = static_cast<long>(floor(y));
            if (first) {
                lo[0] = fx;
                hi[0] = fx + 1;
                lo[1] = fy;
                hi[1] = fy + 1;
                first = false;
            }
            lo[0] = std::min(lo[0], fx);
            hi[0] = std::max(hi[0], fx + 1);
            lo[1] = std::min(lo[1], fy);
            hi[1] = std::max(hi[1], fy + 1);
        }
    std::vector<Complex<Bits>> out;
    for (long m = lo[0] - 1; m <= hi[0] + 1; ++m)
        for (long n = lo[1] - 1; n <= hi[1] + 1; ++n) {
            Complex<Bits> p = z + lat.point(m, n);
            if (w.contains(static_cast<double>(p.real()), static_cast<double>(p.imag()), tol)) out.push_back(p);
        }
    return out;
}

template <unsigned Bits>
bool canonical_less(const Complex<Bits>& a, const Real<Bits>& da, const Complex<Bits>& b, const Real<Bits>& db, double tol)
{
    if (abs(a.real() - b.real()) > tol) return a.real() < b.real();
    if (abs(a.imag() - b.imag()) > tol) return a.imag() < b.imag();
    return da < db;
}

struct Letter {
    std::size_t gen;
    bool inverse;
};

}  // namespace detail

// Removes balls equal up to lattice translation and tolerance, keeping the first witness.
template <unsigned Bits>
std::vector<DiagramBall<Bits>> dedup_balls(const std::vector<DiagramBall<Bits>>& in, const PeripheralLattice<Bits>& lat, double tol = 1e-9)
{
    std::vector<DiagramBall<Bits>> out;
    for (const auto& b : in) {
        bool seen = std::any_of(out.begin(), out.end(), [&](const DiagramBall<Bits>& o) {
            return abs(o.diameter - b.diameter) <= tol && detail::same_mod_lattice(lat, o.center, b.center, tol);
        });
        if (!seen) out.push_back(b);
    }
    return out;
}

// Horoball diagram seen from infinity: images of the ball at height 1/c under words up to the given length.
template <unsigned Bits>
HoroballDiagram<Bits> orbit_horoballs(const std::vector<NamedGenerator<Bits>>& gens, const PeripheralLattice<Bits>& lat, const OrbitOptions& opts)
{
    if (opts.depth < 1) throw Error("depth must be at least 1");
    if (!(opts.min_diameter > 0)) throw Error("min_diameter must be positive");
    using M = Moebius<Complex<Bits>>;
    const Real<Bits> height = Real<Bits>(1) / lat.c;
    const double tol = opts.dedup_tol;

    struct Node {
        M g;
        std::string word;
        std::optional<detail::Letter> last;
    };
    auto letter_name = [&](const detail::Letter& l) { return gens[l.gen].name + (l.inverse ? "^-1" : ""); };

    std::vector<DiagramBall<Bits>> reduced;
    std::vector<DiagramSphere<Bits>> spheres;
    std::vector<Node> frontier{{M::identity(Complex<Bits>(1)), "", std::nullopt}};
    for (int level = 1; level <= opts.depth; ++level) {
        std::vector<Node> next;
        for (const auto& node : frontier)
            for (std::size_t k = 0; k < gens.size(); ++k)
                for (bool inv : {false, true}) {
                    if (node.last && node.last->gen == k && node.last->inverse != inv) continue;
                    detail::Letter l{k, inv};
                    M g = node.g * (inv ? gens[k].g.inverse() : gens[k].g);
                    std::string word = node.word.empty() ? letter_name(l) : node.word + "*" + letter_name(l);
                    if (!g.fixes_infinity()) {
                        auto hb = horoball_image<Bits>(g, height);
                        if (hb.size >= opts.min_diameter - tol)
                            reduced.push_back({detail::reduce_mod_lattice(lat, hb.center, tol), hb.size, word});
                        if (level == 1) {
                            auto s = isometric_sphere<Bits>(g);
                            spheres.push_back({s.center, s.radius, word});
                        }
                    }
                    next.push_back({std::move(g), std::move(word), l});
                }
        frontier = std::move(next);
        reduced = dedup_balls(reduced, lat, tol);
    }

    HoroballDiagram<Bits> d{{}, {}, lat, opts.window.value_or(detail::default_window(lat)), {}, {}};
    for (const auto& b : reduced)
        for (const auto& p : detail::translates_in_window(lat, b.center, d.window, tol)) d.balls.push_back({p, b.diameter, b.word});
    for (const auto& s : spheres) {
        auto red = detail::reduce_mod_lattice(lat, s.center, tol);
        for (const auto& p : detail::translates_in_window(lat, red, d.window, tol)) {
            bool dup = std::any_of(d.isometric_spheres.begin(), d.isometric_spheres.end(), [&](const DiagramSphere<Bits>& o) {
                return abs(o.center - p) <= tol && abs(o.radius - s.radius) <= tol;
            });
            if (!dup) d.isometric_spheres.push_back({p, s.radius, s.word});
        }
    }
    std::sort(d.balls.begin(), d.balls.end(), [&](const auto& a, const auto& b) { return detail::canonical_less(a.center, a.diameter, b.center, b.diameter, tol); });
    std::sort(d.isometric_spheres.begin(), d.isometric_spheres.end(),
              [&](const auto& a, const auto& b) { return detail::canonical_less(a.center, a.radius, b.center, b.radius, tol); });

    for (const auto& b : d.balls)
        if (b.diameter > height * (1 + tol))
            d.warnings.push_back({b.word, "infinity", "ball of diameter " + format_fixed(b.diameter, 12) + " meets the ball at infinity"});
    for (std::size_t i = 0; i < d.balls.size(); ++i)
        for (std::size_t j = i + 1; j < d.balls.size(); ++j) {
            const auto &a = d.balls[i], &b = d.balls[j];
            Real<Bits> dist = abs(a.center - b.center);
            if (dist * dist < a.diameter * b.diameter * (1 - tol))
                d.warnings.push_back({a.word, b.word,
                                      "balls at " + format_complex(a.center, 9) + " and " + format_complex(b.center, 9) + " overlap"});
        }
    return d;
}

template <unsigned Bits>
HoroballDiagram<Bits> orbit_horoballs(const NamedGroup<Bits>& group, const OrbitOptions& opts)
{
    auto d = orbit_horoballs(group.generators, group.lattice, opts);
    d.labels = group.points;
    return d;
}

struct SvgOptions {
    double pixels = 480;  // width of the drawing area
    double margin = 24;
};

template <unsigned Bits>
std::string render_svg(const HoroballDiagram<Bits>& d, const SvgOptions& opts = {})
{
    const Window& w = d.window;
    const double span = std::max(w.x1 - w.x0, w.y1 - w.y0);
    const double scale = span > 0 ? opts.pixels / span : 1;
    const double width = (w.x1 - w.x0) * scale + 2 * opts.margin, height = (w.y1 - w.y0) * scale + 2 * opts.margin;
    auto px = [&](const Real<Bits>& x) { return format_fixed((static_cast<double>(x) - w.x0) * scale + opts.margin, 4); };
    auto py = [&](const Real<Bits>& y) { return format_fixed((w.y1 - static_cast<double>(y)) * scale + opts.margin, 4); };
    auto len = [&](const Real<Bits>& r) { return format_fixed(static_cast<double>(r) * scale, 4); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_fixed(width, 2) << "\" height=\"" << format_fixed(height, 2)
      << "\" viewBox=\"0 0 " << format_fixed(width, 2) << " " << format_fixed(height, 2) << "\">\n";
    s << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    Complex<Bits> corners[4] = {Complex<Bits>(0), d.lattice.gen1, d.lattice.gen1 + d.lattice.gen2, d.lattice.gen2};
    s << "  <polygon class=\"lattice\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\" points=\"";
    for (int k = 0; k < 4; ++k) s << (k ? " " : "") << px(corners[k].real()) << "," << py(corners[k].imag());
    s << "\"/>\n";
    for (const auto& b : d.balls)
        s << "  <circle class=\"horoball\" cx=\"" << px(b.center.real()) << "\" cy=\"" << py(b.center.imag()) << "\" r=\"" << len(b.diameter / 2)
          << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" data-cx=\"" << format_fixed(b.center.real(), 15) << "\" data-cy=\""
          << format_fixed(b.center.imag(), 15) << "\" data-diameter=\"" << format_fixed(b.diameter, 15) << "\" data-word=\"" << b.word << "\"/>\n";
    for (const auto& sp : d.isometric_spheres)
        s << "  <circle class=\"isometric-sphere\" cx=\"" << px(sp.center.real()) << "\" cy=\"" << py(sp.center.imag()) << "\" r=\"" << len(sp.radius)
          << "\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1\" stroke-dasharray=\"6,4\" data-cx=\"" << format_fixed(sp.center.real(), 15)
          << "\" data-cy=\"" << format_fixed(sp.center.imag(), 15) << "\" data-radius=\"" << format_fixed(sp.radius, 15) << "\" data-word=\""
          << sp.word << "\"/>\n";
    for (const auto& l : d.labels)
        s << "  <text class=\"label\" x=\"" << px(l.z.real()) << "\" y=\"" << py(l.z.imag()) << "\" font-size=\"14\" font-family=\"sans-serif\">"
          << l.name << "</text>\n";
    s << "</svg>\n";
    return s.str();
}

}  // namespace orbikit
