#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <variant>

#include "algnum.hpp"
#include "errors.hpp"
#include "numeric.hpp"

namespace orbikit {

template <class E>
struct EntryOps;

template <>
struct EntryOps<AlgNum> {
    static constexpr bool exact = true;
    static AlgNum zero_like(const AlgNum& x) { return x.zero(); }
    static AlgNum one_like(const AlgNum& x) { return x.one(); }
    static bool is_zero(const AlgNum& x) { return x.is_zero(); }
    static bool is_one(const AlgNum& x) { return x == x.one(); }

    template <unsigned Bits>
    static Complex<Bits> to_complex(const AlgNum& x)
    {
        return embed<Bits>(x);
    }
};

template <unsigned B>
struct EntryOps<Complex<B>> {
    static constexpr bool exact = false;
    static Complex<B> zero_like(const Complex<B>&) { return Complex<B>(0); }
    static Complex<B> one_like(const Complex<B>&) { return Complex<B>(1); }
    static bool is_zero(const Complex<B>& x) { return abs(x) <= tolerance<B>(); }
    static bool is_one(const Complex<B>& x) { return abs(x - Complex<B>(1)) <= tolerance<B>(); }

    template <unsigned Bits>
    static Complex<Bits> to_complex(const Complex<B>& x)
    {
        return convert<Bits>(x);
    }
};

// Element of PSL(2, C): a 2x2 matrix of determinant 1, identified with its negative.
template <class E>
class Moebius {
public:
    using Ops = EntryOps<E>;

    Moebius(E a, E b, E c, E d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} { check_det(); }

    static Moebius unchecked(E a, E b, E c, E d)
    {
        Moebius g;
        g.m_ = {std::move(a), std::move(b), std::move(c), std::move(d)};
        return g;
    }

    static Moebius identity(const E& like) { return unchecked(Ops::one_like(like), Ops::zero_like(like), Ops::zero_like(like), Ops::one_like(like)); }

    static Moebius diagonal(const E& lambda) { return unchecked(lambda, Ops::zero_like(lambda), Ops::zero_like(lambda), Ops::one_like(lambda) / lambda); }

    const E& a() const { return m_[0]; }
    const E& b() const { return m_[1]; }
    const E& c() const { return m_[2]; }
    const E& d() const { return m_[3]; }

    E det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    E trace() const { return m_[0] + m_[3]; }

    friend Moebius operator*(const Moebius& g, const Moebius& h)
    {
        return unchecked(g.a() * h.a() + g.b() * h.c(), g.a() * h.b() + g.b() * h.d(),
                         g.c() * h.a() + g.d() * h.c(), g.c() * h.b() + g.d() * h.d());
    }

    Moebius inverse() const { return unchecked(d(), -b(), -c(), a()); }

    Moebius negated() const { return unchecked(-a(), -b(), -c(), -d()); }

    // h * this * h^-1
    Moebius conjugate(const Moebius& h) const { return h * *this * h.inverse(); }

    bool fixes_infinity() const { return Ops::is_zero(c()); }

    bool is_identity() const
    {
        return Ops::is_zero(b()) && Ops::is_zero(c()) &&
               ((Ops::is_one(a()) && Ops::is_one(d())) || (Ops::is_one(-a()) && Ops::is_one(-d())));
    }

    // Representative whose first nonzero entry has argument in [0, pi).
    template <unsigned Bits = default_bits>
    Moebius canonical() const
    {
        for (const E& x : m_) {
            if (Ops::is_zero(x)) continue;
            Complex<Bits> z = Ops::template to_complex<Bits>(x);
            Real<Bits> tol = tolerance<Bits>() * abs(z);
            bool flip = z.imag() < -tol || (abs(z.imag()) <= tol && z.real() < 0);
            return flip ? negated() : *this;
        }
        return *this;
    }

    template <unsigned Bits = default_bits>
    Moebius<Complex<Bits>> to_numeric() const
    {
        return Moebius<Complex<Bits>>::unchecked(Ops::template to_complex<Bits>(a()), Ops::template to_complex<Bits>(b()),
                                                 Ops::template to_complex<Bits>(c()), Ops::template to_complex<Bits>(d()));
    }

    const std::array<E, 4>& entries() const { return m_; }

private:
    Moebius() = default;
    std::array<E, 4> m_;

    void check_det() const
    {
        if constexpr (Ops::exact) {
            if (!Ops::is_one(det())) throw NotUnimodular("determinant is not exactly 1");
        }
        else {
            using std::max;
            auto scale = max(decltype(abs(a()))(1), max(abs(a() * d()), abs(b() * c())));
            if (abs(det() - E(1)) > tolerance_for(a()) * scale) throw NotUnimodular("determinant differs from 1 beyond tolerance");
        }
    }

    template <unsigned B>
    static Real<B> tolerance_for(const Complex<B>&)
    {
        return tolerance<B>();
    }
};

// Equality in PSL(2): entries agree up to a global sign.
inline bool same_element(const Moebius<AlgNum>& g, const Moebius<AlgNum>& h)
{
    auto eq = [&](bool neg) {
        for (int i = 0; i < 4; ++i)
            if (!(neg ? g.entries()[i] == -h.entries()[i] : g.entries()[i] == h.entries()[i])) return false;
        return true;
    };
    return eq(false) || eq(true);
}

template <unsigned Bits>
bool same_element(const Moebius<Complex<Bits>>& g, const Moebius<Complex<Bits>>& h, const Real<Bits>& tol = tolerance<Bits>())
{
    auto eq = [&](int sign) {
        for (int i = 0; i < 4; ++i)
            if (!near(g.entries()[i], Complex<Bits>(sign) * h.entries()[i], tol)) return false;
        return true;
    };
    return eq(1) || eq(-1);
}

template <unsigned Bits>
Complex<Bits> apply(const Moebius<Complex<Bits>>& g, const Complex<Bits>& z)
{
    return (g.a() * z + g.b()) / (g.c() * z + g.d());
}

enum class GroupOp { compose, inverse, conjugate };

template <class E>
Moebius<E> group_arith(GroupOp op, const Moebius<E>& g, const std::optional<Moebius<E>>& h = std::nullopt)
{
    switch (op) {
    case GroupOp::compose: return g * h.value();
    case GroupOp::inverse: return g.inverse();
    case GroupOp::conjugate: return g.conjugate(h.value());
    }
    throw Error("unknown group operation");
}

template <unsigned Bits>
using AnyMoebius = std::variant<Moebius<AlgNum>, Moebius<Complex<Bits>>>;

template <unsigned Bits>
AnyMoebius<Bits> group_arith(GroupOp op, const AnyMoebius<Bits>& g, const std::optional<AnyMoebius<Bits>>& h = std::nullopt)
{
    if (h && h->index() != g.index()) throw ModeMismatch();
    return std::visit(
        [&](const auto& gg) -> AnyMoebius<Bits> {
            using M = std::decay_t<decltype(gg)>;
            std::optional<M> hh;
            if (h) hh = std::get<M>(*h);
            return group_arith(op, gg, hh);
        },
        g);
}

struct Classification {
    enum class Kind { identity, parabolic, elliptic, loxodromic };
    Kind kind;
    std::optional<int> order;  // elliptic only; empty when no n <= 120 matches

    friend bool operator==(const Classification&, const Classification&) = default;
};

inline std::string to_string(const Classification& c)
{
    switch (c.kind) {
    case Classification::Kind::identity: return "identity";
    case Classification::Kind::parabolic: return "parabolic";
    case Classification::Kind::loxodromic: return "loxodromic";
    case Classification::Kind::elliptic:
        return c.order ? "elliptic(order " + std::to_string(*c.order) + ")" : "elliptic(infinite order)";
    }
    return "?";
}

inline constexpr int max_elliptic_order = 120;

namespace detail {

template <unsigned Bits>
Classification classify_trace(const Complex<Bits>& tr, bool is_identity, bool trace_squared_is_four, const Real<Bits>& tol)
{
    using K = Classification::Kind;
    if (is_identity) return {K::identity, std::nullopt};
    if (trace_squared_is_four) return {K::parabolic, std::nullopt};
    Complex<Bits> t2 = tr * tr;
    if (abs(t2.imag()) > tol || t2.real() < -tol || t2.real() >= 4) return {K::loxodromic, std::nullopt};
    // Rotation by 2 pi k / n has |trace| = 2 |cos(pi k / n)|.
    Real<Bits> abs_tr = sqrt(std::max(t2.real(), Real<Bits>(0)));
    for (int n = 2; n <= max_elliptic_order; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            if (std::gcd(k, n) != 1) continue;
            Real<Bits> expected = 2 * abs(cos(pi<Bits>() * k / n));
            if (abs(abs_tr - expected) <= tol) return {K::elliptic, n};
        }
    return {K::elliptic, std::nullopt};
}

}  // namespace detail

inline Classification classify(const Moebius<AlgNum>& g)
{
    AlgNum tr = g.trace();
    AlgNum four(tr.field(), Rational(4));
    bool ident = g.b().is_zero() && g.c().is_zero() && g.a() == g.d() && g.a() * g.a() == g.a().one();
    return detail::classify_trace<default_bits>(embed<default_bits>(tr), ident, tr * tr == four, ldexp(Real<default_bits>(1), -100));
}

template <unsigned Bits>
Classification classify(const Moebius<Complex<Bits>>& g, const Real<Bits>& tol = ldexp(Real<Bits>(1), -static_cast<int>(Bits) + 40))
{
    Complex<Bits> tr = g.trace();
    bool ident = abs(g.b()) <= tol && abs(g.c()) <= tol && abs(g.a() - g.d()) <= tol && abs(g.a() * g.a() - Complex<Bits>(1)) <= tol;
    bool parabolic = abs(tr * tr - Complex<Bits>(4)) <= tol;
    return detail::classify_trace<Bits>(tr, ident, parabolic, tol);
}

template <unsigned Bits>
struct Sphere {
    Complex<Bits> center;
    Real<Bits> radius;
};

template <unsigned Bits = default_bits, class E>
Sphere<Bits> isometric_sphere(const Moebius<E>& g)
{
    if (g.fixes_infinity()) throw FixesInfinity();
    Complex<Bits> c = EntryOps<E>::template to_complex<Bits>(g.c());
    Complex<Bits> d = EntryOps<E>::template to_complex<Bits>(g.d());
    return {-d / c, 1 / abs(c)};
}

template <unsigned Bits>
struct Horoball {
    bool at_infinity = false;
    Complex<Bits> center;     // point of tangency; unused at infinity
    Real<Bits> size;          // Euclidean diameter, or height when at infinity

    Real<Bits> diameter() const { return size; }
};

// Image under g of the horoball {height > h} centered at infinity.
template <unsigned Bits = default_bits, class E>
Horoball<Bits> horoball_image(const Moebius<E>& g, const Real<Bits>& height)
{
    Complex<Bits> a = EntryOps<E>::template to_complex<Bits>(g.a());
    if (g.fixes_infinity()) {
        Real<Bits> s = abs(a);
        return {true, Complex<Bits>(0), s * s * height};
    }
    Complex<Bits> c = EntryOps<E>::template to_complex<Bits>(g.c());
    Real<Bits> mc = abs(c);
    return {false, a / c, 1 / (mc * mc * height)};
}

// A parabolic meridian written through the coordinates of its fixed point beta / gamma.
struct ParabolicFixedData {
    AlgNum beta, gamma;

    Moebius<AlgNum> meridian() const
    {
        AlgNum bg = beta * gamma;
        return Moebius<AlgNum>(beta.one() + bg, -(beta * beta), gamma * gamma, beta.one() - bg);
    }

    AlgNum fixed_point() const { return beta / gamma; }
};

struct ObstructionReport {
    RationalPoly minpoly;
    Rational constant_term;
    IntegralityReport::Kind kind;
    std::string reason;
};

template <unsigned Bits>
using MeridianNormalization = std::variant<Moebius<Complex<Bits>>, ObstructionReport>;

// Conjugator sending (1 x; 0 1) to (1 1; 0 1) when x is a unit, else the integrality obstruction.
template <unsigned Bits = default_bits>
MeridianNormalization<Bits> normalize_meridian(const AlgNum& x)
{
    IntegralityReport rep = integrality_and_unit_test(x);
    if (rep.kind != IntegralityReport::Kind::unit) {
        std::string why = rep.kind == IntegralityReport::Kind::not_integral
                              ? "translation entry is not an algebraic integer"
                              : "translation entry is an algebraic integer but not a unit: |constant term| = " +
                                    Rational(abs(rep.constant_term)).str();
        return ObstructionReport{rep.minpoly, rep.constant_term, rep.kind, why};
    }
    Complex<Bits> s = sqrt(embed<Bits>(x));
    Complex<Bits> zero(0);
    return Moebius<Complex<Bits>>::unchecked(Complex<Bits>(1) / s, zero, zero, s);
}

}  // namespace orbikit
