#pragma once

#include <optional>
#include <string>
#include <utility>

#include "algnum.hpp"
#include "moebius.hpp"

namespace orbikit {

// Ring of integers Z[theta] of an imaginary quadratic field, theta^2 + p theta + q = 0.
// Only the norm-Euclidean rings d = 1, 2, 3, 7, 11 are supported.
class QuadraticRing {
public:
    static QuadraticRing from_field(const FieldPtr& field)
    {
        const RationalPoly& mp = field->minpoly();
        if (mp.degree() != 2 || !mp.has_integer_coeffs()) throw NonEuclideanRing("field is not an imaginary quadratic field given by an integral generator");
        Integer p = numerator(mp.coeff(1)), q = numerator(mp.coeff(0));
        Integer disc = p * p - 4 * q;
        if (disc >= 0) throw NonEuclideanRing("field is not imaginary quadratic");
        Integer n = -disc, sq = 1;
        for (Integer f = 2; f * f <= n; ++f)
            while (n % (f * f) == 0) {
                n /= f * f;
                sq *= f;
            }
        long d = static_cast<long>(n);
        if (d != 1 && d != 2 && d != 3 && d != 7 && d != 11)
            throw NonEuclideanRing("Q(sqrt(-" + std::to_string(d) + ")) is not one of the supported Euclidean rings");
        Integer fundamental = (d % 4 == 3) ? Integer(d) : Integer(4 * d);
        if (-disc != fundamental) throw NonEuclideanRing("generator does not span the maximal order");
        return QuadraticRing(field, d, p, q);
    }

    // Standard presentation: i, i sqrt(2), omega = exp(2 pi i / 3), (1 + sqrt(-7))/2, (1 + sqrt(-11))/2.
    static QuadraticRing standard(long d)
    {
        auto mk = [](long c0, long c1, double re, double im) {
            return NumberField::create(RationalPoly({Rational(c0), Rational(c1), Rational(1)}), re, im);
        };
        switch (d) {
        case 1: return from_field(mk(1, 0, 0.0, 1.0));
        case 2: return from_field(mk(2, 0, 0.0, 1.4142135623730951));
        case 3: return from_field(mk(1, 1, -0.5, 0.8660254037844386));
        case 7: return from_field(mk(2, -1, 0.5, 1.3228756555322954));
        case 11: return from_field(mk(3, -1, 0.5, 1.6583123951777));
        default: throw NonEuclideanRing("unsupported discriminant");
        }
    }

    const FieldPtr& field() const { return field_; }
    long d() const { return d_; }

    AlgNum make(const Integer& x, const Integer& y) const
    {
        return AlgNum(field_, std::vector<Rational>{Rational(x), Rational(y)});
    }

    bool contains(const AlgNum& a) const
    {
        return a.field()->same_as(*field_) && denominator(a.coeff(0)) == 1 && denominator(a.coeff(1)) == 1;
    }

    Rational norm(const AlgNum& a) const
    {
        const Rational x = a.coeff(0), y = a.coeff(1);
        return x * x - Rational(p_) * x * y + Rational(q_) * y * y;
    }

    bool is_unit(const AlgNum& a) const { return contains(a) && norm(a) == 1; }

    // Quotient and remainder with norm(remainder) < norm(b).
    std::pair<AlgNum, AlgNum> divmod(const AlgNum& a, const AlgNum& b) const
    {
        require(a);
        require(b);
        if (b.is_zero()) throw DivisionByZero();
        AlgNum exact = a / b;
        Integer u = floor_of(exact.coeff(0)), v = floor_of(exact.coeff(1));
        std::optional<std::pair<AlgNum, AlgNum>> best;
        Rational best_norm;
        for (int i = -1; i <= 2; ++i)
            for (int j = -1; j <= 2; ++j) {
                AlgNum q = make(u + i, v + j);
                AlgNum r = a - q * b;
                Rational n = norm(r);
                if (!best || n < best_norm) {
                    best = std::make_pair(q, r);
                    best_norm = n;
                }
            }
        if (best_norm >= norm(b)) throw NonEuclideanRing("Euclidean step failed to reduce the norm");
        return *best;
    }

    bool divides(const AlgNum& d, const AlgNum& a) const
    {
        if (d.is_zero()) return a.is_zero();
        return contains(a / d);
    }

    struct Bezout {
        AlgNum gcd, x, y;  // x*a + y*b = gcd
    };

    Bezout xgcd(const AlgNum& a, const AlgNum& b) const
    {
        require(a);
        require(b);
        AlgNum r0 = a, r1 = b, s0 = a.one(), s1 = a.zero(), t0 = a.zero(), t1 = a.one();
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            r0 = std::exchange(r1, r);
            s0 = std::exchange(s1, s0 - q * s1);
            t0 = std::exchange(t1, t0 - q * t1);
        }
        return {r0, s0, t0};
    }

private:
    QuadraticRing(FieldPtr f, long d, Integer p, Integer q) : field_(std::move(f)), d_(d), p_(std::move(p)), q_(std::move(q)) {}

    FieldPtr field_;
    long d_;
    Integer p_, q_;

    void require(const AlgNum& a) const
    {
        if (!a.field()->same_as(*field_)) throw FieldMismatch();
        if (!contains(a)) throw Error("element " + a.to_string() + " is not in the ring of integers");
    }

    static Integer floor_of(const Rational& x)
    {
        Integer n = numerator(x), d = denominator(x);
        Integer q = n / d;
        if (n % d != 0 && n < 0) --q;
        return q;
    }
};

struct Triangularization {
    Moebius<AlgNum> conjugator;
    AlgNum gcd;
    bool comaximal;  // gcd(beta, gamma) is a unit
};

// Conjugator h in SL(2, O) with h * mu * h^-1 upper triangular, mu the meridian fixing beta / gamma.
inline Triangularization upper_triangularize(const ParabolicFixedData& mu, const QuadraticRing& ring)
{
    if (mu.gamma.is_zero()) {
        return {Moebius<AlgNum>::identity(mu.beta), mu.beta.one(), true};
    }
    auto bez = ring.xgcd(mu.beta, mu.gamma);
    if (ring.is_unit(bez.gcd)) {
        AlgNum inv = bez.gcd.inverse();
        AlgNum p = bez.x * inv, q = bez.y * inv;
        return {Moebius<AlgNum>(p, q, -mu.gamma, mu.beta), bez.gcd, true};
    }
    AlgNum r = mu.beta / bez.gcd, s = mu.gamma / bez.gcd;
    auto inner = ring.xgcd(r, s);
    if (!ring.is_unit(inner.gcd)) throw NotPrincipalPath("reduced fixed-point coordinates are not comaximal");
    AlgNum inv = inner.gcd.inverse();
    return {Moebius<AlgNum>(inner.x * inv, inner.y * inv, -s, r), bez.gcd, false};
}

}  // namespace orbikit
