#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace orbikit {

// Dense polynomial over Q, coefficients stored from the constant term up.
class RationalPoly {
public:
    RationalPoly() = default;
    RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalPoly monomial(std::size_t k, Rational c = 1)
    {
        std::vector<Rational> v(k + 1);
        v[k] = std::move(c);
        return RationalPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool has_integer_coeffs() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return denominator(q) == 1; });
    }

    RationalPoly monic() const
    {
        if (is_zero()) return *this;
        std::vector<Rational> v = c_;
        Rational lead = v.back();
        for (auto& x : v) x /= lead;
        return RationalPoly(std::move(v));
    }

    RationalPoly derivative() const
    {
        std::vector<Rational> v;
        for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Rational(static_cast<long>(i)));
        return RationalPoly(std::move(v));
    }

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b)
    {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return RationalPoly(std::move(v));
    }

    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b)
    {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
        return RationalPoly(std::move(v));
    }

    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return RationalPoly(std::move(v));
    }

    friend std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b)
    {
        if (b.is_zero()) throw DivisionByZero();
        std::vector<Rational> r = a.c_;
        std::vector<Rational> q(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
        for (std::size_t k = q.size(); k-- > 0;) {
            Rational f = r[k + b.c_.size() - 1] / b.leading();
            q[k] = f;
            if (f == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= f * b.c_[j];
        }
        return {RationalPoly(std::move(q)), RationalPoly(std::move(r))};
    }

    friend RationalPoly gcd(RationalPoly a, RationalPoly b)
    {
        while (!b.is_zero()) {
            RationalPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

    template <class T>
    T eval(const T& x) const
    {
        T acc = T(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + T(c_[i]);
        return acc;
    }

    template <unsigned Bits>
    Complex<Bits> eval_complex(const Complex<Bits>& x) const
    {
        Complex<Bits> acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Complex<Bits>(to_real<Bits>(c_[i]));
        return acc;
    }

    std::string to_string(const std::string& var = "x") const
    {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Rational& c = c_[i];
            if (c == 0) continue;
            Rational mag = abs(c);
            if (first) {
                if (c < 0) out << "-";
            }
            else {
                out << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (i == 0 || mag != 1) out << mag;
            if (i >= 1) {
                if (mag != 1) out << "*";
                out << var;
                if (i > 1) out << "^" << i;
            }
        }
        return out.str();
    }

private:
    std::vector<Rational> c_;

    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

namespace detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::vector<std::vector<Rational>> nullspace(RationalMatrix m, std::size_t cols)
{
    std::vector<std::size_t> pivots = rref(m);
    std::vector<std::vector<Rational>> basis;
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <unsigned Bits>
std::vector<Complex<Bits>> polynomial_roots(const RationalPoly& monic)
{
    const int n = monic.degree();
    std::vector<Complex<Bits>> z(n);
    Complex<Bits> seed(Real<Bits>("0.4"), Real<Bits>("0.9"));
    Real<Bits> bound = 1;
    for (int i = 0; i < n; ++i) bound = std::max(bound, 1 + abs(to_real<Bits>(monic.coeff(i))));
    z[0] = Complex<Bits>(bound) * seed / Complex<Bits>(abs(seed));
    for (int i = 1; i < n; ++i) z[i] = z[i - 1] * seed;
    const Real<Bits> eps = ldexp(Real<Bits>(1), -static_cast<int>(Bits) + 16);
    for (int iter = 0; iter < 2000; ++iter) {
        Real<Bits> change = 0;
        for (int i = 0; i < n; ++i) {
            Complex<Bits> denom(1);
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[i] - z[j];
            Complex<Bits> step = monic.eval_complex<Bits>(z[i]) / denom;
            z[i] -= step;
            change = std::max(change, abs(step));
        }
        if (change < eps) break;
    }
    RationalPoly d = monic.derivative();
    for (auto& r : z) {
        for (int k = 0; k < 8; ++k) {
            Complex<Bits> dv = d.eval_complex<Bits>(r);
            if (abs(dv) == 0) break;
            r -= monic.eval_complex<Bits>(r) / dv;
        }
    }
    std::sort(z.begin(), z.end(), [](const Complex<Bits>& a, const Complex<Bits>& b) {
        const Real<Bits> tie = ldexp(Real<Bits>(1), -static_cast<int>(Bits) / 2);
        if (abs(a.real() - b.real()) > tie) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

}  // namespace detail

// Q(theta) for a monic irreducible minimal polynomial and a chosen complex root theta.
class NumberField {
public:
    using RootType = Complex<root_bits>;

    static std::shared_ptr<const NumberField> create(const RationalPoly& minpoly, const RootType& root_hint)
    {
        if (minpoly.degree() < 1) throw InvalidField("minimal polynomial must have degree at least 1");
        if (!minpoly.is_monic()) throw InvalidField("minimal polynomial must be monic");
        if (gcd(minpoly, minpoly.derivative()).degree() > 0) throw InvalidField("minimal polynomial has repeated roots");
        auto roots = detail::polynomial_roots<root_bits>(minpoly);
        std::size_t best = 0;
        for (std::size_t i = 1; i < roots.size(); ++i)
            if (abs(roots[i] - root_hint) < abs(roots[best] - root_hint)) best = i;
        return std::shared_ptr<const NumberField>(new NumberField(minpoly, best, roots[best]));
    }

    static std::shared_ptr<const NumberField> create(const RationalPoly& minpoly, double re, double im)
    {
        return create(minpoly, RootType(Real<root_bits>(re), Real<root_bits>(im)));
    }

    static std::shared_ptr<const NumberField> rationals()
    {
        return create(RationalPoly({Rational(0), Rational(1)}), 0.0, 0.0);
    }

    int degree() const { return minpoly_.degree(); }
    const RationalPoly& minpoly() const { return minpoly_; }
    std::size_t root_index() const { return root_index_; }
    const RootType& root() const { return root_; }

    bool same_as(const NumberField& other) const
    {
        return minpoly_ == other.minpoly_ && root_index_ == other.root_index_;
    }

private:
    NumberField(RationalPoly p, std::size_t idx, RootType r) : minpoly_(std::move(p)), root_index_(idx), root_(std::move(r)) {}

    RationalPoly minpoly_;
    std::size_t root_index_;
    RootType root_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class AlgNum {
public:
    AlgNum() = default;

    AlgNum(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)), c_(std::move(coeffs))
    {
        if (!field_) throw InvalidField("element without a field");
        reduce();
    }

    AlgNum(FieldPtr field, const Rational& q) : AlgNum(std::move(field), std::vector<Rational>{q}) {}

    static AlgNum generator(FieldPtr field) { return AlgNum(std::move(field), std::vector<Rational>{0, 1}); }

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
    }

    bool is_rational() const
    {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    AlgNum zero() const { return AlgNum(field_, Rational(0)); }
    AlgNum one() const { return AlgNum(field_, Rational(1)); }

    friend AlgNum operator+(const AlgNum& a, const AlgNum& b)
    {
        check_same(a, b);
        std::vector<Rational> v(a.c_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.c_[i] + b.c_[i];
        return AlgNum(a.field_, std::move(v), Reduced{});
    }

    friend AlgNum operator-(const AlgNum& a, const AlgNum& b)
    {
        check_same(a, b);
        std::vector<Rational> v(a.c_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.c_[i] - b.c_[i];
        return AlgNum(a.field_, std::move(v), Reduced{});
    }

    friend AlgNum operator-(const AlgNum& a)
    {
        std::vector<Rational> v(a.c_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a.c_[i];
        return AlgNum(a.field_, std::move(v), Reduced{});
    }

    friend AlgNum operator*(const AlgNum& a, const AlgNum& b)
    {
        check_same(a, b);
        RationalPoly prod = RationalPoly(a.c_) * RationalPoly(b.c_);
        return AlgNum(a.field_, prod.coeffs());
    }

    friend AlgNum operator*(const Rational& q, const AlgNum& a)
    {
        std::vector<Rational> v(a.c_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = q * a.c_[i];
        return AlgNum(a.field_, std::move(v), Reduced{});
    }

    AlgNum inverse() const
    {
        if (is_zero()) throw DivisionByZero();
        const std::size_t n = c_.size();
        detail::RationalMatrix m = multiplication_matrix();
        for (std::size_t i = 0; i < n; ++i) m[i].push_back(i == 0 ? Rational(1) : Rational(0));
        auto pivots = detail::rref(m);
        if (pivots.size() != n || pivots.back() != n - 1)
            throw InvalidField("minimal polynomial is reducible: nonzero element is not invertible");
        std::vector<Rational> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
        return AlgNum(field_, std::move(x), Reduced{});
    }

    friend AlgNum operator/(const AlgNum& a, const AlgNum& b)
    {
        check_same(a, b);
        return a * b.inverse();
    }

    AlgNum pow(long e) const
    {
        if (e < 0) return inverse().pow(-e);
        AlgNum result = one(), base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const AlgNum& a, const AlgNum& b)
    {
        check_same(a, b);
        return a.c_ == b.c_;
    }

    // Column j holds the coordinates of this * theta^j.
    detail::RationalMatrix multiplication_matrix() const
    {
        const std::size_t n = c_.size();
        detail::RationalMatrix m(n, std::vector<Rational>(n));
        AlgNum basis = one();
        AlgNum theta = generator(field_);
        for (std::size_t j = 0; j < n; ++j) {
            AlgNum col = *this * basis;
            for (std::size_t i = 0; i < n; ++i) m[i][j] = col.c_[i];
            basis = basis * theta;
        }
        return m;
    }

    std::string to_string(const std::string& var = "t") const
    {
        RationalPoly p(c_);
        return p.to_string(var);
    }

private:
    struct Reduced {};
    AlgNum(FieldPtr field, std::vector<Rational> coeffs, Reduced) : field_(std::move(field)), c_(std::move(coeffs)) {}

    FieldPtr field_;
    std::vector<Rational> c_;

    static void check_same(const AlgNum& a, const AlgNum& b)
    {
        if (a.field_ != b.field_ && !(a.field_ && b.field_ && a.field_->same_as(*b.field_))) throw FieldMismatch();
    }

    void reduce()
    {
        const auto& mp = field_->minpoly();
        RationalPoly p(c_);
        if (p.degree() >= mp.degree()) p = divmod(p, mp).second;
        c_ = p.coeffs();
        c_.resize(mp.degree());
    }
};

enum class FieldOp { add, sub, mul, inv };

inline AlgNum field_arith(FieldOp op, const AlgNum& a, const std::optional<AlgNum>& b = std::nullopt)
{
    switch (op) {
    case FieldOp::add: return a + b.value();
    case FieldOp::sub: return a - b.value();
    case FieldOp::mul: return a * b.value();
    case FieldOp::inv: return a.inverse();
    }
    throw Error("unknown field operation");
}

// Monic minimal polynomial of a over Q, found from the first linear relation among its powers.
inline RationalPoly minimal_polynomial(const AlgNum& a)
{
    const std::size_t n = a.coeffs().size();
    std::vector<AlgNum> powers{a.one()};
    for (std::size_t k = 1; k <= n; ++k) {
        powers.push_back(powers.back() * a);
        detail::RationalMatrix m(n, std::vector<Rational>(k + 1));
        for (std::size_t j = 0; j <= k; ++j)
            for (std::size_t i = 0; i < n; ++i) m[i][j] = powers[j].coeff(i);
        auto kernel = detail::nullspace(m, k + 1);
        if (!kernel.empty()) return RationalPoly(kernel.front()).monic();
    }
    throw Error("no linear relation among powers");
}

struct IntegralityReport {
    enum class Kind { not_integral, integral_nonunit, unit };
    Kind kind;
    RationalPoly minpoly;
    Rational norm;
    Rational constant_term;
};

inline std::string to_string(IntegralityReport::Kind k)
{
    switch (k) {
    case IntegralityReport::Kind::not_integral: return "not_integral";
    case IntegralityReport::Kind::integral_nonunit: return "integral_nonunit";
    case IntegralityReport::Kind::unit: return "unit";
    }
    return "?";
}

inline IntegralityReport integrality_and_unit_test(const AlgNum& a)
{
    IntegralityReport r;
    r.minpoly = minimal_polynomial(a);
    r.constant_term = r.minpoly.coeff(0);
    int d = r.minpoly.degree();
    int n = a.field()->degree();
    Rational c = (d % 2 == 0) ? r.constant_term : Rational(-r.constant_term);
    r.norm = 1;
    for (int i = 0; i < n / d; ++i) r.norm *= c;
    if (!r.minpoly.has_integer_coeffs()) r.kind = IntegralityReport::Kind::not_integral;
    else if (abs(r.constant_term) == 1) r.kind = IntegralityReport::Kind::unit;
    else r.kind = IntegralityReport::Kind::integral_nonunit;
    return r;
}

template <unsigned Bits>
Complex<Bits> embed(const AlgNum& a)
{
    static_assert(Bits <= root_bits, "embedding precision is limited by the stored root");
    Complex<root_bits> acc(0);
    const auto& c = a.coeffs();
    const auto& theta = a.field()->root();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * theta + Complex<root_bits>(to_real<root_bits>(c[i]));
    return convert<Bits>(acc);
}

}  // namespace orbikit
