#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace orbikit {

namespace bmp = boost::multiprecision;

using Integer = bmp::cpp_int;
using Rational = bmp::cpp_rational;

template <unsigned Bits>
using Real = bmp::number<bmp::cpp_bin_float<Bits, bmp::backends::digit_base_2>, bmp::et_off>;

template <unsigned Bits>
using Complex = bmp::cpp_complex<Bits, bmp::backends::digit_base_2, void, std::int32_t, 0, 0, bmp::et_off>;

inline constexpr unsigned default_bits = 128;
inline constexpr unsigned root_bits = 256;

// Comparison tolerance for quantities computed at the given precision.
template <unsigned Bits>
Real<Bits> tolerance()
{
    return ldexp(Real<Bits>(1), -static_cast<int>(Bits) + 8);
}

template <unsigned Bits>
Real<Bits> pi()
{
    return boost::math::constants::pi<Real<Bits>>();
}

template <unsigned Bits>
Complex<Bits> make_complex(const Real<Bits>& re, const Real<Bits>& im = Real<Bits>(0))
{
    return Complex<Bits>(re, im);
}

template <unsigned To, unsigned From>
Real<To> convert(const Real<From>& x)
{
    return Real<To>(x);
}

template <unsigned To, unsigned From>
Complex<To> convert(const Complex<From>& z)
{
    return Complex<To>(Real<To>(z.real()), Real<To>(z.imag()));
}

template <unsigned Bits>
Real<Bits> to_real(const Rational& q)
{
    return Real<Bits>(numerator(q)) / Real<Bits>(denominator(q));
}

template <unsigned Bits>
bool near(const Complex<Bits>& a, const Complex<Bits>& b, const Real<Bits>& tol)
{
    Real<Bits> scale = 1;
    scale = std::max(scale, abs(a));
    scale = std::max(scale, abs(b));
    return abs(a - b) <= tol * scale;
}

template <unsigned Bits>
bool near(const Real<Bits>& a, const Real<Bits>& b, const Real<Bits>& tol)
{
    Real<Bits> scale = 1;
    scale = std::max(scale, abs(a));
    scale = std::max(scale, abs(b));
    return abs(a - b) <= tol * scale;
}

// Fixed-point formatting that is stable across runs and platforms.
template <class T>
std::string format_fixed(const T& x, int digits)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << x;
    std::string s = out.str();
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
    return s;
}

template <unsigned Bits>
std::string format_complex(const Complex<Bits>& z, int digits)
{
    return "(" + format_fixed(z.real(), digits) + ", " + format_fixed(z.imag(), digits) + ")";
}

namespace detail {

template <unsigned Bits>
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    Real<Bits> parse()
    {
        Real<Bits> v = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("cannot parse real expression '" + std::string(s_) + "': " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Real<Bits> sum()
    {
        Real<Bits> v = product();
        for (;;) {
            if (eat('+')) v += product();
            else if (eat('-')) v -= product();
            else return v;
        }
    }

    Real<Bits> product()
    {
        Real<Bits> v = unary();
        for (;;) {
            if (eat('*')) v *= unary();
            else if (eat('/')) {
                Real<Bits> d = unary();
                if (d == 0) fail("division by zero");
                v /= d;
            }
            else return v;
        }
    }

    Real<Bits> unary()
    {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Real<Bits> power()
    {
        Real<Bits> base = atom();
        if (eat('^')) return pow(base, unary());
        return base;
    }

    Real<Bits> atom()
    {
        skip();
        if (eat('(')) {
            Real<Bits> v = sum();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "pi") return orbikit::pi<Bits>();
            if (!eat('(')) fail("expected '(' after " + name);
            Real<Bits> arg = sum();
            if (!eat(')')) fail("missing ')'");
            if (name == "sqrt") {
                if (arg < 0) fail("sqrt of negative number");
                return sqrt(arg);
            }
            if (name == "cos") return cos(arg);
            if (name == "sin") return sin(arg);
            fail("unknown function " + name);
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t save = pos_++;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            else {
                pos_ = save;
            }
        }
        if (start == pos_) fail("expected a number");
        return Real<Bits>(std::string(s_.substr(start, pos_ - start)));
    }
};

}  // namespace detail

// Parses decimal literals and simple expressions such as "2*sqrt(3)" or "7^(1/4)".
template <unsigned Bits>
Real<Bits> parse_real(std::string_view text)
{
    return detail::ExprParser<Bits>(text).parse();
}

}  // namespace orbikit
