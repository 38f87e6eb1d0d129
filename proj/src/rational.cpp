#include "statespace/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace statespace {

namespace {

bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_token(num)) {
        throw std::invalid_argument("invalid rational: '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Rational(BigInt(std::string(num)));
    }
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_token(den)) {
        throw std::invalid_argument("invalid rational: '" + std::string(text) + "'");
    }
    BigInt d{std::string(den)};
    if (d == 0) {
        throw std::invalid_argument("invalid rational (zero denominator): '" +
                                    std::string(text) + "'");
    }
    // The two-argument constructor canonicalizes; the string constructor
    // of mpq_rational does not, so it is never used here.
    return Rational(BigInt(std::string(num)), d);
}

Rational parse_decimal_or_rational(std::string_view text) {
    const auto point = text.find('.');
    if (point == std::string_view::npos) return parse_rational(text);
    std::string_view integral = text.substr(0, point);
    std::string_view fractional = text.substr(point + 1);
    bool negative = false;
    if (!integral.empty() && (integral.front() == '+' || integral.front() == '-')) {
        negative = integral.front() == '-';
        integral.remove_prefix(1);
    }
    if (fractional.empty() || (integral.empty() && fractional.empty())) {
        throw std::invalid_argument("invalid decimal: '" + std::string(text) + "'");
    }
    for (std::string_view part : {integral, fractional}) {
        for (char c : part) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw std::invalid_argument("invalid decimal: '" + std::string(text) + "'");
            }
        }
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < fractional.size(); ++i) scale *= 10;
    const BigInt whole = integral.empty() ? BigInt(0) : BigInt(std::string(integral));
    const BigInt frac = BigInt(std::string(fractional));
    Rational value = Rational(whole * scale + frac, scale);
    return negative ? -value : value;
}

std::string to_string(const Rational& value) { return value.str(); }

std::size_t bit_size(const Rational& value) {
    const std::size_t num_bits =
        mpz_sizeinbase(numerator(value).backend().data(), 2);
    const std::size_t den_bits =
        mpz_sizeinbase(denominator(value).backend().data(), 2);
    return num_bits + den_bits;
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Rational& s, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    Rational r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

std::string to_string(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    out += ")";
    return out;
}

}  // namespace statespace
