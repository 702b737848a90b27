#include "hcolor/rational.hpp"

#include "hcolor/error.hpp"

#include <algorithm>
#include <cctype>

namespace hcolor {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto fail = [&] { return DomainError("not a rational number: '" + std::string(text) + "'"); };
    bool negative = false;
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw fail();
        BigInt d{std::string(den)};
        if (d == 0) throw fail();
        value = Rational(BigInt(std::string(num)), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot), frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole))
            || (!frac.empty() && !all_digits(frac)))
            throw fail();
        BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
        BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string(frac));
        value = Rational(w) + Rational(f, pow_int(10, frac.size()));
    } else {
        if (!all_digits(body)) throw fail();
        value = Rational(BigInt(std::string(body)));
    }
    return negative ? Rational(-value) : value;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt pow_int(const BigInt& base, std::uint64_t exponent) {
    BigInt result = 1, b = base;
    while (exponent) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

Rational pow_rational(const Rational& base, std::uint64_t exponent) {
    return Rational(pow_int(numerator(base), exponent), pow_int(denominator(base), exponent));
}

BigInt ceil_rational(const Rational& r) {
    const BigInt num = numerator(r), den = denominator(r);
    BigInt q = num / den;  // truncates toward zero
    if (num > 0 && q * den != num) ++q;
    return q;
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace hcolor
