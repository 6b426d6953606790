#include "maxsep/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace maxsep {
namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
        throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    *this = from_wide(n, d);
}

Rational Rational::from_wide(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (d != 1) {
        const i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
    }
    if (!fits64(n) || !fits64(d)) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::string buf;
    buf.reserve(text.size());
    // Accept U+2212 MINUS SIGN as well as ASCII '-'.
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i + 2 < text.size() + 0 && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
            buf.push_back('-');
            i += 2;
        } else if (text[i] != ' ' && text[i] != '\t') {
            buf.push_back(text[i]);
        }
    }
    const std::string_view s = buf;
    if (s.empty()) throw std::invalid_argument("empty number");

    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto n = parse_int(s.substr(0, slash), text);
        const auto d = parse_int(s.substr(slash + 1), text);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        return Rational(n, d);
    }
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const bool neg = !s.empty() && s.front() == '-';
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (fp.size() > 18) throw std::invalid_argument("too many decimals: '" + std::string(text) + "'");
        if (ip == "-" || ip == "+" || ip.empty()) ip = "0";
        const i128 whole = parse_int(ip, text);
        i128 frac = fp.empty() ? 0 : parse_int(fp, text);
        if (!fp.empty() && (fp.front() == '-' || fp.front() == '+'))
            throw std::invalid_argument("not a number: '" + std::string(text) + "'");
        i128 scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        const i128 n = whole * scale + (neg ? -frac : frac);
        return from_wide(n, scale);
    }
    return Rational(parse_int(s, text));
}

double Rational::to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (num_ == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("rational overflow");
    Rational r = *this;
    r.num_ = -num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        std::int64_t s;
        if (__builtin_add_overflow(num_, o.num_, &s)) throw std::overflow_error("rational overflow");
        num_ = s;
        return *this;
    }
    *this = from_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                      static_cast<i128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        std::int64_t s;
        if (__builtin_sub_overflow(num_, o.num_, &s)) throw std::overflow_error("rational overflow");
        num_ = s;
        return *this;
    }
    *this = from_wide(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                      static_cast<i128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        std::int64_t s;
        if (__builtin_mul_overflow(num_, o.num_, &s)) throw std::overflow_error("rational overflow");
        num_ = s;
        return *this;
    }
    *this = from_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero");
    *this = from_wide(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace maxsep
