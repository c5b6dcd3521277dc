#include "pathdiv/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "pathdiv/errors.hpp"

namespace pathdiv {
namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide r = a % b;
        a = b;
        b = r;
    }
    return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Wide n = num;
    Wide d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Wide g = wide_gcd(n, d);
    if (g != 0) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> std::int64_t {
        std::int64_t value = 0;
        const char* first = s.data();
        const char* last = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) {
            throw InputError("malformed rational literal: '" + std::string(s) + "'");
        }
        return value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-Wide(num_));
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    Wide n = Wide(num_) * rhs.den_ + Wide(rhs.num_) * den_;
    Wide d = Wide(den_) * rhs.den_;
    Wide g = wide_gcd(n, d);
    if (g != 0) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs) {
    Wide n = Wide(num_) * rhs.num_;
    Wide d = Wide(den_) * rhs.den_;
    Wide g = wide_gcd(n, d);
    if (g != 0) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Wide lhs = Wide(a.num_) * b.den_;
    Wide rhs = Wide(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace pathdiv
