#include "cvd/rational.hpp"

#include <cctype>

#include "cvd/errors.hpp"

namespace cvd {

std::string to_string(const Rational& r) {
    return r.str();
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text, bool allow_negative) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    if (negative && !allow_negative)
        throw PreconditionError("negative value not allowed: " + text);

    Rational value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw PreconditionError("malformed rational: " + text);
        BigInt d(den);
        if (d == 0) throw PreconditionError("zero denominator: " + text);
        value = Rational(BigInt(num), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip) || !all_digits(fp))
            throw PreconditionError("malformed decimal: " + text);
        BigInt scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        value = Rational(BigInt(ip) * scale + BigInt(fp.empty() ? "0" : fp), scale);
    } else {
        if (!all_digits(s)) throw PreconditionError("malformed number: " + text);
        value = Rational(BigInt(s));
    }
    return negative ? -value : value;
}

}  // namespace cvd
