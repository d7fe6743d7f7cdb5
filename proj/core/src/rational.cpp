#include "dofrs/rational.hpp"

#include "dofrs/errors.hpp"

#include <cctype>

namespace dofrs {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s, std::string_view full) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw ParseError("invalid rational: '" + std::string(full) + "'");
    }
    Integer v{std::string(s)};
    if (negative) v = -v;
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && den_text.front() == '-') {
            throw ParseError("negative denominator in '" + std::string(text) + "'");
        }
        Integer den = parse_integer(den_text, text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);  // boost canonicalizes the (num, den) ctor
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
            whole.remove_prefix(1);
        }
        if (!all_digits(frac) || (!whole.empty() && !all_digits(whole))) {
            throw ParseError("invalid rational: '" + std::string(text) + "'");
        }
        Integer scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer num = (whole.empty() ? Integer(0) : Integer(std::string(whole))) * scale +
                      Integer(std::string(frac));
        Rational r(num, scale);
        if (negative) r = -r;
        return r;
    }

    return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& r) {
    return r.str();  // GMP prints "p" or "p/q", canonical form maintained
}

Rational positive_part(const Rational& r) {
    return r > 0 ? r : Rational(0);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_rational(text.substr(pos, comma - pos)));
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

}  // namespace dofrs
