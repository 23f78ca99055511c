#include "hull/rational.hpp"

#include <cctype>
#include <charconv>

namespace hull {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!is_integer_literal(num) || !is_integer_literal(den)) return std::nullopt;
        mpz_class d{std::string(den)};
        if (d == 0) return std::nullopt;
        Rational q{mpz_class{std::string(num)}};
        q /= Rational(d);
        return q;
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || !is_integer_literal(whole)) return std::nullopt;
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        bool negative = whole[0] == '-';
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class num = mpz_class{std::string(whole)} * scale;
        mpz_class frac_part{std::string(frac)};
        if (negative)
            num -= frac_part;
        else
            num += frac_part;
        Rational q{num};
        q /= Rational(scale);
        return q;
    }

    if (!is_integer_literal(text)) return std::nullopt;
    return Rational(mpz_class(std::string(text)));
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_double_shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace hull
