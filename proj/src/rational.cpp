#include "ontomesh/rational.hpp"

#include "ontomesh/errors.hpp"

#include <cctype>
#include <cstddef>

namespace ontomesh {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

std::optional<Rational> try_parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return std::nullopt;
    }

    Integer numerator;
    Integer denominator = 1;

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            return std::nullopt;
        }
        numerator = Integer(std::string(num));
        denominator = Integer(std::string(den));
        if (denominator == 0) {
            return std::nullopt;
        }
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || !all_digits(frac) || (!whole.empty() && !all_digits(whole))) {
            return std::nullopt;
        }
        numerator = whole.empty() ? Integer(0) : Integer(std::string(whole));
        for (char c : frac) {
            numerator = numerator * 10 + (c - '0');
            denominator *= 10;
        }
    } else {
        if (!all_digits(text)) {
            return std::nullopt;
        }
        numerator = Integer(std::string(text));
    }

    if (negative) {
        numerator = -numerator;
    }
    return Rational(numerator, denominator);
}

Rational parse_rational(std::string_view text) {
    auto value = try_parse_rational(text);
    if (!value) {
        throw DomainError("malformed rational literal '" + std::string(text) + "'");
    }
    return *value;
}

std::string format_rational(const Rational& value) {
    std::string result = numerator(value).str();
    if (denominator(value) != 1) {
        result += "/" + denominator(value).str();
    }
    return result;
}

} // namespace ontomesh
