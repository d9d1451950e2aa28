#include "pcg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pcg {

namespace {

bool is_integer_token(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        ++i;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den) || den.front() == '-' || den.front() == '+') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n.front() == '+') {
        n.erase(0, 1);
    }
    mpz_class numerator(n, 10);
    mpz_class denominator(std::string(den), 10);
    if (denominator == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace pcg
