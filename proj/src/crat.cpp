#include "nckit/crat.hpp"

#include <cctype>

namespace nckit {

void add_product(CRat& acc, const CRat& a, const CRat& b) {
    thread_local mpq_class tmp;
    const bool a_real = sgn(a.im) == 0, b_real = sgn(b.im) == 0;
    mpq_mul(tmp.get_mpq_t(), a.re.get_mpq_t(), b.re.get_mpq_t());
    acc.re += tmp;
    if (a_real && b_real) return;
    if (!a_real && !b_real) {
        mpq_mul(tmp.get_mpq_t(), a.im.get_mpq_t(), b.im.get_mpq_t());
        acc.re -= tmp;
    }
    if (!b_real) {
        mpq_mul(tmp.get_mpq_t(), a.re.get_mpq_t(), b.im.get_mpq_t());
        acc.im += tmp;
    }
    if (!a_real) {
        mpq_mul(tmp.get_mpq_t(), a.im.get_mpq_t(), b.re.get_mpq_t());
        acc.im += tmp;
    }
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') pos = 1;
    bool seen_digit = false;
    bool seen_slash = false;
    for (std::size_t k = pos; k < text.size(); ++k) {
        char ch = text[k];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            seen_digit = true;
        } else if (ch == '/' && !seen_slash && seen_digit && k + 1 < text.size()) {
            seen_slash = true;
        } else {
            throw std::invalid_argument("malformed rational literal '" + text + "'");
        }
    }
    if (!seen_digit) throw std::invalid_argument("malformed rational literal '" + text + "'");
    std::string body = text[0] == '+' ? text.substr(1) : text;
    Rational r;
    if (r.set_str(body, 10) != 0) throw std::invalid_argument("malformed rational literal '" + text + "'");
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

Rational parse_decimal_or_rational(const std::string& text) {
    auto dot = text.find_first_of(".eE");
    if (dot == std::string::npos) return parse_rational(text);

    std::string mant = text;
    long exp10 = 0;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
        mant = text.substr(0, e);
        try {
            std::size_t used = 0;
            exp10 = std::stol(text.substr(e + 1), &used);
            if (used != text.size() - e - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed decimal literal '" + text + "'");
        }
    }
    std::string digits;
    bool neg = false;
    std::size_t k = 0;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
        neg = mant[0] == '-';
        k = 1;
    }
    bool seen_dot = false;
    for (; k < mant.size(); ++k) {
        char ch = mant[k];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            if (seen_dot) --exp10;
        } else if (ch == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            throw std::invalid_argument("malformed decimal literal '" + text + "'");
        }
    }
    if (digits.empty()) throw std::invalid_argument("malformed decimal literal '" + text + "'");
    Rational r(mpz_class(digits, 10));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 < 0)
        r /= Rational(scale);
    else
        r *= Rational(scale);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

}  // namespace nckit
