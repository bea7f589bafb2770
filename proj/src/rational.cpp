#include "angcm/rational.hpp"

#include <cctype>

namespace angcm {

namespace {

bool valid_rational_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool digits = false, slash = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits = true;
        } else if (c == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            return false;
        }
    }
    return digits;
}

}  // namespace

Rational Rational::parse(std::string_view s) {
    if (!valid_rational_text(s)) throw ParseError("bad rational: '" + std::string(s) + "'");
    mpq_class v(std::string(s), 10);
    if (v.get_den() == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
    v.canonicalize();
    Rational r;
    r.v_ = std::move(v);
    return r;
}

long Rational::to_long() const {
    if (!is_integer()) throw Error("rational " + str() + " is not an integer");
    if (!v_.get_num().fits_slong_p()) throw Error("rational " + str() + " does not fit in long");
    return v_.get_num().get_si();
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return inverse().pow(-e);
    Rational r;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    r.v_ = mpq_class(num, den);  // already canonical when the input is
    return r;
}

GaussianRational GaussianRational::parse(std::string_view s) {
    if (!s.empty() && s.back() == 'i') {
        std::string_view body = s.substr(0, s.size() - 1);
        std::size_t plus = body.find('+', 1);  // real part may start with '-'
        if (plus == std::string_view::npos)
            throw ParseError("bad complex coefficient: '" + std::string(s) + "'");
        return {Rational::parse(body.substr(0, plus)), Rational::parse(body.substr(plus + 1))};
    }
    return {Rational::parse(s)};
}

}  // namespace angcm
