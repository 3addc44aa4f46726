#include "treeline/rational.hpp"

#include "treeline/error.hpp"

namespace treeline {

BigCount factorial(std::int64_t n) {
    if (n < 0) fail(ErrorKind::invalid_argument, "factorial of negative value");
    BigCount result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

Rational make_rational(const BigCount& num, const BigCount& den) {
    if (den == 0) fail(ErrorKind::invalid_argument, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    return make_rational(BigCount(static_cast<long>(num)), BigCount(static_cast<long>(den)));
}

std::string format_fraction(const Rational& value) {
    return value.get_str();
}

std::string format_decimal(const Rational& value, int digits) {
    if (digits < 0) fail(ErrorKind::invalid_argument, "negative digit count");
    BigCount num = value.get_num();
    BigCount den = value.get_den();  // canonical: den > 0
    bool negative = num < 0;
    if (negative) num = -num;

    BigCount scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigCount scaled = num * scale;
    BigCount quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());

    // Round half to even on the exact remainder.
    BigCount twice_rem = rem * 2;
    int order = cmp(twice_rem, den);
    if (order > 0 || (order == 0 && mpz_odd_p(quot.get_mpz_t()))) quot += 1;

    BigCount whole = quot / scale;
    BigCount frac = quot % scale;
    std::string out;
    if (negative && (whole != 0 || frac != 0)) out += '-';
    out += whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += '.';
        out.append(static_cast<std::size_t>(digits) - f.size(), '0');
        out += f;
    }
    return out;
}

double to_double(const Rational& value) {
    return value.get_d();
}

}  // namespace treeline
