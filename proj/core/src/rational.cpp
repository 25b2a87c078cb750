#include "modeq/rational.hpp"

#include <cctype>
#include <ostream>

#include "modeq/errors.hpp"

namespace modeq {

Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer int_gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer int_lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer parse_integer(const std::string& token) {
    if (token.empty()) throw ValidationError("empty integer token");
    const std::size_t start = (token[0] == '+' || token[0] == '-') ? 1 : 0;
    if (start == token.size()) throw ValidationError("bad integer token '" + token + "'");
    for (std::size_t i = start; i < token.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(token[i])))
            throw ValidationError("bad integer token '" + token + "'");
    // mpz does not accept a leading '+'
    const Integer magnitude(token.substr(start));
    return token[0] == '-' ? -magnitude : magnitude;
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return Rational(den(), num());
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e < 0 ? reciprocal() : *this;
    const unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    return Rational(int_pow(base.num(), n), int_pow(base.den(), n));
}

std::string Rational::to_string() const {
    std::string s = num().get_str();
    if (!is_integer()) s += "/" + den().get_str();
    return s;
}

Rational parse_rational(const std::string& token) {
    const auto slash = token.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(token));
    const Integer num = parse_integer(token.substr(0, slash));
    const std::string den_tok = token.substr(slash + 1);
    const Integer den = parse_integer(den_tok);
    if (!den_tok.empty() && (den_tok[0] == '+' || den_tok[0] == '-'))
        throw ValidationError("bad rational token '" + token + "': signed denominator");
    if (sgn(den) <= 0) throw ValidationError("bad rational token '" + token + "': denominator must be positive");
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace modeq
