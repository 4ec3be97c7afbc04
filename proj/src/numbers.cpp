#include "moser/numbers.hpp"

#include <cctype>
#include <stdexcept>

namespace moser {

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt int_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt int_pow(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

BigInt binom_uu(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational parse_rational(std::string_view text) {
    // Strict grammar: [+-]?digits(/digits)?  No floats, no whitespace.
    auto bad = [&] { throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'"); };
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) bad();
    std::size_t den_begin = 0, den_end = 0;
    if (i < text.size()) {
        if (text[i] != '/') bad();
        ++i;
        den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size()) bad();
        den_end = i;
    }
    // mpz_set_str takes a leading '-' but not '+'.
    std::string_view num_text = text.substr(0, den_begin == 0 ? text.size() : den_begin - 1);
    if (num_text.front() == '+') num_text.remove_prefix(1);
    BigInt num((std::string(num_text)));
    BigInt den = den_begin == 0 ? BigInt(1) : BigInt(std::string(text.substr(den_begin, den_end - den_begin)));
    if (den == 0) bad();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const BigInt& z) {
    return z.get_str();
}

double to_double(const Rational& q) {
    return q.get_d();
}

}  // namespace moser
