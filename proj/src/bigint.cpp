#include "gpoly/bigint.hpp"

namespace gpoly {

BigInt binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt ipow(const BigInt& base, unsigned exp)
{
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u)
            r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v)
{
    auto num = boost::multiprecision::numerator(v);
    auto den = boost::multiprecision::denominator(v);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

} // namespace gpoly
