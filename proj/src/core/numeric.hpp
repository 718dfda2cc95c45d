#ifndef HCENSUS_NUMERIC_HPP
#define HCENSUS_NUMERIC_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hc {

using Int = mpz_class;
using Rat = mpq_class;

// Largest integer m >= 0 with m^e <= x (x >= 0, e >= 1).
inline Int floor_root(const Int& x, unsigned long e)
{
    if (x < 0)
        throw std::domain_error("floor_root of negative value");
    Int r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

// Largest integer m >= 0 with m^e <= q, for rational q >= 0.
inline Int floor_root(const Rat& q, unsigned long e)
{
    Rat qc(q);
    qc.canonicalize();
    if (qc < 0)
        throw std::domain_error("floor_root of negative value");
    Int m = floor_root(Int(qc.get_num() / qc.get_den()), e);
    // floor division can undershoot by one when q is not an integer
    Int m1 = m + 1, p;
    mpz_pow_ui(p.get_mpz_t(), m1.get_mpz_t(), e);
    if (Rat(p) <= qc)
        m = m1;
    return m;
}

inline Int pow_int(const Int& b, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& b, unsigned long e)
{
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

// Parses "p", "p/q" or a plain decimal like "12.5" into an exact rational.
inline Rat parse_rat(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        Rat r;
        if (mpq_set_str(r.get_mpq_t(), digits.c_str(), 10) != 0)
            throw std::invalid_argument("bad rational literal: " + s);
        Rat den(1);
        for (size_t i = 0; i < frac_len; ++i)
            den *= 10;
        r /= den;
        r.canonicalize();
        return r;
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    return r;
}

inline std::string rat_str(const Rat& q)
{
    Rat c(q);
    c.canonicalize();
    return c.get_str();
}

} // namespace hc

#endif
