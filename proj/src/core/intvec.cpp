#include "intvec.hpp"

namespace hc {

IntVector::IntVector(std::vector<Int> coords) : coords_(std::move(coords))
{
    if (coords_.empty())
        throw std::invalid_argument("vector must have dimension >= 1");
}

IntVector::IntVector(std::initializer_list<long> coords)
{
    if (coords.size() == 0)
        throw std::invalid_argument("vector must have dimension >= 1");
    coords_.reserve(coords.size());
    for (long c : coords)
        coords_.emplace_back(c);
}

bool IntVector::is_zero() const
{
    for (const auto& c : coords_)
        if (c != 0)
            return false;
    return true;
}

IntVector IntVector::negated() const
{
    std::vector<Int> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_)
        out.push_back(-c);
    return IntVector(std::move(out));
}

IntVector IntVector::sign_canonical() const
{
    for (const auto& c : coords_) {
        if (c > 0)
            return *this;
        if (c < 0)
            return negated();
    }
    return *this;
}

bool IntVector::is_sign_canonical() const
{
    for (const auto& c : coords_) {
        if (c != 0)
            return c > 0;
    }
    return true;
}

Int dot(const IntVector& v, const IntVector& w)
{
    if (v.dim() != w.dim())
        throw std::invalid_argument("dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < v.dim(); ++i)
        s += v[i] * w[i];
    return s;
}

Int norm_sq(const IntVector& v)
{
    return dot(v, v);
}

IntVector cross(const IntVector& v, const IntVector& w)
{
    if (v.dim() != 3 || w.dim() != 3)
        throw std::invalid_argument("cross product needs dimension 3");
    return IntVector({v[1] * w[2] - v[2] * w[1],
                      v[2] * w[0] - v[0] * w[2],
                      v[0] * w[1] - v[1] * w[0]});
}

Int gcd_of_coords(const IntVector& v)
{
    Int g = 0;
    for (const auto& c : v.coords())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

bool is_primitive(const IntVector& v)
{
    if (v.is_zero())
        throw std::invalid_argument("zero vector has no primitivity");
    return gcd_of_coords(v) == 1;
}

SqVal::SqVal(Rat v) : v_(std::move(v))
{
    v_.canonicalize();
    if (v_ < 0)
        throw std::invalid_argument("squared quantity must be nonnegative");
}

} // namespace hc
