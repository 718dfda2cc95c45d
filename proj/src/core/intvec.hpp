#ifndef HCENSUS_INTVEC_HPP
#define HCENSUS_INTVEC_HPP

#include "numeric.hpp"

#include <vector>

namespace hc {

// Integer lattice vector of dimension >= 1.
class IntVector {
public:
    explicit IntVector(std::vector<Int> coords);
    IntVector(std::initializer_list<long> coords);

    size_t dim() const { return coords_.size(); }
    const Int& operator[](size_t i) const { return coords_[i]; }
    const std::vector<Int>& coords() const { return coords_; }

    bool is_zero() const;
    IntVector negated() const;

    // Flips the sign so the first nonzero coordinate is positive.
    // Zero vectors are returned unchanged.
    IntVector sign_canonical() const;
    bool is_sign_canonical() const;

    bool operator==(const IntVector& o) const { return coords_ == o.coords_; }

private:
    std::vector<Int> coords_;
};

Int dot(const IntVector& v, const IntVector& w);
Int norm_sq(const IntVector& v);
IntVector cross(const IntVector& v, const IntVector& w); // dimension 3 only
Int gcd_of_coords(const IntVector& v);

// True iff gcd of coordinates is 1 (rank-1 primitivity).
bool is_primitive(const IntVector& v);

// Squared Euclidean quantity carried exactly.  All norms and covolumes in
// this library travel in squared form so height comparisons stay exact.
class SqVal {
public:
    SqVal() : v_(0) {}
    explicit SqVal(Rat v);
    const Rat& value() const { return v_; }
    bool operator==(const SqVal& o) const { return v_ == o.v_; }

private:
    Rat v_;
};

} // namespace hc

#endif
