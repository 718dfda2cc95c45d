#ifndef HCENSUS_HEIGHTS_HPP
#define HCENSUS_HEIGHTS_HPP

#include "lattice.hpp"

#include <array>
#include <string>

namespace hc {

// Pair of symmetric integer matrices (Q1 on Z^2, Q2 on Z^4) with signatures
// (1,1) and (2,2).  Signatures are verified exactly by congruence
// diagonalization over Q.
class QuadricPairInstance {
public:
    QuadricPairInstance(std::array<std::array<Int, 2>, 2> q1,
                        std::array<std::array<Int, 4>, 4> q2);

    static QuadricPairInstance preset(const std::string& name); // "default" | "split"

    const std::array<std::array<Int, 2>, 2>& q1() const { return q1_; }
    const std::array<std::array<Int, 4>, 4>& q2() const { return q2_; }

    Int q2_apply(const std::array<Int, 4>& c) const;                         // Q2(c)
    Int q2_pair(const std::array<Int, 4>& a, const std::array<Int, 4>& b) const; // a^T Q2 b

private:
    std::array<std::array<Int, 2>, 2> q1_;
    std::array<std::array<Int, 4>, 4> q2_;
};

// 4x2 integer matrix M with M^T Q2 M = Q1, checked at construction.
class QuadricPoint {
public:
    QuadricPoint(std::array<std::array<Int, 4>, 2> columns,
                 const QuadricPairInstance& inst);

    const std::array<Int, 4>& col(size_t i) const { return cols_[i]; }

private:
    std::array<std::array<Int, 4>, 2> cols_;
};

// Splitting of Z^(n+1) as Z.v + ker(w): v and w primitive, <w,v> = +-1,
// w stored sign-canonical (one representative per rank-n complement).
class Splitting {
public:
    Splitting(IntVector v, IntVector w);

    const IntVector& v() const { return v_; }
    const IntVector& w() const { return w_; }

private:
    IntVector v_;
    IntVector w_;
};

// Ordered triple of independent lines in Z^3 spanning the whole lattice:
// columns primitive, |det| = 1, signs canonicalized (one vector per line).
class TriangleTriple {
public:
    TriangleTriple(IntVector v1, IntVector v2, IntVector v3);

    const IntVector& v(size_t i) const { return v_[i]; }
    const Int& det() const { return det_; }

    // Triple of cofactor vectors w_k = v_i x v_j (canonical signs).
    TriangleTriple cofactor() const;

private:
    std::array<IntVector, 3> v_;
    Int det_;
};

// Heights, all squared and exact.
Int ht_ex1_sq(const QuadricPoint& p);
Int ht_ex1_sq_raw(const std::array<std::array<Int, 4>, 2>& cols);
Rat ht_ex2_sq(const Splitting& s, unsigned lambda1, unsigned lambda2);
Rat ht1_sq(const TriangleTriple& t);
Rat ht2_sq(const TriangleTriple& t);

// (Ht1^2)^k1 (Ht2^2)^k2 <= R^2, compared exactly.
bool ht_ex3_leq(const TriangleTriple& t, unsigned kappa1, unsigned kappa2,
                const Rat& radius);

} // namespace hc

#endif
