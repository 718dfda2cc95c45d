#ifndef HCENSUS_LATTICE_HPP
#define HCENSUS_LATTICE_HPP

#include "intvec.hpp"

#include <array>
#include <set>

namespace hc {

// Ordered basis of a sublattice of Z^n, rank r <= n, vectors independent
// over Q.  Independence is enforced at construction (Gram determinant != 0).
class LatticeBasis {
public:
    explicit LatticeBasis(std::vector<IntVector> vectors);

    size_t rank() const { return vectors_.size(); }
    size_t ambient_dim() const { return vectors_[0].dim(); }
    const IntVector& operator[](size_t i) const { return vectors_[i]; }
    const std::vector<IntVector>& vectors() const { return vectors_; }

private:
    std::vector<IntVector> vectors_;
};

// det(G^T G) for the matrix G of basis vectors; this is the squared
// covolume of the sublattice (an integer for integral input).
SqVal covolume_sq(const LatticeBasis& basis);

// Squared covolume of the span of a raw vector list; 0 when dependent.
// Shared by covolume_sq and wedge_sq_norm.
Rat gram_det(const std::vector<IntVector>& vectors);

// Squared Euclidean norm of v /\ w; 0 iff v, w are dependent.
SqVal wedge_sq_norm(const IntVector& v, const IntVector& w);

// Basis of {x in Z^(n+1) : <w,x> = 0} for a primitive covector w, computed
// by unimodular column reduction.  Satisfies covolume_sq(result) = |w|^2.
LatticeBasis kernel_basis(const IntVector& w);

// The squared ratio |L_I| |L_J| / (|L_(I cap J)| |L_(I cup J)|) for three
// independent rank-1 sublattices of Z^3.  |L_{}| := 1 by convention.
Rat d_IJ_sq(const std::array<LatticeBasis, 3>& lines,
            const std::set<int>& I, const std::set<int>& J);

} // namespace hc

#endif
