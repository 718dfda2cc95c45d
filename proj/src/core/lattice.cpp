#include "lattice.hpp"

namespace hc {

namespace {

Rat det_rat(std::vector<std::vector<Rat>> m)
{
    const size_t n = m.size();
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0)
                continue;
            Rat f = m[row][col] / m[col][col];
            for (size_t j = col; j < n; ++j)
                m[row][j] -= f * m[col][j];
        }
    }
    det.canonicalize();
    return det;
}

} // namespace

Rat gram_det(const std::vector<IntVector>& vectors)
{
    const size_t r = vectors.size();
    std::vector<std::vector<Rat>> g(r, std::vector<Rat>(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i; j < r; ++j) {
            Rat e(dot(vectors[i], vectors[j]));
            g[i][j] = e;
            g[j][i] = e;
        }
    return det_rat(std::move(g));
}

LatticeBasis::LatticeBasis(std::vector<IntVector> vectors) : vectors_(std::move(vectors))
{
    if (vectors_.empty())
        throw std::invalid_argument("basis must contain at least one vector");
    const size_t dim = vectors_[0].dim();
    for (const auto& v : vectors_)
        if (v.dim() != dim)
            throw std::invalid_argument("basis vectors of unequal dimension");
    if (vectors_.size() > dim || gram_det(vectors_) == 0)
        throw std::invalid_argument("degenerate basis");
}

SqVal covolume_sq(const LatticeBasis& basis)
{
    return SqVal(gram_det(basis.vectors()));
}

SqVal wedge_sq_norm(const IntVector& v, const IntVector& w)
{
    if (v.dim() != w.dim())
        throw std::invalid_argument("dimension mismatch");
    Int g = norm_sq(v) * norm_sq(w) - dot(v, w) * dot(v, w);
    return SqVal(Rat(g));
}

LatticeBasis kernel_basis(const IntVector& w)
{
    if (!is_primitive(w))
        throw std::invalid_argument("covector must be primitive");
    const size_t d = w.dim();
    if (d < 2)
        throw std::invalid_argument("covector must have dimension >= 2");

    // Column-reduce w to (+-1, 0, ..., 0); the same column operations applied
    // to the identity matrix make its trailing columns a kernel basis.
    std::vector<Int> t(w.coords());
    std::vector<std::vector<Int>> u(d, std::vector<Int>(d, 0));
    for (size_t i = 0; i < d; ++i)
        u[i][i] = 1;

    auto col_sub = [&](size_t dst, size_t src, const Int& q) {
        t[dst] -= q * t[src];
        for (size_t r = 0; r < d; ++r)
            u[r][dst] -= q * u[r][src];
    };
    auto col_swap = [&](size_t a, size_t b) {
        std::swap(t[a], t[b]);
        for (size_t r = 0; r < d; ++r)
            std::swap(u[r][a], u[r][b]);
    };

    for (;;) {
        size_t pivot = d;
        for (size_t j = 0; j < d; ++j)
            if (t[j] != 0 && (pivot == d || cmp(abs(t[j]), abs(t[pivot])) < 0))
                pivot = j;
        bool done = true;
        for (size_t j = 0; j < d; ++j) {
            if (j == pivot || t[j] == 0)
                continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), t[j].get_mpz_t(), t[pivot].get_mpz_t());
            col_sub(j, pivot, q);
            if (t[j] != 0)
                done = false;
        }
        if (done) {
            if (pivot != 0)
                col_swap(0, pivot);
            break;
        }
    }

    std::vector<IntVector> basis;
    basis.reserve(d - 1);
    for (size_t j = 1; j < d; ++j) {
        std::vector<Int> col(d);
        for (size_t r = 0; r < d; ++r)
            col[r] = u[r][j];
        basis.emplace_back(std::move(col));
    }
    return LatticeBasis(std::move(basis));
}

Rat d_IJ_sq(const std::array<LatticeBasis, 3>& lines,
            const std::set<int>& I, const std::set<int>& J)
{
    std::vector<IntVector> all;
    for (const auto& l : lines) {
        if (l.rank() != 1 || l.ambient_dim() != 3)
            throw std::invalid_argument("d_IJ wants three rank-1 lines in Z^3");
        all.push_back(l[0]);
    }
    if (gram_det(all) == 0)
        throw std::invalid_argument("degenerate basis");

    auto cov_sq = [&](const std::set<int>& S) -> Rat {
        if (S.empty())
            return Rat(1);
        std::vector<IntVector> gen;
        for (int i : S) {
            if (i < 1 || i > 3)
                throw std::invalid_argument("index subsets live in {1,2,3}");
            gen.push_back(lines[size_t(i - 1)][0]);
        }
        return gram_det(gen);
    };

    std::set<int> icap, icup;
    for (int i : I)
        if (J.count(i))
            icap.insert(i);
    icup = I;
    icup.insert(J.begin(), J.end());

    Rat r = (cov_sq(I) * cov_sq(J)) / (cov_sq(icap) * cov_sq(icup));
    r.canonicalize();
    return r;
}

} // namespace hc
