#include "heights.hpp"

namespace hc {

namespace {

// Inertia (n_plus, n_minus, n_zero) of a symmetric rational matrix by
// congruence diagonalization with exact pivoting.
std::array<int, 3> inertia(std::vector<std::vector<Rat>> m)
{
    const size_t n = m.size();
    std::array<int, 3> sig{0, 0, 0};
    for (size_t k = 0; k < n; ++k) {
        size_t p = n;
        for (size_t i = k; i < n && p == n; ++i)
            if (m[i][i] != 0)
                p = i;
        if (p == n) {
            // all remaining diagonal entries vanish; create one if possible
            size_t a = n, b = n;
            for (size_t i = k; i < n && a == n; ++i)
                for (size_t j = i + 1; j < n && a == n; ++j)
                    if (m[i][j] != 0) {
                        a = i;
                        b = j;
                    }
            if (a == n) {
                sig[2] += int(n - k);
                return sig;
            }
            for (size_t t = 0; t < n; ++t)
                m[a][t] += m[b][t];
            for (size_t t = 0; t < n; ++t)
                m[t][a] += m[t][b];
            p = a;
        }
        if (p != k) {
            std::swap(m[p], m[k]);
            for (size_t t = 0; t < n; ++t)
                std::swap(m[t][p], m[t][k]);
        }
        if (m[k][k] > 0)
            ++sig[0];
        else
            ++sig[1];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0)
                continue;
            Rat f = m[i][k] / m[k][k];
            for (size_t t = 0; t < n; ++t)
                m[i][t] -= f * m[k][t];
            for (size_t t = 0; t < n; ++t)
                m[t][i] -= f * m[t][k];
        }
    }
    return sig;
}

template <size_t N>
std::array<int, 3> inertia_of(const std::array<std::array<Int, N>, N>& q)
{
    std::vector<std::vector<Rat>> m(N, std::vector<Rat>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            if (q[i][j] != q[j][i])
                throw std::invalid_argument("form matrix must be symmetric");
            m[i][j] = Rat(q[i][j]);
        }
    return inertia(std::move(m));
}

} // namespace

QuadricPairInstance::QuadricPairInstance(std::array<std::array<Int, 2>, 2> q1,
                                         std::array<std::array<Int, 4>, 4> q2)
    : q1_(std::move(q1)), q2_(std::move(q2))
{
    auto s1 = inertia_of<2>(q1_);
    auto s2 = inertia_of<4>(q2_);
    if (s1[2] != 0 || s2[2] != 0)
        throw std::invalid_argument("form matrices must be nondegenerate");
    if (s1 != std::array<int, 3>{1, 1, 0})
        throw std::invalid_argument("Q1 must have signature (1,1)");
    if (s2 != std::array<int, 3>{2, 2, 0})
        throw std::invalid_argument("Q2 must have signature (2,2)");
}

QuadricPairInstance QuadricPairInstance::preset(const std::string& name)
{
    auto z2 = [](long a, long b, long c, long d) {
        return std::array<std::array<Int, 2>, 2>{{{Int(a), Int(b)}, {Int(c), Int(d)}}};
    };
    if (name == "default") {
        std::array<std::array<Int, 4>, 4> q2{};
        q2[0][0] = 1;
        q2[1][1] = -2;
        q2[2][2] = 1;
        q2[3][3] = -3;
        return QuadricPairInstance(z2(1, 0, 0, -2), q2);
    }
    if (name == "split") {
        std::array<std::array<Int, 4>, 4> q2{};
        q2[0][3] = 1;
        q2[3][0] = 1;
        q2[1][2] = 1;
        q2[2][1] = 1;
        return QuadricPairInstance(z2(0, 1, 1, 0), q2);
    }
    throw std::invalid_argument("unknown quadric instance: " + name);
}

Int QuadricPairInstance::q2_apply(const std::array<Int, 4>& c) const
{
    return q2_pair(c, c);
}

Int QuadricPairInstance::q2_pair(const std::array<Int, 4>& a,
                                 const std::array<Int, 4>& b) const
{
    Int s = 0;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            s += a[i] * q2_[i][j] * b[j];
    return s;
}

QuadricPoint::QuadricPoint(std::array<std::array<Int, 4>, 2> columns,
                           const QuadricPairInstance& inst)
    : cols_(std::move(columns))
{
    if (inst.q2_apply(cols_[0]) != inst.q1()[0][0] ||
        inst.q2_apply(cols_[1]) != inst.q1()[1][1] ||
        inst.q2_pair(cols_[0], cols_[1]) != inst.q1()[0][1])
        throw std::invalid_argument("matrix does not satisfy M^T Q2 M = Q1");
}

Splitting::Splitting(IntVector v, IntVector w)
    : v_(std::move(v)), w_(w.sign_canonical())
{
    if (v_.dim() != w_.dim())
        throw std::invalid_argument("dimension mismatch");
    Int p = dot(w_, v_);
    if (p != 1 && p != -1)
        throw std::invalid_argument("pairing <w,v> must be +-1");
}

TriangleTriple::TriangleTriple(IntVector v1, IntVector v2, IntVector v3)
    : v_{v1.sign_canonical(), v2.sign_canonical(), v3.sign_canonical()}
{
    for (const auto& v : v_)
        if (v.dim() != 3)
            throw std::invalid_argument("triple lives in Z^3");
    det_ = dot(cross(v_[0], v_[1]), v_[2]);
    if (det_ != 1 && det_ != -1)
        throw std::invalid_argument("triple must have determinant +-1");
}

TriangleTriple TriangleTriple::cofactor() const
{
    return TriangleTriple(cross(v_[1], v_[2]), cross(v_[0], v_[2]),
                          cross(v_[0], v_[1]));
}

Int ht_ex1_sq_raw(const std::array<std::array<Int, 4>, 2>& cols)
{
    Int s = 0;
    for (const auto& c : cols)
        for (const auto& e : c)
            s += e * e;
    return s;
}

Int ht_ex1_sq(const QuadricPoint& p)
{
    return ht_ex1_sq_raw({p.col(0), p.col(1)});
}

Rat ht_ex2_sq(const Splitting& s, unsigned lambda1, unsigned lambda2)
{
    if (lambda1 == 0 || lambda2 == 0)
        throw std::invalid_argument("exponents must be positive");
    // |M| = |w| for the rank-n kernel complement, so Ht^2 is a power product
    // of the two squared norms.
    Rat r = pow_rat(Rat(norm_sq(s.v())), lambda1) *
            pow_rat(Rat(norm_sq(s.w())), lambda2);
    r.canonicalize();
    return r;
}

namespace {

void triple_norms(const TriangleTriple& t, Int& n_prod, Int& w_prod)
{
    n_prod = norm_sq(t.v(0)) * norm_sq(t.v(1)) * norm_sq(t.v(2));
    Int w12 = wedge_sq_norm(t.v(0), t.v(1)).value().get_num();
    Int w13 = wedge_sq_norm(t.v(0), t.v(2)).value().get_num();
    Int w23 = wedge_sq_norm(t.v(1), t.v(2)).value().get_num();
    w_prod = w12 * w13 * w23;
}

} // namespace

Rat ht1_sq(const TriangleTriple& t)
{
    Int n, w;
    triple_norms(t, n, w);
    Rat r = Rat(n * n) / Rat(w);
    r.canonicalize();
    return r;
}

Rat ht2_sq(const TriangleTriple& t)
{
    Int n, w;
    triple_norms(t, n, w);
    Rat r = Rat(w * w) / Rat(n);
    r.canonicalize();
    return r;
}

bool ht_ex3_leq(const TriangleTriple& t, unsigned kappa1, unsigned kappa2,
                const Rat& radius)
{
    if (kappa1 == 0 || kappa2 == 0)
        throw std::invalid_argument("exponents must be positive");
    Rat h = pow_rat(ht1_sq(t), kappa1) * pow_rat(ht2_sq(t), kappa2);
    return h <= radius * radius;
}

} // namespace hc
