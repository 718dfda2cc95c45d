#ifndef HCENSUS_ENUMERATE_HPP
#define HCENSUS_ENUMERATE_HPP

#include "weights.hpp"

#include <functional>
#include <optional>

namespace hc {

struct CountResult {
    Int count = 0;             // exact number of accepted points (raw count for ex3)
    double weighted_sum = 0.0; // ex3 only; 0 elsewhere
    long long points_scanned = 0;
    double seconds = 0.0;
};

// Optional sink receiving one JSON line per accepted point, in a
// deterministic order independent of the worker count.
using PointSink = std::function<void(const std::string&)>;

// Number of 4x2 integer matrices M with M^T Q2 M = Q1 and |M|^2 <= R^2.
CountResult enumerate_ex1(const QuadricPairInstance& inst, const Rat& radius,
                          unsigned workers = 1, const PointSink& sink = nullptr);

// Number of splittings (v, ker w) of Z^(n+1) with |v|^(2*l1) |w|^(2*l2) <= R^2.
CountResult enumerate_ex2(unsigned n, unsigned lambda1, unsigned lambda2,
                          const Rat& radius, unsigned workers = 1,
                          const PointSink& sink = nullptr);

// Weighted and raw count of ordered unimodular line triples with
// (Ht1^2)^k1 (Ht2^2)^k2 <= R^2.
CountResult enumerate_ex3(unsigned kappa1, unsigned kappa2, const Rat& radius,
                          double eta, unsigned workers = 1,
                          const PointSink& sink = nullptr);

// Independent exhaustive oracles (oracle.cpp); they re-derive the defining
// equations and height formulas inline and share no code with the fast
// enumerators.  box is the per-coordinate bound, capped at desk scale.
Int oracle_ex1(const QuadricPairInstance& inst, const Rat& radius, long box,
               unsigned workers = 1);
Int oracle_ex2(unsigned n, unsigned lambda1, unsigned lambda2,
               const Rat& radius, long box, unsigned workers = 1);
Int oracle_ex3(unsigned kappa1, unsigned kappa2, const Rat& radius, long box,
               unsigned workers = 1);

} // namespace hc

#endif
