#ifndef HCENSUS_POLY_HPP
#define HCENSUS_POLY_HPP

#include "numeric.hpp"

#include <map>
#include <set>
#include <vector>

namespace hc {

class RatFn;

// Sparse multivariate polynomial over Q.  Each polynomial carries its own
// ordered variable list; binary operations align the operands onto the
// union first.  No zero coefficients are stored.
class SparsePoly {
public:
    SparsePoly() = default; // zero polynomial over no variables
    explicit SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static SparsePoly constant(const Rat& c,
                               std::vector<std::string> vars = {});
    static SparsePoly variable(const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<std::vector<unsigned>, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const; // zero polynomial gives 0

    void add_term(const std::vector<unsigned>& exps, const Rat& c);

    SparsePoly extended_to(const std::vector<std::string>& super_vars) const;

    SparsePoly operator-() const;
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly pow(unsigned e) const;

    SparsePoly derivative(const std::string& var) const;

    // Largest k with var^k dividing the polynomial (min stored exponent).
    // The zero polynomial has no order.
    int ord(const std::string& var) const;

    // Quotient by the pure power var^k.
    SparsePoly shift_down(const std::string& var, unsigned k) const;

    Rat eval(const std::map<std::string, Rat>& point) const;

    RatFn substituted(const std::vector<std::string>& new_vars,
                      const std::map<std::string, RatFn>& assignment) const;

    bool operator==(const SparsePoly& o) const;
    std::string str() const;

private:
    size_t var_index(const std::string& v) const; // size() when absent

    std::vector<std::string> vars_;
    std::map<std::vector<unsigned>, Rat> terms_;
};

struct InexactDivision : std::runtime_error {
    explicit InexactDivision(std::string rem_str)
        : std::runtime_error("inexact polynomial division, remainder " + rem_str),
          remainder(std::move(rem_str))
    {
    }
    std::string remainder;
};

// Exact quotient p / q in the polynomial ring; throws InexactDivision
// (carrying the offending remainder) when q does not divide p.
SparsePoly exact_divide(const SparsePoly& p, const SparsePoly& q);

// Rational function num/den.  Pure variable-power content common to both
// sides is cancelled on construction; no general gcd is taken.
class RatFn {
public:
    RatFn() : num_(), den_(SparsePoly::constant(1)) {}
    RatFn(SparsePoly num, SparsePoly den);

    static RatFn from_poly(SparsePoly p);
    static RatFn constant(const Rat& c);
    static RatFn variable(const std::string& name);

    const SparsePoly& num() const { return num_; }
    const SparsePoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn pow(long e) const;

    RatFn derivative(const std::string& var) const;

    RatFn substituted(const std::vector<std::string>& new_vars,
                      const std::map<std::string, RatFn>& assignment) const;

    // ord(num) - ord(den) along the coordinate hyperplane {var = 0};
    // negative values are poles.  Undefined for the zero function.
    int ord(const std::string& var) const;

    // Equality as rational functions (cross multiplication).
    bool equals(const RatFn& o) const;

    std::string str() const;

private:
    void reduce();

    SparsePoly num_;
    SparsePoly den_;
};

// Parses a +,-,*,/,^ expression with integer or rational literals and
// arbitrary identifiers; reports the identifiers it saw via used_vars.
RatFn parse_ratfn(const std::string& text, std::set<std::string>* used_vars = nullptr);

} // namespace hc

#endif
