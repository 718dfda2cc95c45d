#include "poly.hpp"

#include <algorithm>
#include <sstream>

namespace hc {

// ---------------------------------------------------------------------------
// SparsePoly
// ---------------------------------------------------------------------------

size_t SparsePoly::var_index(const std::string& v) const
{
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == v)
            return i;
    return vars_.size();
}

SparsePoly SparsePoly::constant(const Rat& c, std::vector<std::string> vars)
{
    SparsePoly p(std::move(vars));
    p.add_term(std::vector<unsigned>(p.vars_.size(), 0), c);
    return p;
}

SparsePoly SparsePoly::variable(const std::string& name)
{
    SparsePoly p({name});
    p.add_term({1}, Rat(1));
    return p;
}

bool SparsePoly::is_constant() const
{
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rat SparsePoly::constant_value() const
{
    if (terms_.empty())
        return Rat(0);
    if (!is_constant())
        throw std::logic_error("polynomial is not constant");
    return terms_.begin()->second;
}

void SparsePoly::add_term(const std::vector<unsigned>& exps, const Rat& c)
{
    if (exps.size() != vars_.size())
        throw std::logic_error("exponent arity mismatch");
    if (c == 0)
        return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        it->second.canonicalize();
        if (it->second == 0)
            terms_.erase(it);
    }
}

SparsePoly SparsePoly::extended_to(const std::vector<std::string>& super_vars) const
{
    std::vector<size_t> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(super_vars.begin(), super_vars.end(), vars_[i]);
        if (it == super_vars.end())
            throw std::logic_error("variable " + vars_[i] + " missing from superset");
        pos[i] = size_t(it - super_vars.begin());
    }
    SparsePoly out(super_vars);
    for (const auto& [e, c] : terms_) {
        std::vector<unsigned> ne(super_vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i)
            ne[pos[i]] = e[i];
        out.add_term(ne, c);
    }
    return out;
}

namespace {

std::vector<std::string> var_union(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b)
{
    std::vector<std::string> u = a;
    for (const auto& v : b)
        if (std::find(u.begin(), u.end(), v) == u.end())
            u.push_back(v);
    return u;
}

} // namespace

SparsePoly SparsePoly::operator-() const
{
    SparsePoly out(vars_);
    for (const auto& [e, c] : terms_)
        out.add_term(e, -c);
    return out;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const
{
    if (vars_ != o.vars_) {
        auto u = var_union(vars_, o.vars_);
        return extended_to(u) + o.extended_to(u);
    }
    SparsePoly out = *this;
    for (const auto& [e, c] : o.terms_)
        out.add_term(e, c);
    return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const
{
    return *this + (-o);
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const
{
    if (vars_ != o.vars_) {
        auto u = var_union(vars_, o.vars_);
        return extended_to(u) * o.extended_to(u);
    }
    SparsePoly out(vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<unsigned> e(e1.size());
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

SparsePoly SparsePoly::pow(unsigned e) const
{
    SparsePoly out = SparsePoly::constant(1, vars_);
    for (unsigned i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

SparsePoly SparsePoly::derivative(const std::string& var) const
{
    size_t k = var_index(var);
    SparsePoly out(vars_);
    if (k == vars_.size())
        return out; // constant in var
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0)
            continue;
        std::vector<unsigned> ne = e;
        ne[k] -= 1;
        out.add_term(ne, c * int(e[k]));
    }
    return out;
}

int SparsePoly::ord(const std::string& var) const
{
    if (terms_.empty())
        throw std::logic_error("the zero polynomial has no order");
    size_t k = var_index(var);
    if (k == vars_.size())
        return 0;
    unsigned m = UINT32_MAX;
    for (const auto& [e, c] : terms_)
        m = std::min(m, e[k]);
    return int(m);
}

SparsePoly SparsePoly::shift_down(const std::string& var, unsigned k) const
{
    if (k == 0)
        return *this;
    size_t vi = var_index(var);
    if (vi == vars_.size())
        throw std::logic_error("cannot divide by absent variable");
    SparsePoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[vi] < k)
            throw std::logic_error("power content smaller than requested shift");
        std::vector<unsigned> ne = e;
        ne[vi] -= k;
        out.add_term(ne, c);
    }
    return out;
}

Rat SparsePoly::eval(const std::map<std::string, Rat>& point) const
{
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            auto it = point.find(vars_[i]);
            if (it == point.end())
                throw std::invalid_argument("missing value for " + vars_[i]);
            t *= pow_rat(it->second, e[i]);
        }
        total += t;
    }
    total.canonicalize();
    return total;
}

bool SparsePoly::operator==(const SparsePoly& o) const
{
    if (vars_ == o.vars_)
        return terms_ == o.terms_;
    auto u = var_union(vars_, o.vars_);
    return extended_to(u).terms_ == o.extended_to(u).terms_;
}

std::string SparsePoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // print high-order terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        bool has_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
        if (a != 1 || !has_var) {
            os << rat_str(a);
            if (has_var)
                os << "*";
        }
        bool first_var = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!first_var)
                os << "*";
            first_var = false;
            os << vars_[i];
            if (e[i] > 1)
                os << "^" << e[i];
        }
    }
    return os.str();
}

SparsePoly exact_divide(const SparsePoly& p, const SparsePoly& q)
{
    if (q.is_zero())
        throw std::invalid_argument("division by the zero polynomial");
    auto u = var_union(p.vars(), q.vars());
    SparsePoly rem = p.extended_to(u);
    SparsePoly div = q.extended_to(u);
    SparsePoly quot(u);

    const auto& dlead = *div.terms().rbegin(); // lex-leading term
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        std::vector<unsigned> e(u.size());
        for (size_t i = 0; i < u.size(); ++i) {
            if (rlead.first[i] < dlead.first[i])
                throw InexactDivision(rem.str());
            e[i] = rlead.first[i] - dlead.first[i];
        }
        SparsePoly t(u);
        t.add_term(e, rlead.second / dlead.second);
        quot = quot + t;
        rem = rem - t * div;
    }
    return quot;
}

// ---------------------------------------------------------------------------
// RatFn
// ---------------------------------------------------------------------------

RatFn::RatFn(SparsePoly num, SparsePoly den)
    : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw std::invalid_argument("rational function with zero denominator");
    reduce();
}

RatFn RatFn::from_poly(SparsePoly p)
{
    return RatFn(std::move(p), SparsePoly::constant(1));
}

RatFn RatFn::constant(const Rat& c)
{
    return from_poly(SparsePoly::constant(c));
}

RatFn RatFn::variable(const std::string& name)
{
    return from_poly(SparsePoly::variable(name));
}

void RatFn::reduce()
{
    if (num_.is_zero()) {
        num_ = SparsePoly();
        den_ = SparsePoly::constant(1);
        return;
    }
    // cancel the pure variable-power content shared by both sides
    const std::vector<std::string> den_vars = den_.vars();
    for (const auto& v : den_vars) {
        int k = std::min(num_.ord(v), den_.ord(v));
        if (k > 0) {
            num_ = num_.shift_down(v, unsigned(k));
            den_ = den_.shift_down(v, unsigned(k));
        }
    }
    if (den_.is_constant()) {
        Rat c = den_.constant_value();
        SparsePoly scaled(num_.vars());
        for (const auto& [e, co] : num_.terms())
            scaled.add_term(e, co / c);
        num_ = std::move(scaled);
        den_ = SparsePoly::constant(1);
        return;
    }
    // stabilize the sign: lex-leading denominator coefficient positive
    if (den_.terms().rbegin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFn RatFn::operator-() const
{
    return RatFn(-num_, den_);
}

RatFn RatFn::operator+(const RatFn& o) const
{
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const
{
    return *this + (-o);
}

RatFn RatFn::operator*(const RatFn& o) const
{
    return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const
{
    if (o.is_zero())
        throw std::invalid_argument("division by the zero function");
    return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::pow(long e) const
{
    if (e == 0)
        return RatFn::constant(1);
    if (e < 0) {
        if (is_zero())
            throw std::invalid_argument("negative power of zero");
        return RatFn(den_, num_).pow(-e);
    }
    return RatFn(num_.pow(unsigned(e)), den_.pow(unsigned(e)));
}

RatFn RatFn::derivative(const std::string& var) const
{
    // quotient rule; the den^2 content gets reduced on construction
    return RatFn(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                 den_ * den_);
}

RatFn SparsePoly::substituted(const std::vector<std::string>& new_vars,
                              const std::map<std::string, RatFn>& assignment) const
{
    auto image = [&](const std::string& v) -> RatFn {
        auto it = assignment.find(v);
        if (it != assignment.end())
            return it->second;
        if (std::find(new_vars.begin(), new_vars.end(), v) != new_vars.end())
            return RatFn::variable(v); // carried over unchanged
        throw std::invalid_argument("no assignment for variable " + v);
    };
    std::vector<RatFn> images;
    images.reserve(vars_.size());
    for (const auto& v : vars_)
        images.push_back(image(v));

    RatFn total = RatFn::constant(0);
    for (const auto& [e, c] : terms_) {
        RatFn t = RatFn::constant(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                t = t * images[i].pow(long(e[i]));
        total = total + t;
    }
    return total;
}

RatFn RatFn::substituted(const std::vector<std::string>& new_vars,
                         const std::map<std::string, RatFn>& assignment) const
{
    RatFn n = num_.substituted(new_vars, assignment);
    RatFn d = den_.substituted(new_vars, assignment);
    if (d.is_zero())
        throw std::invalid_argument("substitution sends the denominator to zero");
    return n / d;
}

int RatFn::ord(const std::string& var) const
{
    if (num_.is_zero())
        throw std::logic_error("the zero function has no order");
    return num_.ord(var) - den_.ord(var);
}

bool RatFn::equals(const RatFn& o) const
{
    return num_ * o.den_ == o.num_ * den_;
}

std::string RatFn::str() const
{
    if (den_.is_constant() && den_.constant_value() == 1)
        return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// Expression parser: +, -, *, /, ^, parentheses, rational literals,
// arbitrary identifiers (any run not containing an operator or space).
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    std::set<std::string>* used;

    void skip_ws()
    {
        while (pos < s.size() && std::isspace((unsigned char)s[pos]))
            ++pos;
    }

    bool peek_is(char c)
    {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool is_op(char c) const
    {
        return c == '+' || c == '-' || c == '*' || c == '/' || c == '^' ||
               c == '(' || c == ')';
    }

    [[noreturn]] void fail(const std::string& msg)
    {
        throw std::invalid_argument("expression error at position " +
                                    std::to_string(pos) + ": " + msg);
    }

    RatFn parse_expr()
    {
        RatFn v = parse_term();
        for (;;) {
            skip_ws();
            if (peek_is('+')) {
                ++pos;
                v = v + parse_term();
            } else if (peek_is('-')) {
                ++pos;
                v = v - parse_term();
            } else {
                return v;
            }
        }
    }

    RatFn parse_term()
    {
        RatFn v = parse_factor();
        for (;;) {
            skip_ws();
            if (peek_is('*')) {
                ++pos;
                v = v * parse_factor();
            } else if (peek_is('/')) {
                ++pos;
                v = v / parse_factor();
            } else {
                return v;
            }
        }
    }

    RatFn parse_factor()
    {
        skip_ws();
        bool neg = false;
        while (peek_is('-') || peek_is('+')) {
            if (s[pos] == '-')
                neg = !neg;
            ++pos;
            skip_ws();
        }
        RatFn base = parse_atom();
        skip_ws();
        if (peek_is('^')) {
            ++pos;
            long e = parse_int_exponent();
            base = base.pow(e);
        }
        return neg ? -base : base;
    }

    long parse_int_exponent()
    {
        skip_ws();
        bool neg = false;
        if (peek_is('-')) {
            neg = true;
            ++pos;
        } else if (peek_is('+')) {
            ++pos;
        }
        skip_ws();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
            fail("integer exponent expected");
        long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000)
                fail("exponent too large");
            ++pos;
        }
        return neg ? -v : v;
    }

    RatFn parse_atom()
    {
        skip_ws();
        if (pos >= s.size())
            fail("unexpected end of expression");
        if (s[pos] == '(') {
            ++pos;
            RatFn v = parse_expr();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')')
                fail("missing closing parenthesis");
            ++pos;
            return v;
        }
        if (std::isdigit((unsigned char)s[pos])) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
                ++pos;
            return RatFn::constant(parse_rat(s.substr(start, pos - start)));
        }
        // identifier: everything up to the next operator, space or paren
        size_t start = pos;
        while (pos < s.size() && !std::isspace((unsigned char)s[pos]) && !is_op(s[pos]))
            ++pos;
        if (pos == start)
            fail(std::string("unexpected character '") + s[pos] + "'");
        std::string name = s.substr(start, pos - start);
        if (used)
            used->insert(name);
        return RatFn::variable(name);
    }
};

} // namespace

RatFn parse_ratfn(const std::string& text, std::set<std::string>* used_vars)
{
    Parser p{text, 0, used_vars};
    RatFn v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing input");
    return v;
}

} // namespace hc
