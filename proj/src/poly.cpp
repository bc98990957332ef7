/*
   Copyright 2026 The curvefam authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "curvefam/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace curvefam {

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db)
        return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(const Field& f, int nvars, const FieldElem& c) {
    MultiPoly p(f, nvars);
    if (!c.is_zero())
        p.terms_[Monomial(nvars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(const Field& f, int nvars, int var) {
    if (var < 0 || var >= nvars)
        throw error("variable index out of range");
    Monomial m(nvars, 0);
    m[var] = 1;
    MultiPoly p(f, nvars);
    p.terms_[m] = f.one();
    return p;
}

MultiPoly MultiPoly::monomial(const Field& f, Monomial m, const FieldElem& c) {
    MultiPoly p(f, (int)m.size());
    if (!c.is_zero())
        p.terms_[std::move(m)] = c;
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty())
        return true;
    return terms_.size() == 1 && total_degree() == 0;
}

FieldElem MultiPoly::constant_value() const {
    auto it = terms_.find(Monomial(nvars_, 0));
    return it == terms_.end() ? FieldElem() : it->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty())
        return -1;
    const Monomial& lead = terms_.begin()->first;
    return (int)std::accumulate(lead.begin(), lead.end(), 0u);
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, (int)m[var]);
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    int d = total_degree();
    for (const auto& [m, c] : terms_)
        if ((int)std::accumulate(m.begin(), m.end(), 0u) != d)
            return false;
    return true;
}

FieldElem MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElem() : it->second;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty())
        throw error("zero polynomial has no leading term");
    return terms_.begin()->first;
}

const FieldElem& MultiPoly::leading_coeff() const {
    if (terms_.empty())
        throw error("zero polynomial has no leading term");
    return terms_.begin()->second;
}

void MultiPoly::set_coeff(const Monomial& m, const FieldElem& c) {
    if ((int)m.size() != nvars_)
        throw error("monomial arity mismatch");
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

void MultiPoly::check_compat(const MultiPoly& o) const {
    if (nvars_ != o.nvars_)
        throw error("polynomial arity mismatch");
    if (field_ != o.field_)
        throw error("polynomial field mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compat(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) {
        FieldElem s = field_.add(r.coeff(m), c);
        r.set_coeff(m, s);
    }
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(field_, nvars_);
    for (const auto& [m, c] : terms_)
        r.terms_[m] = field_.neg(c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compat(o);
    MultiPoly r(field_, nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(nvars_);
            for (int i = 0; i < nvars_; ++i)
                m[i] = ma[i] + mb[i];
            FieldElem s = field_.add(r.coeff(m), field_.mul(ca, cb));
            r.set_coeff(m, s);
        }
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && field_ == o.field_ && terms_ == o.terms_;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
    if (nvars_ != o.nvars_)
        return nvars_ < o.nvars_;
    auto it = terms_.begin(), jt = o.terms_.begin();
    GradedLexGreater gl;
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first)
            return gl(jt->first, it->first); // smaller monomial first
        int c = cmp(it->second, jt->second);
        if (c != 0)
            return c < 0;
    }
    return terms_.size() < o.terms_.size();
}

MultiPoly MultiPoly::scaled(const FieldElem& c) const {
    MultiPoly r(field_, nvars_);
    if (c.is_zero())
        return r;
    for (const auto& [m, v] : terms_)
        r.terms_[m] = field_.mul(v, c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(field_, nvars_, field_.one());
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u)
            r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

bool MultiPoly::try_exact_div(const MultiPoly& divisor, MultiPoly* quotient) const {
    check_compat(divisor);
    if (divisor.is_zero())
        throw error("division by the zero polynomial");
    MultiPoly q(field_, nvars_);
    MultiPoly r = *this;
    const Monomial& dm = divisor.leading_monomial();
    const FieldElem& dc = divisor.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& rm = r.leading_monomial();
        Monomial qm(nvars_);
        bool divisible = true;
        for (int i = 0; i < nvars_; ++i) {
            if (rm[i] < dm[i]) {
                divisible = false;
                break;
            }
            qm[i] = rm[i] - dm[i];
        }
        if (!divisible)
            return false;
        FieldElem qc = field_.div(r.leading_coeff(), dc);
        MultiPoly t = monomial(field_, qm, qc);
        q = q + t;
        r = r - t * divisor;
    }
    if (quotient)
        *quotient = q;
    return true;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& divisor) const {
    MultiPoly q;
    if (!try_exact_div(divisor, &q))
        throw error("exact_div: nonzero remainder");
    return q;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= nvars_)
        throw error("variable index out of range");
    MultiPoly r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0)
            continue;
        Monomial n = m;
        n[var] -= 1;
        r.set_coeff(n, field_.mul(c, field_.from_int((long)m[var])));
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& assignment) const {
    if ((int)assignment.size() != nvars_)
        throw error("substitute: assignment length mismatch");
    if (assignment.empty())
        return *this; // constants in zero variables
    if (terms_.empty())
        return MultiPoly(assignment[0].field(), assignment[0].nvars());
    const Field& tf = assignment[0].field();
    int tn = assignment[0].nvars();
    for (const auto& a : assignment)
        if (a.field() != tf || a.nvars() != tn)
            throw error("substitute: inconsistent assignment polynomials");
    // power tables per variable
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        int d = degree_in(i);
        powers[i].push_back(constant(tf, tn, tf.one()));
        for (int k = 1; k <= d; ++k)
            powers[i].push_back(powers[i].back() * assignment[i]);
    }
    MultiPoly r(tf, tn);
    for (const auto& [m, c] : terms_) {
        MultiPoly t = constant(tf, tn, c);
        for (int i = 0; i < nvars_; ++i)
            if (m[i] > 0)
                t = t * powers[i][m[i]];
        r = r + t;
    }
    return r;
}

FieldElem MultiPoly::eval(const std::vector<FieldElem>& point) const {
    if ((int)point.size() != nvars_)
        throw error("eval: point arity mismatch");
    FieldElem acc = field_.zero();
    for (const auto& [m, c] : terms_) {
        FieldElem t = c;
        for (int i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < m[i]; ++k)
                t = field_.mul(t, point[i]);
        acc = field_.add(acc, t);
    }
    return acc;
}

MultiPoly MultiPoly::coeff_of_power(int var, int k) const {
    MultiPoly r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
        if ((int)m[var] != k)
            continue;
        Monomial n = m;
        n[var] = 0;
        r.terms_[n] = c;
    }
    return r;
}

int MultiPoly::order_in(int var) const {
    int o = std::numeric_limits<int>::max();
    for (const auto& [m, c] : terms_)
        o = std::min(o, (int)m[var]);
    return terms_.empty() ? 0 : o;
}

int MultiPoly::min_total_degree() const {
    if (terms_.empty())
        return std::numeric_limits<int>::max();
    int o = std::numeric_limits<int>::max();
    for (const auto& [m, c] : terms_)
        o = std::min(o, (int)std::accumulate(m.begin(), m.end(), 0u));
    return o;
}

MultiPoly MultiPoly::promoted(const Field& target) const {
    if (field_ == target)
        return *this;
    if (!field_.is_rationals()) {
        // demotion is fine when every coefficient is rational-valued
        for (const auto& [m, c] : terms_)
            if (c.a1 != 0)
                throw unsupported_field_error(
                    "cannot move coefficients between distinct extensions");
    }
    MultiPoly r(target, nvars_);
    r.terms_ = terms_;
    return r;
}

MultiPoly MultiPoly::normalized() const {
    if (is_zero())
        return *this;
    MultiPoly p = scaled(field_.inv(leading_coeff()));
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [m, c] : p.terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.a0.get_den().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.a1.get_den().get_mpz_t());
    }
    for (const auto& [m, c] : p.terms_) {
        mpz_class n0 = c.a0.get_num() * (den_lcm / c.a0.get_den());
        mpz_class n1 = c.a1.get_num() * (den_lcm / c.a1.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n0.get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n1.get_mpz_t());
    }
    mpq_class scale = mpq_class(den_lcm) / mpq_class(num_gcd);
    return p.scaled(FieldElem(scale));
}

// ---------------------------------------------------------------------------
// printing and parsing

namespace {

std::string monomial_string(const Monomial& m) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!first)
            out << "*";
        out << "x" << i;
        if (m[i] > 1)
            out << "^" << m[i];
        first = false;
    }
    return out.str();
}

std::string coeff_string(const Field& f, const FieldElem& c, bool has_monomial) {
    if (!has_monomial)
        return f.to_string(c);
    if (c.a1 == 0) {
        if (c.a0 == 1)
            return "";
        if (c.a0 == -1)
            return "-";
        return c.a0.get_str() + "*";
    }
    if (c.a0 == 0) {
        if (c.a1 == 1)
            return "t*";
        if (c.a1 == -1)
            return "-t*";
        return c.a1.get_str() + "*t*";
    }
    return "(" + f.to_string(c) + ")*";
}

} // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string ms = monomial_string(m);
        std::string cs = coeff_string(field_, c, !ms.empty());
        std::string term = cs + ms;
        if (term.empty() || term == "-")
            term += "1"; // unit coefficient on the empty monomial
        if (!first && term[0] != '-')
            out << "+";
        out << term;
        first = false;
    }
    return out.str();
}

namespace {

class PolyParser {
  public:
    PolyParser(const std::string& text, const Field& f, int nvars)
        : text_(text), field_(f), nvars_(nvars) {}

    MultiPoly run() {
        MultiPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error("trailing characters in polynomial: '" + text_.substr(pos_) + "'");
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_]))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MultiPoly parse_expr() {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        MultiPoly acc = parse_term();
        if (neg)
            acc = -acc;
        while (true) {
            if (accept('+'))
                acc = acc + parse_term();
            else if (accept('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        while (accept('*'))
            acc = acc * parse_factor();
        return acc;
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_atom();
        if (accept('^')) {
            skip_ws();
            unsigned e = parse_uint();
            base = base.pow(e);
        }
        return base;
    }

    unsigned parse_uint() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
            ++pos_;
        if (start == pos_)
            throw parse_error("expected exponent at position " + std::to_string(start));
        return (unsigned)std::stoul(text_.substr(start, pos_ - start));
    }

    MultiPoly parse_atom() {
        skip_ws();
        if (pos_ >= text_.size())
            throw parse_error("unexpected end of polynomial");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = parse_expr();
            if (!accept(')'))
                throw parse_error("missing ')'");
            return p;
        }
        if (std::isdigit((unsigned char)c)) {
            mpz_class num = parse_integer();
            if (accept('/')) {
                mpz_class den = parse_integer();
                if (den == 0)
                    throw parse_error("zero denominator");
                return MultiPoly::constant(field_, nvars_,
                                           FieldElem(mpq_class(num) / mpq_class(den)));
            }
            return MultiPoly::constant(field_, nvars_, FieldElem(mpq_class(num)));
        }
        if (c == 't') {
            ++pos_;
            if (!field_.is_quadratic())
                throw parse_error("'t' used without a quadratic extension");
            return MultiPoly::constant(field_, nvars_, field_.generator());
        }
        if (c == 'x') {
            ++pos_;
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
                ++pos_;
            if (start == pos_)
                throw parse_error("expected variable index after 'x'");
            int idx = std::stoi(text_.substr(start, pos_ - start));
            if (idx < 0 || idx >= nvars_)
                throw parse_error("variable x" + std::to_string(idx) + " out of range");
            return MultiPoly::variable(field_, nvars_, idx);
        }
        throw parse_error(std::string("unexpected character '") + c + "' in polynomial");
    }

    mpz_class parse_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
            ++pos_;
        if (start == pos_)
            throw parse_error("expected integer at position " + std::to_string(start));
        return mpz_class(text_.substr(start, pos_ - start));
    }

    const std::string& text_;
    const Field& field_;
    int nvars_;
    size_t pos_ = 0;
};

} // namespace

MultiPoly MultiPoly::parse(const std::string& text, const Field& f, int nvars) {
    return PolyParser(text, f, nvars).run();
}

// ---------------------------------------------------------------------------
// gcd

namespace {

// p viewed as a univariate in `var`; index = power, entries do not
// involve `var`.
std::vector<MultiPoly> univariate_view(const MultiPoly& p, int var) {
    int d = p.degree_in(var);
    std::vector<MultiPoly> cs;
    for (int k = 0; k <= std::max(d, 0); ++k)
        cs.push_back(p.coeff_of_power(var, k));
    return cs;
}

MultiPoly from_view(const std::vector<MultiPoly>& cs, int var, const Field& f, int nvars) {
    MultiPoly p(f, nvars);
    for (size_t k = 0; k < cs.size(); ++k) {
        MultiPoly xk = MultiPoly::variable(f, nvars, var).pow((unsigned)k);
        p = p + cs[k] * xk;
    }
    return p;
}

// content of p with respect to var: gcd of its univariate coefficients
MultiPoly content_wrt(const MultiPoly& p, int var) {
    MultiPoly g(p.field(), p.nvars());
    for (const MultiPoly& c : univariate_view(p, var))
        if (!c.is_zero())
            g = poly_gcd(g, c);
    return g;
}

// pseudo-remainder of a by b with respect to var (deg_var b >= 1)
MultiPoly pseudo_rem(MultiPoly a, const MultiPoly& b, int var) {
    int db = b.degree_in(var);
    MultiPoly lcb = b.coeff_of_power(var, db);
    while (!a.is_zero() && a.degree_in(var) >= db) {
        int da = a.degree_in(var);
        MultiPoly lca = a.coeff_of_power(var, da);
        MultiPoly shift = MultiPoly::variable(a.field(), a.nvars(), var).pow((unsigned)(da - db));
        a = lcb * a - lca * shift * b;
    }
    return a;
}

int highest_variable(const MultiPoly& p, const MultiPoly& q) {
    for (int v = p.nvars() - 1; v >= 0; --v)
        if (p.degree_in(v) > 0 || q.degree_in(v) > 0)
            return v;
    return -1;
}

} // namespace

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero())
        return q.is_zero() ? q : q.normalized();
    if (q.is_zero())
        return p.normalized();
    if (p.is_constant() || q.is_constant())
        return MultiPoly::constant(p.field(), p.nvars(), p.field().one());
    int var = highest_variable(p, q);
    MultiPoly cp = content_wrt(p, var);
    MultiPoly cq = content_wrt(q, var);
    MultiPoly a = p.exact_div(cp);
    MultiPoly b = q.exact_div(cq);
    if (a.degree_in(var) < b.degree_in(var))
        std::swap(a, b);
    // primitive polynomial remainder sequence
    while (!b.is_zero() && b.degree_in(var) > 0) {
        MultiPoly r = pseudo_rem(a, b, var);
        a = b;
        if (r.is_zero()) {
            b = r;
            break;
        }
        MultiPoly cr = content_wrt(r, var);
        b = r.exact_div(cr);
    }
    MultiPoly prim = b.is_zero() ? a : MultiPoly::constant(p.field(), p.nvars(), p.field().one());
    return (poly_gcd(cp, cq) * prim).normalized();
}

MultiPoly gcd_content(const std::vector<MultiPoly>& ps) {
    MultiPoly g;
    bool seen = false;
    for (const MultiPoly& p : ps) {
        if (!seen) {
            g = MultiPoly::zero(p.field(), p.nvars());
            seen = true;
        }
        g = poly_gcd(g, p);
        if (!g.is_zero() && g.is_constant())
            break; // cannot shrink further
    }
    if (!seen || g.is_zero())
        throw error("gcd_content requires at least one nonzero polynomial");
    return g;
}

// ---------------------------------------------------------------------------
// resultant (Bareiss fraction-free determinant of the Sylvester matrix)

namespace {

MultiPoly bareiss_det(std::vector<std::vector<MultiPoly>> m, const Field& f, int nvars) {
    size_t n = m.size();
    if (n == 0)
        return MultiPoly::constant(f, nvars, f.one());
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(f, nvars, f.one());
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero())
            ++pivot;
        if (pivot == n)
            return MultiPoly::zero(f, nvars);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

} // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var) {
    if (p.is_zero() || q.is_zero())
        throw error("resultant of a zero polynomial");
    int dp = p.degree_in(var);
    int dq = q.degree_in(var);
    if (dp == 0)
        return p.pow((unsigned)dq);
    if (dq == 0)
        return q.pow((unsigned)dp);
    auto pc = univariate_view(p, var);
    auto qc = univariate_view(q, var);
    size_t n = (size_t)(dp + dq);
    std::vector<std::vector<MultiPoly>> m(
        n, std::vector<MultiPoly>(n, MultiPoly::zero(p.field(), p.nvars())));
    for (int row = 0; row < dq; ++row)
        for (int k = 0; k <= dp; ++k)
            m[(size_t)row][(size_t)(row + k)] = pc[(size_t)(dp - k)];
    for (int row = 0; row < dp; ++row)
        for (int k = 0; k <= dq; ++k)
            m[(size_t)(dq + row)][(size_t)(row + k)] = qc[(size_t)(dq - k)];
    return bareiss_det(std::move(m), p.field(), p.nvars());
}

} // namespace curvefam
