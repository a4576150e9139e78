#include "schub/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace schub {

// ---------------------------------------------------------------- Var

std::string Var::str() const {
    static const char* names = "xyzt";
    if (family() == Family::Beta) return "b";
    return std::string(1, names[size_t(family())]) + std::to_string(index());
}

Var Var::parse(const std::string& s) {
    if (s == "b" || s == "beta") return Var::beta();
    if (s.size() < 2) throw std::invalid_argument("bad variable: " + s);
    Family f;
    switch (s[0]) {
        case 'x': f = Family::X; break;
        case 'y': f = Family::Y; break;
        case 'z': f = Family::Z; break;
        case 't': f = Family::T; break;
        default: throw std::invalid_argument("bad variable: " + s);
    }
    uint32_t idx = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit((unsigned char)s[i]))
            throw std::invalid_argument("bad variable: " + s);
        idx = idx * 10 + (s[i] - '0');
    }
    if (idx == 0) throw std::invalid_argument("bad variable: " + s);
    return Var(f, idx);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Entry> entries) : e_(std::move(entries)) {
    std::sort(e_.begin(), e_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (auto& p : e_) {
        if (p.second <= 0) throw std::invalid_argument("nonpositive exponent");
        deg_ += p.second;
    }
    for (size_t i = 1; i < e_.size(); ++i)
        if (e_[i].first == e_[i - 1].first)
            throw std::invalid_argument("duplicate variable");
}

Monomial Monomial::var(Var v, int e) {
    Monomial m;
    if (e != 0) {
        m.e_.push_back({v, e});
        m.deg_ = e;
    }
    return m;
}

int Monomial::exponent(Var v) const {
    for (auto& p : e_)
        if (p.first == v) return p.second;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
        if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
            r.e_.push_back(e_[i++]);
        else if (i == e_.size() || o.e_[j].first < e_[i].first)
            r.e_.push_back(o.e_[j++]);
        else {
            r.e_.push_back({e_[i].first, e_[i].second + o.e_[j].second});
            ++i, ++j;
        }
    }
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divide(const Monomial& o, Monomial& out) const {
    Monomial r;
    size_t i = 0;
    for (auto& p : o.e_) {
        while (i < e_.size() && e_[i].first < p.first) r.e_.push_back(e_[i++]);
        if (i == e_.size() || e_[i].first != p.first || e_[i].second < p.second)
            return false;
        if (e_[i].second > p.second)
            r.e_.push_back({p.first, e_[i].second - p.second});
        ++i;
    }
    while (i < e_.size()) r.e_.push_back(e_[i++]);
    r.deg_ = deg_ - o.deg_;
    out = std::move(r);
    return true;
}

bool Monomial::operator<(const Monomial& o) const {
    if (deg_ != o.deg_) return deg_ < o.deg_;
    // Lexicographic: larger power on an earlier variable wins, so the
    // *smaller* monomial is the one that loses the first comparison.
    size_t i = 0, j = 0;
    while (i < e_.size() && j < o.e_.size()) {
        if (e_[i].first.key != o.e_[j].first.key)
            // the one holding the earlier variable is lex-larger
            return o.e_[j].first.key < e_[i].first.key ? true : false;
        if (e_[i].second != o.e_[j].second)
            return e_[i].second < o.e_[j].second;
        ++i, ++j;
    }
    return false;  // equal (degrees match, one cannot be a strict prefix)
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rat& c) {
    if (c != 0) terms_.emplace(Monomial::one(), c);
}

Polynomial Polynomial::variable(Var v) {
    Polynomial p;
    p.terms_.emplace(Monomial::var(v), Rat(1));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat Polynomial::constant_term() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rat(0) : it->second;
}

int Polynomial::degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

int Polynomial::degree_in(Var v) const {
    int d = 0;
    for (auto& t : terms_) d = std::max(d, t.first.exponent(v));
    return d;
}

bool Polynomial::contains(Var v) const {
    for (auto& t : terms_)
        if (t.first.exponent(v) > 0) return true;
    return false;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(*this);
    for (auto& t : o.terms_) r.add_term(t.first, t.second);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r(*this);
    for (auto& t : o.terms_) r.add_term(t.first, -t.second);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (auto& a : terms_)
        for (auto& b : o.terms_) r.add_term(a.first * b.first, a.second * b.second);
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (auto& t : terms_) r.terms_.emplace(t.first, t.second * c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) { return *this = *this + o; }
Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this = *this - o; }
Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r(1), base(*this);
    while (k) {
        if (k & 1) r *= base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::logic_error("division by zero polynomial");
    Polynomial rem(*this), q;
    const auto& dlead = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Monomial qm;
        if (!rlead.first.divide(dlead.first, qm))
            throw std::logic_error("nonzero remainder in exact division");
        Rat qc = rlead.second / dlead.second;
        q.add_term(qm, qc);
        Polynomial sub;
        for (auto& t : divisor.terms_) sub.add_term(t.first * qm, t.second * qc);
        rem -= sub;
    }
    return q;
}

Polynomial Polynomial::rename(const std::map<Var, VarImage>& images) const {
    Polynomial r;
    for (auto& t : terms_) {
        Monomial m;
        int sign = 1;
        for (auto& p : t.first.entries()) {
            auto it = images.find(p.first);
            if (it == images.end()) {
                m = m * Monomial::var(p.first, p.second);
            } else {
                m = m * Monomial::var(it->second.var, p.second);
                if (it->second.sign < 0 && (p.second & 1)) sign = -sign;
            }
        }
        r.add_term(m, sign < 0 ? -t.second : t.second);
    }
    return r;
}

Polynomial Polynomial::at_beta_zero() const { return beta_coefficient(0); }

Polynomial Polynomial::beta_coefficient(int k) const {
    Polynomial r;
    Var b = Var::beta();
    for (auto& t : terms_) {
        if (t.first.exponent(b) != k) continue;
        Monomial m;
        for (auto& p : t.first.entries())
            if (p.first != b) m = m * Monomial::var(p.first, p.second);
        r.add_term(m, t.second);
    }
    return r;
}

Polynomial Polynomial::beta_truncate(int K) const {
    Polynomial r;
    Var b = Var::beta();
    for (auto& t : terms_)
        if (t.first.exponent(b) < K) r.add_term(t.first, t.second);
    return r;
}

// ------- gcd via primitive pseudo-remainder sequences -------

namespace {

Var main_var(const Polynomial& p) {
    // largest variable occurring (graded-lex leading term need not hold it)
    Var best;
    bool found = false;
    for (auto& t : p.terms())
        for (auto& e : t.first.entries())
            if (!found || best < e.first) best = e.first, found = true;
    if (!found) throw std::logic_error("main_var of constant");
    return best;
}

std::vector<Polynomial> univ(const Polynomial& p, Var v) {
    std::vector<Polynomial> c(size_t(p.degree_in(v)) + 1);
    for (auto& t : p.terms()) {
        int e = t.first.exponent(v);
        Monomial m;
        for (auto& q : t.first.entries())
            if (q.first != v) m = m * Monomial::var(q.first, q.second);
        c[size_t(e)].add_term(m, t.second);
    }
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    return c;
}

Polynomial from_univ(const std::vector<Polynomial>& c, Var v) {
    Polynomial r;
    for (size_t e = 0; e < c.size(); ++e) {
        if (c[e].is_zero()) continue;
        Polynomial p = c[e];
        if (e) p *= Polynomial::variable(v).pow(unsigned(e));
        r += p;
    }
    return r;
}

// pseudo-remainder of a by b in variable v (deg a >= deg b >= 0)
std::vector<Polynomial> prem(std::vector<Polynomial> a,
                             const std::vector<Polynomial>& b) {
    const Polynomial& lb = b.back();
    int db = int(b.size()) - 1;
    while (int(a.size()) - 1 >= db && !(a.size() == 1 && a[0].is_zero())) {
        int da = int(a.size()) - 1;
        Polynomial la = a.back();
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j)
            a[size_t(da - db + j)] -= la * b[size_t(j)];
        while (a.size() > 1 && a.back().is_zero()) a.pop_back();
        if (int(a.size()) - 1 == da) a.pop_back();  // defensive; cannot happen
    }
    return a;
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * (Rat(1) / p.terms().rbegin()->second);
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    Var va = main_var(a), vb = main_var(b);
    Var v = va < vb ? vb : va;
    auto content = [](const std::vector<Polynomial>& c) {
        Polynomial g;
        for (auto& p : c) g = Polynomial::gcd(g, p);
        return g;
    };
    // If v occurs on one side only, it cannot occur in the gcd.
    if (!a.contains(v)) return Polynomial::gcd(a, content(univ(b, v)));
    if (!b.contains(v)) return Polynomial::gcd(content(univ(a, v)), b);

    auto ua = univ(a, v), ub = univ(b, v);
    Polynomial ca = content(ua), cb = content(ub);
    Polynomial cg = Polynomial::gcd(ca, cb);
    Polynomial fa = a.divide_exact(ca), fb = b.divide_exact(cb);

    auto f = univ(fa, v), g = univ(fb, v);
    if (f.size() < g.size()) std::swap(f, g);
    while (true) {
        auto r = prem(f, g);
        if (r.size() == 1 && r[0].is_zero()) break;
        f = std::move(g);
        g = std::move(r);
        Polynomial cr = content(g);
        for (auto& p : g) p = p.divide_exact(cr);
        if (g.size() == 1) return monic(cg);  // degree dropped to 0
    }
    Polynomial gg = from_univ(g, v);
    Polynomial cgg = content(g);
    return monic(cg * gg.divide_exact(cgg));
}

// ------- text I/O -------

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        bool wrote = false;
        if (c != 1 || it->first.empty()) {
            out << c.str();
            wrote = true;
        }
        for (auto& p : it->first.entries()) {
            if (wrote) out << "*";
            out << p.first.str();
            if (p.second > 1) out << "^" << p.second;
            wrote = true;
        }
        first = false;
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    explicit Parser(const std::string& text) : s(text) {}

    void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse error at " + std::to_string(i) + ": " + why);
    }

    Polynomial expr() {
        Polynomial r = eat('-') ? -term() : (void(eat('+')), term());
        while (true) {
            skip();
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    Polynomial term() {
        Polynomial r = factor();
        while (eat('*')) r *= factor();
        return r;
    }
    Polynomial factor() {
        Polynomial b = base();
        if (eat('^')) {
            skip();
            size_t j = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            if (j == i) fail("exponent expected");
            b = b.pow(unsigned(std::stoul(s.substr(j, i - j))));
        }
        return b;
    }
    Polynomial base() {
        skip();
        if (eat('(')) {
            Polynomial r = expr();
            if (!eat(')')) fail("')' expected");
            return r;
        }
        if (eat('-')) return -factor();
        if (i >= s.size()) fail("operand expected");
        if (std::isdigit((unsigned char)s[i])) {
            size_t j = i;
            while (i < s.size() && (std::isdigit((unsigned char)s[i]) || s[i] == '/')) ++i;
            return Polynomial(Rat(s.substr(j, i - j)));
        }
        if (std::isalpha((unsigned char)s[i])) {
            size_t j = i++;
            while (i < s.size() && (std::isalnum((unsigned char)s[i]))) ++i;
            return Polynomial::variable(Var::parse(s.substr(j, i - j)));
        }
        fail("operand expected");
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
    Parser p(text);
    Polynomial r = p.expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

Fraction Polynomial::substitute(const std::map<Var, Fraction>& bindings) const {
    Fraction r(Rat(0));
    for (auto& t : terms_) {
        Fraction term(Polynomial(t.second));
        Polynomial passthrough(1);
        for (auto& p : t.first.entries()) {
            auto it = bindings.find(p.first);
            if (it == bindings.end()) {
                passthrough *= Polynomial::variable(p.first).pow(unsigned(p.second));
            } else {
                Fraction pw = it->second;
                for (int k = 1; k < p.second; ++k) pw *= it->second;
                term *= pw;
            }
        }
        term *= Fraction(passthrough);
        r += term;
    }
    return r;
}

// ---------------------------------------------------------------- Fraction

Fraction::Fraction(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    normalize();
}

void Fraction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = Polynomial::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
    }
    Rat c = den_.constant_term();
    if (c == 0) c = den_.terms().rbegin()->second;
    if (c != 1) {
        Rat inv = Rat(1) / c;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Fraction Fraction::operator-() const {
    Fraction r(*this);
    r.num_ = -r.num_;
    return r;
}

Fraction Fraction::operator+(const Fraction& o) const {
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const {
    return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator*(const Fraction& o) const {
    return Fraction(num_ * o.num_, den_ * o.den_);
}

Fraction Fraction::inverse() const {
    if (num_.is_zero()) throw std::domain_error("inverse of zero");
    return Fraction(den_, num_);
}

bool Fraction::operator==(const Fraction& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

Fraction Fraction::substitute(const std::map<Var, Fraction>& bindings) const {
    Fraction n = num_.substitute(bindings);
    Fraction d = den_.substitute(bindings);
    return n * d.inverse();
}

Fraction Fraction::rename(const std::map<Var, Polynomial::VarImage>& images) const {
    return Fraction(num_.rename(images), den_.rename(images));
}

Fraction Fraction::at_beta_zero() const {
    Polynomial d = den_.at_beta_zero();
    if (d.is_zero()) throw std::domain_error("denominator vanishes at beta=0");
    return Fraction(num_.at_beta_zero(), d);
}

Fraction Fraction::beta_truncate(int K) const {
    if (K <= 0) return Fraction(Rat(0));
    Polynomial d0 = den_.at_beta_zero();
    if (d0.is_zero()) throw std::domain_error("denominator not a unit in beta");
    Polynomial e = den_ - d0;  // every term carries beta
    // 1/den = (1/d0) * sum_k (-e/d0)^k; assemble over the common denom d0^K.
    Polynomial acc = d0.pow(unsigned(K - 1));  // k = 0 term times d0^{K-1}
    Polynomial pw(1);
    for (int k = 1; k < K; ++k) {
        pw = (pw * -e).beta_truncate(K);
        if (pw.is_zero()) break;
        acc += pw * d0.pow(unsigned(K - 1 - k));
    }
    return Fraction((num_ * acc).beta_truncate(K), d0.pow(unsigned(K)));
}

std::string Fraction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Fraction phi(const Fraction& f, int scale) {
    Polynomial half = scale == 1 ? Polynomial(Rat(1) / 2) : Polynomial(1);
    return f * (Fraction(1) - Fraction(half * Polynomial::beta()) * f).inverse();
}

Fraction beta_add(const Fraction& a, const Fraction& c) {
    Fraction b{Polynomial::beta()};
    return a + c + b * a * c;
}

Fraction beta_sub(const Fraction& a, const Fraction& c) {
    Fraction b{Polynomial::beta()};
    return (a - c) * (Fraction(1) + b * c).inverse();
}

// ------------------------------------------------- difference operators

namespace {

Var fvar(Family fam, uint32_t i) { return Var(fam, i); }

template <typename T>
T reflect_ordinary(const T& f, Family fam, int i) {
    std::map<Var, Polynomial::VarImage> m;
    m[fvar(fam, uint32_t(i))] = {fvar(fam, uint32_t(i + 1)), 1};
    m[fvar(fam, uint32_t(i + 1))] = {fvar(fam, uint32_t(i)), 1};
    return f.rename(m);
}

template <typename T>
T reflect_special_b(const T& f, Family fam) {
    std::map<Var, Polynomial::VarImage> m;
    m[fvar(fam, 1)] = {fvar(fam, 1), -1};
    return f.rename(m);
}

template <typename T>
T reflect_special_d(const T& f, Family fam) {
    std::map<Var, Polynomial::VarImage> m;
    m[fvar(fam, 1)] = {fvar(fam, 2), -1};
    m[fvar(fam, 2)] = {fvar(fam, 1), -1};
    return f.rename(m);
}

}  // namespace

Polynomial divided_difference(const Polynomial& f, DD which, int i, Family fam) {
    switch (which) {
        case DD::Ordinary: {
            Polynomial d = Polynomial::variable(fvar(fam, uint32_t(i))) -
                           Polynomial::variable(fvar(fam, uint32_t(i + 1)));
            return (f - reflect_ordinary(f, fam, i)).divide_exact(d);
        }
        case DD::SpecialB:
            return (f - reflect_special_b(f, fam))
                .divide_exact(Polynomial::variable(fvar(fam, 1)));
        case DD::SpecialC:
            return divided_difference(f, DD::SpecialB, i, fam) * Rat(1, 2);
        case DD::SpecialD: {
            Polynomial d = Polynomial::variable(fvar(fam, 1)) +
                           Polynomial::variable(fvar(fam, 2));
            return (f - reflect_special_d(f, fam)).divide_exact(d);
        }
    }
    throw std::logic_error("unreachable");
}

Fraction divided_difference(const Fraction& f, DD which, int i, Family fam) {
    switch (which) {
        case DD::Ordinary: {
            Fraction d{Polynomial::variable(fvar(fam, uint32_t(i))) -
                       Polynomial::variable(fvar(fam, uint32_t(i + 1)))};
            return (f - reflect_ordinary(f, fam, i)) * d.inverse();
        }
        case DD::SpecialB:
            return (f - reflect_special_b(f, fam)) *
                   Fraction(Polynomial::variable(fvar(fam, 1))).inverse();
        case DD::SpecialC:
            return divided_difference(f, DD::SpecialB, i, fam) * Fraction(Rat(1, 2));
        case DD::SpecialD: {
            Fraction d{Polynomial::variable(fvar(fam, 1)) +
                       Polynomial::variable(fvar(fam, 2))};
            return (f - reflect_special_d(f, fam)) * d.inverse();
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

// premultiplier turning a divided difference into its isobaric variant
template <typename T>
T iso_weight(Iso which, int i, Family fam) {
    Polynomial b = Polynomial::beta();
    Polynomial one(1);
    switch (which) {
        case Iso::A:
            return T(one + b * Polynomial::variable(fvar(fam, uint32_t(i + 1))));
        case Iso::B:
            return T(one + b * Polynomial::variable(fvar(fam, uint32_t(i + 1))) * Rat(1, 2));
        case Iso::SpecialB:
            return T(one - b * Polynomial::variable(fvar(fam, 1)) * Rat(1, 2));
        case Iso::SpecialC:
            return T(one - b * Polynomial::variable(fvar(fam, 1)));
        case Iso::SpecialD:
            return T((one - b * Polynomial::variable(fvar(fam, 1)) * Rat(1, 2)) *
                     (one - b * Polynomial::variable(fvar(fam, 2)) * Rat(1, 2)));
    }
    throw std::logic_error("unreachable");
}

DD iso_base(Iso which) {
    switch (which) {
        case Iso::A:
        case Iso::B: return DD::Ordinary;
        case Iso::SpecialB: return DD::SpecialB;
        case Iso::SpecialC: return DD::SpecialC;
        case Iso::SpecialD: return DD::SpecialD;
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Polynomial isobaric(const Polynomial& f, Iso which, int i, Family fam) {
    return divided_difference(iso_weight<Polynomial>(which, i, fam) * f,
                              iso_base(which), i, fam);
}

Fraction isobaric(const Fraction& f, Iso which, int i, Family fam) {
    return divided_difference(iso_weight<Fraction>(which, i, fam) * f,
                              iso_base(which), i, fam);
}

}  // namespace schub
