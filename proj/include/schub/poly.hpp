#pragma once
// Exact sparse multivariate polynomials and rational fractions over Q in the
// variable families x, y, z, t and the formal parameter b (beta).
//
// Coefficients are arbitrary-precision rationals; the canonical monomial
// order is graded lexicographic with family order x < y < z < t < beta,
// then index.  All arithmetic is exact; fractions are reduced eagerly.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace schub {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

enum class Family : uint8_t { X = 0, Y = 1, Z = 2, T = 3, Beta = 4 };

// Packed variable id: family in the high bits so x1 < x2 < ... < y1 < ... < b.
struct Var {
    uint32_t key;  // (family << 24) | index; beta has index 0

    constexpr Var() : key(0) {}
    Var(Family f, uint32_t index) : key((uint32_t(f) << 24) | index) {
        if (f == Family::Beta ? index != 0 : index == 0)
            throw std::invalid_argument("bad variable index");
    }
    static Var beta() { return Var(Family::Beta, 0); }
    static Var x(uint32_t i) { return Var(Family::X, i); }
    static Var y(uint32_t i) { return Var(Family::Y, i); }
    static Var z(uint32_t i) { return Var(Family::Z, i); }
    static Var t(uint32_t i) { return Var(Family::T, i); }

    Family family() const { return Family(key >> 24); }
    uint32_t index() const { return key & 0xffffffu; }
    bool operator==(const Var& o) const { return key == o.key; }
    bool operator!=(const Var& o) const { return key != o.key; }
    bool operator<(const Var& o) const { return key < o.key; }

    std::string str() const;
    // Parses "x12", "b", "y3", ... ; throws on malformed names.
    static Var parse(const std::string& s);
};

class Fraction;

// Exponent vector, sorted by variable; zero exponents never stored.
class Monomial {
public:
    using Entry = std::pair<Var, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries);
    static Monomial one() { return Monomial(); }
    static Monomial var(Var v, int e = 1);

    int degree() const { return deg_; }
    int exponent(Var v) const;
    bool empty() const { return e_.empty(); }
    const std::vector<Entry>& entries() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    // Divides exactly; returns false if o does not divide *this.
    bool divide(const Monomial& o, Monomial& out) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    // Graded lex: by total degree, then lexicographically on the exponent
    // sequence read in increasing variable order.
    bool operator<(const Monomial& o) const;

private:
    std::vector<Entry> e_;
    int deg_ = 0;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Rat>;

    Polynomial() = default;
    Polynomial(const Rat& c);            // constant
    Polynomial(long c) : Polynomial(Rat(c)) {}
    Polynomial(int c) : Polynomial(Rat(c)) {}
    static Polynomial variable(Var v);
    static Polynomial beta() { return variable(Var::beta()); }
    static Polynomial x(uint32_t i) { return variable(Var::x(i)); }
    static Polynomial y(uint32_t i) { return variable(Var::y(i)); }
    static Polynomial z(uint32_t i) { return variable(Var::z(i)); }
    static Polynomial t(uint32_t i) { return variable(Var::t(i)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    const Terms& terms() const { return terms_; }
    int degree() const;                  // total degree, -1 for 0
    int degree_in(Var v) const;
    bool contains(Var v) const;

    void add_term(const Monomial& m, const Rat& c);  // accumulate, drop zeros

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned k) const;

    // Exact division: throws std::logic_error when the remainder is nonzero
    // (a nonzero remainder always signals a convention bug upstream).
    Polynomial divide_exact(const Polynomial& divisor) const;

    // Simultaneous variable renaming/sign map: v -> sign * v'.
    struct VarImage { Var var; int sign; };
    Polynomial rename(const std::map<Var, VarImage>& images) const;

    // Full substitution; unbound variables pass through.
    Fraction substitute(const std::map<Var, Fraction>& bindings) const;

    // Substitute beta = 0 (cheap special case used everywhere).
    Polynomial at_beta_zero() const;

    // Coefficient of beta^k as a polynomial in the other variables.
    Polynomial beta_coefficient(int k) const;
    // Drop all terms with beta-degree >= K.
    Polynomial beta_truncate(int K) const;

    // gcd, monic-normalized leading coefficient 1 under the monomial order.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    std::string str() const;             // canonical text, "3/2*x1^2*y2*b"
    static Polynomial parse(const std::string& text);

private:
    Terms terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

// Reduced rational fraction; denominator normalized so that its constant
// term is 1 when nonzero, otherwise its leading coefficient is 1.
class Fraction {
public:
    Fraction() : num_(), den_(1) {}
    Fraction(const Polynomial& p) : num_(p), den_(1) {}
    Fraction(const Rat& c) : num_(Polynomial(c)), den_(1) {}
    Fraction(long c) : Fraction(Rat(c)) {}
    Fraction(int c) : Fraction(Rat(c)) {}
    Fraction(const Polynomial& num, const Polynomial& den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Polynomial(1); }

    Fraction operator-() const;
    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
    Fraction inverse() const;            // throws on zero
    bool operator==(const Fraction& o) const;
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    // Substitute variables simultaneously; unbound variables are untouched.
    Fraction substitute(const std::map<Var, Fraction>& bindings) const;
    Fraction rename(const std::map<Var, Polynomial::VarImage>& images) const;
    Fraction at_beta_zero() const;       // throws if denominator vanishes

    // Reduce modulo beta^K: series-expand the denominator in beta (its
    // beta-constant part must be nonzero) and truncate.  The result's
    // denominator is free of beta.
    Fraction beta_truncate(int K) const;

    std::string str() const;

private:
    Polynomial num_, den_;
    void normalize();
};

// phi_beta(f) = f / (1 - (b/2) f); scale 2 gives phi_{2beta}(f) = f/(1 - b f).
Fraction phi(const Fraction& f, int scale = 1);
// Deformed addition a +_b c = a + c + b*a*c and subtraction (a-c)/(1+b*c).
Fraction beta_add(const Fraction& a, const Fraction& c);
Fraction beta_sub(const Fraction& a, const Fraction& c);

// Divided-difference operators.  The index i is used by the ordinary kind
// only; the special kinds act on the first one or two variables of the
// family.  Polynomial versions divide exactly and throw on a nonzero
// remainder (a convention bug upstream); Fraction versions divide formally.
enum class DD { Ordinary, SpecialB, SpecialC, SpecialD };
Polynomial divided_difference(const Polynomial& f, DD which, int i = 1,
                              Family fam = Family::X);
Fraction divided_difference(const Fraction& f, DD which, int i = 1,
                            Family fam = Family::X);

// Isobaric (Demazure) variants: pi_i^A = pi_i^C, pi_i^B = pi_i^D,
// plus the special pi_0^B, pi_0^C and pi_{1hat}^D.
enum class Iso { A, B, SpecialB, SpecialC, SpecialD };
Polynomial isobaric(const Polynomial& f, Iso which, int i = 1,
                    Family fam = Family::X);
Fraction isobaric(const Fraction& f, Iso which, int i = 1,
                  Family fam = Family::X);

}  // namespace schub
