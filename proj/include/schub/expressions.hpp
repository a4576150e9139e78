#pragma once
// Generating expressions in the Nil/Id-Coxeter algebras: transfer elements
// (types A/B/C/D, plain, deformed-argument, and tilde variants), the
// Schubert/Grothendieck expressions of first/second/third kinds in single,
// double, and triple variable sets, their coefficient tables, Stanley-type
// symmetric families, vanishing-specialization products, and the factored
// comparison forms.
//
// Deformed (Id-mode) families are computed modulo beta^K (beta_order): the
// square-root step has no closed form over rational functions of beta (see
// coxalg), and second-kind coefficients are genuine beta-power series.

#include <map>
#include <string>
#include <vector>

#include "schub/coxalg.hpp"
#include "schub/poly.hpp"
#include "schub/weyl.hpp"

namespace schub {

enum class Flavor { Schubert, Grothendieck };
enum class Kind { First, Second, Third };
enum class Arity { Single, Double, Triple };

struct ExpressionSpec {
    WTag type = WTag::A;
    int rank = 2;
    Flavor flavor = Flavor::Schubert;
    Kind kind = Kind::First;
    Arity arity = Arity::Single;
    int m = 0;           // z-variable count (triple only; 0 = rank)
    int beta_order = 6;  // Id-mode truncation exponent

    void validate() const;  // throws std::invalid_argument
    const Group& group() const;
    Mode mode() const {
        return flavor == Flavor::Schubert ? Mode::Nil : Mode::Id;
    }
    int zcount() const { return m > 0 ? m : rank; }
    std::string str() const;
};

// ---- factor lists -------------------------------------------------------
// A_i(x) = h_{n-1}(x) ... h_i(x)
std::vector<HFactor> a_factors(int i, int n, const Fraction& x);
// B(x) = h_{n-1}..h_1(x) h_0(x) h_1..h_{n-1}(x); C replaces h_0(x) by
// h_0(2x); D drops h_1 from the ascending half and uses h_{1hat}.
// Deformed variants substitute phi(x); the deformed C middle is
// h_0(phi(x) +_beta phi(x)) (the only doubling compatible with
// commutativity and inversion in Id mode).
std::vector<HFactor> transfer_factors(WTag t, int n, const Fraction& x,
                                      bool deformed);
// S^A factor list: A_1(args[0]) A_2(args[1]) ... A_{n-1}(args[n-2])
std::vector<HFactor> sa_factors(int n, const std::vector<Fraction>& args);

enum class TransferSymbol {
    A, B, C, D, CalB, CalC, CalD, TildeB, TildeC, TildeD
};
// The named element; i is the A-chain index (symbol A only).  Plain and
// tilde symbols live in Nil mode, deformed (Cal*) ones in Id mode.
AlgebraElement transfer(TransferSymbol s, const Fraction& x, const Group& g,
                        int i = 1);

// ---- expressions and families -------------------------------------------
AlgebraElement build(const ExpressionSpec& spec);

struct PolynomialFamily {
    ExpressionSpec spec;
    std::map<int, Polynomial> table;
};

// Coefficient table of e over the whole group; asserts the identity
// coefficient is 1 and every entry is a polynomial (witness on failure).
PolynomialFamily decompose(const AlgebraElement& e, const ExpressionSpec& spec);
PolynomialFamily family(const ExpressionSpec& spec);  // build + decompose

// H(Z_m) = B(z_1)...B(z_m) (Nil) resp. its deformed analog (Id, mod beta^K)
PolynomialFamily stanley(WTag t, int rank, Mode mode, int m,
                         int beta_order = 6);
AlgebraElement stanley_element(WTag t, int rank, Mode mode, int m,
                               int beta_order = 6);

// The specialization product for Y = -w(X): one h-factor per letter of a
// reduced word, read right to left, with window-value arguments
// (x_{-i} = -x_i).  deformed = the beta variant (phi-lifted arguments and
// deformed subtraction); beta_order > 0 truncates the deformed arguments
// modulo beta^K so all coefficients stay polynomial.  Throws if the word is
// not reduced.
AlgebraElement vanishing_product(WTag t, int rank, const Word& word,
                                 bool deformed, int beta_order = 0);

// Factored displays used as oracles against the built expressions.
enum class FactorForm {
    Lemma31B,      // type B single first kind, n >= 2
    Prop31DOdd,    // type D single first kind, odd n >= 3
    Prop31DEven,   // type D single first kind, even n >= 4
    Thm31DoubleB,  // type B double first kind
    Thm31Special,  // second-kind double at Y = X, n^2 factors
    Lemma32A,      // type A double, product of h_{i+j-1}(x_i + y_j)
    ThirdKindC     // c(X_n) as a product of partial averaged elements
};
struct Factored {
    AlgebraElement element;
    size_t factor_count;
};
Factored factorized(FactorForm form, int n);

}  // namespace schub
