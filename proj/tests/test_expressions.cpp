#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/multiprecision/cpp_int.hpp>

#include "schub/expressions.hpp"

using namespace schub;

static Polynomial P(const std::string& s) { return Polynomial::parse(s); }
static Fraction Fx(int i) { return Fraction(Polynomial::x(uint32_t(i))); }
static Fraction Fy(int i) { return Fraction(Polynomial::y(uint32_t(i))); }
static Fraction Fz(int i) { return Fraction(Polynomial::z(uint32_t(i))); }

static AlgebraElement prod(const Group& g, Mode m,
                           const std::vector<HFactor>& f) {
    return product_of_factors(f, g, m);
}

TEST_CASE("spec validation") {
    ExpressionSpec ok{WTag::B, 2, Flavor::Schubert, Kind::First, Arity::Single};
    ok.validate();
    CHECK(ok.str() == "B2-schubert-first-single");
    ExpressionSpec bad = ok;
    bad.type = WTag::A;
    bad.kind = Kind::Second;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    ExpressionSpec third{WTag::C, 2, Flavor::Schubert, Kind::Third,
                         Arity::Single};
    third.validate();
    ExpressionSpec badthird = third;
    badthird.flavor = Flavor::Grothendieck;
    CHECK_THROWS_AS(badthird.validate(), std::invalid_argument);
    ExpressionSpec badtriple{WTag::B, 2, Flavor::Schubert, Kind::Second,
                             Arity::Triple};
    CHECK_THROWS_AS(badtriple.validate(), std::invalid_argument);
}

TEST_CASE("transfer elements commute and invert") {
    // products are folded factor lists (linear in |W|), not generic algebra
    // multiplication
    Fraction x = Fx(1), y = Fx(2);
    auto cat = [](std::vector<HFactor> a, const std::vector<HFactor>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    for (WTag t : {WTag::B, WTag::C, WTag::D}) {
        for (int n = (t == WTag::D ? 3 : 2); n <= (t == WTag::D ? 4 : 3);
             ++n) {
            const Group& g = Group::get(t, n);
            // plain-argument commutation holds in both algebras; the
            // deformed-argument version follows by substituting phi(x) and
            // is checked symbolically at rank 2 and at rational arguments
            // above that (two symbolic phi-arguments make the fraction
            // gcds blow up from rank 3 on)
            for (Mode m : {Mode::Nil, Mode::Id}) {
                auto F = [&](const Fraction& a) {
                    return transfer_factors(t, n, a, false);
                };
                CHECK(prod(g, m, cat(F(x), F(y))) ==
                      prod(g, m, cat(F(y), F(x))));
            }
            auto Fd = [&](const Fraction& a) {
                return transfer_factors(t, n, a, true);
            };
            if (n == 2) {
                CHECK(prod(g, Mode::Id, cat(Fd(x), Fd(y))) ==
                      prod(g, Mode::Id, cat(Fd(y), Fd(x))));
            } else {
                Fraction a(Rat(1, 3)), b(Rat(1, 5));
                CHECK(prod(g, Mode::Id, cat(Fd(a), Fd(b))) ==
                      prod(g, Mode::Id, cat(Fd(b), Fd(a))));
            }
            // inversion: plain arguments in Nil, deformed arguments in Id
            CHECK(prod(g, Mode::Nil,
                       cat(transfer_factors(t, n, x, false),
                           transfer_factors(t, n, -x, false))) ==
                  AlgebraElement::one(g, Mode::Nil));
            CHECK(prod(g, Mode::Id, cat(Fd(x), Fd(-x))) ==
                  AlgebraElement::one(g, Mode::Id));
        }
    }
}

TEST_CASE("tilde elements") {
    const Group& g = Group::get(WTag::C, 2);
    Fraction x = Fx(1), y = Fx(2);
    for (TransferSymbol s :
         {TransferSymbol::TildeB, TransferSymbol::TildeC,
          TransferSymbol::TildeD}) {
        if (s == TransferSymbol::TildeD) continue;  // needs a D group
        AlgebraElement a = transfer(s, x, g), b = transfer(s, y, g);
        CHECK(a * b == b * a);
    }
    const Group& d = Group::get(WTag::D, 3);
    AlgebraElement a = transfer(TransferSymbol::TildeD, x, d);
    AlgebraElement b = transfer(TransferSymbol::TildeD, y, d);
    CHECK(a * b == b * a);
    // (1 + C(0))/2 = 1
    CHECK(transfer(TransferSymbol::TildeC, Fraction(0), g) ==
          AlgebraElement::one(g, Mode::Nil));
}

TEST_CASE("A-chain recursion") {
    const Group& g = Group::get(WTag::B, 3);
    Fraction x = Fx(1), y = Fx(2);
    for (int i = 1; i <= 2; ++i) {
        AlgebraElement lhs = transfer(TransferSymbol::A, x, g, i);
        AlgebraElement rhs = i + 1 <= 2
                                 ? transfer(TransferSymbol::A, x, g, i + 1)
                                       .h_mul({i, x})
                                 : AlgebraElement::one(g, Mode::Nil)
                                       .h_mul({i, x});
        CHECK(lhs == rhs);
        AlgebraElement ax = transfer(TransferSymbol::A, x, g, i);
        AlgebraElement ay = transfer(TransferSymbol::A, y, g, i);
        CHECK(ax * ay == ay * ax);
    }
}

TEST_CASE("type A single table") {
    PolynomialFamily f =
        family({WTag::A, 3, Flavor::Schubert, Kind::First, Arity::Single});
    const Group& g = Group::get(WTag::A, 3);
    CHECK(f.table.at(g.identity()) == P("1"));
    int w0 = g.element({3, 2, 1});
    CHECK(f.table.at(w0) == P("x1^2*x2"));
    // each entry homogeneous of degree l(w)
    for (auto& [w, p] : f.table)
        if (!p.is_zero()) CHECK(p.degree() == g.length(w));
}

TEST_CASE("symmetric family golden values, rank 2, four variables") {
    PolynomialFamily f = stanley(WTag::B, 2, Mode::Nil, 4);
    const Group& g = Group::get(WTag::B, 2);
    auto at = [&](const std::string& word) {
        return f.table.at(g.from_word(g.parse_word(word)));
    };
    Polynomial e1 = P("z1+z2+z3+z4");
    CHECK(f.table.at(g.identity()) == P("1"));
    CHECK(at("0") == e1);
    CHECK(at("1") == P("2") * e1);
    CHECK(at("0,1") == e1 * e1);
    CHECK(at("1,0") == e1 * e1);
    Polynomial f010 = P("z1*z2*(z1+z2) + (z1+z2)*(z3+z4)*(z1+z2+z3+z4) + "
                        "z3*z4*(z3+z4)");
    CHECK(at("0,1,0") == f010);
    // second summand symmetrized in {z3,z4} (the display drops the + sign)
    CHECK(at("1,0,1") ==
          P("(z1+z2)*(z1^2+z1*z2+z2^2) + (z3+z4)*(z3^2+z3*z4+z4^2) + "
            "2*(z1+z2)*(z3+z4)*(z1+z2+z3+z4)"));
    CHECK(at("0,1,0,1") == e1 * f010);
}

TEST_CASE("first-kind double table golden values, rank 2") {
    PolynomialFamily f =
        family({WTag::B, 2, Flavor::Schubert, Kind::First, Arity::Double});
    const Group& g = Group::get(WTag::B, 2);
    auto at = [&](const std::string& word) {
        return f.table.at(g.from_word(g.parse_word(word)));
    };
    CHECK(f.table.at(g.identity()) == P("1"));
    CHECK(at("0") == P("x1+x2+y1+y2"));
    CHECK(at("1") == P("x1+2*x2+y1+2*y2"));
    CHECK(at("0,1") == P("x1*x2+x2^2+(y1+y2)*(x1+2*x2+y1+y2)"));
    CHECK(at("1,0") == P("(x1+x2)*(x1+x2+y1+2*y2)+y1*y2+y2^2"));
    Polynomial s010 = P("x1*x2*(x1+x2)+(x1+x2)*(y1+y2)*(x1+x2+y1+y2)+"
                        "y1*y2*(y1+y2)");
    CHECK(at("0,1,0") == s010);
    CHECK(at("1,0,1") ==
          P("(x1+x2)*x2^2+x2*(x1+x2)*(y1+2*y2)+"
            "(x1+2*x2)*y2*(y1+y2)+(y1+y2)*y2^2"));
    CHECK(at("0,1,0,1") == P("x2+y2") * s010);
}

TEST_CASE("factored forms match built expressions") {
    // type B single, ranks 2 and 3; n^2 factors
    for (int n : {2, 3}) {
        Factored f = factorized(FactorForm::Lemma31B, n);
        CHECK(f.factor_count == size_t(n * n));
        CHECK(f.element ==
              build({WTag::B, n, Flavor::Schubert, Kind::First,
                     Arity::Single}));
    }
    // type D single, odd and even rank; n(n-1) factors
    {
        Factored f = factorized(FactorForm::Prop31DOdd, 3);
        CHECK(f.factor_count == size_t(3 * 2));
        CHECK(f.element ==
              build({WTag::D, 3, Flavor::Schubert, Kind::First,
                     Arity::Single}));
        Factored f4 = factorized(FactorForm::Prop31DEven, 4);
        CHECK(f4.factor_count == size_t(4 * 3));
        CHECK(f4.element ==
              build({WTag::D, 4, Flavor::Schubert, Kind::First,
                     Arity::Single}));
        CHECK_THROWS_AS(factorized(FactorForm::Prop31DOdd, 4),
                        std::invalid_argument);
    }
    // type B double
    {
        Factored f = factorized(FactorForm::Thm31DoubleB, 2);
        CHECK(f.element ==
              build({WTag::B, 2, Flavor::Schubert, Kind::First,
                     Arity::Double}));
    }
    // type A double, product of h_{i+j-1}(x_i + y_j)
    for (int n : {2, 3}) {
        Factored f = factorized(FactorForm::Lemma32A, n);
        CHECK(f.factor_count == size_t(n * (n - 1) / 2));
        CHECK(f.element ==
              build({WTag::A, n, Flavor::Schubert, Kind::First,
                     Arity::Double}));
    }
}

TEST_CASE("second-kind double specializes to the n^2-factor product") {
    AlgebraElement e =
        build({WTag::B, 2, Flavor::Schubert, Kind::Second, Arity::Double});
    std::map<Var, Fraction> yx{{Var::y(1), Fx(1)}, {Var::y(2), Fx(2)}};
    Factored f = factorized(FactorForm::Thm31Special, 2);
    CHECK(f.factor_count == 4);
    CHECK(e.substitute(yx) == f.element);
}

TEST_CASE("vanishing product equals direct specialization") {
    const Group& g = Group::get(WTag::B, 2);
    AlgebraElement e =
        build({WTag::B, 2, Flavor::Schubert, Kind::Second, Arity::Double});
    for (int w = 0; w < int(g.size()); ++w) {
        const Word& word = g.reduced_word(w);
        std::map<Var, Fraction> bind;
        // Y = -w(X): y_i = -x_{w(i)} with signed windows
        for (int i = 1; i <= 2; ++i) {
            int v = g.window(w)[size_t(i - 1)];
            bind[Var::y(uint32_t(i))] =
                v > 0 ? -Fx(v) : Fx(-v);
        }
        AlgebraElement spec = e.substitute(bind);
        CHECK(spec == vanishing_product(WTag::B, 2, word, false));
        // support is the Bruhat interval below w^{-1}
        int wi = g.inverse(w);
        for (int v = 0; v < int(g.size()); ++v)
            CHECK(!spec.coefficient(v).is_zero() == g.bruhat_leq(v, wi));
    }
    CHECK_THROWS_AS(vanishing_product(WTag::B, 2, {0, 0}, false),
                    std::invalid_argument);
}

TEST_CASE("deformed vanishing product, type B") {
    const Group& g = Group::get(WTag::B, 2);
    AlgebraElement e = build(
        {WTag::B, 2, Flavor::Grothendieck, Kind::Second, Arity::Double, 0, 4});
    for (int w = 0; w < int(g.size()); ++w) {
        std::map<Var, Fraction> bind;
        for (int i = 1; i <= 2; ++i) {
            int v = g.window(w)[size_t(i - 1)];
            bind[Var::y(uint32_t(i))] = v > 0 ? -Fx(v) : Fx(-v);
        }
        AlgebraElement spec = e.substitute(bind).beta_truncate(4);
        AlgebraElement vp =
            vanishing_product(WTag::B, 2, g.reduced_word(w), true)
                .beta_truncate(4);
        CHECK(spec == vp);
    }
}

TEST_CASE("deformed families degenerate at beta = 0") {
    for (WTag t : {WTag::A, WTag::B, WTag::C, WTag::D}) {
        int n = t == WTag::D ? 3 : 2;
        ExpressionSpec s{t, n, Flavor::Grothendieck, Kind::First,
                         Arity::Single, 0, 4};
        ExpressionSpec s0 = s;
        s0.flavor = Flavor::Schubert;
        AlgebraElement e = build(s), e0 = build(s0);
        CHECK(e.at_beta_zero().coeffs() == e0.coeffs());
    }
    // second kind (truncation is exact at beta = 0)
    ExpressionSpec s{WTag::B, 2, Flavor::Grothendieck, Kind::Second,
                     Arity::Single, 0, 3};
    ExpressionSpec s0 = s;
    s0.flavor = Flavor::Schubert;
    CHECK(build(s).at_beta_zero().coeffs() == build(s0).coeffs());
}

TEST_CASE("third-kind family has nonnegative integer coefficients") {
    PolynomialFamily f =
        family({WTag::C, 2, Flavor::Schubert, Kind::Third, Arity::Single});
    const Group& g = Group::get(WTag::C, 2);
    CHECK(f.table.at(g.identity()) == P("1"));
    for (auto& [w, p] : f.table)
        for (auto& [m, c] : p.terms()) {
            CHECK(c >= 0);
            CHECK(boost::multiprecision::denominator(c) == 1);
        }
}

TEST_CASE("triple with X = Y = 0 is the symmetric-family element") {
    AlgebraElement t = build({WTag::B, 2, Flavor::Schubert, Kind::First,
                              Arity::Triple, 2});
    std::map<Var, Fraction> zero;
    for (int i = 1; i <= 2; ++i) {
        zero[Var::x(uint32_t(i))] = Fraction(0);
        zero[Var::y(uint32_t(i))] = Fraction(0);
    }
    CHECK(t.substitute(zero) == stanley_element(WTag::B, 2, Mode::Nil, 2));
    // deformed analog
    AlgebraElement td = build({WTag::B, 2, Flavor::Grothendieck, Kind::First,
                               Arity::Triple, 2, 3});
    CHECK(td.substitute(zero) ==
          stanley_element(WTag::B, 2, Mode::Id, 2, 3).beta_truncate(3));
}

TEST_CASE("first- and second-kind singles are consistent") {
    // first kind = (transfer product) * SA(-X); second kind = sqrt * SA(-X).
    // Hence second * inverse-tail squared * second = first * ... check the
    // equivalent identity sqrt^2 = transfer product directly.
    const Group& g = Group::get(WTag::B, 2);
    std::vector<HFactor> tail, rad;
    for (int i = 1; i <= 2; ++i)
        for (auto& f : transfer_factors(WTag::B, 2, Fx(i), false))
            rad.push_back(f);
    AlgebraElement first =
        build({WTag::B, 2, Flavor::Schubert, Kind::First, Arity::Single});
    AlgebraElement second =
        build({WTag::B, 2, Flavor::Schubert, Kind::Second, Arity::Single});
    std::vector<Fraction> mx{-Fx(1)};
    AlgebraElement sa = prod(g, Mode::Nil, sa_factors(2, mx));
    AlgebraElement sa_inv =
        prod(g, Mode::Nil, inverted_factors(sa_factors(2, mx), Mode::Nil));
    CHECK((second * sa_inv) * (second * sa_inv) * sa == first);
}

TEST_CASE("stanley z-argument count and y-free doubles") {
    PolynomialFamily f = stanley(WTag::D, 3, Mode::Nil, 2);
    const Group& g = Group::get(WTag::D, 3);
    CHECK(f.table.at(g.identity()) == P("1"));
    for (auto& [w, p] : f.table) {
        (void)w;
        for (auto& [m, c] : p.terms()) {
            (void)c;
            for (auto& [v, e] : m.entries()) {
                (void)e;
                CHECK(v.family() == Family::Z);
            }
        }
    }
}
