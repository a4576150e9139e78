#include "schub/expressions.hpp"

#include <stdexcept>

namespace schub {

namespace {

Fraction xv(int i) { return Fraction(Polynomial::x(uint32_t(i))); }
Fraction yv(int i) { return Fraction(Polynomial::y(uint32_t(i))); }
Fraction zv(int i) { return Fraction(Polynomial::z(uint32_t(i))); }

void append(std::vector<HFactor>& out, const std::vector<HFactor>& more) {
    out.insert(out.end(), more.begin(), more.end());
}

}  // namespace

void ExpressionSpec::validate() const {
    group();  // rank checks
    if (type == WTag::A && kind != Kind::First)
        throw std::invalid_argument(
            "type A has only first-kind expressions");
    if (kind == Kind::Third) {
        if (flavor != Flavor::Schubert || type != WTag::C ||
            arity != Arity::Single)
            throw std::invalid_argument(
                "third-kind families exist only as single type C Schubert");
    }
    if (arity == Arity::Triple && kind != Kind::First)
        throw std::invalid_argument("triple expressions use the first kind");
    if (flavor == Flavor::Grothendieck && beta_order <= 0)
        throw std::invalid_argument("deformed families need beta_order > 0");
}

const Group& ExpressionSpec::group() const { return Group::get(type, rank); }

std::string ExpressionSpec::str() const {
    std::string s = tag_str(type) + std::to_string(rank);
    s += flavor == Flavor::Schubert ? "-schubert" : "-grothendieck";
    s += kind == Kind::First ? "-first" : kind == Kind::Second ? "-second"
                                                               : "-third";
    s += arity == Arity::Single ? "-single"
         : arity == Arity::Double ? "-double"
                                  : "-triple-m" + std::to_string(zcount());
    if (flavor == Flavor::Grothendieck)
        s += "-K" + std::to_string(beta_order);
    return s;
}

std::vector<HFactor> a_factors(int i, int n, const Fraction& x) {
    std::vector<HFactor> f;
    for (int a = n - 1; a >= i; --a) f.push_back({a, x});
    return f;
}

std::vector<HFactor> transfer_factors(WTag t, int n, const Fraction& x,
                                      bool deformed) {
    if (t == WTag::A)
        throw std::invalid_argument("type A has no full transfer element");
    // Deformed arguments are phi_beta(x) for every type.  The deformed
    // type-C middle doubles inside the beta-deformation,
    // h_0(phi(x) +_beta phi(x)): the printed phi_{2beta} variant fails both
    // commutativity and inversion in Id mode, this one satisfies them
    // symbolically.
    Fraction arg = deformed ? phi(x) : x;
    std::vector<HFactor> f;
    for (int a = n - 1; a >= 1; --a) f.push_back({a, arg});
    if (t == WTag::C)
        f.push_back(deformed ? HFactor{0, beta_add(arg, arg), 1}
                             : HFactor{0, x, 2});
    else
        f.push_back({0, arg});  // h_0 resp. h_{1hat}
    for (int a = t == WTag::D ? 2 : 1; a <= n - 1; ++a) f.push_back({a, arg});
    return f;
}

std::vector<HFactor> sa_factors(int n, const std::vector<Fraction>& args) {
    if (int(args.size()) < n - 1)
        throw std::invalid_argument("need n-1 arguments");
    std::vector<HFactor> f;
    for (int i = 1; i <= n - 1; ++i) append(f, a_factors(i, n, args[size_t(i - 1)]));
    return f;
}

AlgebraElement transfer(TransferSymbol s, const Fraction& x, const Group& g,
                        int i) {
    int n = g.rank();
    switch (s) {
        case TransferSymbol::A:
            return product_of_factors(a_factors(i, n, x), g, Mode::Nil);
        case TransferSymbol::B:
            return product_of_factors(transfer_factors(WTag::B, n, x, false),
                                      g, Mode::Nil);
        case TransferSymbol::C:
            return product_of_factors(transfer_factors(WTag::C, n, x, false),
                                      g, Mode::Nil);
        case TransferSymbol::D:
            return product_of_factors(transfer_factors(WTag::D, n, x, false),
                                      g, Mode::Nil);
        case TransferSymbol::CalB:
            return product_of_factors(transfer_factors(WTag::B, n, x, true),
                                      g, Mode::Id);
        case TransferSymbol::CalC:
            return product_of_factors(transfer_factors(WTag::C, n, x, true),
                                      g, Mode::Id);
        case TransferSymbol::CalD:
            return product_of_factors(transfer_factors(WTag::D, n, x, true),
                                      g, Mode::Id);
        case TransferSymbol::TildeB:
            return AlgebraElement::one(g, Mode::Nil) +
                   transfer(TransferSymbol::B, x, g);
        case TransferSymbol::TildeC:
            return (AlgebraElement::one(g, Mode::Nil) +
                    transfer(TransferSymbol::C, x, g)) *
                   Fraction(Rat(1, 2));
        case TransferSymbol::TildeD:
            return AlgebraElement::one(g, Mode::Nil) +
                   transfer(TransferSymbol::D, x, g);
    }
    throw std::logic_error("unreachable");
}

namespace {

// Argument lift used by the deformed expressions' type-A parts: phi_beta
// for B/C/D, plain otherwise (matching the uniform phi_beta transfer
// arguments).
Fraction lift(const ExpressionSpec& s, const Fraction& x) {
    if (s.flavor == Flavor::Schubert || s.type == WTag::A) return x;
    return phi(x);
}

// Factor list of the fully factored single first-kind expression with
// x-arguments vars[0..n-1].
std::vector<HFactor> single_first_factors(const ExpressionSpec& s,
                                          const std::vector<Fraction>& vars) {
    int n = s.rank;
    bool def = s.flavor == Flavor::Grothendieck;
    std::vector<HFactor> f;
    if (s.type == WTag::A) {
        // S^A(X) = A_1(x_1) ... A_{n-1}(x_{n-1}); plain arguments in both
        // modes
        return sa_factors(n, vars);
    }
    if (s.type == WTag::D) {
        for (int i = 1; i <= n - 1; ++i)
            append(f, transfer_factors(WTag::D, n, vars[size_t(i - 1)], def));
        for (int i = 2; i <= n - 1; ++i)
            append(f, a_factors(i, n, lift(s, -vars[size_t(i - 2)])));
        return f;
    }
    for (int i = 1; i <= n; ++i)
        append(f, transfer_factors(s.type, n, vars[size_t(i - 1)], def));
    std::vector<Fraction> mx;
    for (int i = 1; i <= n - 1; ++i) mx.push_back(lift(s, -vars[size_t(i - 1)]));
    append(f, sa_factors(n, mx));
    return f;
}

// Factor list of T(-y)^{-1} for the second-kind prefix radicand: the
// inversion identity T(-y)T(y) = 1 makes it the transfer at +y in the same
// (plain or deformed) variant.
std::vector<HFactor> transfer_inverse_at_minus(const ExpressionSpec& s,
                                               const Fraction& y) {
    bool def = s.flavor == Flavor::Grothendieck;
    return transfer_factors(s.type, s.rank, y, def);
}

// Reduce factor arguments modulo beta^K.  In Id mode every build is a
// beta-series truncated at the spec's order anyway, and polynomial
// arguments keep all coefficients polynomial during the folds, which
// avoids the multivariate gcds of exact rational-function arithmetic.
std::vector<HFactor> trunc_args(std::vector<HFactor> f, const ExpressionSpec& s) {
    if (s.mode() == Mode::Id)
        for (auto& x : f) x.argument = x.argument.beta_truncate(s.beta_order);
    return f;
}

AlgebraElement sqrt_of_transfers(
    const ExpressionSpec& s, const Group& g, Mode m,
    const std::vector<std::vector<HFactor>>& factor_lists) {
    AlgebraElement rad = AlgebraElement::one(g, m);
    for (auto& fl : factor_lists)
        for (auto& f : fl) rad = rad.h_mul(f);
    if (m == Mode::Id) rad = rad.beta_truncate(s.beta_order);
    return sqrt(rad, m == Mode::Id ? s.beta_order : 0);
}

AlgebraElement build_single(const ExpressionSpec& s) {
    const Group& g = s.group();
    Mode m = s.mode();
    int n = s.rank;
    std::vector<Fraction> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(xv(i));
    std::vector<Fraction> mx;
    for (int i = 1; i <= n - 1; ++i) mx.push_back(lift(s, -xs[size_t(i - 1)]));

    if (s.kind == Kind::First)
        return product_of_factors(trunc_args(single_first_factors(s, xs), s),
                                  g, m);

    if (s.kind == Kind::Third) {
        AlgebraElement e = AlgebraElement::one(g, Mode::Nil);
        for (int i = 1; i <= n; ++i)
            e = e * transfer(TransferSymbol::TildeC, xs[size_t(i - 1)], g);
        return e * product_of_factors(sa_factors(n, mx), g, Mode::Nil);
    }

    // second kind: sqrt of the product of all n transfers, then the type-A
    // tail at (lifted) -X
    std::vector<std::vector<HFactor>> lists;
    bool def = s.flavor == Flavor::Grothendieck;
    for (int i = 1; i <= n; ++i)
        lists.push_back(
            trunc_args(transfer_factors(s.type, n, xs[size_t(i - 1)], def), s));
    AlgebraElement e = sqrt_of_transfers(s, g, m, lists);
    for (auto& f : trunc_args(sa_factors(n, mx), s)) e = e.h_mul(f);
    return e;
}

AlgebraElement build_double(const ExpressionSpec& s) {
    const Group& g = s.group();
    Mode m = s.mode();
    int n = s.rank;
    std::vector<Fraction> xs, ys;
    for (int i = 1; i <= n; ++i) {
        xs.push_back(xv(i));
        ys.push_back(yv(i));
    }

    if (s.kind == Kind::First) {
        // (X(-Y))^{-1} X(X) with both sides fully factored
        std::vector<Fraction> my;
        for (auto& y : ys) my.push_back(-y);
        AlgebraElement e = product_of_factors(
            trunc_args(inverted_factors(single_first_factors(s, my), m), s), g,
            m);
        for (auto& f : trunc_args(single_first_factors(s, xs), s))
            e = e.h_mul(f);
        return e;
    }

    // second kind: (X(-Y))^{-1} = (S^A tail of X(-Y))^{-1} * sqrt(prod
    // T(-y_i))^{-1}; the inverted radicand factors come from
    // transfer_inverse_at_minus.
    std::vector<Fraction> ly;
    for (int i = 1; i <= n - 1; ++i) ly.push_back(lift(s, ys[size_t(i - 1)]));
    AlgebraElement e = product_of_factors(
        trunc_args(inverted_factors(sa_factors(n, ly), m), s), g, m);
    std::vector<std::vector<HFactor>> listsY, listsX;
    bool def = s.flavor == Flavor::Grothendieck;
    for (int i = 1; i <= n; ++i) {
        listsY.push_back(trunc_args(transfer_inverse_at_minus(s, ys[size_t(i - 1)]), s));
        listsX.push_back(
            trunc_args(transfer_factors(s.type, n, xs[size_t(i - 1)], def), s));
    }
    e = e * sqrt_of_transfers(s, g, m, listsY);
    e = e * sqrt_of_transfers(s, g, m, listsX);
    std::vector<Fraction> mx;
    for (int i = 1; i <= n - 1; ++i) mx.push_back(lift(s, -xs[size_t(i - 1)]));
    for (auto& f : trunc_args(sa_factors(n, mx), s)) e = e.h_mul(f);
    return e;
}

AlgebraElement build_triple(const ExpressionSpec& s) {
    const Group& g = s.group();
    Mode m = s.mode();
    int n = s.rank;
    bool def = s.flavor == Flavor::Grothendieck;
    std::vector<Fraction> my, mx;
    for (int i = 1; i <= n - 1; ++i) {
        my.push_back(lift(s, -yv(i)));
        mx.push_back(lift(s, -xv(i)));
    }
    AlgebraElement e = product_of_factors(
        trunc_args(inverted_factors(sa_factors(n, my), m), s), g, m);
    for (int i = 1; i <= s.zcount(); ++i) {
        std::vector<HFactor> mid =
            s.type == WTag::A
                ? a_factors(1, n, def ? phi(zv(i)) : zv(i))
                : transfer_factors(s.type, n, zv(i), def);
        for (auto& f : trunc_args(mid, s)) e = e.h_mul(f);
    }
    for (auto& f : trunc_args(sa_factors(n, mx), s)) e = e.h_mul(f);
    return e;
}

}  // namespace

AlgebraElement build(const ExpressionSpec& spec) {
    spec.validate();
    AlgebraElement e = spec.arity == Arity::Single ? build_single(spec)
                       : spec.arity == Arity::Double ? build_double(spec)
                                                     : build_triple(spec);
    if (spec.mode() == Mode::Id) e = e.beta_truncate(spec.beta_order);
    return e;
}

PolynomialFamily decompose(const AlgebraElement& e,
                           const ExpressionSpec& spec) {
    const Group& g = e.group();
    if (!(e.coefficient(g.identity()) == Fraction(1)))
        throw std::logic_error("identity coefficient of " + spec.str() +
                               " is not 1");
    PolynomialFamily fam{spec, {}};
    for (int w = 0; w < int(g.size()); ++w)
        fam.table[w] = e.coefficient(w).is_zero()
                           ? Polynomial()
                           : e.polynomial_coefficient(w);
    return fam;
}

PolynomialFamily family(const ExpressionSpec& spec) {
    return decompose(build(spec), spec);
}

AlgebraElement stanley_element(WTag t, int rank, Mode mode, int m,
                               int beta_order) {
    const Group& g = Group::get(t, rank);
    AlgebraElement e = AlgebraElement::one(g, mode);
    for (int i = 1; i <= m; ++i)
        for (auto& f : transfer_factors(t, rank, zv(i), mode == Mode::Id))
            e = e.h_mul(f);
    if (mode == Mode::Id) e = e.beta_truncate(beta_order);
    return e;
}

PolynomialFamily stanley(WTag t, int rank, Mode mode, int m, int beta_order) {
    ExpressionSpec spec{t, rank,
                        mode == Mode::Nil ? Flavor::Schubert
                                          : Flavor::Grothendieck,
                        Kind::First, Arity::Triple, m, beta_order};
    return decompose(stanley_element(t, rank, mode, m, beta_order), spec);
}

AlgebraElement vanishing_product(WTag t, int rank, const Word& word,
                                 bool deformed, int beta_order) {
    const Group& g = Group::get(t, rank);
    int w = g.from_word(word);
    if (int(word.size()) != g.length(w))
        throw std::invalid_argument("word is not reduced");
    Mode m = deformed ? Mode::Id : Mode::Nil;
    std::vector<int> sig{g.identity()};
    for (int a : word) sig.push_back(g.apply_generator(sig.back(), a, true));
    auto val = [&](int elem, int pos) {
        int v = g.window(elem)[size_t(pos - 1)];
        Fraction x = xv(std::abs(v));
        return v < 0 ? -x : x;
    };
    AlgebraElement e = AlgebraElement::one(g, m);
    for (int r = int(word.size()); r >= 1; --r) {
        int a = word[size_t(r - 1)];
        Fraction arg;
        if (a >= 1) {
            Fraction cur = val(sig[size_t(r)], a);
            Fraction prev = val(sig[size_t(r - 1)], a);
            arg = deformed ? beta_sub(phi(cur), phi(prev)) : cur - prev;
        } else if (t != WTag::D) {
            Fraction p = val(sig[size_t(r - 1)], 1);
            if (t == WTag::C)
                arg = deformed ? beta_add(phi(p), phi(p)) : p * Fraction(2);
            else
                arg = deformed ? phi(p) : p;
        } else {
            Fraction p1 = val(sig[size_t(r - 1)], 1);
            Fraction p2 = val(sig[size_t(r - 1)], 2);
            arg = deformed ? beta_add(phi(p1), phi(p2)) : p1 + p2;
        }
        if (deformed && beta_order > 0) arg = arg.beta_truncate(beta_order);
        e = e.h_mul({a, arg});
    }
    return e;
}

namespace {

Fraction x_or_zero(int i) { return i >= 1 ? xv(i) : Fraction(0); }

Factored factored_product(const Group& g, const std::vector<HFactor>& f) {
    return {product_of_factors(f, g, Mode::Nil), f.size()};
}

}  // namespace

Factored factorized(FactorForm form, int n) {
    switch (form) {
        case FactorForm::Lemma31B: {
            const Group& g = Group::get(WTag::B, n);
            std::vector<Fraction> rev;
            for (int i = n; i >= 2; --i) rev.push_back(xv(i));
            std::vector<HFactor> f = sa_factors(n, rev);
            for (int i = 0; i <= n - 1; ++i) {
                f.push_back({0, xv(n - i)});
                for (int j = 1; j <= n - i - 1; ++j)
                    f.push_back({j, xv(n - i - j) + xv(n - i)});
            }
            return factored_product(g, f);
        }
        case FactorForm::Prop31DOdd: {
            if (n < 3 || n % 2 == 0)
                throw std::invalid_argument("odd rank >= 3 required");
            const Group& g = Group::get(WTag::D, n);
            std::vector<Fraction> pre;
            for (int i = n - 1; i >= 1; --i) pre.push_back(xv(i));
            std::vector<HFactor> f = sa_factors(n, pre);
            for (int r = (n - 1) / 2; r >= 1; --r) {
                f.push_back({0, xv(2 * r - 1) + xv(2 * r)});
                for (int a = 2; a <= 2 * r; ++a)
                    f.push_back({a, x_or_zero(2 * r - a) + xv(2 * r)});
                for (int a = 1; a <= 2 * r - 1; ++a)
                    f.push_back({a, x_or_zero(2 * r - 1 - a) + xv(2 * r - 1)});
            }
            return factored_product(g, f);
        }
        case FactorForm::Prop31DEven: {
            if (n < 4 || n % 2 == 1)
                throw std::invalid_argument("even rank >= 4 required");
            const Group& g = Group::get(WTag::D, n);
            std::vector<Fraction> pre;
            for (int i = n - 1; i >= 1; --i) pre.push_back(xv(i));
            std::vector<HFactor> f = sa_factors(n, pre);
            for (int r = n / 2 - 1; r >= 1; --r) {
                f.push_back({0, xv(2 * r) + xv(2 * r + 1)});
                // the printed first inner block pairs with x_{2r}; the
                // identity holds with x_{2r+1}
                for (int a = 2; a <= 2 * r + 1; ++a)
                    f.push_back({a, x_or_zero(2 * r + 1 - a) + xv(2 * r + 1)});
                for (int a = 1; a <= 2 * r; ++a)
                    f.push_back({a, x_or_zero(2 * r - a) + xv(2 * r)});
            }
            f.push_back({0, xv(1)});
            return factored_product(g, f);
        }
        case FactorForm::Thm31DoubleB: {
            const Group& g = Group::get(WTag::B, n);
            std::vector<HFactor> f;
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= i - 1; ++j)
                    f.push_back({j, yv(i - j) + yv(i)});
                f.push_back({0, yv(i)});
            }
            size_t count = f.size();
            AlgebraElement e = product_of_factors(f, g, Mode::Nil);
            // S^A(X^op, Y^op) = (S^A(-Y^op))^{-1} S^A(X^op)
            std::vector<Fraction> myop, xop;
            for (int i = n; i >= 2; --i) {
                myop.push_back(-yv(i));
                xop.push_back(xv(i));
            }
            std::vector<HFactor> mid =
                inverted_factors(sa_factors(n, myop), Mode::Nil);
            append(mid, sa_factors(n, xop));
            for (auto& h : mid) e = e.h_mul(h);
            count += mid.size();
            std::vector<HFactor> post;
            for (int i = n; i >= 1; --i) {
                post.push_back({0, xv(i)});
                for (int j = 1; j <= i - 1; ++j)
                    post.push_back({j, xv(i - j) + xv(i)});
            }
            for (auto& h : post) e = e.h_mul(h);
            return {e, count + post.size()};
        }
        case FactorForm::Thm31Special: {
            const Group& g = Group::get(WTag::B, n);
            std::vector<HFactor> f;
            for (int j = 1; j <= n; ++j) {
                for (int a = j - 1; a >= 1; --a)
                    f.push_back({a, xv(a) + xv(j)});
                f.push_back({0, xv(j)});
                for (int a = 1; a <= j - 1; ++a)
                    f.push_back({a, xv(j) - xv(a)});
            }
            return factored_product(g, f);
        }
        case FactorForm::Lemma32A: {
            const Group& g = Group::get(WTag::A, n);
            std::vector<HFactor> f;
            for (int i = 1; i <= n - 1; ++i)
                for (int j = n - i; j >= 1; --j)
                    f.push_back({i + j - 1, xv(i) + yv(j)});
            return factored_product(g, f);
        }
        case FactorForm::ThirdKindC: {
            // averaged-element product from the positivity proof; the
            // display is compared as printed and the outcome reported
            const Group& g = Group::get(WTag::B, n);
            auto BB = [&](const std::vector<Fraction>& vs) {
                int k = int(vs.size());
                AlgebraElement P = AlgebraElement::one(g, Mode::Nil);
                for (int a = k; a >= 2; --a)
                    for (int b = 1; b <= k - 1; ++b)
                        P = P.h_mul({b, vs[size_t(a - 1)]});
                AlgebraElement A1p =
                    product_of_factors(a_factors(1, n, vs[0]), g, Mode::Nil);
                AlgebraElement A1m =
                    product_of_factors(a_factors(1, n, -vs[0]), g, Mode::Nil);
                return (A1p + A1m) * Fraction(Rat(1, 2)) * P +
                       ((A1p * vs[0]) * P).gen_mul(0, Fraction(1));
            };
            AlgebraElement e = AlgebraElement::one(g, Mode::Nil);
            size_t count = 0;
            for (int k = 2; k <= n; ++k) {
                AlgebraElement C = product_of_factors(
                    transfer_factors(WTag::B, n, xv(k), false), g, Mode::Nil);
                for (int a = 1; a <= k - 1; ++a) {
                    std::vector<Fraction> vs;
                    for (int i = 2; i <= a + 1; ++i) vs.push_back(xv(i));
                    C = C * BB(vs);
                }
                e = e * C;
                ++count;
            }
            return {e, count};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace schub
