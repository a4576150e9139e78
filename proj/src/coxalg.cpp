#include "schub/coxalg.hpp"

#include <stdexcept>

namespace schub {

AlgebraElement AlgebraElement::one(const Group& g, Mode m) {
    AlgebraElement e(g, m);
    e.c_.emplace(g.identity(), Fraction(1));
    return e;
}

Fraction AlgebraElement::coefficient(int w) const {
    auto it = c_.find(w);
    return it == c_.end() ? Fraction(Rat(0)) : it->second;
}

Polynomial AlgebraElement::polynomial_coefficient(int w) const {
    Fraction f = coefficient(w);
    if (!f.is_polynomial())
        throw std::logic_error("coefficient of window " + G_->window_str(w) +
                               " is not a polynomial: " + f.str());
    return f.num();
}

void AlgebraElement::set(int w, const Fraction& f) {
    if (f.is_zero())
        c_.erase(w);
    else
        c_[w] = f;
}

void AlgebraElement::add(int w, const Fraction& f) {
    if (f.is_zero()) return;
    auto it = c_.find(w);
    if (it == c_.end()) {
        c_.emplace(w, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) c_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r(*this);
    for (auto& [w, f] : o.c_) r.add(w, f);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r(*this);
    for (auto& [w, f] : o.c_) r.add(w, -f);
    return r;
}

AlgebraElement AlgebraElement::operator*(const Fraction& s) const {
    AlgebraElement r(*G_, mode_);
    if (s.is_zero()) return r;
    for (auto& [w, f] : c_) r.c_.emplace(w, f * s);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return G_ == o.G_ && mode_ == o.mode_ && c_ == o.c_;
}

namespace {

void check_kind(const AlgebraElement& a, const AlgebraElement& b) {
    if (&a.group() != &b.group() || a.mode() != b.mode())
        throw std::invalid_argument("algebra kind mismatch");
}

}  // namespace

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_kind(*this, o);
    AlgebraElement r(*G_, mode_);
    Fraction beta{Polynomial::beta()};
    for (auto& [v, fv] : c_) {
        for (auto& [w, fw] : o.c_) {
            int p = G_->demazure_product(v, w);
            int excess = G_->length(v) + G_->length(w) - G_->length(p);
            if (excess == 0) {
                r.add(p, fv * fw);
            } else if (mode_ == Mode::Id) {
                Fraction coef = fv * fw;
                for (int k = 0; k < excess; ++k) coef *= beta;
                r.add(p, coef);
            }
            // Nil mode with excess > 0: the product of basis vectors is 0
        }
    }
    return r;
}

AlgebraElement AlgebraElement::mul_fold(const AlgebraElement& o) const {
    check_kind(*this, o);
    AlgebraElement r(*G_, mode_);
    Fraction beta{Polynomial::beta()};
    for (auto& [w, fw] : o.c_) {
        // r += (this * u_w) * fw by folding w's canonical word
        AlgebraElement cur(*this);
        for (int g : G_->reduced_word(w)) {
            AlgebraElement next(*G_, mode_);
            for (auto& [v, fv] : cur.coeffs()) {
                int t = G_->apply_generator(v, g, true);
                if (G_->length(t) > G_->length(v))
                    next.add(t, fv);
                else if (mode_ == Mode::Id)
                    next.add(v, fv * beta);
            }
            cur = std::move(next);
        }
        for (auto& [v, fv] : cur.coeffs()) r.add(v, fv * fw);
    }
    return r;
}

AlgebraElement AlgebraElement::h_mul(const HFactor& f, bool right_side) const {
    Fraction c = f.argument;
    if (f.scale == 2) c *= Fraction(Rat(2));
    AlgebraElement r(*this);
    Fraction beta{Polynomial::beta()};
    for (auto& [w, fw] : c_) {
        int t = G_->apply_generator(w, f.generator, right_side);
        if (G_->length(t) > G_->length(w))
            r.add(t, fw * c);
        else if (mode_ == Mode::Id)
            r.add(w, fw * c * beta);
    }
    return r;
}

AlgebraElement AlgebraElement::gen_mul(int g, const Fraction& c,
                                       bool right_side) const {
    AlgebraElement r(*G_, mode_);
    Fraction beta{Polynomial::beta()};
    for (auto& [w, fw] : c_) {
        int t = G_->apply_generator(w, g, right_side);
        if (G_->length(t) > G_->length(w))
            r.add(t, fw * c);
        else if (mode_ == Mode::Id)
            r.add(w, fw * c * beta);
    }
    return r;
}

AlgebraElement AlgebraElement::substitute(
    const std::map<Var, Fraction>& bindings) const {
    AlgebraElement r(*G_, mode_);
    for (auto& [w, f] : c_) r.add(w, f.substitute(bindings));
    return r;
}

AlgebraElement AlgebraElement::at_beta_zero() const {
    AlgebraElement r(*G_, mode_);
    for (auto& [w, f] : c_) r.add(w, f.at_beta_zero());
    return r;
}

AlgebraElement AlgebraElement::beta_truncate(int K) const {
    AlgebraElement r(*G_, mode_);
    for (auto& [w, f] : c_) r.add(w, f.beta_truncate(K));
    return r;
}

AlgebraElement product_of_factors(const std::vector<HFactor>& factors,
                                  const Group& g, Mode m) {
    AlgebraElement r = AlgebraElement::one(g, m);
    for (auto& f : factors) r = r.h_mul(f);
    return r;
}

std::vector<HFactor> inverted_factors(const std::vector<HFactor>& factors,
                                      Mode m) {
    std::vector<HFactor> inv;
    inv.reserve(factors.size());
    Fraction beta{Polynomial::beta()};
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        Fraction c = it->argument;
        if (it->scale == 2) c *= Fraction(Rat(2));
        Fraction ci = m == Mode::Nil
                          ? -c
                          : -c * (Fraction(1) + beta * c).inverse();
        inv.push_back({it->generator, ci, 1});
    }
    return inv;
}

AlgebraElement invert_factored(const std::vector<HFactor>& factors,
                               const Group& g, Mode m) {
    AlgebraElement inv = product_of_factors(inverted_factors(factors, m), g, m);
    AlgebraElement prod = product_of_factors(factors, g, m);
    if (!(prod * inv == AlgebraElement::one(g, m)))
        throw std::logic_error("factored inverse failed the product check");
    return inv;
}

namespace {

AlgebraElement sqrt_nil(const AlgebraElement& h) {
    const Group& G = h.group();
    AlgebraElement N = h - AlgebraElement::one(G, Mode::Nil);
    AlgebraElement S = AlgebraElement::one(G, Mode::Nil);
    AlgebraElement term = AlgebraElement::one(G, Mode::Nil);
    // C(1/2, k) = C(1/2, k-1) * (1/2 - (k-1)) / k
    Rat binom(1);
    for (int k = 1; !term.is_zero(); ++k) {
        term = term * N;
        binom *= (Rat(1, 2) - Rat(k - 1)) / Rat(k);
        S = S + term * Fraction(binom);
    }
    return S;
}

AlgebraElement sqrt_id_truncated(const AlgebraElement& h, int K) {
    const Group& G = h.group();
    AlgebraElement N = (h - AlgebraElement::one(G, Mode::Id)).beta_truncate(K);
    AlgebraElement S = AlgebraElement::one(G, Mode::Id);
    AlgebraElement term = AlgebraElement::one(G, Mode::Id);
    Rat binom(1);
    for (int k = 1; !term.is_zero(); ++k) {
        term = (term * N).beta_truncate(K);
        binom *= (Rat(1, 2) - Rat(k - 1)) / Rat(k);
        S = S + term * Fraction(binom);
    }
    return S.beta_truncate(K);
}

}  // namespace

AlgebraElement sqrt(const AlgebraElement& h, int K) {
    if (!(h.coefficient(h.group().identity()) == Fraction(1)))
        throw std::invalid_argument("sqrt requires identity coefficient 1");
    if (h.mode() == Mode::Nil) {
        AlgebraElement S = sqrt_nil(h);
        if (!(S * S == h))
            throw std::logic_error("sqrt postcondition S*S = h failed");
        return S;
    }
    if (K <= 0)
        throw std::invalid_argument("Id-mode sqrt needs a beta truncation order");
    AlgebraElement S = sqrt_id_truncated(h, K);
    if (!((S * S).beta_truncate(K) == h.beta_truncate(K)))
        throw std::logic_error("sqrt postcondition S*S = h (mod beta^K) failed");
    return S;
}

}  // namespace schub
