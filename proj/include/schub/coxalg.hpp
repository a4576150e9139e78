#pragma once
// Nil-Coxeter and Id-Coxeter algebras over the rational-fraction field:
// sparse elements indexed by interned group elements, h-factor products,
// factored inverses, and algebra square roots.
//
// Basis product (right generator): Nil u_w u_i = u_{w s_i} or 0; Id mode
// u_w u_i = u_{w s_i} or beta u_w.  The general closed form
// u_v u_w = beta^{l(v)+l(w)-l(v*w)} u_{v*w} (Demazure *) is used as a fast
// path; its equivalence with word folding is an oracle property covered by
// the test suite.

#include <map>
#include <vector>

#include "schub/poly.hpp"
#include "schub/weyl.hpp"

namespace schub {

enum class Mode { Nil, Id };

struct HFactor {
    int generator;
    Fraction argument;
    int scale = 1;  // 2 encodes the C-flavor h_0 (argument doubled)
};

class AlgebraElement {
public:
    AlgebraElement(const Group& g, Mode m) : G_(&g), mode_(m) {}
    static AlgebraElement one(const Group& g, Mode m);

    const Group& group() const { return *G_; }
    Mode mode() const { return mode_; }
    const std::map<int, Fraction>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Fraction coefficient(int w) const;
    // coefficient with a polynomiality assertion (throws naming w otherwise)
    Polynomial polynomial_coefficient(int w) const;

    void set(int w, const Fraction& f);          // overwrite, dropping zeros
    void add(int w, const Fraction& f);          // accumulate

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const Fraction& s) const;
    AlgebraElement operator*(const AlgebraElement& o) const;  // fast path
    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    // product via folding o's canonical reduced words (the oracle)
    AlgebraElement mul_fold(const AlgebraElement& o) const;

    // right/left multiplication by (1 + c u_g) with c = argument * scale
    AlgebraElement h_mul(const HFactor& f, bool right_side = true) const;
    // right/left multiplication by c*u_g alone
    AlgebraElement gen_mul(int g, const Fraction& c, bool right_side = true) const;

    AlgebraElement substitute(const std::map<Var, Fraction>& bindings) const;
    AlgebraElement at_beta_zero() const;         // mode tag is kept
    AlgebraElement beta_truncate(int K) const;

private:
    const Group* G_;
    Mode mode_;
    std::map<int, Fraction> c_;
};

AlgebraElement product_of_factors(const std::vector<HFactor>& factors,
                                  const Group& g, Mode m);
// inverse of the factored product; verifies product * inverse = 1
AlgebraElement invert_factored(const std::vector<HFactor>& factors,
                               const Group& g, Mode m);
std::vector<HFactor> inverted_factors(const std::vector<HFactor>& factors,
                                      Mode m);

// Square root with identity coefficient +1, as a binomial series in
// N = h - 1.  Nil: the series terminates (N is nilpotent) and S*S = h is
// asserted exactly.  Id: the u_w coefficient equation of S*S = h is
// quadratic in s_w (the pair (w, w) contributes s_w^2 beta^{l(w)} whenever
// w * w = w, e.g. for every generator), so no square root with
// rational-function coefficients exists; we compute the beta-adic series
// truncated modulo beta^K instead.  The coefficient of u_w in N^k carries
// beta-order >= k - l(w), so the series terminates modulo beta^K, and
// S*S = h (mod beta^K) is asserted.
AlgebraElement sqrt(const AlgebraElement& h, int K = 0);

}  // namespace schub
