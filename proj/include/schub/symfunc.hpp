#pragma once
// Symmetric-function utilities: power sums, elementary / complete homogeneous
// polynomials, Schur polynomials (Jacobi-Trudi), Schur P-polynomials for
// small strict shapes (marked shifted tableau enumeration), the
// supersymmetry cancellation test, and expansion into odd power sums with
// the power-sum rescaling substitution.

#include <vector>

#include "schub/poly.hpp"

namespace schub {

using Partition = std::vector<int>;  // weakly decreasing positive parts

Polynomial power_sum(int k, const std::vector<Var>& vars);
Polynomial elementary(int k, const std::vector<Var>& vars);
Polynomial complete_homogeneous(int k, const std::vector<Var>& vars);

// Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
Polynomial schur(const Partition& lambda, const std::vector<Var>& vars);

// Schur P-polynomial of a strict partition by enumerating marked shifted
// tableaux with no primed entries on the main diagonal.  Guarded by a cell
// limit (the enumeration is exponential in |lambda|).
Polynomial schur_p(const Partition& lambda, const std::vector<Var>& vars,
                   int cell_limit = 8);

// Cancellation criterion: f(t, -t, v_3, ..., v_m) is independent of t
// (checked against the specialization t = 0).
bool is_supersymmetric(const Polynomial& f, const std::vector<Var>& vars);

// Expands f as a polynomial in the odd power sums p_1, p_3, ... of `vars`,
// with t_k standing for p_k in the result.  Only odd k <= max_deg occur.
// Throws std::logic_error when f is not in the odd power-sum subring.
Polynomial odd_power_sum_expand(const Polynomial& f,
                                const std::vector<Var>& vars, int max_deg);

// Expand f in odd power sums of `from`, then substitute
// p_k := scale * p_k(to).  With scale = 1/2 this is the power-sum halving
// relation p_k(from)/2 = p_k(to); scale = 2 inverts it.
Polynomial halve_and_substitute(const Polynomial& f,
                                const std::vector<Var>& from,
                                const std::vector<Var>& to,
                                const Rat& scale = Rat(1, 2));

}  // namespace schub
