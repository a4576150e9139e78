#include "schub/symfunc.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace schub {

Polynomial power_sum(int k, const std::vector<Var>& vars) {
    Polynomial r;
    for (Var v : vars) r += Polynomial::variable(v).pow(unsigned(k));
    return r;
}

Polynomial elementary(int k, const std::vector<Var>& vars) {
    if (k == 0) return Polynomial(1);
    if (k < 0 || k > int(vars.size())) return Polynomial();
    // e_k over vars[0..m) = e_k over vars[0..m-1) + v_{m-1} e_{k-1}
    std::vector<Polynomial> e(size_t(k) + 1);
    e[0] = Polynomial(1);
    for (Var v : vars)
        for (int j = k; j >= 1; --j)
            e[size_t(j)] += Polynomial::variable(v) * e[size_t(j - 1)];
    return e[size_t(k)];
}

Polynomial complete_homogeneous(int k, const std::vector<Var>& vars) {
    if (k == 0) return Polynomial(1);
    if (k < 0) return Polynomial();
    // h_k over first m vars = h_k over m-1 vars + v_m h_{k-1} over m vars
    std::vector<Polynomial> h(size_t(k) + 1);
    h[0] = Polynomial(1);
    for (int j = 1; j <= k; ++j) h[size_t(j)] = Polynomial();
    for (Var v : vars)
        for (int j = 1; j <= k; ++j)
            h[size_t(j)] += Polynomial::variable(v) * h[size_t(j - 1)];
    return h[size_t(k)];
}

Polynomial schur(const Partition& lambda, const std::vector<Var>& vars) {
    int l = int(lambda.size());
    if (l == 0) return Polynomial(1);
    for (int i = 0; i + 1 < l; ++i)
        if (lambda[size_t(i)] < lambda[size_t(i + 1)])
            throw std::invalid_argument("partition parts must be decreasing");
    // det(h_{lambda_i - i + j}) by cofactor expansion on the first row
    std::vector<std::vector<Polynomial>> M;
    M.resize(size_t(l), std::vector<Polynomial>(size_t(l)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            M[size_t(i)][size_t(j)] =
                complete_homogeneous(lambda[size_t(i)] - i + j, vars);
    std::function<Polynomial(std::vector<std::vector<Polynomial>>&)> det =
        [&](std::vector<std::vector<Polynomial>>& A) {
            size_t m = A.size();
            if (m == 1) return A[0][0];
            Polynomial r;
            for (size_t c = 0; c < m; ++c) {
                std::vector<std::vector<Polynomial>> minor;
                for (size_t i = 1; i < m; ++i) {
                    std::vector<Polynomial> row;
                    for (size_t j = 0; j < m; ++j)
                        if (j != c) row.push_back(A[i][j]);
                    minor.push_back(row);
                }
                Polynomial term = A[0][c] * det(minor);
                if (c % 2) r -= term; else r += term;
            }
            return r;
        };
    return det(M);
}

Polynomial schur_p(const Partition& lambda, const std::vector<Var>& vars,
                   int cell_limit) {
    int l = int(lambda.size());
    for (int i = 0; i + 1 < l; ++i)
        if (lambda[size_t(i)] <= lambda[size_t(i + 1)])
            throw std::invalid_argument("strict partition required");
    // shifted shape: row i occupies columns i .. i + lambda_i - 1
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < l; ++i)
        for (int j = i; j < i + lambda[size_t(i)]; ++j) cells.push_back({i, j});
    if (int(cells.size()) > cell_limit)
        throw std::length_error("shape too large for tableau enumeration");
    int N = int(vars.size());
    // entry: value 1..N with a mark; order 1' < 1 < 2' < 2 < ...
    // encode entry as 2*value - (primed ? 1 : 0)
    std::map<std::pair<int, int>, int> fill;
    Polynomial total;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            Monomial m;
            for (auto& [cell, code] : fill)
                m = m * Monomial::var(vars[size_t((code + 1) / 2 - 1)]);
            total.add_term(m, Rat(1));
            return;
        }
        auto [r, c] = cells[idx];
        for (int code = 1; code <= 2 * N; ++code) {
            bool primed = code % 2;
            if (primed && r == c) continue;  // P-flavor: plain diagonal
            auto left = fill.find({r, c - 1});
            auto up = fill.find({r - 1, c});
            if (left != fill.end()) {
                if (left->second > code) continue;
                // equal primed letters may not repeat within a row
                if (primed && left->second == code) continue;
            }
            if (up != fill.end()) {
                if (up->second > code) continue;
                // equal plain letters may not repeat within a column
                if (!primed && up->second == code) continue;
            }
            fill[{r, c}] = code;
            rec(idx + 1);
            fill.erase({r, c});
        }
    };
    rec(0);
    return total;
}

bool is_supersymmetric(const Polynomial& f, const std::vector<Var>& vars) {
    if (vars.size() < 2) return true;
    Var fresh = Var::t(999999);
    std::map<Var, Fraction> pm{{vars[0], Fraction(Polynomial::variable(fresh))},
                               {vars[1], -Fraction(Polynomial::variable(fresh))}};
    std::map<Var, Fraction> zz{{vars[0], Fraction(0)}, {vars[1], Fraction(0)}};
    return f.substitute(pm) == f.substitute(zz);
}

namespace {

// all products of odd power sums with total degree <= max_deg, as pairs of
// (abstract monomial in t_k, concrete polynomial)
void odd_products(const std::vector<Var>& vars, int max_deg,
                  std::vector<std::pair<Monomial, Polynomial>>& out) {
    std::function<void(int, int, Monomial, Polynomial)> rec =
        [&](int k, int budget, Monomial mono, Polynomial val) {
            out.push_back({mono, val});
            for (int j = k; j <= budget; j += 2)
                rec(j, budget - j, mono * Monomial::var(Var::t(uint32_t(j))),
                    val * power_sum(j, vars));
        };
    rec(1, max_deg, Monomial(), Polynomial(1));
}

}  // namespace

Polynomial odd_power_sum_expand(const Polynomial& f,
                                const std::vector<Var>& vars, int max_deg) {
    std::vector<std::pair<Monomial, Polynomial>> basis;
    odd_products(vars, max_deg, basis);
    // Gaussian elimination: unknown coefficient per basis element, one
    // equation per concrete monomial.
    std::map<Monomial, size_t> rows;
    auto row_of = [&](const Monomial& m) {
        auto it = rows.find(m);
        if (it == rows.end()) it = rows.insert({m, rows.size()}).first;
        return it->second;
    };
    size_t nb = basis.size();
    std::vector<std::map<size_t, Rat>> cols(nb);
    std::map<size_t, Rat> rhs;
    for (size_t j = 0; j < nb; ++j)
        for (auto& [m, c] : basis[j].second.terms()) cols[j][row_of(m)] = c;
    for (auto& [m, c] : f.terms()) rhs[row_of(m)] = c;

    size_t nr = rows.size();
    // dense elimination (basis is small at desk scale)
    std::vector<std::vector<Rat>> A(nr, std::vector<Rat>(nb + 1, Rat(0)));
    for (size_t j = 0; j < nb; ++j)
        for (auto& [r, c] : cols[j]) A[r][j] = c;
    for (auto& [r, c] : rhs) A[r][nb] = c;
    std::vector<long> pivot_col(nr, -1);
    size_t rank = 0;
    for (size_t j = 0; j < nb && rank < nr; ++j) {
        size_t p = rank;
        while (p < nr && A[p][j] == 0) ++p;
        if (p == nr) continue;
        std::swap(A[p], A[rank]);
        Rat inv = A[rank][j];
        for (size_t k = j; k <= nb; ++k) A[rank][k] /= inv;
        for (size_t i = 0; i < nr; ++i) {
            if (i == rank || A[i][j] == 0) continue;
            Rat factor = A[i][j];
            for (size_t k = j; k <= nb; ++k) A[i][k] -= factor * A[rank][k];
        }
        pivot_col[rank++] = long(j);
    }
    for (size_t i = rank; i < nr; ++i)
        if (A[i][nb] != 0)
            throw std::logic_error(
                "polynomial is not supersymmetric: no odd power-sum expansion");
    Polynomial result;
    for (size_t i = 0; i < rank; ++i)
        if (A[i][nb] != 0)
            result.add_term(basis[size_t(pivot_col[i])].first, A[i][nb]);
    return result;
}

Polynomial halve_and_substitute(const Polynomial& f,
                                const std::vector<Var>& from,
                                const std::vector<Var>& to, const Rat& scale) {
    Polynomial abst = odd_power_sum_expand(f, from, std::max(f.degree(), 0));
    std::map<Var, Fraction> bind;
    for (auto& [m, c] : abst.terms()) {
        (void)c;
        for (auto& [v, e] : m.entries()) {
            (void)e;
            bind[v] = Fraction(power_sum(int(v.index()), to) * scale);
        }
    }
    Fraction r = abst.substitute(bind);
    return r.num();  // substitution of polynomials keeps denominator 1
}

}  // namespace schub
