#include "schub/jsonio.hpp"

namespace schub {

nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [m, c] : p.terms()) {
        nlohmann::json mono = nlohmann::json::object();
        for (auto& [v, e] : m.entries()) mono[v.str()] = e;
        terms.push_back({{"mono", mono},
                         {"num", boost::multiprecision::numerator(c).str()},
                         {"den", boost::multiprecision::denominator(c).str()}});
    }
    return terms;
}

nlohmann::json to_json(const AlgebraElement& e) {
    nlohmann::json rows = nlohmann::json::array();
    const Group& G = e.group();
    for (auto& [w, f] : e.coeffs()) {
        rows.push_back({{"word", G.word_str(G.reduced_word(w))},
                        {"window", G.window_str(w)},
                        {"coeff", to_json(e.polynomial_coefficient(w))}});
    }
    return rows;
}

}  // namespace schub
