#pragma once
// Weyl groups of classical types A, B(=C as a group), and D.
//
// Elements are kept in signed one-line ("window") notation and interned in a
// per-group cache built by breadth-first search over the Cayley graph, so an
// element is just an integer id.  Ids are assigned in (length, window)
// lexicographic order; the identity is always id 0.
//
// Generator encoding: 0 stands for s_0 (types B/C) or s_{1hat} (type D,
// printed "h"); 1..n-1 are the ordinary transpositions.  This makes the
// canonical generator order 0 < 1hat < 1 < 2 < ... numeric.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "schub/poly.hpp"

namespace schub {

enum class WTag { A, B, C, D };

std::string tag_str(WTag t);
WTag tag_parse(const std::string& s);

using Window = std::vector<int>;
using Word = std::vector<int>;

class Group {
public:
    // Interned accessor; builds (and validates) the cache on first use.
    // Throws std::length_error when the group order exceeds `limit`.
    static const Group& get(WTag tag, int rank, size_t limit = 1000000);

    WTag tag() const { return tag_; }
    int rank() const { return n_; }
    size_t size() const { return windows_.size(); }
    uint64_t order() const;  // 2^n n! etc., computed without enumeration

    int identity() const { return 0; }
    const std::vector<int>& generators() const { return gens_; }

    const Window& window(int w) const { return windows_[size_t(w)]; }
    int element(const Window& win) const;       // throws if not in the group
    int length(int w) const { return lengths_[size_t(w)]; }
    const Word& reduced_word(int w) const { return words_[size_t(w)]; }
    int inverse(int w) const { return inverses_[size_t(w)]; }

    // side: right multiplies by s_i (acts on positions), left by s_i (values)
    int apply_generator(int w, int gen, bool right_side = true) const;
    int multiply(int v, int w) const;           // group product v*w
    int from_word(const Word& word) const;
    int demazure_product(int v, int w) const;   // Id-Coxeter monoid product
    bool bruhat_leq(int v, int w) const;

    // Reflection action on a variable family: w sends x_i to x_{w(i)} with
    // the convention that a barred value means sign flip.
    Polynomial act_on_poly(int w, const Polynomial& f,
                           Family fam = Family::X) const;
    Fraction act_on_poly(int w, const Fraction& f,
                         Family fam = Family::X) const;

    // Closed-form Coxeter length from the window, validated against the BFS
    // distance whenever a group cache is built (a cheap full oracle check).
    static int closed_form_length(WTag tag, const Window& win);

    // window / word text I/O ("-1,2"; "h,2,1" with h = s_{1hat})
    static Window parse_window(const std::string& s);
    std::string window_str(int w) const;
    Word parse_word(const std::string& s) const;
    std::string word_str(const Word& word) const;

private:
    Group(WTag tag, int rank, size_t limit);

    WTag tag_;
    int n_;
    std::vector<int> gens_;
    std::vector<Window> windows_;
    std::vector<int> lengths_;
    std::vector<Word> words_;
    std::vector<int> inverses_;
    std::vector<std::vector<int>> rmul_;   // [w][gen]
    std::vector<std::vector<int>> lmul_;   // [w][gen]
    std::map<Window, int> index_;

    Window right_window(const Window& win, int gen) const;
    Window left_window(const Window& win, int gen) const;
};

// Rothe diagram of a permutation (type A window):
// (i,j) in D(w) iff i < w^{-1}(j) and j < w(i); boxes are 1-based, returned
// column by column, bottom to top (the reading order used for the
// complement-diagram products).
std::vector<std::pair<int, int>> diagram(const Window& w);

}  // namespace schub
