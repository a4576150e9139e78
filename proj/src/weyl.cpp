#include "schub/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schub {

std::string tag_str(WTag t) {
    switch (t) {
        case WTag::A: return "A";
        case WTag::B: return "B";
        case WTag::C: return "C";
        case WTag::D: return "D";
    }
    throw std::logic_error("unreachable");
}

WTag tag_parse(const std::string& s) {
    if (s == "A" || s == "a") return WTag::A;
    if (s == "B" || s == "b") return WTag::B;
    if (s == "C" || s == "c") return WTag::C;
    if (s == "D" || s == "d") return WTag::D;
    throw std::invalid_argument("unknown group type: " + s);
}

uint64_t Group::order() const {
    uint64_t f = 1;
    for (int i = 2; i <= n_; ++i) f *= uint64_t(i);
    switch (tag_) {
        case WTag::A: return f;
        case WTag::B:
        case WTag::C: return f << n_;
        case WTag::D: return f << (n_ - 1);
    }
    throw std::logic_error("unreachable");
}

Window Group::right_window(const Window& win, int gen) const {
    Window r = win;
    if (gen >= 1) {
        std::swap(r[size_t(gen - 1)], r[size_t(gen)]);
    } else if (tag_ == WTag::D) {
        std::swap(r[0], r[1]);
        r[0] = -r[0];
        r[1] = -r[1];
    } else {
        r[0] = -r[0];
    }
    return r;
}

Window Group::left_window(const Window& win, int gen) const {
    Window r = win;
    auto map_value = [&](int v) {
        int a = std::abs(v);
        if (gen >= 1) {
            if (a == gen) return v < 0 ? -(gen + 1) : gen + 1;
            if (a == gen + 1) return v < 0 ? -gen : gen;
            return v;
        }
        if (tag_ == WTag::D) {
            // s_{1hat}: 1 -> -2, 2 -> -1 (and sign-symmetrically)
            if (a == 1) return v > 0 ? -2 : 2;
            if (a == 2) return v > 0 ? -1 : 1;
            return v;
        }
        return a == 1 ? -v : v;
    };
    for (auto& v : r) v = map_value(v);
    return r;
}

int Group::closed_form_length(WTag tag, const Window& win) {
    int n = int(win.size());
    int inv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (win[size_t(i)] > win[size_t(j)]) ++inv;
    int neg = 0;
    for (int v : win) {
        if (v >= 0) continue;
        neg += tag == WTag::D ? -v - 1 : -v;
    }
    return inv + neg;
}

Group::Group(WTag tag, int rank, size_t limit) : tag_(tag), n_(rank) {
    if (tag == WTag::A ? rank < 1 : tag == WTag::D ? rank < 3 : rank < 2)
        throw std::invalid_argument("rank too small for type " + tag_str(tag));
    uint64_t f = 1;
    for (int i = 2; i <= rank; ++i) f *= uint64_t(i);
    uint64_t ord = tag == WTag::A ? f
                 : tag == WTag::D ? f << (rank - 1)
                                  : f << rank;
    if (ord > limit)
        throw std::length_error("group order " + std::to_string(ord) +
                                " exceeds limit " + std::to_string(limit));

    int gfirst = tag == WTag::A ? 1 : 0;
    for (int g = gfirst; g < rank; ++g) gens_.push_back(g);

    // BFS from the identity window
    Window id(size_t(rank), 0);
    std::iota(id.begin(), id.end(), 1);
    std::map<Window, int> dist;
    dist[id] = 0;
    std::deque<Window> queue{id};
    std::vector<std::pair<Window, int>> found{{id, 0}};
    while (!queue.empty()) {
        Window w = queue.front();
        queue.pop_front();
        int d = dist[w];
        for (int g : gens_) {
            Window t = right_window(w, g);
            if (dist.emplace(t, d + 1).second) {
                queue.push_back(t);
                found.emplace_back(t, d + 1);
            }
        }
    }
    if (found.size() != ord) throw std::logic_error("BFS missed elements");

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    windows_.reserve(found.size());
    lengths_.reserve(found.size());
    for (size_t i = 0; i < found.size(); ++i) {
        windows_.push_back(found[i].first);
        lengths_.push_back(found[i].second);
        index_[found[i].first] = int(i);
        if (closed_form_length(tag_, found[i].first) != found[i].second)
            throw std::logic_error("closed-form length disagrees with BFS");
    }

    size_t N = windows_.size(), G = gens_.size();
    rmul_.assign(N, std::vector<int>(G));
    lmul_.assign(N, std::vector<int>(G));
    for (size_t w = 0; w < N; ++w)
        for (size_t gi = 0; gi < G; ++gi) {
            rmul_[w][gi] = index_.at(right_window(windows_[w], gens_[gi]));
            lmul_[w][gi] = index_.at(left_window(windows_[w], gens_[gi]));
        }

    // canonical (lex-smallest) reduced word: repeatedly strip the smallest
    // left descent
    words_.resize(N);
    for (size_t w = 0; w < N; ++w) {
        Word word;
        int cur = int(w);
        while (lengths_[size_t(cur)] > 0) {
            for (size_t gi = 0; gi < G; ++gi) {
                int t = lmul_[size_t(cur)][gi];
                if (lengths_[size_t(t)] < lengths_[size_t(cur)]) {
                    word.push_back(gens_[gi]);
                    cur = t;
                    break;
                }
            }
        }
        words_[w] = std::move(word);
    }

    inverses_.resize(N);
    for (size_t w = 0; w < N; ++w) {
        int inv = 0;  // fold the reversed word (each generator is an involution)
        const Word& word = words_[w];
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            inv = rmul_[size_t(inv)][size_t(*it - gfirst)];
        inverses_[w] = inv;
    }
}

const Group& Group::get(WTag tag, int rank, size_t limit) {
    static std::map<std::pair<int, int>, std::unique_ptr<Group>> cache;
    // Types B and C share the group model; keep one cache entry.
    WTag key = tag == WTag::C ? WTag::B : tag;
    auto it = cache.find({int(key), rank});
    if (it == cache.end()) {
        it = cache.emplace(std::make_pair(int(key), rank),
                           std::unique_ptr<Group>(new Group(key, rank, limit)))
                 .first;
    }
    return *it->second;
}

int Group::element(const Window& win) const {
    auto it = index_.find(win);
    if (it == index_.end())
        throw std::invalid_argument("window is not an element of this group");
    return it->second;
}

int Group::apply_generator(int w, int gen, bool right_side) const {
    int gfirst = tag_ == WTag::A ? 1 : 0;
    if (gen < gfirst || gen >= n_)
        throw std::invalid_argument("invalid generator index " +
                                    std::to_string(gen));
    size_t gi = size_t(gen - gfirst);
    return right_side ? rmul_[size_t(w)][gi] : lmul_[size_t(w)][gi];
}

int Group::multiply(int v, int w) const {
    int r = v;
    for (int g : words_[size_t(w)]) r = apply_generator(r, g, true);
    return r;
}

int Group::from_word(const Word& word) const {
    int r = identity();
    for (int g : word) r = apply_generator(r, g, true);
    return r;
}

int Group::demazure_product(int v, int w) const {
    int r = v;
    for (int g : words_[size_t(w)]) {
        int t = apply_generator(r, g, true);
        if (length(t) > length(r)) r = t;
    }
    return r;
}

bool Group::bruhat_leq(int v, int w) const {
    // lifting property walk along a reduced word of w
    while (length(w) > 0) {
        if (length(v) > length(w)) return false;
        if (v == identity()) return true;
        int s = words_[size_t(w)].back();
        w = apply_generator(w, s, true);
        int vs = apply_generator(v, s, true);
        if (length(vs) < length(v)) v = vs;
    }
    return v == identity();
}

Polynomial Group::act_on_poly(int w, const Polynomial& f, Family fam) const {
    std::map<Var, Polynomial::VarImage> m;
    const Window& win = windows_[size_t(w)];
    for (int i = 1; i <= n_; ++i) {
        int v = win[size_t(i - 1)];
        m[Var(fam, uint32_t(i))] = {Var(fam, uint32_t(std::abs(v))),
                                    v < 0 ? -1 : 1};
    }
    return f.rename(m);
}

Fraction Group::act_on_poly(int w, const Fraction& f, Family fam) const {
    return Fraction(act_on_poly(w, f.num(), fam), act_on_poly(w, f.den(), fam));
}

Window Group::parse_window(const std::string& s) {
    Window win;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        size_t pos = 0;
        int v = std::stoi(part, &pos);
        while (pos < part.size() && std::isspace((unsigned char)part[pos])) ++pos;
        if (pos != part.size() || v == 0)
            throw std::invalid_argument("bad window entry: " + part);
        win.push_back(v);
    }
    if (win.empty()) throw std::invalid_argument("empty window");
    return win;
}

std::string Group::window_str(int w) const {
    std::string out;
    for (int v : windows_[size_t(w)]) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    }
    return out;
}

Word Group::parse_word(const std::string& s) const {
    Word word;
    if (s.empty()) return word;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        // trim
        size_t a = part.find_first_not_of(" \t");
        size_t b = part.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument("empty word letter");
        part = part.substr(a, b - a + 1);
        if (part == "h") {
            if (tag_ != WTag::D)
                throw std::invalid_argument("generator h only exists in type D");
            word.push_back(0);
        } else {
            word.push_back(std::stoi(part));
        }
    }
    return word;
}

std::string Group::word_str(const Word& word) const {
    std::string out;
    for (int g : word) {
        if (!out.empty()) out += ",";
        out += (g == 0 && tag_ == WTag::D) ? "h" : std::to_string(g);
    }
    return out;
}

std::vector<std::pair<int, int>> diagram(const Window& w) {
    int n = int(w.size());
    std::vector<int> winv(size_t(n) + 1);
    for (int i = 1; i <= n; ++i) winv[size_t(w[size_t(i - 1)])] = i;
    std::vector<std::pair<int, int>> boxes;
    for (int j = 1; j <= n; ++j)           // column by column
        for (int i = n; i >= 1; --i)       // bottom to top
            if (i < winv[size_t(j)] && j < w[size_t(i - 1)])
                boxes.emplace_back(i, j);
    return boxes;
}

}  // namespace schub
