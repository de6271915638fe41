#pragma once

#include "heisenfock/partitions.hpp"
#include "heisenfock/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace heisenfock {

/* The bilinear form on the chosen basis: entry(i, j) = <b_i, b_j>.
 * Not required to be symmetric.
 */
class PairingMatrix {
public:
    PairingMatrix() = default;

    explicit PairingMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    explicit PairingMatrix(std::vector<std::vector<Rational>> rows) : dim_(rows.size()) {
        entries_.reserve(dim_ * dim_);
        for (const auto& row : rows) {
            if (row.size() != dim_)
                throw std::invalid_argument("pairing matrix must be square");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static PairingMatrix identity(std::size_t dim) {
        PairingMatrix p(dim);
        for (std::size_t i = 0; i < dim; ++i)
            p.at(i, i) = 1;
        return p;
    }

    static PairingMatrix scalar(const Rational& chi) { return PairingMatrix({{chi}}); }

    std::size_t dim() const noexcept { return dim_; }

    const Rational& operator()(std::size_t i, std::size_t j) const {
        check(i, j);
        return entries_[i * dim_ + j];
    }

    Rational& at(std::size_t i, std::size_t j) {
        check(i, j);
        return entries_[i * dim_ + j];
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    friend bool operator==(const PairingMatrix&, const PairingMatrix&) = default;

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= dim_ || j >= dim_)
            throw std::domain_error("basis index out of range for pairing of dimension " +
                                    std::to_string(dim_));
    }

    std::size_t dim_ = 0;
    std::vector<Rational> entries_;
};

/// a_i(n), n != 0. Negative modes create, positive modes annihilate.
struct GeneratorSymbol {
    std::size_t basis = 0;
    int mode = 1;

    GeneratorSymbol() = default;
    GeneratorSymbol(std::size_t b, int m) : basis(b), mode(m) {
        if (m == 0)
            throw std::domain_error("generator mode must be nonzero");
    }

    bool is_creation() const noexcept { return mode < 0; }
    bool is_annihilation() const noexcept { return mode > 0; }

    std::string to_string() const {
        return "a(" + std::to_string(basis) + "," + std::to_string(mode) + ")";
    }

    friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
    friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

using Word = std::vector<GeneratorSymbol>;

namespace detail {

inline void add_to(auto& map, auto&& key, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = map.try_emplace(std::forward<decltype(key)>(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            map.erase(it);
    }
}

inline std::string word_to_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        if (!s.empty())
            s += ' ';
        s += w[i].to_string();
        if (j - i > 1)
            s += '^' + std::to_string(j - i);
        i = j;
    }
    return s;
}

// Shared printer for maps whose keys render to words. Longer words first.
template <class Terms, class ToWord>
std::string terms_to_string(const Terms& terms, ToWord to_word) {
    if (terms.empty())
        return "0";
    std::vector<std::pair<Word, const Rational*>> rows;
    rows.reserve(terms.size());
    for (const auto& [key, c] : terms)
        rows.emplace_back(to_word(key), &c);
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.first.size() > b.first.size();
    });
    std::string s;
    bool first = true;
    for (const auto& [w, cp] : rows) {
        const Rational& c = *cp;
        bool negative = c < 0;
        Rational mag = abs(c);
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        if (w.empty())
            s += to_string(mag);
        else if (mag == 1)
            s += word_to_string(w);
        else
            s += to_string(mag) + " " + word_to_string(w);
    }
    return s;
}

} // namespace detail

/* An element of the free algebra on the a_i(n): a finitely supported map
 * Word -> nonzero rational. Multiplication is concatenation; no relations
 * are applied until normal_order.
 */
class Element {
public:
    using map_type = std::map<Word, Rational>;

    Element() = default;
    Element(const Rational& c) { detail::add_to(terms_, Word{}, c); }
    Element(int c) : Element(Rational(c)) {}
    Element(Word w, const Rational& c = 1) { detail::add_to(terms_, std::move(w), c); }

    static Element unit() { return Element(1); }
    static Element generator(std::size_t basis, int mode) {
        return Element(Word{GeneratorSymbol(basis, mode)});
    }

    const map_type& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(Word w, const Rational& c) { detail::add_to(terms_, std::move(w), c); }

    Element& operator+=(const Element& o) {
        for (const auto& [w, c] : o.terms_)
            detail::add_to(terms_, w, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [w, c] : o.terms_)
            detail::add_to(terms_, w, Rational(-c));
        return *this;
    }
    Element& operator*=(const Rational& s) {
        if (s == 0)
            terms_.clear();
        for (auto& [w, c] : terms_)
            c *= s;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Rational(-1); }
    friend Element operator*(Element a, const Rational& s) { return a *= s; }
    friend Element operator*(const Rational& s, Element a) { return a *= s; }

    friend Element operator*(const Element& x, const Element& y) {
        Element r;
        for (const auto& [u, cu] : x.terms_)
            for (const auto& [v, cv] : y.terms_) {
                Word w;
                w.reserve(u.size() + v.size());
                w.insert(w.end(), u.begin(), u.end());
                w.insert(w.end(), v.begin(), v.end());
                detail::add_to(r.terms_, std::move(w), Rational(cu * cv));
            }
        return r;
    }

    Element pow(unsigned k) const {
        Element r = unit();
        for (unsigned i = 0; i < k; ++i)
            r = r * *this;
        return r;
    }

    std::string to_string() const {
        return detail::terms_to_string(terms_, [](const Word& w) { return w; });
    }

    friend bool operator==(const Element&, const Element&) = default;

private:
    map_type terms_;
};

/// Free-algebra product (concatenation), bilinear.
inline Element multiply(const Element& x, const Element& y) { return x * y; }

/// Index of a basis monomial a(-nu) a(mu): (creation part nu, annihilation part mu).
struct NormalKey {
    MultiPartition creation;
    MultiPartition annihilation;

    friend auto operator<=>(const NormalKey&, const NormalKey&) = default;
    friend bool operator==(const NormalKey&, const NormalKey&) = default;
};

/* Canonical word of a(-nu) a(mu). Creation symbols are ordered by basis
 * index, then |mode| ascending (a(i,-1) before a(i,-2)); annihilation
 * symbols by basis index, then mode ascending.
 */
inline Word canonical_word(const NormalKey& key) {
    Word w;
    for (const auto& [i, p] : key.creation.assignments())
        for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it)
            w.emplace_back(i, -*it);
    for (const auto& [i, p] : key.annihilation.assignments())
        for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it)
            w.emplace_back(i, *it);
    return w;
}

/* An element of H_V written in the basis a(-nu) a(mu). */
class NormalElement {
public:
    using map_type = std::map<NormalKey, Rational>;

    NormalElement() = default;
    NormalElement(const Rational& c) { detail::add_to(terms_, NormalKey{}, c); }
    NormalElement(int c) : NormalElement(Rational(c)) {}

    const map_type& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coefficient(const NormalKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(NormalKey key, const Rational& c) { detail::add_to(terms_, std::move(key), c); }

    NormalElement& operator+=(const NormalElement& o) {
        for (const auto& [k, c] : o.terms_)
            detail::add_to(terms_, k, c);
        return *this;
    }
    NormalElement& operator-=(const NormalElement& o) {
        for (const auto& [k, c] : o.terms_)
            detail::add_to(terms_, k, Rational(-c));
        return *this;
    }
    NormalElement& operator*=(const Rational& s) {
        if (s == 0)
            terms_.clear();
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }
    friend NormalElement operator+(NormalElement a, const NormalElement& b) { return a += b; }
    friend NormalElement operator-(NormalElement a, const NormalElement& b) { return a -= b; }
    friend NormalElement operator*(NormalElement a, const Rational& s) { return a *= s; }
    friend NormalElement operator*(const Rational& s, NormalElement a) { return a *= s; }

    /// Back into the free algebra, using canonical words.
    Element to_element() const {
        Element e;
        for (const auto& [k, c] : terms_)
            e.add_term(canonical_word(k), c);
        return e;
    }

    std::string to_string() const { return detail::terms_to_string(terms_, canonical_word); }

    friend bool operator==(const NormalElement&, const NormalElement&) = default;

private:
    map_type terms_;
};

/* The scalar [g, h] in H_V. For an annihilator a_i(m) and a creator
 * a_j(-m):
 *   [a_i(m), a_j(-m)] = m <b_i, b_j>,   [a_j(-m), a_i(m)] = -m <b_i, b_j>,
 * and zero whenever the modes do not cancel. The annihilator's basis
 * vector always sits in the first slot of the pairing.
 */
inline Rational commutator_scalar(const GeneratorSymbol& g, const GeneratorSymbol& h,
                                  const PairingMatrix& pairing) {
    if (g.basis >= pairing.dim() || h.basis >= pairing.dim())
        throw std::domain_error("basis index out of range for pairing of dimension " +
                                std::to_string(pairing.dim()));
    if (g.mode + h.mode != 0)
        return 0;
    if (g.is_annihilation())
        return Rational(g.mode) * pairing(g.basis, h.basis);
    return Rational(-h.mode) * pairing(h.basis, g.basis);
}

namespace detail {

inline void check_word(const Word& w, const PairingMatrix& pairing) {
    for (const auto& s : w) {
        if (s.mode == 0)
            throw std::domain_error("generator mode must be nonzero");
        if (s.basis >= pairing.dim())
            throw std::domain_error("basis index " + std::to_string(s.basis) +
                                    " out of range for pairing of dimension " +
                                    std::to_string(pairing.dim()));
    }
}

// acc := acc * s, with acc already in normal form.
inline NormalElement::map_type times_symbol(const NormalElement::map_type& acc,
                                            const GeneratorSymbol& s,
                                            const PairingMatrix& pairing) {
    NormalElement::map_type out;
    if (s.is_annihilation()) {
        for (const auto& [key, c] : acc) {
            NormalKey k = key;
            k.annihilation.add_part(s.basis, s.mode);
            add_to(out, std::move(k), c);
        }
        return out;
    }
    const int n = -s.mode;
    for (const auto& [key, c] : acc) {
        // a(mu) a_j(-n) = a_j(-n) a(mu) + sum over parts n of mu(i): n <b_i, b_j> a(mu - part)
        for (const auto& [i, p] : key.annihilation.assignments()) {
            int cnt = p.count(n);
            if (cnt == 0)
                continue;
            const Rational& form = pairing(i, s.basis);
            if (form == 0)
                continue;
            NormalKey k = key;
            k.annihilation.remove_part(i, n);
            add_to(out, std::move(k), Rational(c * form * cnt * n));
        }
        NormalKey k = key;
        k.creation.add_part(s.basis, n);
        add_to(out, std::move(k), c);
    }
    return out;
}

} // namespace detail

inline NormalElement normal_order_word(const Word& w, const PairingMatrix& pairing) {
    detail::check_word(w, pairing);
    NormalElement::map_type acc;
    acc.emplace(NormalKey{}, Rational(1));
    for (const auto& s : w)
        acc = detail::times_symbol(acc, s, pairing);
    NormalElement r;
    for (auto& [k, c] : acc)
        r.add_term(k, c);
    return r;
}

/* The class of x in H_V in the a(-nu) a(mu) basis. Each word is built up
 * symbol by symbol from the left; a new creator is commuted past the
 * annihilator block in one step since every commutator is central.
 */
inline NormalElement normal_order(const Element& x, const PairingMatrix& pairing) {
    NormalElement r;
    for (const auto& [w, c] : x.terms()) {
        NormalElement part = normal_order_word(w, pairing);
        part *= c;
        r += part;
    }
    return r;
}

inline NormalElement commutator(const Element& x, const Element& y, const PairingMatrix& pairing) {
    return normal_order(x * y - y * x, pairing);
}

/// Position of the leftmost adjacent (annihilator, creator) pair, if any.
inline std::optional<std::size_t> first_offending_pair(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i].is_annihilation() && w[i + 1].is_creation())
            return i;
    return std::nullopt;
}

inline std::vector<std::size_t> offending_pairs(const Word& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i].is_annihilation() && w[i + 1].is_creation())
            out.push_back(i);
    return out;
}

/* One rewrite step on the term `w` of x at position pos:
 *   u a_i(m) a_j(-n) v  ->  u a_j(-n) a_i(m) v + [a_i(m), a_j(-n)] u v.
 */
inline Element rewrite_step(const Element& x, const Word& w, std::size_t pos,
                            const PairingMatrix& pairing) {
    if (pos + 1 >= w.size() || !w[pos].is_annihilation() || !w[pos + 1].is_creation())
        throw std::invalid_argument("rewrite_step: no (annihilator, creator) pair at position");
    Rational c = x.coefficient(w);
    if (c == 0)
        throw std::invalid_argument("rewrite_step: word is not a term of the element");
    Element r = x;
    r.add_term(w, -c);
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    r.add_term(std::move(swapped), c);
    Rational s = commutator_scalar(w[pos], w[pos + 1], pairing);
    if (s != 0) {
        Word shorter;
        shorter.reserve(w.size() - 2);
        shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
        r.add_term(std::move(shorter), c * s);
    }
    return r;
}

/* Reads a word with every creator left of every annihilator as a basis key.
 * Symbols inside each block commute exactly, so this is just sorting.
 */
inline NormalKey key_of_ordered_word(const Word& w) {
    NormalKey k;
    bool seen_annihilator = false;
    for (const auto& s : w) {
        if (s.is_creation()) {
            if (seen_annihilator)
                throw std::invalid_argument("word is not normally ordered");
            k.creation.add_part(s.basis, -s.mode);
        } else {
            seen_annihilator = true;
            k.annihilation.add_part(s.basis, s.mode);
        }
    }
    return k;
}

/* Normal ordering by literal adjacent-swap rewriting. `choose` picks the
 * next step from the current element: it receives the element and must
 * return a (word, position) pair with an offending pair at that position.
 * The default picks the first word and its leftmost offending pair.
 */
template <class Chooser>
NormalElement normal_order_by_rewriting(Element x, const PairingMatrix& pairing, Chooser choose) {
    for (const auto& [w, c] : x.terms())
        detail::check_word(w, pairing);
    for (;;) {
        bool done = true;
        for (const auto& [w, c] : x.terms())
            if (first_offending_pair(w)) {
                done = false;
                break;
            }
        if (done)
            break;
        auto [word, pos] = choose(x);
        x = rewrite_step(x, word, pos, pairing);
    }
    NormalElement r;
    for (const auto& [w, c] : x.terms())
        r.add_term(key_of_ordered_word(w), c);
    return r;
}

inline NormalElement normal_order_by_rewriting(const Element& x, const PairingMatrix& pairing) {
    return normal_order_by_rewriting(x, pairing, [](const Element& e) {
        for (const auto& [w, c] : e.terms())
            if (auto pos = first_offending_pair(w))
                return std::pair<Word, std::size_t>(w, *pos);
        throw std::logic_error("no offending pair");
    });
}

} // namespace heisenfock
