#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "openbook/errors.hpp"

namespace openbook {

// Default cap on intermediate word lengths.  Every substitution-style
// operation takes a budget and throws BudgetError instead of silently
// producing astronomically long words.
inline constexpr std::size_t kDefaultWordBudget = 1'000'000;

// A freely reduced word in a free group.  Letter +k (1-based) is the k-th
// generator, letter -k its inverse.  The empty word is the identity.
class Word {
  public:
    Word() = default;

    // Reduces the letter sequence (cancels adjacent inverse pairs).
    static Word from_letters(const std::vector<int>& letters) {
        Word w;
        for (int l : letters) w.push_reduce(l);
        return w;
    }

    static Word generator(int k) {
        assert(k != 0);
        Word w;
        w.ls_.push_back(k);
        return w;
    }

    const std::vector<int>& letters() const { return ls_; }
    std::size_t size() const { return ls_.size(); }
    bool empty() const { return ls_.empty(); }

    bool operator==(const Word& o) const { return ls_ == o.ls_; }
    bool operator!=(const Word& o) const { return ls_ != o.ls_; }

    Word inverse() const {
        Word w;
        w.ls_.reserve(ls_.size());
        for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) w.ls_.push_back(-*it);
        return w;
    }

    // Appends a letter, cancelling against the current last letter.
    void push_reduce(int letter) {
        assert(letter != 0);
        if (!ls_.empty() && ls_.back() == -letter)
            ls_.pop_back();
        else
            ls_.push_back(letter);
    }

    // Appends a whole word (reduced concatenation).
    void append(const Word& w) {
        for (int l : w.ls_) push_reduce(l);
    }

    friend Word operator*(const Word& a, const Word& b) {
        Word r = a;
        r.append(b);
        return r;
    }

    // a * w * a^-1
    Word conjugated_by(const Word& a) const { return a * (*this) * a.inverse(); }

    Word pow(long long e) const {
        Word base = e >= 0 ? *this : inverse();
        long long n = e >= 0 ? e : -e;
        Word r;
        for (long long i = 0; i < n; ++i) r.append(base);
        return r;
    }

    // Largest generator index used, 0 for the empty word.
    int max_generator() const {
        int m = 0;
        for (int l : ls_) m = std::max(m, std::abs(l));
        return m;
    }

    // Exponent-sum vector over generators 1..rank.
    std::vector<long long> abelianized(int rank) const {
        assert(max_generator() <= rank);
        std::vector<long long> v(static_cast<std::size_t>(rank), 0);
        for (int l : ls_) v[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
        return v;
    }

    // Whether this word is a cyclic rotation of a conjugate of w, i.e. conjugate
    // to w in the free group.  Both cyclic reductions must match up to rotation.
    bool conjugate_to(const Word& w) const {
        std::vector<int> a = cyclic_reduction().ls_, b = w.cyclic_reduction().ls_;
        if (a.size() != b.size()) return false;
        if (a.empty()) return true;
        std::vector<int> aa = a;
        aa.insert(aa.end(), a.begin(), a.end());
        return std::search(aa.begin(), aa.end(), b.begin(), b.end()) != aa.end();
    }

    Word cyclic_reduction() const {
        Word w = *this;
        while (w.ls_.size() >= 2 && w.ls_.front() == -w.ls_.back()) {
            w.ls_.erase(w.ls_.begin());
            w.ls_.pop_back();
        }
        return w;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (ls_.empty()) return "1";
        std::string s;
        for (int l : ls_) {
            if (!s.empty()) s += ' ';
            s += names[static_cast<std::size_t>(std::abs(l) - 1)];
            if (l < 0) s += "^-1";
        }
        return s;
    }

  private:
    std::vector<int> ls_;
};

// Applies the substitution generator k -> images[k-1] to w.  This is how free
// group endomorphisms act; the result is freely reduced.  Throws BudgetError
// if the result would exceed the budget.
inline Word substitute(const Word& w, const std::vector<Word>& images,
                       std::size_t budget = kDefaultWordBudget) {
    Word r;
    for (int l : w.letters()) {
        const auto idx = static_cast<std::size_t>(std::abs(l) - 1);
        if (idx >= images.size())
            throw SemanticError("unknown generator in word: index " +
                                std::to_string(std::abs(l)) + " exceeds rank " +
                                std::to_string(images.size()));
        const Word& img = images[idx];
        if (l > 0)
            r.append(img);
        else
            r.append(img.inverse());
        if (r.size() > budget) throw BudgetError(budget);
    }
    return r;
}

// Images of the identity endomorphism on `rank` generators.
inline std::vector<Word> identity_images(int rank) {
    std::vector<Word> v;
    v.reserve(static_cast<std::size_t>(rank));
    for (int k = 1; k <= rank; ++k) v.push_back(Word::generator(k));
    return v;
}

// Composition f.g of substitutions: (f.g)(x) = f(g(x)).
inline std::vector<Word> compose_images(const std::vector<Word>& f, const std::vector<Word>& g,
                                        std::size_t budget = kDefaultWordBudget) {
    std::vector<Word> r;
    r.reserve(g.size());
    for (const Word& w : g) r.push_back(substitute(w, f, budget));
    return r;
}

// A word g with to == g . from . g^-1, if the two are conjugate.  Write
// from = p k p^-1 and to = q k' q^-1 with k, k' cyclically reduced; then k'
// must be a rotation of k, and rotating by r letters conjugates by the
// length-r prefix.
inline std::optional<Word> conjugator(const Word& from, const Word& to) {
    Word kf = from.cyclic_reduction();
    Word kt = to.cyclic_reduction();
    if (kf.size() != kt.size()) return std::nullopt;
    // p: the unwound half of `from` around its cyclic core.
    std::size_t trim = (from.size() - kf.size()) / 2;
    Word p = Word::from_letters(
        std::vector<int>(from.letters().begin(),
                         from.letters().begin() + static_cast<std::ptrdiff_t>(trim)));
    std::size_t trimq = (to.size() - kt.size()) / 2;
    Word q = Word::from_letters(
        std::vector<int>(to.letters().begin(),
                         to.letters().begin() + static_cast<std::ptrdiff_t>(trimq)));
    if (kf.empty()) return q * p.inverse();
    const auto& a = kf.letters();
    for (std::size_t r = 0; r < a.size(); ++r) {
        // rotation of kf by r: alpha^-1 kf alpha with alpha = prefix of length r
        std::vector<int> rot(a.begin() + static_cast<std::ptrdiff_t>(r), a.end());
        rot.insert(rot.end(), a.begin(), a.begin() + static_cast<std::ptrdiff_t>(r));
        if (rot == kt.letters()) {
            Word alpha = Word::from_letters(
                std::vector<int>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(r)));
            Word g = q * alpha.inverse() * p.inverse();
            assert(to == g * from * g.inverse());
            return g;
        }
    }
    return std::nullopt;
}

}  // namespace openbook
