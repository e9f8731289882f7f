#include "stmlab/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stm {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = static_cast<int>(img_.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int x : img_) {
        if (x < 1 || x > n || seen[static_cast<size_t>(x)])
            throw std::invalid_argument("Permutation: images must be a bijection of 1..n");
        seen[static_cast<size_t>(x)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::simple_reflection(int n, int k) {
    if (k < 1 || k >= n) throw std::invalid_argument("simple_reflection: k out of range");
    Permutation p = identity(n);
    std::swap(p.img_[static_cast<size_t>(k - 1)], p.img_[static_cast<size_t>(k)]);
    return p;
}

Permutation Permutation::order_reversing(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) v[static_cast<size_t>(k - 1)] = n + 1 - k;
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(img_.size());
    for (int x = 1; x <= n(); ++x) v[static_cast<size_t>((*this)(x)-1)] = x;
    return Permutation(std::move(v));
}

int Permutation::inversions() const {
    int c = 0;
    for (int a = 1; a <= n(); ++a)
        for (int b = a + 1; b <= n(); ++b)
            if ((*this)(a) > (*this)(b)) ++c;
    return c;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t k = 0; k < img_.size(); ++k) {
        if (k) os << ',';
        os << img_[k];
    }
    os << ']';
    return os.str();
}

Permutation Permutation::parse(const std::string& text) {
    std::string t = text;
    std::erase_if(t, [](char c) { return c == ' ' || c == '[' || c == ']'; });
    std::vector<int> v;
    std::istringstream is(t);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("Permutation::parse: empty entry");
        v.push_back(std::stoi(tok));
    }
    if (v.empty()) throw std::invalid_argument("Permutation::parse: no entries");
    return Permutation(std::move(v));
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> v(static_cast<size_t>(a.n()));
    for (int x = 1; x <= a.n(); ++x) v[static_cast<size_t>(x - 1)] = a(b(x));
    return Permutation(std::move(v));
}

Word::Word(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
    if (n < 2) throw std::invalid_argument("Word: n must be at least 2");
    if (static_cast<int>(letters_.size()) != n * (n - 1) / 2)
        throw std::invalid_argument("Word: length must be n(n-1)/2");
    for (int a : letters_)
        if (a < 0 || a >= n) throw std::invalid_argument("Word: letter out of range");
}

int Word::support_size() const {
    int c = 0;
    for (int a : letters_) c += (a != 0);
    return c;
}

std::string Word::str() const {
    std::ostringstream os;
    for (size_t k = 0; k < letters_.size(); ++k) {
        if (k) os << ',';
        os << letters_[k];
    }
    return os.str();
}

Word Word::parse(const std::string& text, int n) {
    std::vector<int> v;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("Word::parse: empty entry");
        v.push_back(std::stoi(tok));
    }
    return Word(n, std::move(v));
}

IndexSet::IndexSet(std::vector<int> elems) : e_(std::move(elems)) {
    for (size_t k = 0; k < e_.size(); ++k) {
        if (e_[k] < 1) throw std::invalid_argument("IndexSet: entries must be positive");
        if (k && e_[k - 1] >= e_[k])
            throw std::invalid_argument("IndexSet: entries must be strictly increasing");
    }
}

IndexSet IndexSet::range(int d) {
    std::vector<int> v(static_cast<size_t>(d));
    std::iota(v.begin(), v.end(), 1);
    return IndexSet(std::move(v));
}

bool IndexSet::contains(int x) const {
    return std::binary_search(e_.begin(), e_.end(), x);
}

IndexSet IndexSet::tilde(int n) const {
    std::vector<int> v;
    v.reserve(e_.size());
    for (auto it = e_.rbegin(); it != e_.rend(); ++it) {
        if (*it > n) throw std::invalid_argument("IndexSet::tilde: entry exceeds n");
        v.push_back(n + 1 - *it);
    }
    return IndexSet(std::move(v));
}

std::string IndexSet::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t k = 0; k < e_.size(); ++k) {
        if (k) os << ',';
        os << e_[k];
    }
    os << ')';
    return os.str();
}

Word longest_word(int n) {
    if (n < 2) throw std::invalid_argument("longest_word: n must be at least 2");
    std::vector<int> letters;
    letters.reserve(static_cast<size_t>(n * (n - 1) / 2));
    for (int b = 1; b < n; ++b)
        for (int a = b; a >= 1; --a) letters.push_back(a);
    return Word(n, std::move(letters));
}

Permutation word_to_perm(const Word& j) {
    Permutation p = Permutation::identity(j.n());
    for (int a : j.letters())
        if (a != 0) p = compose(p, Permutation::simple_reflection(j.n(), a));
    return p;
}

bool is_reduced(const Word& j) {
    return j.support_size() == word_to_perm(j).inversions();
}

IndexSet uparrow(const Permutation& w, int d) {
    if (d < 1 || d > w.n()) throw std::invalid_argument("uparrow: d out of range");
    std::vector<int> v;
    v.reserve(static_cast<size_t>(d));
    for (int k = 1; k <= d; ++k) v.push_back(w(k));
    std::sort(v.begin(), v.end());
    return IndexSet(std::move(v));
}

bool dominates(const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dominates: size mismatch");
    for (int k = 0; k < a.size(); ++k)
        if (a[k] < b[k]) return false;
    return true;
}

bool bruhat_leq(const Permutation& w2, const Permutation& w1) {
    if (w1.n() != w2.n()) throw std::invalid_argument("bruhat_leq: size mismatch");
    for (int d = 1; d < w1.n(); ++d)
        if (!dominates(uparrow(w1, d), uparrow(w2, d))) return false;
    return true;
}

bool is_subword(const Word& j, const Word& i) {
    if (j.length() != i.length() || j.n() != i.n())
        throw std::invalid_argument("is_subword: length mismatch");
    for (int r = 1; r <= i.length(); ++r)
        if (j.letter(r) != 0 && j.letter(r) != i.letter(r)) return false;
    return true;
}

} // namespace stm
