#pragma once

#include <compare>
#include <string>
#include <vector>

namespace stm {

// Element of the symmetric group S_n in one-line notation (1-based images).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation simple_reflection(int n, int k); // swaps k and k+1
    static Permutation order_reversing(int n);          // k -> n+1-k

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[static_cast<size_t>(x - 1)]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    int inversions() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default; // lexicographic, for ordered containers

    std::string str() const;                                  // "[3,2,1]"
    static Permutation parse(const std::string& text);

private:
    std::vector<int> img_;
};

// Function composition: compose(a,b)(x) = a(b(x)).  The written product
// s_{j_1} s_{j_2} ... applies the rightmost factor first, so it folds as
// compose(compose(s_{j_1}, s_{j_2}), ...).
Permutation compose(const Permutation& a, const Permutation& b);

// A word in the simple reflections s_1..s_{n-1}, always of the full length
// n(n-1)/2, with 0 marking omitted letters of a subword.
class Word {
public:
    Word() = default;
    Word(int n, std::vector<int> letters);

    int n() const { return n_; }
    int length() const { return static_cast<int>(letters_.size()); }
    int letter(int r) const { return letters_[static_cast<size_t>(r - 1)]; } // 1-based position
    const std::vector<int>& letters() const { return letters_; }
    int support_size() const; // number of nonzero letters

    bool operator==(const Word&) const = default;

    std::string str() const;                                 // "1,2,1,3,2,1"
    static Word parse(const std::string& text, int n);

private:
    int n_ = 0;
    std::vector<int> letters_;
};

// A strictly increasing subset of {1..n}.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> elems); // sorted & checked
    static IndexSet range(int d);              // {1,..,d}

    int size() const { return static_cast<int>(e_.size()); }
    bool empty() const { return e_.empty(); }
    int operator[](int k) const { return e_[static_cast<size_t>(k)]; } // 0-based
    bool contains(int x) const;
    const std::vector<int>& elems() const { return e_; }

    // {n+1-x : x in this}, used by the 180-degree rotation.
    IndexSet tilde(int n) const;

    bool operator==(const IndexSet&) const = default;
    auto operator<=>(const IndexSet&) const = default; // lexicographic

    std::string str() const; // "(2,3)"

private:
    std::vector<int> e_;
};

// The fixed reduced word (1)(2,1)(3,2,1)...(n-1,...,1) of the longest element.
Word longest_word(int n);

// Product of the simple reflections named by the word; zeros act as identity.
Permutation word_to_perm(const Word& j);

// True iff the nonzero-letter count equals the inversion count of the product.
bool is_reduced(const Word& j);

// Sorted set {w(1),...,w(d)}.
IndexSet uparrow(const Permutation& w, int d);

// Component-wise a_i >= b_i (equal sizes required).
bool dominates(const IndexSet& a, const IndexSet& b);

// Bruhat-Chevalley order: w2 <= w1 iff uparrow(w1,d) dominates uparrow(w2,d)
// for all d = 1..n-1.
bool bruhat_leq(const Permutation& w2, const Permutation& w1);

// j is obtained from i by replacing some letters with 0.
bool is_subword(const Word& j, const Word& i);

} // namespace stm
