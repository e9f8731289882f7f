#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "stmlab/weyl.hpp"

using namespace stm;

namespace {

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<int> reduced_word_of(Permutation w) {
    // Peel descents off the right: if w(i) > w(i+1), then w*s_i is shorter.
    std::vector<int> letters;
    bool more = true;
    while (more) {
        more = false;
        for (int i = 1; i < w.n(); ++i) {
            if (w(i) > w(i + 1)) {
                letters.push_back(i);
                w = compose(w, Permutation::simple_reflection(w.n(), i));
                more = true;
                break;
            }
        }
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

// Independent Bruhat oracle: w2 <= w1 iff some subword of a reduced word of
// w1 multiplies out to w2 and is itself reduced.
bool bruhat_leq_subword_oracle(const Permutation& w2, const Permutation& w1) {
    const std::vector<int> rw = reduced_word_of(w1);
    const int L = static_cast<int>(rw.size());
    const int target_len = w2.inversions();
    for (int mask = 0; mask < (1 << L); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != target_len) continue;
        Permutation p = Permutation::identity(w1.n());
        for (int k = 0; k < L; ++k)
            if (mask & (1 << k))
                p = compose(p, Permutation::simple_reflection(w1.n(), rw[static_cast<size_t>(k)]));
        if (p == w2) return true;
    }
    return false;
}

} // namespace

TEST_CASE("longest word") {
    CHECK(longest_word(3).letters() == std::vector<int>{1, 2, 1});
    CHECK(longest_word(4).letters() == std::vector<int>{1, 2, 1, 3, 2, 1});
    CHECK(longest_word(2).letters() == std::vector<int>{1});
    CHECK(longest_word(5).length() == 10);
    CHECK_THROWS_AS(longest_word(1), std::invalid_argument);
    for (int n = 2; n <= 6; ++n)
        CHECK(word_to_perm(longest_word(n)) == Permutation::order_reversing(n));
}

TEST_CASE("word to permutation") {
    CHECK(word_to_perm(Word(3, {1, 2, 1})) == Permutation({3, 2, 1}));
    CHECK(word_to_perm(Word(3, {0, 0, 0})) == Permutation::identity(3));
    // s_1 s_2 s_1 in S_4 (zeros act as identity)
    const Permutation p = word_to_perm(Word(4, {1, 0, 0, 0, 2, 1}));
    const Permutation q = compose(compose(Permutation::simple_reflection(4, 1),
                                          Permutation::simple_reflection(4, 2)),
                                  Permutation::simple_reflection(4, 1));
    CHECK(p == q);
    CHECK(p == Permutation({3, 2, 1, 4}));
}

TEST_CASE("is_reduced") {
    CHECK(is_reduced(Word(3, {1, 2, 1})));
    CHECK_FALSE(is_reduced(Word(3, {1, 1, 0})));
    CHECK(is_reduced(Word(4, {1, 0, 0, 0, 2, 1})));
    // inversion-count length agrees with the shortest-expression length on S_4
    for (const auto& w : symmetric_group(4))
        CHECK(w.inversions() == static_cast<int>(reduced_word_of(w).size()));
}

TEST_CASE("uparrow and dominates") {
    CHECK(uparrow(Permutation({3, 2, 1}), 2) == IndexSet({2, 3}));
    for (int d = 1; d <= 3; ++d) CHECK(uparrow(Permutation::identity(3), d) == IndexSet::range(d));
    CHECK(uparrow(Permutation({2, 3, 1}), 2) == IndexSet({2, 3}));
    CHECK_THROWS_AS(uparrow(Permutation::identity(3), 4), std::invalid_argument);

    CHECK(dominates(IndexSet({2, 3}), IndexSet({1, 2})));
    CHECK_FALSE(dominates(IndexSet({1, 3}), IndexSet({2, 3})));
    CHECK(dominates(IndexSet({2, 3, 4}), IndexSet({1, 2, 3})));
    CHECK_THROWS_AS(dominates(IndexSet({1}), IndexSet({1, 2})), std::invalid_argument);
}

TEST_CASE("bruhat order basics") {
    const Permutation id3 = Permutation::identity(3);
    const Permutation s1 = Permutation::simple_reflection(3, 1);
    const Permutation s2 = Permutation::simple_reflection(3, 2);
    const Permutation w0 = Permutation::order_reversing(3);
    for (const auto& w : symmetric_group(3)) {
        CHECK(bruhat_leq(id3, w));
        CHECK(bruhat_leq(w, w0));
    }
    CHECK_FALSE(bruhat_leq(s1, s2));
    CHECK_FALSE(bruhat_leq(s2, s1));
}

TEST_CASE("bruhat order is a partial order and matches the subword oracle") {
    for (int n = 3; n <= 4; ++n) {
        const auto G = symmetric_group(n);
        for (const auto& a : G) {
            CHECK(bruhat_leq(a, a));
            for (const auto& b : G) {
                CHECK(bruhat_leq(a, b) == bruhat_leq_subword_oracle(a, b));
                if (bruhat_leq(a, b) && bruhat_leq(b, a)) CHECK(a == b);
                for (const auto& c : G)
                    if (bruhat_leq(a, b) && bruhat_leq(b, c)) CHECK(bruhat_leq(a, c));
            }
        }
    }
}

TEST_CASE("comparable pair count in S_3") {
    const auto G = symmetric_group(3);
    int pairs = 0;
    for (const auto& w : G)
        for (const auto& v : G)
            if (bruhat_leq(v, w)) ++pairs;
    CHECK(pairs == 19);
}

TEST_CASE("subwords") {
    const Word i4 = longest_word(4);
    CHECK(is_subword(Word(4, {1, 0, 0, 0, 2, 1}), i4));
    CHECK(is_subword(i4, i4));
    CHECK_FALSE(is_subword(Word(4, {2, 0, 0, 0, 0, 0}), i4));
    CHECK_THROWS_AS(is_subword(Word(3, {1, 0, 0}), i4), std::invalid_argument);
}

TEST_CASE("serialization round trips") {
    CHECK(Permutation({3, 2, 1}).str() == "[3,2,1]");
    CHECK(Permutation::parse("[3,2,1]") == Permutation({3, 2, 1}));
    CHECK(Word(4, {1, 0, 0, 0, 2, 1}).str() == "1,0,0,0,2,1");
    CHECK(Word::parse("1,2,1,3,2,1", 4) == longest_word(4));
    CHECK(IndexSet({2, 3}).str() == "(2,3)");
    CHECK(IndexSet({2, 3}).tilde(4) == IndexSet({2, 3}));
    CHECK(IndexSet({1, 2}).tilde(4) == IndexSet({3, 4}));
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet({2, 1}), std::invalid_argument);
}
