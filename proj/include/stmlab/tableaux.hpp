#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stmlab/poly.hpp"
#include "stmlab/weyl.hpp"

namespace stm {

// A shape (j, m): a reduced subword of the fixed longest word together with
// a multiplicity per position (zero wherever the letter is omitted).
struct Shape {
    Word word;
    std::vector<int> mult;

    Shape(Word w, std::vector<int> m); // validates the invariants
    int n() const { return word.n(); }
    int total_rows() const;
    std::string mult_str() const; // "1,1,1"
};

// Column sets K^(r) = s_{j_1}...s_{j_r}{1..j_r}; empty where j_r = 0.
std::vector<IndexSet> column_sets(const Word& j);

// The realized block data of a shape: one block per word position, carrying
// its column set and multiplicity.  The side records whether the tableau
// polynomials live on the upper-triangular group (primal) or the
// lower-triangular group (opposite, after the 180-degree rotation); for the
// opposite side the blocks are stored already reversed and tilde-reflected.
struct BlockShape {
    int n = 0;
    Restriction side = Restriction::upper;
    Word word;                    // the primal word, also for opposite shapes
    std::vector<int> mult;
    std::vector<IndexSet> cols;

    static BlockShape of(const Shape& s);
    BlockShape scaled(int p) const;
    BlockShape opposite() const;
    int length() const { return static_cast<int>(cols.size()); }
    int total_rows() const;

    bool operator==(const BlockShape&) const = default;
};

// A product of minors: one row per factor, listed bottom-to-top with block
// positions weakly increasing; row (pos, R) stands for the minor on rows R
// and columns cols[pos].
struct Tableau {
    std::shared_ptr<const BlockShape> shape;
    std::vector<std::pair<int, IndexSet>> rows; // (0-based block position, rowset)

    bool operator==(const Tableau& o) const { return *shape == *o.shape && rows == o.rows; }
};

// All rowsets admissible in a block with column set K: R dominated by K on
// the primal side, R dominating K on the opposite side.  Lexicographic order.
std::vector<IndexSet> admissible_rows(const IndexSet& K, int n, Restriction side);

// Ordered generator count prod_r (#admissible)^{m_r}.
long long count_ordered_tableaux(const BlockShape& s);

// All tableaux with every within-block ordering (the ordered count above).
std::vector<Tableau> enumerate_tableaux(const std::shared_ptr<const BlockShape>& s);

// One tableau per within-block row multiset: the straight arrangement when
// one exists, otherwise the lexicographically smallest arrangement.
std::vector<Tableau> enumerate_tableaux_dedup(const std::shared_ptr<const BlockShape>& s);

// The straight representatives (at most one per multiset; uniqueness is a
// verified property, see the unit tests).
std::vector<Tableau> enumerate_straight(const std::shared_ptr<const BlockShape>& s);

// A within-block row multiset: per block, the sorted list of its rowsets.
using RowMultiset = std::vector<std::vector<IndexSet>>;
std::vector<RowMultiset> enumerate_row_multisets(const BlockShape& s);
Tableau assemble(const std::shared_ptr<const BlockShape>& s, const RowMultiset& rows);

// First straight arrangement of the multiset (product order over per-block
// permutations), if any; arrangement_count receives the number of straight
// arrangements when non-null.
std::optional<Tableau> straight_arrangement(const std::shared_ptr<const BlockShape>& s,
                                            const RowMultiset& rows,
                                            int* arrangement_count = nullptr);

// Sparse grid view: (grid row a, column b) -> entry, rows counted from the
// bottom starting at 1.
std::map<std::pair<int, int>, int> grid_of(const Tableau& t);

// Column condition on the grid: if two occupied cells (a,k) below (b,k)
// carry entry(b,k) > entry(a,k), the cell (b,k-1) must exist and carry an
// entry weakly larger than entry(a,k).  All pairs in a column are checked,
// not only adjacent ones.
bool is_straight(const Tableau& t);

// 180-degree rotation with entries r -> n+1-r; maps a shape onto its
// opposite-side shape and is an involution.
Tableau involution(const Tableau& t);

// Grid text: header "shape: j=<word>; m=<mult>[; side=opposite]" followed by
// one line per grid row (top row first), "." for empty cells.
std::string render(const Tableau& t);
Tableau parse_grid(const std::string& text, int n);

} // namespace stm
