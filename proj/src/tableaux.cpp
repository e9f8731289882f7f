#include "stmlab/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace stm {

Shape::Shape(Word w, std::vector<int> m) : word(std::move(w)), mult(std::move(m)) {
    if (static_cast<int>(mult.size()) != word.length())
        throw std::invalid_argument("Shape: multiplicity vector must match the word length");
    if (!is_subword(word, longest_word(word.n())))
        throw std::invalid_argument("Shape: word must be a subword of the longest word");
    if (!is_reduced(word)) throw std::invalid_argument("Shape: word must be reduced");
    for (int r = 1; r <= word.length(); ++r) {
        const int m_r = mult[static_cast<size_t>(r - 1)];
        if (m_r < 0) throw std::invalid_argument("Shape: multiplicities must be nonnegative");
        if (word.letter(r) == 0 && m_r != 0)
            throw std::invalid_argument("Shape: multiplicity must vanish on omitted letters");
    }
}

int Shape::total_rows() const {
    int t = 0;
    for (int m : mult) t += m;
    return t;
}

std::string Shape::mult_str() const {
    std::ostringstream os;
    for (size_t k = 0; k < mult.size(); ++k) {
        if (k) os << ',';
        os << mult[k];
    }
    return os.str();
}

std::vector<IndexSet> column_sets(const Word& j) {
    if (!is_subword(j, longest_word(j.n())))
        throw std::invalid_argument("column_sets: word must be a subword of the longest word");
    std::vector<IndexSet> out;
    Permutation p = Permutation::identity(j.n());
    for (int r = 1; r <= j.length(); ++r) {
        if (j.letter(r) != 0) p = compose(p, Permutation::simple_reflection(j.n(), j.letter(r)));
        if (j.letter(r) == 0) {
            out.emplace_back();
        } else {
            std::vector<int> v;
            for (int x = 1; x <= j.letter(r); ++x) v.push_back(p(x));
            std::sort(v.begin(), v.end());
            out.emplace_back(std::move(v));
        }
    }
    return out;
}

BlockShape BlockShape::of(const Shape& s) {
    BlockShape b;
    b.n = s.n();
    b.side = Restriction::upper;
    b.word = s.word;
    b.mult = s.mult;
    b.cols = column_sets(s.word);
    return b;
}

BlockShape BlockShape::scaled(int p) const {
    if (p < 0) throw std::invalid_argument("BlockShape::scaled: power must be nonnegative");
    BlockShape b = *this;
    for (int& m : b.mult) m *= p;
    return b;
}

BlockShape BlockShape::opposite() const {
    BlockShape b;
    b.n = n;
    b.side = (side == Restriction::upper) ? Restriction::lower : Restriction::upper;
    b.word = word;
    b.mult.assign(mult.rbegin(), mult.rend());
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) b.cols.push_back(it->tilde(n));
    return b;
}

int BlockShape::total_rows() const {
    int t = 0;
    for (int m : mult) t += m;
    return t;
}

std::vector<IndexSet> admissible_rows(const IndexSet& K, int n, Restriction side) {
    std::vector<IndexSet> out;
    const int d = K.size();
    std::vector<int> pick(static_cast<size_t>(d));
    std::function<void(int, int)> rec = [&](int next, int k) {
        if (k == d) {
            IndexSet R(pick);
            const bool ok = (side == Restriction::upper) ? dominates(K, R) : dominates(R, K);
            if (ok) out.push_back(std::move(R));
            return;
        }
        for (int x = next; x <= n; ++x) {
            pick[static_cast<size_t>(k)] = x;
            rec(x + 1, k + 1);
        }
    };
    rec(1, 0);
    return out;
}

long long count_ordered_tableaux(const BlockShape& s) {
    long long total = 1;
    for (int r = 0; r < s.length(); ++r) {
        const int m = s.mult[static_cast<size_t>(r)];
        if (m == 0) continue;
        const long long a = static_cast<long long>(admissible_rows(s.cols[static_cast<size_t>(r)], s.n, s.side).size());
        for (int k = 0; k < m; ++k) total *= a;
    }
    return total;
}

namespace {

// Per-block admissible lists for the blocks with positive multiplicity.
struct BlockData {
    std::vector<int> pos;                    // block positions with mult > 0
    std::vector<int> mult;                   // their multiplicities
    std::vector<std::vector<IndexSet>> adm;  // their admissible rowsets
};

BlockData block_data(const BlockShape& s) {
    BlockData d;
    for (int r = 0; r < s.length(); ++r) {
        const int m = s.mult[static_cast<size_t>(r)];
        if (m == 0) continue;
        d.pos.push_back(r);
        d.mult.push_back(m);
        d.adm.push_back(admissible_rows(s.cols[static_cast<size_t>(r)], s.n, s.side));
    }
    return d;
}

} // namespace

std::vector<Tableau> enumerate_tableaux(const std::shared_ptr<const BlockShape>& s) {
    const BlockData d = block_data(*s);
    std::vector<Tableau> out;
    std::vector<std::vector<IndexSet>> chosen(d.pos.size());
    std::function<void(size_t)> rec_block = [&](size_t b) {
        if (b == d.pos.size()) {
            Tableau t;
            t.shape = s;
            for (size_t k = 0; k < d.pos.size(); ++k)
                for (const IndexSet& R : chosen[k]) t.rows.emplace_back(d.pos[k], R);
            out.push_back(std::move(t));
            return;
        }
        std::vector<int> idx(static_cast<size_t>(d.mult[b]), 0);
        std::function<void(size_t)> rec_row = [&](size_t k) {
            if (k == idx.size()) {
                chosen[b].clear();
                for (int i : idx) chosen[b].push_back(d.adm[b][static_cast<size_t>(i)]);
                rec_block(b + 1);
                return;
            }
            for (int i = 0; i < static_cast<int>(d.adm[b].size()); ++i) {
                idx[k] = i;
                rec_row(k + 1);
            }
        };
        rec_row(0);
    };
    rec_block(0);
    return out;
}

std::vector<RowMultiset> enumerate_row_multisets(const BlockShape& s) {
    const BlockData d = block_data(s);
    std::vector<RowMultiset> out;
    RowMultiset cur(d.pos.size());
    std::function<void(size_t)> rec_block = [&](size_t b) {
        if (b == d.pos.size()) {
            // Expand back to one (possibly empty) entry per block position.
            RowMultiset full(static_cast<size_t>(s.length()));
            for (size_t k = 0; k < d.pos.size(); ++k) full[static_cast<size_t>(d.pos[k])] = cur[k];
            out.push_back(std::move(full));
            return;
        }
        std::vector<int> idx(static_cast<size_t>(d.mult[b]), 0);
        std::function<void(size_t, int)> rec_row = [&](size_t k, int from) {
            if (k == idx.size()) {
                cur[b].clear();
                for (int i : idx) cur[b].push_back(d.adm[b][static_cast<size_t>(i)]);
                rec_block(b + 1);
                return;
            }
            for (int i = from; i < static_cast<int>(d.adm[b].size()); ++i) {
                idx[k] = i;
                rec_row(k + 1, i); // non-decreasing indices = multiset
            }
        };
        rec_row(0, 0);
    };
    rec_block(0);
    return out;
}

Tableau assemble(const std::shared_ptr<const BlockShape>& s, const RowMultiset& rows) {
    Tableau t;
    t.shape = s;
    for (size_t r = 0; r < rows.size(); ++r)
        for (const IndexSet& R : rows[r]) t.rows.emplace_back(static_cast<int>(r), R);
    return t;
}

std::optional<Tableau> straight_arrangement(const std::shared_ptr<const BlockShape>& s,
                                            const RowMultiset& rows,
                                            int* arrangement_count) {
    // Iterate the product of per-block distinct orderings.
    RowMultiset arr = rows;
    for (auto& block : arr) std::sort(block.begin(), block.end());
    std::optional<Tableau> found;
    int count = 0;
    std::function<void(size_t)> rec = [&](size_t b) {
        if (b == arr.size()) {
            Tableau t = assemble(s, arr);
            if (is_straight(t)) {
                ++count;
                if (!found) found = std::move(t);
            }
            return;
        }
        if (arr[b].size() <= 1) {
            rec(b + 1);
            return;
        }
        std::vector<IndexSet> base = arr[b];
        std::sort(base.begin(), base.end());
        arr[b] = base;
        do {
            rec(b + 1);
        } while (std::next_permutation(arr[b].begin(), arr[b].end()));
        arr[b] = std::move(base);
    };
    rec(0);
    if (arrangement_count) *arrangement_count = count;
    return found;
}

std::vector<Tableau> enumerate_tableaux_dedup(const std::shared_ptr<const BlockShape>& s) {
    std::vector<Tableau> out;
    for (const RowMultiset& ms : enumerate_row_multisets(*s)) {
        if (auto st = straight_arrangement(s, ms))
            out.push_back(std::move(*st));
        else {
            RowMultiset sorted = ms;
            for (auto& block : sorted) std::sort(block.begin(), block.end());
            out.push_back(assemble(s, sorted));
        }
    }
    return out;
}

std::vector<Tableau> enumerate_straight(const std::shared_ptr<const BlockShape>& s) {
    std::vector<Tableau> out;
    for (const RowMultiset& ms : enumerate_row_multisets(*s))
        if (auto st = straight_arrangement(s, ms)) out.push_back(std::move(*st));
    return out;
}

std::map<std::pair<int, int>, int> grid_of(const Tableau& t) {
    std::map<std::pair<int, int>, int> g;
    int a = 0;
    for (const auto& [pos, R] : t.rows) {
        ++a;
        const IndexSet& K = t.shape->cols[static_cast<size_t>(pos)];
        if (K.size() != R.size())
            throw std::invalid_argument("grid_of: rowset size must match the block column set");
        for (int k = 0; k < K.size(); ++k) g[{a, K[k]}] = R[k];
    }
    return g;
}

bool is_straight(const Tableau& t) {
    // Per grid row: occupied columns with entries.
    const int H = static_cast<int>(t.rows.size());
    std::vector<std::vector<std::pair<int, int>>> row(static_cast<size_t>(H)); // (col, entry)
    std::vector<std::vector<int>> entry_at(static_cast<size_t>(H),
                                           std::vector<int>(static_cast<size_t>(t.shape->n) + 1, 0));
    for (int a = 0; a < H; ++a) {
        const auto& [pos, R] = t.rows[static_cast<size_t>(a)];
        const IndexSet& K = t.shape->cols[static_cast<size_t>(pos)];
        for (int k = 0; k < K.size(); ++k) {
            row[static_cast<size_t>(a)].emplace_back(K[k], R[k]);
            entry_at[static_cast<size_t>(a)][static_cast<size_t>(K[k])] = R[k];
        }
    }
    for (int a = 0; a < H; ++a) {
        for (int b = a + 1; b < H; ++b) {
            for (const auto& [k, ea] : row[static_cast<size_t>(a)]) {
                const int eb = entry_at[static_cast<size_t>(b)][static_cast<size_t>(k)];
                if (eb == 0 || eb <= ea) continue;
                // Strict increase upward needs a weakly larger witness to the
                // left in the upper row.
                const int wit = (k > 1) ? entry_at[static_cast<size_t>(b)][static_cast<size_t>(k - 1)] : 0;
                if (wit == 0 || wit < ea) return false;
            }
        }
    }
    return true;
}

Tableau involution(const Tableau& t) {
    auto opp = std::make_shared<const BlockShape>(t.shape->opposite());
    Tableau out;
    out.shape = opp;
    const int L = t.shape->length();
    for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
        out.rows.emplace_back(L - 1 - it->first, it->second.tilde(t.shape->n));
    return out;
}

std::string render(const Tableau& t) {
    std::ostringstream os;
    os << "shape: j=" << t.shape->word.str() << "; m=";
    for (size_t k = 0; k < t.shape->mult.size(); ++k) {
        if (k) os << ',';
        os << t.shape->mult[k];
    }
    if (t.shape->side == Restriction::lower) os << "; side=opposite";
    const auto g = grid_of(t);
    const int H = static_cast<int>(t.rows.size());
    for (int a = H; a >= 1; --a) {
        os << '\n';
        for (int c = 1; c <= t.shape->n; ++c) {
            if (c > 1) os << ' ';
            auto it = g.find({a, c});
            if (it == g.end())
                os << '.';
            else
                os << it->second;
        }
    }
    return os.str();
}

Tableau parse_grid(const std::string& text, int n) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header) || header.rfind("shape: j=", 0) != 0)
        throw std::invalid_argument("parse_grid: missing shape header");
    std::string rest = header.substr(9);
    const auto semi = rest.find("; m=");
    if (semi == std::string::npos) throw std::invalid_argument("parse_grid: missing multiplicities");
    const std::string word_text = rest.substr(0, semi);
    std::string mult_text = rest.substr(semi + 4);
    bool opposite = false;
    if (const auto side = mult_text.find("; side=opposite"); side != std::string::npos) {
        opposite = true;
        mult_text = mult_text.substr(0, side);
    }
    Word w = Word::parse(word_text, n);
    std::vector<int> mult;
    {
        std::istringstream ms(mult_text);
        std::string tok;
        while (std::getline(ms, tok, ',')) mult.push_back(std::stoi(tok));
    }
    BlockShape base = BlockShape::of(Shape(w, mult));
    auto shape = std::make_shared<const BlockShape>(opposite ? base.opposite() : base);

    std::vector<std::vector<int>> lines; // per grid line: entry or 0 per column
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<int> cells;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) cells.push_back(tok == "." ? 0 : std::stoi(tok));
        if (static_cast<int>(cells.size()) != n)
            throw std::invalid_argument("parse_grid: wrong number of cells in a row");
        lines.push_back(std::move(cells));
    }
    if (static_cast<int>(lines.size()) != shape->total_rows())
        throw std::invalid_argument("parse_grid: wrong number of grid rows");
    std::reverse(lines.begin(), lines.end()); // bottom-up

    Tableau t;
    t.shape = shape;
    size_t a = 0;
    for (int pos = 0; pos < shape->length(); ++pos) {
        for (int k = 0; k < shape->mult[static_cast<size_t>(pos)]; ++k, ++a) {
            const IndexSet& K = shape->cols[static_cast<size_t>(pos)];
            std::vector<int> R;
            for (int c = 1; c <= n; ++c) {
                const int e = lines[a][static_cast<size_t>(c - 1)];
                if (K.contains(c)) {
                    if (e < 1 || e > n)
                        throw std::invalid_argument("parse_grid: entry missing or out of range");
                    R.push_back(e);
                } else if (e != 0) {
                    throw std::invalid_argument("parse_grid: occupancy does not match the column set");
                }
            }
            IndexSet rowset(R); // throws unless strictly increasing
            const bool ok = (shape->side == Restriction::upper) ? dominates(K, rowset)
                                                                : dominates(rowset, K);
            if (!ok) throw std::invalid_argument("parse_grid: rowset violates the dominance condition");
            t.rows.emplace_back(pos, std::move(rowset));
        }
    }
    return t;
}

} // namespace stm
