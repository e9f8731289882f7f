#include "stmlab/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stm {

std::string var_str(VarId v) {
    std::ostringstream os;
    os << "x[" << var_row(v) << ',' << var_col(v) << ']';
    return os.str();
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial out;
    out.e_.reserve(e_.size() + o.e_.size());
    size_t ia = 0, ib = 0;
    while (ia < e_.size() || ib < o.e_.size()) {
        if (ib == o.e_.size() || (ia < e_.size() && e_[ia].first < o.e_[ib].first)) {
            out.e_.push_back(e_[ia++]);
        } else if (ia == e_.size() || o.e_[ib].first < e_[ia].first) {
            out.e_.push_back(o.e_[ib++]);
        } else {
            out.e_.emplace_back(e_[ia].first, e_[ia].second + o.e_[ib].second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

Monomial Monomial::times_var(int r, int c, int e) const {
    Monomial v;
    v.e_.emplace_back(var_id(r, c), e);
    return times(v);
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : e_) d += e;
    return d;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    size_t ia = 0, ib = 0;
    while (ia < a.e_.size() || ib < b.e_.size()) {
        if (ib == b.e_.size()) return 1;  // a has a variable b lacks (higher precedence wins)
        if (ia == a.e_.size()) return -1;
        const VarId va = a.e_[ia].first, vb = b.e_[ib].first;
        if (va < vb) return 1;  // a has positive exponent at the more significant variable
        if (vb < va) return -1;
        if (a.e_[ia].second != b.e_[ib].second)
            return a.e_[ia].second > b.e_[ib].second ? 1 : -1;
        ++ia;
        ++ib;
    }
    return 0;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    for (size_t k = 0; k < e_.size(); ++k) {
        if (k) os << '*';
        os << var_str(e_[k].first);
        if (e_[k].second > 1) os << '^' << e_[k].second;
    }
    return os.str();
}

Polynomial Polynomial::constant(const mpz_class& c) {
    Polynomial p;
    p.add_term(Monomial(), c);
    return p;
}

Polynomial Polynomial::variable(int r, int c) {
    Polynomial p;
    p.add_term(Monomial().times_var(r, c), 1);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Polynomial Polynomial::plus(const Polynomial& o) const { return lin_comb(1, *this, 1, o); }
Polynomial Polynomial::minus(const Polynomial& o) const { return lin_comb(1, *this, -1, o); }

Polynomial Polynomial::times(const Polynomial& o) const {
    Polynomial out;
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial Polynomial::times(const mpz_class& c) const {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [m, a] : t_) out.t_.emplace_hint(out.t_.end(), m, a * c);
    return out;
}

Polynomial Polynomial::negated() const { return times(mpz_class(-1)); }

std::pair<Monomial, mpz_class> Polynomial::leading_term() const {
    if (t_.empty()) throw std::domain_error("leading_term: the zero polynomial has no leading term");
    return *t_.begin();
}

mpq_class Polynomial::evaluate(const ExactMatrix& X) const {
    mpq_class total = 0;
    for (const auto& [m, c] : t_) {
        mpq_class v = c;
        for (const auto& [var, e] : m.factors()) {
            const int r = var_row(var), col = var_col(var);
            if (r > X.rows() || col > X.cols())
                throw std::invalid_argument("evaluate: variable outside matrix dimensions");
            const mpq_class& x = X.at(r - 1, col - 1);
            for (int k = 0; k < e; ++k) v *= x;
        }
        total += v;
    }
    return total;
}

std::string Polynomial::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        const bool neg = c < 0;
        mpz_class a = neg ? mpz_class(-c) : c;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (a != 1 || m.is_one()) {
            os << a.get_str();
            if (!m.is_one()) os << '*';
        }
        if (!m.is_one()) os << m.str();
    }
    return os.str();
}

Polynomial lin_comb(const mpz_class& a, const Polynomial& p, const mpz_class& b, const Polynomial& q) {
    Polynomial out;
    auto ia = p.terms().begin();
    auto ib = q.terms().begin();
    TermOrderGreater before;
    while (ia != p.terms().end() || ib != q.terms().end()) {
        if (ib == q.terms().end() || (ia != p.terms().end() && before(ia->first, ib->first))) {
            out.add_term(ia->first, a * ia->second);
            ++ia;
        } else if (ia == p.terms().end() || before(ib->first, ia->first)) {
            out.add_term(ib->first, b * ib->second);
            ++ib;
        } else {
            out.add_term(ia->first, a * ia->second + b * ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

namespace {
int parity_of(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inv;
    return inv % 2 ? -1 : 1;
}
} // namespace

Polynomial minor_poly(const IndexSet& R, const IndexSet& C, Restriction rest) {
    if (R.size() != C.size()) throw std::invalid_argument("minor_poly: |R| != |C|");
    const int d = R.size();
    Polynomial out;
    if (d == 0) return Polynomial::constant(1);
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool keep = true;
        Monomial m;
        for (int k = 0; k < d && keep; ++k) {
            const int r = R[k], c = C[perm[static_cast<size_t>(k)]];
            if ((rest == Restriction::upper && r > c) || (rest == Restriction::lower && r < c))
                keep = false;
            else
                m = m.times_var(r, c);
        }
        if (keep) out.add_term(m, parity_of(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Polynomial restrict_to(const Polynomial& p, Restriction rest) {
    if (rest == Restriction::none) return p;
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        bool keep = true;
        for (const auto& [var, e] : m.factors()) {
            const int r = var_row(var), col = var_col(var);
            if ((rest == Restriction::upper && r > col) || (rest == Restriction::lower && r < col)) {
                keep = false;
                break;
            }
        }
        if (keep) out.add_term(m, c);
    }
    return out;
}

} // namespace stm
