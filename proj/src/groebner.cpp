#include "jetcalc/groebner.hpp"

#include "jetcalc/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace jetcalc {

Ideal::Ideal(int arity_, std::vector<Polynomial> gens_, VarNames names_)
    : arity(arity_), names(std::move(names_)) {
    for (auto& g : gens_) {
        if (g.arity() != arity)
            throw ArityError("algebra: generator arity mismatch in ideal");
        if (!g.is_zero()) gens.push_back(names ? g.with_names(names) : g);
    }
    if (!names && !gens.empty()) names = gens[0].names();
}

bool GroebnerBasis::contains_one() const {
    for (const auto& g : basis)
        if (!g.is_zero() && g.degree() == 0) return true;
    return false;
}

namespace {

struct OrderGreater {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

// Terms sorted descending under the active order; t[0] is the leading term.
struct GPoly {
    std::vector<Term> t;
    int sugar = 0;
    const Term& lt() const { return t[0]; }
};

using Work = std::map<Monomial, Rational, OrderGreater>;

void work_add(Work& w, const Monomial& m, const Rational& c) {
    auto [it, fresh] = w.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) w.erase(it);
    } else if (it->second == 0) {
        w.erase(it);
    }
}

void check_degree(const Monomial& m, const Limits& limits) {
    if (m.degree() > limits.max_degree)
        throw ResourceLimitError("algebra: term degree " + std::to_string(m.degree()) +
                                 " exceeds cap " + std::to_string(limits.max_degree));
}

std::vector<Term> sorted_terms(const Polynomial& p, const MonomialOrder& order) {
    std::vector<Term> t = p.terms();
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.mon, b.mon); });
    return t;
}

// Full normal form; emits the remainder in descending term order. Updates the
// sugar bound through the reductions taken.
std::vector<Term> reduce_full(const std::vector<Term>& f, const std::vector<GPoly>& basis,
                              const std::vector<int>& active, const MonomialOrder& order,
                              const Limits& limits, int& sugar) {
    Work w{OrderGreater{&order}};
    for (const auto& t : f) work_add(w, t.mon, t.coeff);
    std::vector<Term> rem;
    while (!w.empty()) {
        auto it = w.begin();
        Monomial m = it->first;
        Rational c = it->second;
        const GPoly* red = nullptr;
        for (int gi : active)
            if (basis[gi].lt().mon.divides(m)) {
                red = &basis[gi];
                break;
            }
        if (!red) {
            rem.push_back(Term{m, c});
            w.erase(it);
            continue;
        }
        Monomial q = m.quotient_by(red->lt().mon);
        Rational factor = c / red->lt().coeff;
        sugar = std::max(sugar, red->sugar + q.degree());
        w.erase(it);
        for (std::size_t k = 1; k < red->t.size(); ++k) {
            Monomial mm = q * red->t[k].mon;
            check_degree(mm, limits);
            work_add(w, mm, -(factor * red->t[k].coeff));
        }
    }
    return rem;
}

struct Pair {
    int sugar;
    Monomial lcm_mon;
    int i, j;
};

struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.lcm_mon != b.lcm_mon) return order->less(a.lcm_mon, b.lcm_mon);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

GPoly make_gpoly(const Polynomial& p, const MonomialOrder& order) {
    GPoly g;
    g.t = sorted_terms(p, order);
    g.sugar = p.degree();
    Rational lc = g.t[0].coeff;
    if (lc != 1)
        for (auto& t : g.t) t.coeff /= lc;
    return g;
}

Polynomial to_polynomial(const std::vector<Term>& t, int arity, const VarNames& names) {
    return Polynomial::from_terms(arity, t, names);
}

} // namespace

GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                             const Limits& limits) {
    if (order.kind() == MonomialOrder::Kind::Block &&
        static_cast<int>(order.mask().size()) != ideal.arity)
        throw ArityError("algebra: block order mask does not match ideal arity");

    std::vector<GPoly> basis;
    std::set<Pair, PairLess> pairs{PairLess{&order}};
    std::size_t processed = 0;

    auto push_element = [&](GPoly g) {
        int added = static_cast<int>(basis.size());
        basis.push_back(std::move(g));
        if (basis.size() > limits.max_basis)
            throw ResourceLimitError("algebra: basis size exceeds cap " +
                                     std::to_string(limits.max_basis));
        for (int i = 0; i < added; ++i) {
            Monomial l = lcm(basis[i].lt().mon, basis[added].lt().mon);
            int sugar = std::max(basis[i].sugar + l.degree() - basis[i].lt().mon.degree(),
                                 basis[added].sugar + l.degree() - basis[added].lt().mon.degree());
            pairs.insert(Pair{sugar, std::move(l), i, added});
        }
    };

    for (const auto& g : ideal.gens) push_element(make_gpoly(g, order));

    std::vector<int> all_active;
    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        if (++processed > limits.max_pairs)
            throw ResourceLimitError("algebra: pair count exceeds cap " +
                                     std::to_string(limits.max_pairs));

        const Monomial& li = basis[p.i].lt().mon;
        const Monomial& lj = basis[p.j].lt().mon;
        if (gcd(li, lj).is_one()) continue; // disjoint leading supports reduce to zero
        bool chained = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            const Monomial& lk = basis[k].lt().mon;
            // strict-divisor chain test; both sub-lcms properly below this one
            if (lk.divides(p.lcm_mon) && lcm(li, lk) != p.lcm_mon && lcm(lk, lj) != p.lcm_mon)
                chained = true;
        }
        if (chained) continue;

        // s-polynomial of the pair
        Work w{OrderGreater{&order}};
        Monomial qi = p.lcm_mon.quotient_by(li);
        Monomial qj = p.lcm_mon.quotient_by(lj);
        for (const auto& t : basis[p.i].t) {
            Monomial m = qi * t.mon;
            check_degree(m, limits);
            work_add(w, m, t.coeff / basis[p.i].lt().coeff);
        }
        for (const auto& t : basis[p.j].t) {
            Monomial m = qj * t.mon;
            check_degree(m, limits);
            work_add(w, m, -(t.coeff / basis[p.j].lt().coeff));
        }
        std::vector<Term> s;
        s.reserve(w.size());
        for (auto& [m, c] : w) s.push_back(Term{m, c});

        int sugar = p.sugar;
        all_active.resize(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) all_active[i] = static_cast<int>(i);
        std::vector<Term> rem = reduce_full(s, basis, all_active, order, limits, sugar);
        if (rem.empty()) continue;
        GPoly g;
        g.t = std::move(rem);
        g.sugar = std::max(sugar, g.t[0].mon.degree());
        Rational lc = g.t[0].coeff;
        if (lc != 1)
            for (auto& t : g.t) t.coeff /= lc;
        push_element(std::move(g));
    }

    // minimal basis: drop elements whose leading monomial another one divides
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        bool redundant = false;
        for (int j = 0; j < static_cast<int>(basis.size()) && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& a = basis[j].lt().mon;
            const Monomial& b = basis[i].lt().mon;
            if (a.divides(b) && (a != b || j < i)) redundant = true;
        }
        if (!redundant) keep.push_back(i);
    }

    // tail reduction of each survivor against the others
    std::vector<GPoly> reduced;
    for (std::size_t idx = 0; idx < keep.size(); ++idx) {
        std::vector<int> others;
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (j != idx) others.push_back(keep[j]);
        int sugar = basis[keep[idx]].sugar;
        std::vector<Term> rem =
            reduce_full(basis[keep[idx]].t, basis, others, order, limits, sugar);
        // leading monomial survives tail reduction by minimality
        GPoly g;
        g.t = std::move(rem);
        g.sugar = sugar;
        Rational lc = g.t[0].coeff;
        if (lc != 1)
            for (auto& t : g.t) t.coeff /= lc;
        reduced.push_back(std::move(g));
    }

    std::sort(reduced.begin(), reduced.end(),
              [&](const GPoly& a, const GPoly& b) { return order.less(a.lt().mon, b.lt().mon); });

    GroebnerBasis gb;
    gb.arity = ideal.arity;
    gb.names = ideal.names;
    gb.order = order;
    for (const auto& g : reduced) gb.basis.push_back(to_polynomial(g.t, ideal.arity, ideal.names));
    return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb, const Limits& limits) {
    if (p.arity() != gb.arity)
        throw ArityError("algebra: polynomial arity does not match basis");
    std::vector<GPoly> basis;
    std::vector<int> active;
    for (const auto& g : gb.basis) {
        active.push_back(static_cast<int>(basis.size()));
        basis.push_back(make_gpoly(g, gb.order));
    }
    int sugar = std::max(0, p.degree());
    std::vector<Term> rem =
        reduce_full(sorted_terms(p, gb.order), basis, active, gb.order, limits, sugar);
    return Polynomial::from_terms(p.arity(), rem, gb.names ? gb.names : p.names());
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb, const Limits& limits) {
    return normal_form(p, gb, limits).is_zero();
}

Ideal eliminate(const Ideal& ideal, const std::vector<int>& drop, const Limits& limits) {
    std::vector<char> mask(ideal.arity, 0);
    for (int v : drop) {
        if (v < 0 || v >= ideal.arity)
            throw ArityError("algebra: eliminated variable index out of range");
        mask[v] = 1;
    }
    GroebnerBasis gb = groebner_basis(ideal, MonomialOrder::block(mask), limits);

    std::vector<int> kept;
    for (int i = 0; i < ideal.arity; ++i)
        if (!mask[i]) kept.push_back(i);
    VarNames kept_names;
    {
        std::vector<std::string> ns;
        for (int i : kept) ns.push_back(var_name(ideal.names, ideal.arity, i));
        kept_names = make_names(std::move(ns));
    }

    std::vector<Polynomial> out;
    for (const auto& g : gb.basis) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (int v : drop)
                if (t.mon.exps[v] != 0) {
                    pure = false;
                    break;
                }
        if (!pure) continue;
        std::vector<Term> ts;
        for (const auto& t : g.terms()) {
            Monomial m = Monomial::one(static_cast<int>(kept.size()));
            for (std::size_t k = 0; k < kept.size(); ++k) m.exps[k] = t.mon.exps[kept[k]];
            ts.push_back(Term{std::move(m), t.coeff});
        }
        out.push_back(Polynomial::from_terms(static_cast<int>(kept.size()), std::move(ts), kept_names));
    }
    return Ideal(static_cast<int>(kept.size()), std::move(out), kept_names);
}

std::vector<int> independent_variables(const GroebnerBasis& gb) {
    const int arity = gb.arity;
    if (arity > 30)
        throw ResourceLimitError("algebra: dimension staircase limited to 30 variables");
    std::vector<unsigned> supports;
    for (const auto& g : gb.basis) {
        unsigned s = 0;
        const Monomial& m = g.leading_term(gb.order).mon;
        for (int i = 0; i < arity; ++i)
            if (m.exps[i] > 0) s |= 1u << i;
        supports.push_back(s);
    }
    unsigned best = 0;
    int best_size = 0;
    const unsigned all = (arity == 30) ? 0x3fffffffu : ((1u << arity) - 1u);
    for (unsigned set = 0;; ++set) {
        int size = __builtin_popcount(set);
        if (size > best_size) {
            bool independent = true;
            for (unsigned s : supports)
                if ((s & ~set) == 0) {
                    independent = false;
                    break;
                }
            if (independent) {
                best = set;
                best_size = size;
            }
        }
        if (set == all) break;
    }
    std::vector<int> vars;
    for (int i = 0; i < arity; ++i)
        if (best & (1u << i)) vars.push_back(i);
    return vars;
}

int ideal_dimension(const Ideal& ideal, const Limits& limits) {
    GroebnerBasis gb = groebner_basis(ideal, MonomialOrder::degrevlex(), limits);
    if (gb.contains_one()) return -1;
    return static_cast<int>(independent_variables(gb).size());
}

bool ideal_equal(const Ideal& a, const Ideal& b, const Limits& limits) {
    if (a.arity != b.arity) return false;
    GroebnerBasis ga = groebner_basis(a, MonomialOrder::degrevlex(), limits);
    GroebnerBasis gb = groebner_basis(b, MonomialOrder::degrevlex(), limits);
    return ga.basis == gb.basis;
}

} // namespace jetcalc
