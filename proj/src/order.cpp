#include "jetcalc/order.hpp"

#include "jetcalc/errors.hpp"

namespace jetcalc {
namespace {

// a < b under degrevlex restricted to positions where take(i) holds.
template <class Take>
bool drl_less(const Monomial& a, const Monomial& b, Take take) {
    int da = 0, db = 0;
    int n = a.arity();
    for (int i = 0; i < n; ++i)
        if (take(i)) {
            da += a.exps[i];
            db += b.exps[i];
        }
    if (da != db) return da < db;
    for (int i = n - 1; i >= 0; --i)
        if (take(i) && a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    return false;
}

} // namespace

std::string MonomialOrder::name() const {
    switch (kind_) {
    case Kind::Degrevlex: return "degrevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: return "block";
    }
    return "?";
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    if (a.arity() != b.arity())
        throw ArityError("algebra: monomial arity mismatch in order comparison");
    switch (kind_) {
    case Kind::Degrevlex:
        return drl_less(a, b, [](int) { return true; });
    case Kind::Lex:
        for (int i = 0; i < a.arity(); ++i)
            if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
        return false;
    case Kind::Block: {
        if (static_cast<int>(mask_.size()) != a.arity())
            throw ArityError("algebra: block order mask length mismatch");
        if (drl_less(a, b, [&](int i) { return mask_[i] != 0; })) return true;
        if (drl_less(b, a, [&](int i) { return mask_[i] != 0; })) return false;
        return drl_less(a, b, [&](int i) { return mask_[i] == 0; });
    }
    }
    return false;
}

} // namespace jetcalc
