#pragma once

#include "jetcalc/monomial.hpp"

#include <string>
#include <vector>

namespace jetcalc {

// Monomial orders: degrevlex (default everywhere), lex, and a block
// elimination order. Block compares the masked variables first (degree, then
// reverse lexicographic within the mask), so masked variables are eliminated.
class MonomialOrder {
public:
    enum class Kind { Degrevlex, Lex, Block };

    static MonomialOrder degrevlex() { return MonomialOrder(Kind::Degrevlex, {}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    static MonomialOrder block(std::vector<char> lead_mask) {
        return MonomialOrder(Kind::Block, std::move(lead_mask));
    }

    Kind kind() const { return kind_; }
    const std::vector<char>& mask() const { return mask_; }
    std::string name() const;

    // Strict total order, a < b. Arity of both operands must match, and for
    // Block must equal the mask length.
    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

    bool operator==(const MonomialOrder&) const = default;

private:
    MonomialOrder(Kind k, std::vector<char> m) : kind_(k), mask_(std::move(m)) {}
    Kind kind_;
    std::vector<char> mask_;
};

} // namespace jetcalc
