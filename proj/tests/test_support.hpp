#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "loopwitt/basefield.hpp"
#include "loopwitt/laurent.hpp"
#include "loopwitt/wittcore.hpp"

namespace loopwitt::testing {

inline BaseField F(long long p) { return BaseField::finite_prime(p); }
inline BaseField R() { return BaseField::reals(); }

inline FieldElem fe(const BaseField& k, long long v) { return FieldElem(k, v); }

inline BaseForm bform(const BaseField& k, std::initializer_list<long long> vals) {
    std::vector<SquareClass> cs;
    for (long long v : vals) cs.push_back(sq_class(FieldElem(k, v)));
    return BaseForm(k, std::move(cs));
}

/// Entry <unit * t^mask> with mask bit i-1 controlling the parity of t_i.
inline SqClassFn entry(const BaseField& k, int n, unsigned mask, long long unit) {
    std::vector<uint8_t> par(static_cast<size_t>(n), 0);
    for (int b = 0; b < n; ++b)
        if (mask & (1u << b)) par[static_cast<size_t>(b)] = 1;
    return SqClassFn(k, std::move(par), sq_class(FieldElem(k, unit)));
}

/// (unit, mask) pairs to a diagonal form.
inline DiagForm dform(const BaseField& k, int n,
                      std::initializer_list<std::pair<long long, unsigned>> es) {
    std::vector<SqClassFn> v;
    for (const auto& [u, m] : es) v.push_back(entry(k, n, m, u));
    return DiagForm(k, n, std::move(v));
}

} // namespace loopwitt::testing
