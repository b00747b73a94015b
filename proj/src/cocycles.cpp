#include "loopwitt/cocycles.hpp"

#include <numeric>

namespace loopwitt {

namespace {

constexpr size_t kMaxGroupOrder = 1u << 12; // validation is O(order^2)

size_t checked_pow(int m, int r) {
    size_t acc = 1;
    for (int i = 0; i < r; ++i) {
        acc *= static_cast<size_t>(m);
        if (acc > kMaxGroupOrder)
            fail(errc::search_space_too_large,
                 "group order m^r*e exceeds " + std::to_string(kMaxGroupOrder));
    }
    return acc;
}

} // namespace

TameGaloisGroup::TameGaloisGroup(int m, int r, int e)
    : m_(m), r_(r), e_(e), order_(checked_pow(m, r) * static_cast<size_t>(e)) {
    if (order_ > kMaxGroupOrder)
        fail(errc::search_space_too_large,
             "group order m^r*e exceeds " + std::to_string(kMaxGroupOrder));
}

TameGaloisGroup::Element TameGaloisGroup::element(size_t idx) const {
    if (idx >= order_) fail(errc::bad_input, "element index out of range");
    const size_t geo = geo_order();
    Element g;
    g.s = static_cast<int>(idx / geo);
    size_t rest = idx % geo;
    g.a.resize(static_cast<size_t>(r_));
    for (int i = 0; i < r_; ++i) {
        g.a[static_cast<size_t>(i)] = static_cast<int>(rest % static_cast<size_t>(m_));
        rest /= static_cast<size_t>(m_);
    }
    return g;
}

size_t TameGaloisGroup::index(const Element& g) const {
    if (g.a.size() != static_cast<size_t>(r_) || g.s < 0 || g.s >= e_)
        fail(errc::bad_input, "element does not belong to this group");
    size_t idx = 0;
    for (int i = r_ - 1; i >= 0; --i) {
        const int ai = g.a[static_cast<size_t>(i)];
        if (ai < 0 || ai >= m_)
            fail(errc::bad_input, "element does not belong to this group");
        idx = idx * static_cast<size_t>(m_) + static_cast<size_t>(ai);
    }
    return static_cast<size_t>(g.s) * geo_order() + idx;
}

TameGaloisGroup::Element TameGaloisGroup::identity() const {
    return Element{std::vector<int>(static_cast<size_t>(r_), 0), 0};
}

std::vector<int> TameGaloisGroup::act(int s, const std::vector<int>& b) const {
    if (s % e_ == 0 || e_ == 1) return b;
    std::vector<int> nb(b.size());
    for (size_t i = 0; i < b.size(); ++i) nb[i] = (m_ - b[i]) % m_;
    return nb;
}

TameGaloisGroup::Element TameGaloisGroup::mul(const Element& x,
                                              const Element& y) const {
    index(x); // membership validation
    index(y);
    std::vector<int> sb = act(x.s, y.a);
    Element z;
    z.a.resize(static_cast<size_t>(r_));
    for (int i = 0; i < r_; ++i)
        z.a[static_cast<size_t>(i)] =
            (x.a[static_cast<size_t>(i)] + sb[static_cast<size_t>(i)]) % m_;
    z.s = (x.s + y.s) % e_;
    return z;
}

TameGaloisGroup::Element TameGaloisGroup::inverse(const Element& x) const {
    index(x);
    // (a, s)^-1 = (-(s.a), -s); for e = 2 and s = 1, -(s.a) = a
    Element inv;
    inv.s = (e_ - x.s) % e_;
    inv.a = act(inv.s, x.a);
    for (auto& v : inv.a) v = (m_ - v) % m_;
    return inv;
}

TameGaloisGroup make_group(int m, int r, int e,
                           const std::optional<BaseField>& field) {
    if (m < 1) fail(errc::bad_exponent, "Kummer exponent m must be >= 1");
    if (r < 1) fail(errc::bad_exponent, "variable count r must be >= 1");
    if (e != 1 && e != 2)
        fail(errc::bad_exponent, "arithmetic part e must be 1 or 2");
    if (field && field->is_finite()) {
        const long long p = field->prime();
        if (std::gcd(static_cast<long long>(m), p) != 1)
            fail(errc::bad_exponent,
                 "m = " + std::to_string(m) + " is not coprime to p = " +
                     std::to_string(p) + " (wild ramification)");
        if (e == 1 && (p - 1) % m != 0)
            fail(errc::non_split_data,
                 "mu_" + std::to_string(m) + " is not constant over F_" +
                     std::to_string(p) + " (m does not divide p-1)");
        if (e == 2 && (p * p - 1) % m != 0)
            fail(errc::non_split_data,
                 "mu_" + std::to_string(m) +
                     " does not split over the quadratic extension of F_" +
                     std::to_string(p));
    }
    if (field && !field->is_finite()) {
        if (e == 1 && m > 2)
            fail(errc::non_split_data,
                 "only mu_1 and mu_2 are constant over R; use e = 2");
    }
    return TameGaloisGroup(m, r, e);
}

AbelianTarget::Value AbelianTarget::reduce(Value v) const {
    if (v.size() != moduli.size())
        fail(errc::bad_input, "target value arity mismatch");
    for (size_t i = 0; i < v.size(); ++i) {
        if (moduli[i] < 1) fail(errc::bad_input, "target modulus must be >= 1");
        v[i] %= moduli[i];
        if (v[i] < 0) v[i] += moduli[i];
    }
    return v;
}

AbelianTarget::Value AbelianTarget::add(const Value& x, const Value& y) const {
    Value z(moduli.size());
    if (x.size() != moduli.size() || y.size() != moduli.size())
        fail(errc::bad_input, "target value arity mismatch");
    for (size_t i = 0; i < z.size(); ++i) z[i] = (x[i] + y[i]) % moduli[i];
    return z;
}

AbelianTarget::Value AbelianTarget::neg(const Value& x) const {
    Value z(moduli.size());
    if (x.size() != moduli.size())
        fail(errc::bad_input, "target value arity mismatch");
    for (size_t i = 0; i < z.size(); ++i) z[i] = (moduli[i] - x[i]) % moduli[i];
    return z;
}

AbelianTarget::Value AbelianTarget::act(int s, const Value& x) const {
    if (action == Action::Trivial || s % 2 == 0) {
        if (x.size() != moduli.size())
            fail(errc::bad_input, "target value arity mismatch");
        return x;
    }
    return neg(x);
}

LoopCocycle::LoopCocycle(TameGaloisGroup group, AbelianTarget target,
                         std::vector<AbelianTarget::Value> values)
    : group_(std::move(group)), target_(std::move(target)),
      values_(std::move(values)) {
    if (values_.size() != group_.order())
        fail(errc::bad_input,
             "value table must cover all " + std::to_string(group_.order()) +
                 " group elements");
    for (auto& v : values_) v = target_.reduce(std::move(v));
}

const AbelianTarget::Value& LoopCocycle::value(size_t idx) const {
    if (idx >= values_.size()) fail(errc::bad_input, "element index out of range");
    return values_[idx];
}

void LoopCocycle::set_value(size_t idx, AbelianTarget::Value v) {
    if (idx >= values_.size()) fail(errc::bad_input, "element index out of range");
    values_[idx] = target_.reduce(std::move(v));
}

bool LoopCocycle::operator==(const LoopCocycle& o) const {
    return group_ == o.group_ && target_ == o.target_ && values_ == o.values_;
}

ValidationResult validate_cocycle(const LoopCocycle& phi) {
    const auto& g = phi.group();
    for (size_t i = 0; i < g.order(); ++i) {
        const auto sigma = g.element(i);
        for (size_t j = 0; j < g.order(); ++j) {
            const auto tau = g.element(j);
            const size_t ij = g.index(g.mul(sigma, tau));
            const auto rhs = phi.target().add(
                phi.value(i), phi.target().act(sigma.s, phi.value(j)));
            if (phi.value(ij) != rhs)
                return {false, std::make_pair(i, j)};
        }
    }
    return {true, std::nullopt};
}

LoopCocycle coboundary(const TameGaloisGroup& group, const AbelianTarget& target,
                       const AbelianTarget::Value& g) {
    AbelianTarget::Value gv = target.reduce(g);
    std::vector<AbelianTarget::Value> values;
    values.reserve(group.order());
    for (size_t i = 0; i < group.order(); ++i) {
        const auto sigma = group.element(i);
        values.push_back(target.add(target.act(sigma.s, gv), target.neg(gv)));
    }
    return LoopCocycle(group, target, std::move(values));
}

CocycleSplit split_cocycle(const LoopCocycle& phi) {
    auto check = validate_cocycle(phi);
    if (!check.valid)
        fail(errc::not_a_cocycle,
             "cocycle identity fails at pair (" +
                 std::to_string(check.failing_pair->first) + ", " +
                 std::to_string(check.failing_pair->second) + ")");
    const auto& g = phi.group();
    CocycleSplit parts;
    parts.arithmetic.reserve(static_cast<size_t>(g.e()));
    for (int s = 0; s < g.e(); ++s) {
        auto el = g.identity();
        el.s = s;
        parts.arithmetic.push_back(phi.value(g.index(el)));
    }
    parts.geometric.reserve(g.geo_order());
    for (size_t i = 0; i < g.geo_order(); ++i)
        parts.geometric.push_back(phi.value(i)); // s = 0 block comes first
    return parts;
}

LoopCocycle recombine(const TameGaloisGroup& group, const AbelianTarget& target,
                      const CocycleSplit& raw) {
    if (raw.arithmetic.size() != static_cast<size_t>(group.e()) ||
        raw.geometric.size() != group.geo_order())
        fail(errc::bad_input, "split part sizes do not match the group");
    CocycleSplit parts = raw;
    for (auto& v : parts.arithmetic) v = target.reduce(std::move(v));
    for (auto& v : parts.geometric) v = target.reduce(std::move(v));

    auto geo_at = [&](const std::vector<int>& a) -> const AbelianTarget::Value& {
        TameGaloisGroup::Element el{a, 0};
        return parts.geometric[group.index(el)];
    };

    // arithmetic part must be a cocycle on Z/e
    for (int s = 0; s < group.e(); ++s) {
        for (int t = 0; t < group.e(); ++t) {
            const auto& lhs = parts.arithmetic[static_cast<size_t>((s + t) % group.e())];
            const auto rhs = target.add(
                parts.arithmetic[static_cast<size_t>(s)],
                target.act(s, parts.arithmetic[static_cast<size_t>(t)]));
            if (lhs != rhs)
                fail(errc::not_a_cocycle,
                     "arithmetic part is not a cocycle on Z/e");
        }
    }
    // geometric part must be a homomorphism compatible with inversion
    for (size_t i = 0; i < group.geo_order(); ++i) {
        const auto a = group.element(i).a;
        for (size_t j = 0; j < group.geo_order(); ++j) {
            const auto b = group.element(j).a;
            std::vector<int> ab(a.size());
            for (size_t t = 0; t < a.size(); ++t)
                ab[t] = (a[t] + b[t]) % group.m();
            if (geo_at(ab) != target.add(geo_at(a), geo_at(b)))
                fail(errc::not_a_cocycle,
                     "geometric part is not a homomorphism");
        }
        for (int s = 1; s < group.e(); ++s) {
            if (geo_at(group.act(s, a)) != target.act(s, geo_at(a)))
                fail(errc::not_a_cocycle,
                     "geometric part is not compatible with the arithmetic action");
        }
    }
    // the three conditions above make phi(a, s) = eta(a) + z(s) a cocycle,
    // since (a, s)(b, t) = (a + s.b, s + t) and geometric elements act
    // trivially on the target
    std::vector<AbelianTarget::Value> values;
    values.reserve(group.order());
    for (size_t i = 0; i < group.order(); ++i) {
        const auto el = group.element(i);
        values.push_back(
            target.add(geo_at(el.a),
                       parts.arithmetic[static_cast<size_t>(el.s)]));
    }
    return LoopCocycle(group, target, std::move(values));
}

DiagOrthCocycle make_diag_orth(TameGaloisGroup group, const BaseField& field,
                               std::vector<SquareClass> units,
                               std::vector<std::vector<int>> exponents) {
    if (units.size() != exponents.size())
        fail(errc::bad_input, "units and exponent rows must have equal length");
    for (auto& row : exponents) {
        if (row.size() != static_cast<size_t>(group.r()))
            fail(errc::bad_input, "exponent row length must equal r");
        for (auto& v : row) {
            v %= group.m();
            if (v < 0) v += group.m();
        }
    }
    for (const auto& u : units)
        if (u.field() != field)
            fail(errc::field_mismatch, "unit over a different field");
    return DiagOrthCocycle{std::move(group), field, std::move(units),
                           std::move(exponents)};
}

LoopCocycle diag_orth_to_table(const DiagOrthCocycle& c) {
    if (c.group.m() != 2)
        fail(errc::bad_exponent,
             "table expansion into (Z/2)^N needs m = 2, got m = " +
                 std::to_string(c.group.m()));
    const size_t n = c.units.size();
    AbelianTarget target{std::vector<long long>(n, 2),
                         AbelianTarget::Action::Trivial};
    std::vector<AbelianTarget::Value> values;
    values.reserve(c.group.order());
    for (size_t i = 0; i < c.group.order(); ++i) {
        const auto el = c.group.element(i);
        AbelianTarget::Value v(n, 0);
        for (size_t j = 0; j < n; ++j) {
            int acc = 0;
            for (int t = 0; t < c.group.r(); ++t)
                acc += el.a[static_cast<size_t>(t)] *
                       c.exponents[j][static_cast<size_t>(t)];
            v[j] = acc % 2;
        }
        values.push_back(std::move(v));
    }
    return LoopCocycle(c.group, target, std::move(values));
}

DiagForm cocycle_to_diag_form(const DiagOrthCocycle& c) {
    if (c.group.m() != 2)
        fail(errc::bad_exponent,
             "quadratic forms arise from m = 2 data, got m = " +
                 std::to_string(c.group.m()));
    const BaseField& k = c.field;
    std::vector<SqClassFn> entries;
    entries.reserve(c.units.size());
    for (size_t j = 0; j < c.units.size(); ++j) {
        std::vector<uint8_t> par(c.exponents[j].size());
        for (size_t t = 0; t < par.size(); ++t)
            par[t] = static_cast<uint8_t>(c.exponents[j][t] % 2);
        entries.emplace_back(k, std::move(par), c.units[j]);
    }
    return DiagForm(k, c.group.r(), std::move(entries));
}

ConjugacyVerdict conjugacy_test(const DiagOrthCocycle& x,
                                const DiagOrthCocycle& y) {
    DiagForm qx = cocycle_to_diag_form(x);
    DiagForm qy = cocycle_to_diag_form(y);
    ClassifyVerdict forms = classify(qx, qy);
    const bool aniso = is_anisotropic(qx) && is_anisotropic(qy);
    if (!aniso) return {ConjugacyKind::ClassEqualityOnly, forms, false};
    return {forms.kind == ClassifyKind::Isometric ? ConjugacyKind::Conjugate
                                                  : ConjugacyKind::NotConjugate,
            forms, true};
}

} // namespace loopwitt
