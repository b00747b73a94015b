#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "loopwitt/loopforms.hpp"

namespace loopwitt {

/// The Galois group of a basic tame cover: (Z/m)^r ⋊ (Z/e) with e in
/// {1, 2}; the nontrivial arithmetic element acts on each Z/m factor by
/// negation. Elements are (a, s) with a in (Z/m)^r and s in Z/e; the group
/// law is (a, s)(b, t) = (a + s.b, s + t).
class TameGaloisGroup {
public:
    struct Element {
        std::vector<int> a;
        int s;
        bool operator==(const Element& o) const { return a == o.a && s == o.s; }
    };

    int m() const noexcept { return m_; }
    int r() const noexcept { return r_; }
    int e() const noexcept { return e_; }
    size_t order() const noexcept { return order_; }
    size_t geo_order() const noexcept { return order_ / static_cast<size_t>(e_); }

    /// Enumeration: index = s * m^r + (a_0 + a_1 m + ... + a_{r-1} m^{r-1}).
    Element element(size_t idx) const;
    size_t index(const Element& g) const;

    Element identity() const;
    Element mul(const Element& x, const Element& y) const;
    Element inverse(const Element& x) const;
    /// Action of the arithmetic part s on a geometric tuple.
    std::vector<int> act(int s, const std::vector<int>& b) const;

    bool operator==(const TameGaloisGroup& o) const {
        return m_ == o.m_ && r_ == o.r_ && e_ == o.e_;
    }
    bool operator!=(const TameGaloisGroup& o) const { return !(*this == o); }

private:
    friend TameGaloisGroup make_group(int m, int r, int e,
                                      const std::optional<BaseField>& field);
    TameGaloisGroup(int m, int r, int e);

    int m_, r_, e_;
    size_t order_;
};

/// Builds the Galois group of the cover adjoining m-th roots of t_1..t_r
/// (and a quadratic arithmetic extension when e = 2). With a base field
/// given, tameness and root-of-unity availability are enforced:
/// gcd(m, p) = 1; for e = 1 all m-th roots of unity must already live in
/// the field, for e = 2 in its quadratic extension.
TameGaloisGroup make_group(int m, int r, int e,
                           const std::optional<BaseField>& field = std::nullopt);

/// Finite abelian coefficient module, written additively: a product of
/// cyclic groups Z/moduli[i]. The Galois action factors through the
/// arithmetic part: trivial, or negation by the nontrivial element.
struct AbelianTarget {
    enum class Action { Trivial, InvertByArithmetic };

    std::vector<long long> moduli;
    Action action = Action::Trivial;

    using Value = std::vector<long long>;

    Value zero() const { return Value(moduli.size(), 0); }
    Value reduce(Value v) const;
    Value add(const Value& x, const Value& y) const;
    Value neg(const Value& x) const;
    Value act(int s, const Value& x) const;
    bool operator==(const AbelianTarget& o) const {
        return moduli == o.moduli && action == o.action;
    }
};

/// A 1-cocycle on a tame Galois group with abelian coefficients, stored as
/// a total value table indexed by element enumeration. The cocycle identity
/// is a property checked by validate_cocycle, not an invariant.
class LoopCocycle {
public:
    LoopCocycle(TameGaloisGroup group, AbelianTarget target,
                std::vector<AbelianTarget::Value> values);

    const TameGaloisGroup& group() const noexcept { return group_; }
    const AbelianTarget& target() const noexcept { return target_; }
    const AbelianTarget::Value& value(size_t idx) const;
    const std::vector<AbelianTarget::Value>& values() const noexcept {
        return values_;
    }
    void set_value(size_t idx, AbelianTarget::Value v);

    bool operator==(const LoopCocycle& o) const;
    bool operator!=(const LoopCocycle& o) const { return !(*this == o); }

private:
    TameGaloisGroup group_;
    AbelianTarget target_;
    std::vector<AbelianTarget::Value> values_;
};

struct ValidationResult {
    bool valid;
    /// Element indices (sigma, tau) of the first failing pair.
    std::optional<std::pair<size_t, size_t>> failing_pair;
};

/// Exhaustive check of phi(sigma tau) = phi(sigma) + sigma(phi(tau)).
ValidationResult validate_cocycle(const LoopCocycle& phi);

/// The coboundary sigma -> sigma(g) - g of a target value g.
LoopCocycle coboundary(const TameGaloisGroup& group, const AbelianTarget& target,
                       const AbelianTarget::Value& g);

/// Restrictions of a cocycle to the arithmetic subgroup (Z/e) and the
/// geometric subgroup (Z/m)^r; a valid cocycle is exactly the sum of its
/// parts on (a, s) = (a, 0)(0, s).
struct CocycleSplit {
    std::vector<AbelianTarget::Value> arithmetic; // indexed by s
    std::vector<AbelianTarget::Value> geometric;  // indexed by geometric index
};

CocycleSplit split_cocycle(const LoopCocycle& phi); // not_a_cocycle if invalid

/// Rebuilds the cocycle from a split, enforcing the pair conditions: the
/// arithmetic part is a cocycle on Z/e, the geometric part is a
/// homomorphism, and the two are compatible with the inversion action
/// (eta(s.b) = s(eta(b))). Fails with not_a_cocycle otherwise.
LoopCocycle recombine(const TameGaloisGroup& group, const AbelianTarget& target,
                      const CocycleSplit& parts);

/// Purely geometric diagonal orthogonal cocycle data: the homomorphism
/// (Z/m)^r -> diagonal matrices determined by an N x r exponent matrix,
/// twisted by the diagonal form with unit entries `units`.
struct DiagOrthCocycle {
    TameGaloisGroup group;
    BaseField field;
    std::vector<SquareClass> units;          // N inner-twist units
    std::vector<std::vector<int>> exponents; // N x r over Z/m
};

DiagOrthCocycle make_diag_orth(TameGaloisGroup group, const BaseField& field,
                               std::vector<SquareClass> units,
                               std::vector<std::vector<int>> exponents);

/// Expands the geometric homomorphism to a total abelian-valued cocycle
/// into (Z/2)^N (m = 2 only); gives the table form of the data.
LoopCocycle diag_orth_to_table(const DiagOrthCocycle& c);

/// The quadratic form <u_j * t^{E_j}> attached to diagonal orthogonal data;
/// requires m = 2 (bad_exponent otherwise).
DiagForm cocycle_to_diag_form(const DiagOrthCocycle& c);

enum class ConjugacyKind { Conjugate, NotConjugate, ClassEqualityOnly };

struct ConjugacyVerdict {
    ConjugacyKind kind;
    /// The isometry decision on the attached forms.
    ClassifyVerdict forms;
    /// True when both attached forms are anisotropic; conjugacy is decided
    /// only under this hypothesis, otherwise the verdict degrades to
    /// ClassEqualityOnly.
    bool anisotropic;
};

ConjugacyVerdict conjugacy_test(const DiagOrthCocycle& x,
                                const DiagOrthCocycle& y);

} // namespace loopwitt
