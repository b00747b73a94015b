#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "loopwitt/basefield.hpp"

namespace loopwitt {

using ExpVec = std::vector<int>;

/// Canonical term order: descending lexicographic on (e_n, ..., e_1).
/// Serialization iterates the term map in this order.
struct TermOrder {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

/// Element of R_n = k[t_1^{±1}, ..., t_n^{±1}], a finite map from integer
/// exponent vectors to nonzero coefficients. The zero polynomial is the
/// empty map. Immutable after construction through the public surface.
class LaurentPoly {
public:
    LaurentPoly(const BaseField& field, int nvars);
    static LaurentPoly constant(const BaseField& field, int nvars,
                                const FieldElem& c);
    /// t_index with 1-based index.
    static LaurentPoly variable(const BaseField& field, int nvars, int index);
    static LaurentPoly monomial(const FieldElem& coef, const ExpVec& exps);

    const BaseField& field() const noexcept { return field_; }
    int nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<ExpVec, FieldElem, TermOrder>& terms() const noexcept {
        return terms_;
    }
    /// True when the polynomial is a single term (a unit of R_n).
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    /// Nonnegative exponents always work; negative ones require a monomial
    /// (non_unit_inverse otherwise).
    LaurentPoly pow(int e) const;

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Canonical rendering, e.g. "3*t1^-1*t2 + 1"; parseable back.
    std::string str() const;

private:
    void insert_term(const ExpVec& e, const FieldElem& c);
    void check_compatible(const LaurentPoly& o) const;

    BaseField field_;
    int nvars_;
    std::map<ExpVec, FieldElem, TermOrder> terms_;
};

/// Quotient of Laurent polynomials with nonzero denominator. Equality is
/// exact cross-multiplication; normalization divides out monomial factors
/// but performs no polynomial gcd.
class LaurentQuot {
public:
    explicit LaurentQuot(LaurentPoly num);
    LaurentQuot(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const noexcept { return num_; }
    const LaurentPoly& den() const noexcept { return den_; }
    const BaseField& field() const noexcept { return num_.field(); }
    int nvars() const noexcept { return num_.nvars(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const;

    LaurentQuot operator+(const LaurentQuot& o) const;
    LaurentQuot operator-(const LaurentQuot& o) const;
    LaurentQuot operator*(const LaurentQuot& o) const;
    LaurentQuot operator/(const LaurentQuot& o) const;
    LaurentQuot operator-() const;
    LaurentQuot inverse() const;

    bool operator==(const LaurentQuot& o) const;
    bool operator!=(const LaurentQuot& o) const { return !(*this == o); }

    std::string str() const;

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

/// Iterated leading term for the tower F_n = F_{n-1}((t_n)): minimum
/// t_n-exponent first, then recurse inward. f = unit * t^valuations * (1 + h)
/// with h of positive valuation at each level.
struct LeadingData {
    std::vector<int> valuations;
    FieldElem unit;
};

LeadingData leading_data(const LaurentPoly& f); // zero_polynomial on 0

/// Square class of F_n^x / (F_n^x)^2: exponent parities of t_1..t_n plus a
/// base-field square class. Since char k != 2, 1 + (positive valuation) is
/// a square at every level, so this captures the full class group.
class SqClassFn {
public:
    SqClassFn(const BaseField& field, std::vector<uint8_t> parities,
              SquareClass base);
    static SqClassFn one(const BaseField& field, int nvars);

    const BaseField& field() const noexcept { return field_; }
    int nvars() const noexcept { return static_cast<int>(parities_.size()); }
    const std::vector<uint8_t>& parities() const noexcept { return parities_; }
    const SquareClass& base() const noexcept { return base_; }
    /// Subset bitmask: bit i-1 set iff t_i appears with odd exponent.
    unsigned bitmask() const noexcept;
    bool is_one() const noexcept;

    SqClassFn operator*(const SqClassFn& o) const;
    bool operator==(const SqClassFn& o) const;
    bool operator!=(const SqClassFn& o) const { return !(*this == o); }
    /// Canonical order: bitmask ascending, then base class order.
    bool operator<(const SqClassFn& o) const;

    /// Canonical monomial representative as text, e.g. "3*t1" or "1".
    std::string str() const;
    /// Canonical monomial representative as a polynomial.
    LaurentPoly rep() const;

private:
    BaseField field_;
    std::vector<uint8_t> parities_;
    SquareClass base_;
};

SqClassFn sq_class_fn(const LaurentPoly& f);
SqClassFn sq_class_fn(const LaurentPoly& num, const LaurentPoly& den);
SqClassFn sq_class_fn(const LaurentQuot& q);

} // namespace loopwitt
