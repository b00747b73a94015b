#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "loopwitt/errors.hpp"

namespace loopwitt {

enum class FieldKind { FinitePrime, Reals };

/// A supported coefficient field: F_p for an odd prime p, or the reals
/// modeled by exact rationals (only square classes matter, so rationals
/// lose nothing).
class BaseField {
public:
    static BaseField finite_prime(long long p);
    static BaseField reals();

    FieldKind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == FieldKind::FinitePrime; }

    /// Characteristic p; only valid for finite fields.
    long long prime() const;

    /// Least quadratic nonresidue s(p); only valid for finite fields.
    long long nonresidue() const;

    /// "Fp:7" or "R"; accepted back by parse_field.
    std::string name() const;
    static BaseField parse_name(const std::string& text);

    bool operator==(const BaseField& o) const noexcept {
        return kind_ == o.kind_ && p_ == o.p_;
    }
    bool operator!=(const BaseField& o) const noexcept { return !(*this == o); }

private:
    BaseField(FieldKind kind, long long p, long long s)
        : kind_(kind), p_(p), nonresidue_(s) {}

    FieldKind kind_;
    long long p_;
    long long nonresidue_;
};

/// Element of a base field in canonical representation: residue in [0, p)
/// over F_p, reduced fraction with positive denominator over R.
class FieldElem {
public:
    FieldElem(const BaseField& field, long long value);
    FieldElem(const BaseField& field, const mpz_class& value);
    static FieldElem from_fraction(const BaseField& field, const mpz_class& num,
                                   const mpz_class& den);

    const BaseField& field() const noexcept { return field_; }
    bool is_zero() const;

    /// Canonical residue in [0, p); finite fields only.
    long long residue() const;
    /// Exact value; reals only.
    const mpq_class& rational() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const; // zero_element if o == 0
    FieldElem operator-() const;
    FieldElem inverse() const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    /// Canonical literal: "5" or "-4/9". parse_poly accepts it back.
    std::string str() const;

private:
    void check_same_field(const FieldElem& o) const;

    BaseField field_;
    long long res_;  // FinitePrime payload
    mpq_class rat_;  // Reals payload
};

/// Element of k^x / (k^x)^2. Canonical representative is 1 or the least
/// nonresidue over F_p, +1 or -1 over R.
class SquareClass {
public:
    SquareClass(const BaseField& field, bool nontrivial)
        : field_(field), nontrivial_(nontrivial) {}
    static SquareClass one(const BaseField& field) { return {field, false}; }
    static SquareClass minus_one(const BaseField& field);

    const BaseField& field() const noexcept { return field_; }
    bool is_one() const noexcept { return !nontrivial_; }
    bool nontrivial() const noexcept { return nontrivial_; }

    /// Canonical representative as a field element.
    FieldElem rep() const;
    std::string str() const;

    SquareClass operator*(const SquareClass& o) const;
    bool operator==(const SquareClass& o) const;
    bool operator!=(const SquareClass& o) const { return !(*this == o); }
    /// Fixed total order: trivial class first.
    bool operator<(const SquareClass& o) const;

private:
    BaseField field_;
    bool nontrivial_;
};

/// Regular diagonal form over the base field, kept as a canonically sorted
/// sequence of square classes. The empty form is the zero-dimensional form.
class BaseForm {
public:
    explicit BaseForm(const BaseField& field) : field_(field) {}
    BaseForm(const BaseField& field, std::vector<SquareClass> entries);

    const BaseField& field() const noexcept { return field_; }
    int dim() const noexcept { return static_cast<int>(entries_.size()); }
    const std::vector<SquareClass>& entries() const noexcept { return entries_; }

    BaseForm orth_sum(const BaseForm& o) const;

    bool operator==(const BaseForm& o) const;
    bool operator!=(const BaseForm& o) const { return !(*this == o); }

private:
    BaseField field_;
    std::vector<SquareClass> entries_; // sorted, trivial classes first
};

/// Square class of a nonzero element. Multiplicative: sq_class(ab) =
/// sq_class(a) * sq_class(b).
SquareClass sq_class(const FieldElem& a);

/// Euler criterion over F_p, sign over R.
bool is_square(const FieldElem& a);

/// Anisotropic kernel in canonical form. Over F_p the result has dim <= 2,
/// over R it is definite. Idempotent, and Witt-equivalent inputs reduce to
/// the identical BaseForm.
BaseForm base_witt_reduce(const BaseForm& q);

bool base_is_isotropic(const BaseForm& q);

/// Exhaustive isotropy witness search over F_p^dim, lexicographic order,
/// first zero wins. Guard: p^dim <= 10^8 (search_space_too_large).
std::optional<std::vector<long long>> brute_force_isotropic(const BaseForm& q);

} // namespace loopwitt
