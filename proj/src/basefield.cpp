#include "loopwitt/basefield.hpp"

#include <algorithm>
#include <array>

namespace loopwitt {

namespace {

bool is_odd_prime(long long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

long long mulmod(long long a, long long b, long long p) {
    return static_cast<long long>(
        static_cast<__int128>(a) * static_cast<__int128>(b) % p);
}

long long powmod(long long a, long long e, long long p) {
    long long r = 1 % p;
    a %= p;
    if (a < 0) a += p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool residue_is_square(long long a, long long p) {
    // Euler criterion; a is assumed nonzero mod p.
    return powmod(a, (p - 1) / 2, p) == 1;
}

long long least_nonresidue(long long p) {
    for (long long s = 2; s < p; ++s)
        if (!residue_is_square(s, p)) return s;
    fail(errc::invalid_field, "no quadratic nonresidue found");
}

} // namespace

BaseField BaseField::finite_prime(long long p) {
    if (!is_odd_prime(p))
        fail(errc::invalid_field,
             "field characteristic must be an odd prime, got " + std::to_string(p));
    if (p >= (1LL << 31))
        fail(errc::invalid_field,
             "prime too large, require p < 2^31, got " + std::to_string(p));
    return BaseField(FieldKind::FinitePrime, p, least_nonresidue(p));
}

BaseField BaseField::reals() { return BaseField(FieldKind::Reals, 0, 0); }

long long BaseField::prime() const {
    if (!is_finite()) fail(errc::invalid_field, "prime() on non-finite field");
    return p_;
}

long long BaseField::nonresidue() const {
    if (!is_finite()) fail(errc::invalid_field, "nonresidue() on non-finite field");
    return nonresidue_;
}

std::string BaseField::name() const {
    return is_finite() ? "Fp:" + std::to_string(p_) : std::string("R");
}

BaseField BaseField::parse_name(const std::string& text) {
    if (text == "R") return reals();
    if (text.rfind("Fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            fail(errc::invalid_field, "bad field name '" + text + "'");
        if (digits.size() > 18)
            fail(errc::invalid_field, "prime too large in '" + text + "'");
        return finite_prime(std::stoll(digits));
    }
    fail(errc::invalid_field,
         "bad field name '" + text + "', expected Fp:<p> or R");
}

FieldElem::FieldElem(const BaseField& field, long long value)
    : field_(field), res_(0), rat_(0) {
    if (field.is_finite()) {
        const long long p = field.prime();
        res_ = value % p;
        if (res_ < 0) res_ += p;
    } else {
        rat_ = mpq_class(static_cast<long>(value));
    }
}

FieldElem::FieldElem(const BaseField& field, const mpz_class& value)
    : field_(field), res_(0), rat_(0) {
    if (field.is_finite()) {
        mpz_class r = value % static_cast<long>(field.prime());
        if (r < 0) r += static_cast<long>(field.prime());
        res_ = r.get_si();
    } else {
        rat_ = mpq_class(value);
    }
}

FieldElem FieldElem::from_fraction(const BaseField& field, const mpz_class& num,
                                   const mpz_class& den) {
    if (den == 0) fail(errc::zero_denominator, "literal with zero denominator");
    if (field.is_finite()) {
        FieldElem d(field, den);
        if (d.is_zero())
            fail(errc::out_of_range_literal,
                 "denominator divisible by " + std::to_string(field.prime()));
        return FieldElem(field, num) / d;
    }
    FieldElem e(field, 0LL);
    e.rat_ = mpq_class(num) / mpq_class(den);
    e.rat_.canonicalize();
    return e;
}

bool FieldElem::is_zero() const {
    return field_.is_finite() ? res_ == 0 : rat_ == 0;
}

long long FieldElem::residue() const {
    if (!field_.is_finite()) fail(errc::invalid_field, "residue() over R");
    return res_;
}

const mpq_class& FieldElem::rational() const {
    if (field_.is_finite()) fail(errc::invalid_field, "rational() over F_p");
    return rat_;
}

void FieldElem::check_same_field(const FieldElem& o) const {
    if (field_ != o.field_)
        fail(errc::field_mismatch, "operands live in different fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_field(o);
    FieldElem r = *this;
    if (field_.is_finite()) {
        r.res_ = (res_ + o.res_) % field_.prime();
    } else {
        r.rat_ = rat_ + o.rat_;
    }
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_field(o);
    FieldElem r = *this;
    if (field_.is_finite()) {
        r.res_ = (res_ - o.res_ + field_.prime()) % field_.prime();
    } else {
        r.rat_ = rat_ - o.rat_;
    }
    return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_field(o);
    FieldElem r = *this;
    if (field_.is_finite()) {
        r.res_ = mulmod(res_, o.res_, field_.prime());
    } else {
        r.rat_ = rat_ * o.rat_;
    }
    return r;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) fail(errc::zero_element, "inverse of zero");
    FieldElem r = *this;
    if (field_.is_finite()) {
        r.res_ = powmod(res_, field_.prime() - 2, field_.prime());
    } else {
        r.rat_ = 1 / rat_;
    }
    return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    if (field_.is_finite()) {
        r.res_ = res_ == 0 ? 0 : field_.prime() - res_;
    } else {
        r.rat_ = -rat_;
    }
    return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_same_field(o);
    return field_.is_finite() ? res_ == o.res_ : rat_ == o.rat_;
}

std::string FieldElem::str() const {
    if (field_.is_finite()) return std::to_string(res_);
    if (rat_.get_den() == 1) return rat_.get_num().get_str();
    return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
}

SquareClass SquareClass::minus_one(const BaseField& field) {
    return sq_class(FieldElem(field, -1LL));
}

FieldElem SquareClass::rep() const {
    if (!nontrivial_) return FieldElem(field_, 1LL);
    return field_.is_finite() ? FieldElem(field_, field_.nonresidue())
                              : FieldElem(field_, -1LL);
}

std::string SquareClass::str() const { return rep().str(); }

SquareClass SquareClass::operator*(const SquareClass& o) const {
    if (field_ != o.field_)
        fail(errc::field_mismatch, "square classes over different fields");
    return SquareClass(field_, nontrivial_ != o.nontrivial_);
}

bool SquareClass::operator==(const SquareClass& o) const {
    if (field_ != o.field_)
        fail(errc::field_mismatch, "square classes over different fields");
    return nontrivial_ == o.nontrivial_;
}

bool SquareClass::operator<(const SquareClass& o) const {
    if (field_ != o.field_)
        fail(errc::field_mismatch, "square classes over different fields");
    return !nontrivial_ && o.nontrivial_;
}

BaseForm::BaseForm(const BaseField& field, std::vector<SquareClass> entries)
    : field_(field), entries_(std::move(entries)) {
    for (const auto& c : entries_)
        if (c.field() != field_)
            fail(errc::field_mismatch, "form entry over a different field");
    std::sort(entries_.begin(), entries_.end());
}

BaseForm BaseForm::orth_sum(const BaseForm& o) const {
    if (field_ != o.field_)
        fail(errc::field_mismatch, "orthogonal sum over different fields");
    std::vector<SquareClass> all = entries_;
    all.insert(all.end(), o.entries_.begin(), o.entries_.end());
    return BaseForm(field_, std::move(all));
}

bool BaseForm::operator==(const BaseForm& o) const {
    if (field_ != o.field_)
        fail(errc::field_mismatch, "comparing forms over different fields");
    if (entries_.size() != o.entries_.size()) return false;
    for (size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

SquareClass sq_class(const FieldElem& a) {
    if (a.is_zero()) fail(errc::zero_element, "square class of zero");
    if (a.field().is_finite())
        return SquareClass(a.field(),
                           !residue_is_square(a.residue(), a.field().prime()));
    return SquareClass(a.field(), a.rational() < 0);
}

bool is_square(const FieldElem& a) {
    if (a.is_zero()) fail(errc::zero_element, "is_square of zero");
    return sq_class(a).is_one();
}

namespace {

// Counts of (trivial, nontrivial) entries fully describe a BaseForm.
std::pair<int, int> count_classes(const BaseForm& q) {
    int triv = 0, non = 0;
    for (const auto& c : q.entries()) (c.is_one() ? triv : non)++;
    return {triv, non};
}

BaseForm form_of_counts(const BaseField& k, int triv, int non) {
    std::vector<SquareClass> es;
    es.reserve(static_cast<size_t>(triv + non));
    for (int i = 0; i < triv; ++i) es.push_back(SquareClass::one(k));
    for (int i = 0; i < non; ++i) es.push_back(SquareClass(k, true));
    return BaseForm(k, std::move(es));
}

} // namespace

BaseForm base_witt_reduce(const BaseForm& q) {
    const BaseField& k = q.field();
    auto [triv, non] = count_classes(q);
    if (!k.is_finite()) {
        // <1,-1> is hyperbolic; what survives is definite.
        const int pairs = std::min(triv, non);
        return form_of_counts(k, triv - pairs, non - pairs);
    }
    const long long p = k.prime();
    const bool minus_one_square = (p % 4 == 1);
    if (minus_one_square) {
        // <a,a> is hyperbolic for every a, so only parities survive,
        // and the kernel is <1>, <s>, <1,s> or empty.
        return form_of_counts(k, triv % 2, non % 2);
    }
    // p = 3 mod 4: -1 is the nonresidue class, <1,s> is hyperbolic.
    const int pairs = std::min(triv, non);
    triv -= pairs;
    non -= pairs;
    // One of triv, non is now zero. <a,a,a,a> is hyperbolic twice over
    // because <a,a> represents every class (sums of two squares cover F_p).
    // The anisotropic kernel of n*<a> has dimension n mod 4 in {0,1,2,3},
    // but dimension 3 is impossible: every ternary form over F_p is
    // isotropic, and <a,a,a> = <a> + hyperbolic. So reduce n mod 4, then
    // fold 3 -> 1 with the complementary class.
    auto fold = [&](int n, bool nontrivial_class) -> BaseForm {
        n %= 4;
        if (n == 3) {
            // Ternary forms over F_p are isotropic; splitting one hyperbolic
            // plane off <a,a,a> leaves <det> = <a^3> scaled by det(H) = -1,
            // and -1 is the nonresidue here, so the kernel is <-a>.
            return form_of_counts(k, nontrivial_class ? 1 : 0,
                                  nontrivial_class ? 0 : 1);
        }
        if (n == 2) {
            // <a,a> is anisotropic (p = 3 mod 4) and all binary anisotropic
            // forms over F_p are isometric; use <1,1> as the canonical rep.
            return form_of_counts(k, 2, 0);
        }
        return form_of_counts(k, nontrivial_class ? 0 : n,
                              nontrivial_class ? n : 0);
    };
    if (non == 0) return fold(triv, false);
    return fold(non, true);
}

bool base_is_isotropic(const BaseForm& q) {
    if (q.dim() == 0) return false;
    return base_witt_reduce(q).dim() < q.dim();
}

std::optional<std::vector<long long>> brute_force_isotropic(const BaseForm& q) {
    const BaseField& k = q.field();
    if (!k.is_finite())
        fail(errc::invalid_field, "brute force search needs a finite field");
    const long long p = k.prime();
    const int n = q.dim();
    if (n == 0) return std::nullopt;
    double space = 1.0;
    for (int i = 0; i < n; ++i) space *= static_cast<double>(p);
    if (space > 1e8)
        fail(errc::search_space_too_large,
             "p^dim exceeds 10^8 for p=" + std::to_string(p) +
                 ", dim=" + std::to_string(n));
    std::vector<long long> coeff(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) coeff[static_cast<size_t>(i)] = q.entries()[static_cast<size_t>(i)].rep().residue();
    std::vector<long long> x(static_cast<size_t>(n), 0);
    // Lexicographic scan over F_p^n minus the origin, first zero wins.
    while (true) {
        int i = n - 1;
        while (i >= 0 && x[static_cast<size_t>(i)] == p - 1) {
            x[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return std::nullopt;
        ++x[static_cast<size_t>(i)];
        long long v = 0;
        for (int j = 0; j < n; ++j)
            v = (v + mulmod(coeff[static_cast<size_t>(j)],
                            mulmod(x[static_cast<size_t>(j)], x[static_cast<size_t>(j)], p), p)) % p;
        if (v == 0) return x;
    }
}

} // namespace loopwitt
