#include "loopwitt/laurent.hpp"

#include <algorithm>

namespace loopwitt {

LaurentPoly::LaurentPoly(const BaseField& field, int nvars)
    : field_(field), nvars_(nvars) {
    if (nvars < 0) fail(errc::arity_mismatch, "negative variable count");
}

LaurentPoly LaurentPoly::constant(const BaseField& field, int nvars,
                                  const FieldElem& c) {
    if (c.field() != field)
        fail(errc::field_mismatch, "constant from a different field");
    LaurentPoly f(field, nvars);
    f.insert_term(ExpVec(static_cast<size_t>(nvars), 0), c);
    return f;
}

LaurentPoly LaurentPoly::variable(const BaseField& field, int nvars, int index) {
    if (index < 1 || index > nvars)
        fail(errc::unknown_variable,
             "t" + std::to_string(index) + " outside ambient n=" +
                 std::to_string(nvars));
    LaurentPoly f(field, nvars);
    ExpVec e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(index - 1)] = 1;
    f.insert_term(e, FieldElem(field, 1));
    return f;
}

LaurentPoly LaurentPoly::monomial(const FieldElem& coef, const ExpVec& exps) {
    LaurentPoly f(coef.field(), static_cast<int>(exps.size()));
    f.insert_term(exps, coef);
    return f;
}

void LaurentPoly::insert_term(const ExpVec& e, const FieldElem& c) {
    if (e.size() != static_cast<size_t>(nvars_))
        fail(errc::arity_mismatch, "exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        FieldElem sum = it->second + c;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = sum;
    }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (field_ != o.field_)
        fail(errc::field_mismatch, "polynomials over different fields");
    if (nvars_ != o.nvars_)
        fail(errc::arity_mismatch, "polynomials with different variable counts");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r(field_, nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e = e1;
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.insert_term(e, c1 * c2);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(field_, nvars_);
    for (const auto& [e, c] : terms_) r.insert_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) {
        if (!is_monomial())
            fail(errc::non_unit_inverse,
                 "negative power of a non-monomial is not a Laurent polynomial");
        const auto& [exps, coef] = *terms_.begin();
        ExpVec inv = exps;
        for (auto& x : inv) x = -x;
        return LaurentPoly::monomial(coef.inverse(), inv).pow(-e);
    }
    LaurentPoly acc =
        LaurentPoly::constant(field_, nvars_, FieldElem(field_, 1));
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    check_compatible(o);
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

namespace {

// Renders |coef| * t^exps; sign handled by the caller via separators.
std::string term_str(const FieldElem& coef, const ExpVec& exps) {
    FieldElem mag = coef;
    if (!coef.field().is_finite() && coef.rational() < 0) mag = -coef;
    std::string mono;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "t" + std::to_string(i + 1);
        if (exps[i] != 1) mono += "^" + std::to_string(exps[i]);
    }
    if (mono.empty()) return mag.str();
    const bool unit_coef = mag == FieldElem(mag.field(), 1);
    return unit_coef ? mono : mag.str() + "*" + mono;
}

bool is_negative(const FieldElem& c) {
    return !c.field().is_finite() && c.rational() < 0;
}

} // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (is_negative(c)) out += "-";
            first = false;
        } else {
            out += is_negative(c) ? " - " : " + ";
        }
        out += term_str(c, e);
    }
    return out;
}

LaurentQuot::LaurentQuot(LaurentPoly num)
    : num_(std::move(num)), den_(num_.field(), num_.nvars()) {
    den_ = LaurentPoly::constant(num_.field(), num_.nvars(),
                                 FieldElem(num_.field(), 1));
}

LaurentQuot::LaurentQuot(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.field() != den_.field())
        fail(errc::field_mismatch, "quotient parts over different fields");
    if (num_.nvars() != den_.nvars())
        fail(errc::arity_mismatch, "quotient parts with different variable counts");
    if (den_.is_zero()) fail(errc::zero_denominator, "zero denominator");
    normalize();
}

void LaurentQuot::normalize() {
    const BaseField& k = num_.field();
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(k, num_.nvars(), FieldElem(k, 1));
        return;
    }
    // Divide out the denominator when it is a unit of R_n (single term).
    if (den_.is_monomial()) {
        const auto& [e, c] = *den_.terms().begin();
        ExpVec inv = e;
        for (auto& x : inv) x = -x;
        num_ = num_ * LaurentPoly::monomial(c.inverse(), inv);
        den_ = LaurentPoly::constant(k, num_.nvars(), FieldElem(k, 1));
        return;
    }
    // Otherwise pull the common monomial factor out of both parts.
    auto strip = [](const LaurentPoly& f) {
        ExpVec low = f.terms().begin()->first;
        for (const auto& [e, c] : f.terms())
            for (size_t i = 0; i < low.size(); ++i)
                low[i] = std::min(low[i], e[i]);
        return low;
    };
    ExpVec a = strip(num_), b = strip(den_);
    ExpVec common(a.size());
    bool any = false;
    for (size_t i = 0; i < a.size(); ++i) {
        common[i] = -std::min(a[i], b[i]);
        any = any || common[i] != 0;
    }
    if (any) {
        auto shift = LaurentPoly::monomial(FieldElem(k, 1), common);
        num_ = num_ * shift;
        den_ = den_ * shift;
    }
}

bool LaurentQuot::is_polynomial() const {
    return den_ ==
           LaurentPoly::constant(field(), nvars(), FieldElem(field(), 1));
}

LaurentQuot LaurentQuot::operator+(const LaurentQuot& o) const {
    return LaurentQuot(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

LaurentQuot LaurentQuot::operator-(const LaurentQuot& o) const {
    return LaurentQuot(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

LaurentQuot LaurentQuot::operator*(const LaurentQuot& o) const {
    return LaurentQuot(num_ * o.num_, den_ * o.den_);
}

LaurentQuot LaurentQuot::inverse() const {
    if (is_zero()) fail(errc::zero_element, "inverse of zero");
    return LaurentQuot(den_, num_);
}

LaurentQuot LaurentQuot::operator/(const LaurentQuot& o) const {
    return *this * o.inverse();
}

LaurentQuot LaurentQuot::operator-() const { return LaurentQuot(-num_, den_); }

bool LaurentQuot::operator==(const LaurentQuot& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string LaurentQuot::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

LeadingData leading_data(const LaurentPoly& f) {
    if (f.is_zero())
        fail(errc::zero_polynomial, "leading term of the zero polynomial");
    const int n = f.nvars();
    std::vector<std::pair<ExpVec, FieldElem>> live(f.terms().begin(),
                                                   f.terms().end());
    std::vector<int> vals(static_cast<size_t>(n), 0);
    for (int j = n - 1; j >= 0; --j) {
        int lo = live.front().first[static_cast<size_t>(j)];
        for (const auto& [e, c] : live)
            lo = std::min(lo, e[static_cast<size_t>(j)]);
        vals[static_cast<size_t>(j)] = lo;
        std::vector<std::pair<ExpVec, FieldElem>> next;
        for (auto& t : live)
            if (t.first[static_cast<size_t>(j)] == lo) next.push_back(std::move(t));
        live = std::move(next);
    }
    return {std::move(vals), live.front().second};
}

SqClassFn::SqClassFn(const BaseField& field, std::vector<uint8_t> parities,
                     SquareClass base)
    : field_(field), parities_(std::move(parities)), base_(base) {
    if (base_.field() != field_)
        fail(errc::field_mismatch, "base class over a different field");
    for (auto& b : parities_) b = b & 1u;
}

SqClassFn SqClassFn::one(const BaseField& field, int nvars) {
    return SqClassFn(field,
                     std::vector<uint8_t>(static_cast<size_t>(nvars), 0),
                     SquareClass::one(field));
}

unsigned SqClassFn::bitmask() const noexcept {
    unsigned m = 0;
    for (size_t i = 0; i < parities_.size(); ++i)
        if (parities_[i]) m |= 1u << i;
    return m;
}

bool SqClassFn::is_one() const noexcept {
    return bitmask() == 0 && base_.is_one();
}

SqClassFn SqClassFn::operator*(const SqClassFn& o) const {
    if (field_ != o.field_)
        fail(errc::field_mismatch, "classes over different fields");
    if (parities_.size() != o.parities_.size())
        fail(errc::arity_mismatch, "classes with different variable counts");
    std::vector<uint8_t> p(parities_.size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = parities_[i] ^ o.parities_[i];
    return SqClassFn(field_, std::move(p), base_ * o.base_);
}

bool SqClassFn::operator==(const SqClassFn& o) const {
    if (field_ != o.field_)
        fail(errc::field_mismatch, "classes over different fields");
    if (parities_.size() != o.parities_.size())
        fail(errc::arity_mismatch, "classes with different variable counts");
    return parities_ == o.parities_ && base_ == o.base_;
}

bool SqClassFn::operator<(const SqClassFn& o) const {
    if (bitmask() != o.bitmask()) return bitmask() < o.bitmask();
    return base_ < o.base_;
}

std::string SqClassFn::str() const { return rep().str(); }

LaurentPoly SqClassFn::rep() const {
    ExpVec e(parities_.begin(), parities_.end());
    return LaurentPoly::monomial(base_.rep(), e);
}

SqClassFn sq_class_fn(const LaurentPoly& f) {
    auto [vals, unit] = leading_data(f);
    std::vector<uint8_t> parities(vals.size());
    for (size_t i = 0; i < vals.size(); ++i)
        parities[i] = static_cast<uint8_t>(((vals[i] % 2) + 2) % 2);
    return SqClassFn(f.field(), std::move(parities), sq_class(unit));
}

SqClassFn sq_class_fn(const LaurentPoly& num, const LaurentPoly& den) {
    return sq_class_fn(num) * sq_class_fn(den);
}

SqClassFn sq_class_fn(const LaurentQuot& q) {
    return sq_class_fn(q.num(), q.den());
}

} // namespace loopwitt
