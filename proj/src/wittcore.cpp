#include "loopwitt/wittcore.hpp"

#include <algorithm>

namespace loopwitt {

namespace {

LaurentQuot qzero(const BaseField& k, int n) {
    return LaurentQuot(LaurentPoly(k, n));
}

LaurentQuot qone(const BaseField& k, int n) {
    return LaurentQuot(LaurentPoly::constant(k, n, FieldElem(k, 1)));
}

void check_square(const QuotMat& m) {
    for (const auto& row : m)
        if (row.size() != m.size())
            fail(errc::bad_input, "matrix is not square");
}

void check_same_shape(const QuotMat& a, const QuotMat& b) {
    if (a.size() != b.size())
        fail(errc::bad_input, "matrix size mismatch");
}

} // namespace

QuotMat mat_identity(const BaseField& field, int nvars, int size) {
    QuotMat m(static_cast<size_t>(size),
              std::vector<LaurentQuot>(static_cast<size_t>(size),
                                       qzero(field, nvars)));
    for (int i = 0; i < size; ++i)
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] = qone(field, nvars);
    return m;
}

QuotMat mat_mul(const QuotMat& a, const QuotMat& b) {
    check_square(a);
    check_square(b);
    check_same_shape(a, b);
    const size_t n = a.size();
    QuotMat c = a; // shape template; overwritten below
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            LaurentQuot acc = a[i][0] * b[0][j];
            for (size_t l = 1; l < n; ++l) acc = acc + a[i][l] * b[l][j];
            c[i][j] = acc;
        }
    }
    return c;
}

QuotMat mat_transpose(const QuotMat& a) {
    check_square(a);
    QuotMat t = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
    return t;
}

bool mat_equal(const QuotMat& a, const QuotMat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

SymMatrix::SymMatrix(const BaseField& field, int nvars, int size)
    : field_(field), nvars_(nvars) {
    if (size < 0) fail(errc::bad_input, "negative matrix size");
    entries_.assign(static_cast<size_t>(size),
                    std::vector<LaurentQuot>(static_cast<size_t>(size),
                                             qzero(field, nvars)));
}

SymMatrix SymMatrix::from_entries(const BaseField& field, int nvars,
                                  QuotMat entries) {
    check_square(entries);
    SymMatrix m(field, nvars, static_cast<int>(entries.size()));
    for (size_t i = 0; i < entries.size(); ++i) {
        for (size_t j = 0; j < entries.size(); ++j) {
            if (entries[i][j].field() != field ||
                entries[i][j].nvars() != nvars)
                fail(errc::ambient_mismatch,
                     "matrix entry from a different ambient ring");
            if (entries[i][j].num() * entries[j][i].den() !=
                entries[j][i].num() * entries[i][j].den())
                fail(errc::bad_input, "matrix is not symmetric");
        }
    }
    m.entries_ = std::move(entries);
    return m;
}

const LaurentQuot& SymMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= size() || j >= size())
        fail(errc::bad_input, "matrix index out of range");
    return entries_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

void SymMatrix::set(int i, int j, const LaurentQuot& v) {
    if (i < 0 || j < 0 || i >= size() || j >= size())
        fail(errc::bad_input, "matrix index out of range");
    if (v.field() != field_ || v.nvars() != nvars_)
        fail(errc::ambient_mismatch, "entry from a different ambient ring");
    entries_[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    entries_[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
}

LaurentQuot SymMatrix::det() const {
    const int n = size();
    if (n == 0) return qone(field_, nvars_);
    // Laplace expansion along the first row; fine for the small sizes here.
    if (n == 1) return at(0, 0);
    LaurentQuot acc = qzero(field_, nvars_);
    for (int j = 0; j < n; ++j) {
        if (at(0, j).is_zero()) continue;
        SymMatrix minor(field_, nvars_, n - 1);
        QuotMat sub(static_cast<size_t>(n - 1),
                    std::vector<LaurentQuot>(static_cast<size_t>(n - 1),
                                             qzero(field_, nvars_)));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub[static_cast<size_t>(r - 1)][static_cast<size_t>(cc)] =
                    at(r, c);
                ++cc;
            }
        }
        // generic (non-symmetric) recursive determinant on the minor
        struct Det {
            const BaseField& k;
            int nv;
            LaurentQuot run(const QuotMat& m) {
                const size_t sz = m.size();
                if (sz == 0)
                    return LaurentQuot(
                        LaurentPoly::constant(k, nv, FieldElem(k, 1)));
                if (sz == 1) return m[0][0];
                LaurentQuot a(LaurentPoly(k, nv));
                for (size_t c = 0; c < sz; ++c) {
                    if (m[0][c].is_zero()) continue;
                    QuotMat mm(sz - 1,
                               std::vector<LaurentQuot>(
                                   sz - 1, LaurentQuot(LaurentPoly(k, nv))));
                    for (size_t r = 1; r < sz; ++r) {
                        size_t w = 0;
                        for (size_t cc2 = 0; cc2 < sz; ++cc2) {
                            if (cc2 == c) continue;
                            mm[r - 1][w++] = m[r][cc2];
                        }
                    }
                    LaurentQuot term = m[0][c] * run(mm);
                    a = (c % 2 == 0) ? a + term : a - term;
                }
                return a;
            }
        } det{field_, nvars_};
        LaurentQuot term = at(0, j) * det.run(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

DiagForm::DiagForm(const BaseField& field, int nvars)
    : field_(field), nvars_(nvars) {
    if (nvars < 0) fail(errc::arity_mismatch, "negative variable count");
}

DiagForm::DiagForm(const BaseField& field, int nvars,
                   std::vector<SqClassFn> entries)
    : field_(field), nvars_(nvars), entries_(std::move(entries)) {
    if (nvars < 0) fail(errc::arity_mismatch, "negative variable count");
    for (const auto& e : entries_) {
        if (e.field() != field_)
            fail(errc::field_mismatch, "form entry over a different field");
        if (e.nvars() != nvars_)
            fail(errc::ambient_mismatch,
                 "form entry with a different variable count");
    }
}

bool DiagForm::operator==(const DiagForm& o) const {
    if (field_ != o.field_)
        fail(errc::field_mismatch, "comparing forms over different fields");
    if (nvars_ != o.nvars_)
        fail(errc::ambient_mismatch, "comparing forms over different towers");
    return entries_ == o.entries_;
}

WittClass::WittClass(const BaseField& field, int nvars,
                     std::vector<BaseForm> components)
    : field_(field), nvars_(nvars), components_(std::move(components)) {
    if (nvars < 0 || nvars > 16)
        fail(errc::ambient_too_large,
             "subset table needs 0 <= n <= 16, got " + std::to_string(nvars));
    if (components_.size() != (size_t{1} << nvars))
        fail(errc::bad_input, "component table must cover all 2^n subsets");
    for (const auto& c : components_) {
        if (c.field() != field_)
            fail(errc::field_mismatch, "component over a different field");
        if (base_witt_reduce(c) != c)
            fail(errc::bad_input, "component is not anisotropic canonical");
    }
}

const BaseForm& WittClass::component(unsigned mask) const {
    if (mask >= components_.size())
        fail(errc::bad_input, "subset bitmask out of range");
    return components_[mask];
}

int WittClass::total_dim() const {
    int d = 0;
    for (const auto& c : components_) d += c.dim();
    return d;
}

bool WittClass::operator==(const WittClass& o) const {
    if (field_ != o.field_)
        fail(errc::field_mismatch, "comparing classes over different fields");
    if (nvars_ != o.nvars_)
        fail(errc::ambient_mismatch, "comparing classes over different towers");
    return components_ == o.components_;
}

ChangeOfBasis::ChangeOfBasis(QuotMat p, QuotMat p_inverse)
    : p_(std::move(p)), p_inv_(std::move(p_inverse)) {
    check_square(p_);
    check_same_shape(p_, p_inv_);
    if (p_.empty()) return;
    const BaseField& k = p_[0][0].field();
    const int nv = p_[0][0].nvars();
    if (!mat_equal(mat_mul(p_, p_inv_),
                   mat_identity(k, nv, static_cast<int>(p_.size()))))
        fail(errc::bad_input, "stored inverse does not invert the matrix");
}

DiagResult diagonalize(const SymMatrix& a) {
    const BaseField& k = a.field();
    const int nv = a.nvars();
    const int n = a.size();
    QuotMat m = a.entries();
    QuotMat p = mat_identity(k, nv, n);
    QuotMat pinv = p;

    // column operation col_j += c * col_i applied congruently, with the
    // inverse accumulated on the left of pinv
    auto add_col = [&](int i, int j, const LaurentQuot& c) {
        for (int r = 0; r < n; ++r) {
            m[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                m[static_cast<size_t>(r)][static_cast<size_t>(j)] +
                c * m[static_cast<size_t>(r)][static_cast<size_t>(i)];
        }
        for (int cidx = 0; cidx < n; ++cidx) {
            m[static_cast<size_t>(j)][static_cast<size_t>(cidx)] =
                m[static_cast<size_t>(j)][static_cast<size_t>(cidx)] +
                c * m[static_cast<size_t>(i)][static_cast<size_t>(cidx)];
        }
        for (int r = 0; r < n; ++r)
            p[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                p[static_cast<size_t>(r)][static_cast<size_t>(j)] +
                c * p[static_cast<size_t>(r)][static_cast<size_t>(i)];
        for (int cidx = 0; cidx < n; ++cidx)
            pinv[static_cast<size_t>(i)][static_cast<size_t>(cidx)] =
                pinv[static_cast<size_t>(i)][static_cast<size_t>(cidx)] -
                c * pinv[static_cast<size_t>(j)][static_cast<size_t>(cidx)];
    };

    auto swap_basis = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < n; ++r)
            std::swap(m[static_cast<size_t>(r)][static_cast<size_t>(i)],
                      m[static_cast<size_t>(r)][static_cast<size_t>(j)]);
        for (int c = 0; c < n; ++c)
            std::swap(m[static_cast<size_t>(i)][static_cast<size_t>(c)],
                      m[static_cast<size_t>(j)][static_cast<size_t>(c)]);
        for (int r = 0; r < n; ++r)
            std::swap(p[static_cast<size_t>(r)][static_cast<size_t>(i)],
                      p[static_cast<size_t>(r)][static_cast<size_t>(j)]);
        for (int c = 0; c < n; ++c)
            std::swap(pinv[static_cast<size_t>(i)][static_cast<size_t>(c)],
                      pinv[static_cast<size_t>(j)][static_cast<size_t>(c)]);
    };

    std::vector<LaurentQuot> pivots;
    std::vector<SqClassFn> classes;
    for (int step = 0; step < n; ++step) {
        int pivot = -1;
        for (int i = step; i < n; ++i) {
            if (!m[static_cast<size_t>(i)][static_cast<size_t>(i)].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            // whole remaining diagonal vanishes: find least (i, j) with a
            // nonzero entry; substitution x_i -> x_i + x_j makes (j, j) != 0
            int fi = -1, fj = -1;
            for (int i = step; i < n && fi < 0; ++i)
                for (int j = step; j < n; ++j)
                    if (!m[static_cast<size_t>(i)][static_cast<size_t>(j)]
                             .is_zero()) {
                        fi = i;
                        fj = j;
                        break;
                    }
            if (fi < 0)
                fail(errc::degenerate_form,
                     "matrix has determinant zero (zero block at step " +
                         std::to_string(step) + ")");
            add_col(fi, fj, qone(k, nv)); // x_{fi} -> x_{fi} + x_{fj}
            pivot = fj;
        }
        swap_basis(step, pivot);
        const LaurentQuot d =
            m[static_cast<size_t>(step)][static_cast<size_t>(step)];
        for (int j = step + 1; j < n; ++j) {
            const LaurentQuot& off =
                m[static_cast<size_t>(step)][static_cast<size_t>(j)];
            if (!off.is_zero()) add_col(step, j, -(off / d));
        }
        pivots.push_back(d);
        classes.push_back(sq_class_fn(d));
    }
    return DiagResult{DiagForm(k, nv, std::move(classes)),
                      ChangeOfBasis(std::move(p), std::move(pinv)),
                      std::move(pivots)};
}

std::pair<DiagForm, DiagForm> residue_pair(const DiagForm& q, int level) {
    const int n = q.nvars();
    if (level < 1 || level > n)
        fail(errc::level_out_of_range,
             "level " + std::to_string(level) + " outside 1.." +
                 std::to_string(n));
    const size_t drop = static_cast<size_t>(level - 1);
    std::vector<SqClassFn> spec, res;
    for (const auto& e : q.entries()) {
        std::vector<uint8_t> par = e.parities();
        const bool odd = par[drop] != 0;
        par.erase(par.begin() + static_cast<std::ptrdiff_t>(drop));
        SqClassFn cut(q.field(), std::move(par), e.base());
        (odd ? res : spec).push_back(std::move(cut));
    }
    return {DiagForm(q.field(), n - 1, std::move(spec)),
            DiagForm(q.field(), n - 1, std::move(res))};
}

std::pair<DiagForm, DiagForm> residue_pair(const DiagForm& q) {
    return residue_pair(q, q.nvars());
}

WittClass witt_class(const DiagForm& q) {
    const int n = q.nvars();
    if (n > 16)
        fail(errc::ambient_too_large,
             "subset table needs 0 <= n <= 16, got " + std::to_string(n));
    if (n == 0) {
        std::vector<SquareClass> base;
        base.reserve(q.entries().size());
        for (const auto& e : q.entries()) base.push_back(e.base());
        return WittClass(q.field(), 0,
                         {base_witt_reduce(BaseForm(q.field(), base))});
    }
    auto [s, r] = residue_pair(q, n);
    WittClass ws = witt_class(s);
    WittClass wr = witt_class(r);
    std::vector<BaseForm> comps;
    comps.reserve(size_t{2} << (n - 1));
    for (const auto& c : ws.components()) comps.push_back(c);
    for (const auto& c : wr.components()) comps.push_back(c);
    return WittClass(q.field(), n, std::move(comps));
}

int witt_index(const DiagForm& q) {
    return (q.dim() - witt_class(q).total_dim()) / 2;
}

bool is_anisotropic(const DiagForm& q) {
    // the zero-dimensional form is vacuously anisotropic
    return witt_index(q) == 0;
}

bool is_isometric(const DiagForm& q, const DiagForm& r) {
    if (q.field() != r.field())
        fail(errc::field_mismatch, "forms over different fields");
    if (q.nvars() != r.nvars())
        fail(errc::ambient_mismatch, "forms over different towers");
    return q.dim() == r.dim() && witt_class(q) == witt_class(r);
}

DiagForm class_lift(const WittClass& w) {
    std::vector<SqClassFn> entries;
    for (size_t mask = 0; mask < w.subset_count(); ++mask) {
        std::vector<uint8_t> par(static_cast<size_t>(w.nvars()), 0);
        for (int b = 0; b < w.nvars(); ++b)
            if (mask & (size_t{1} << b)) par[static_cast<size_t>(b)] = 1;
        for (const auto& cls : w.component(static_cast<unsigned>(mask)).entries())
            entries.emplace_back(w.field(), par, cls);
    }
    return DiagForm(w.field(), w.nvars(), std::move(entries));
}

std::pair<DiagForm, int> witt_decompose(const DiagForm& q) {
    WittClass w = witt_class(q);
    return {class_lift(w), (q.dim() - w.total_dim()) / 2};
}

DiagForm orth_sum(const DiagForm& q, const DiagForm& r) {
    if (q.field() != r.field())
        fail(errc::field_mismatch, "forms over different fields");
    if (q.nvars() != r.nvars())
        fail(errc::ambient_mismatch, "forms over different towers");
    std::vector<SqClassFn> entries = q.entries();
    entries.insert(entries.end(), r.entries().begin(), r.entries().end());
    return DiagForm(q.field(), q.nvars(), std::move(entries));
}

DiagForm scale(const SqClassFn& a, const DiagForm& q) {
    if (a.field() != q.field())
        fail(errc::field_mismatch, "scalar over a different field");
    if (a.nvars() != q.nvars())
        fail(errc::ambient_mismatch, "scalar over a different tower");
    std::vector<SqClassFn> entries;
    entries.reserve(q.entries().size());
    for (const auto& e : q.entries()) entries.push_back(a * e);
    return DiagForm(q.field(), q.nvars(), std::move(entries));
}

DiagForm hyperbolic(const BaseField& field, int nvars, int c) {
    if (c < 0) fail(errc::bad_input, "negative hyperbolic rank");
    std::vector<SqClassFn> entries;
    entries.reserve(static_cast<size_t>(2 * c));
    const std::vector<uint8_t> none(static_cast<size_t>(nvars), 0);
    for (int i = 0; i < c; ++i) {
        entries.emplace_back(field, none, SquareClass::one(field));
        entries.emplace_back(field, none, SquareClass::minus_one(field));
    }
    return DiagForm(field, nvars, std::move(entries));
}

SymMatrix diagonal_lift(const DiagForm& q) {
    SymMatrix m(q.field(), q.nvars(), q.dim());
    for (int i = 0; i < q.dim(); ++i)
        m.set(i, i, LaurentQuot(q.entries()[static_cast<size_t>(i)].rep()));
    return m;
}

} // namespace loopwitt
