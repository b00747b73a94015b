#pragma once

#include <string>
#include <vector>

#include "loopwitt/basefield.hpp"
#include "loopwitt/laurent.hpp"

namespace loopwitt {

using QuotMat = std::vector<std::vector<LaurentQuot>>;

QuotMat mat_identity(const BaseField& field, int nvars, int size);
QuotMat mat_mul(const QuotMat& a, const QuotMat& b);
QuotMat mat_transpose(const QuotMat& a);
bool mat_equal(const QuotMat& a, const QuotMat& b);

/// Symmetric Gram matrix over the fraction field of R_n.
class SymMatrix {
public:
    SymMatrix(const BaseField& field, int nvars, int size);
    static SymMatrix from_entries(const BaseField& field, int nvars,
                                  QuotMat entries);

    const BaseField& field() const noexcept { return field_; }
    int nvars() const noexcept { return nvars_; }
    int size() const noexcept { return static_cast<int>(entries_.size()); }
    const QuotMat& entries() const noexcept { return entries_; }
    const LaurentQuot& at(int i, int j) const;
    /// Sets both (i, j) and (j, i).
    void set(int i, int j, const LaurentQuot& v);

    LaurentQuot det() const;

private:
    BaseField field_;
    int nvars_;
    QuotMat entries_;
};

/// Diagonal form over F_n: an ordered sequence of square classes. Equality
/// is exact sequence equality; isometry is decided by is_isometric.
class DiagForm {
public:
    DiagForm(const BaseField& field, int nvars);
    DiagForm(const BaseField& field, int nvars, std::vector<SqClassFn> entries);

    const BaseField& field() const noexcept { return field_; }
    int nvars() const noexcept { return nvars_; }
    int dim() const noexcept { return static_cast<int>(entries_.size()); }
    const std::vector<SqClassFn>& entries() const noexcept { return entries_; }

    bool operator==(const DiagForm& o) const;
    bool operator!=(const DiagForm& o) const { return !(*this == o); }

private:
    BaseField field_;
    int nvars_;
    std::vector<SqClassFn> entries_;
};

/// Witt-group data of a form over the iterated Laurent tower: one
/// anisotropic base form per subset of {1..n}, indexed by bitmask.
/// Componentwise equality decides Witt equivalence.
class WittClass {
public:
    WittClass(const BaseField& field, int nvars,
              std::vector<BaseForm> components);

    const BaseField& field() const noexcept { return field_; }
    int nvars() const noexcept { return nvars_; }
    size_t subset_count() const noexcept { return components_.size(); }
    const BaseForm& component(unsigned mask) const;
    const std::vector<BaseForm>& components() const noexcept {
        return components_;
    }
    int total_dim() const;

    bool operator==(const WittClass& o) const;
    bool operator!=(const WittClass& o) const { return !(*this == o); }

private:
    BaseField field_;
    int nvars_;
    std::vector<BaseForm> components_; // index = subset bitmask
};

/// Invertible change of basis with its inverse stored and verified.
class ChangeOfBasis {
public:
    ChangeOfBasis(QuotMat p, QuotMat p_inverse);
    const QuotMat& matrix() const noexcept { return p_; }
    const QuotMat& inverse() const noexcept { return p_inv_; }
    int size() const noexcept { return static_cast<int>(p_.size()); }

private:
    QuotMat p_;
    QuotMat p_inv_;
};

struct DiagResult {
    DiagForm form;
    ChangeOfBasis basis;
    std::vector<LaurentQuot> pivots; // exact diagonal of P^T A P
};

/// Symmetric Gaussian congruence reduction. Pivot rule: first remaining
/// index with nonzero diagonal entry; when the whole remaining diagonal
/// vanishes, the least off-diagonal (i, j) with a nonzero entry is fixed by
/// the substitution x_i -> x_i + x_j, which makes entry (j, j) equal to
/// 2*A[i][j]. Fails with degenerate_form when a zero block remains.
DiagResult diagonalize(const SymMatrix& a);

/// The two projections of W(F_n) onto W(F_{n-1}) at level j (default: the
/// outermost level n): entries with even t_j-parity are specialized, entries
/// with odd t_j-parity are divided by t_j and form the residue.
std::pair<DiagForm, DiagForm> residue_pair(const DiagForm& q, int level);
std::pair<DiagForm, DiagForm> residue_pair(const DiagForm& q);

WittClass witt_class(const DiagForm& q);
int witt_index(const DiagForm& q);
bool is_anisotropic(const DiagForm& q);
bool is_isometric(const DiagForm& q, const DiagForm& r);

/// q is isometric to q0 + hyperbolic(c) with q0 anisotropic; q0 is the
/// canonical reassembly of witt_class(q): subsets by ascending bitmask,
/// base entries in class order.
std::pair<DiagForm, int> witt_decompose(const DiagForm& q);

DiagForm orth_sum(const DiagForm& q, const DiagForm& r);
DiagForm scale(const SqClassFn& a, const DiagForm& q);
DiagForm hyperbolic(const BaseField& field, int nvars, int c);

/// Canonical anisotropic form of a Witt class (the subset-by-subset lift).
DiagForm class_lift(const WittClass& w);

/// Diagonal Gram matrix of the canonical monomial representatives.
SymMatrix diagonal_lift(const DiagForm& q);

} // namespace loopwitt
