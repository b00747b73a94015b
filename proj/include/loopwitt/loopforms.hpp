#pragma once

#include <optional>
#include <vector>

#include "loopwitt/wittcore.hpp"

namespace loopwitt {

/// Input data for the loop-form constructor: one base form per subset of
/// {1..n}, indexed by bitmask. Components need not be anisotropic.
class LoopComponents {
public:
    LoopComponents(const BaseField& field, int nvars);
    LoopComponents(const BaseField& field, int nvars,
                   std::vector<BaseForm> components);

    const BaseField& field() const noexcept { return field_; }
    int nvars() const noexcept { return nvars_; }
    size_t subset_count() const noexcept { return components_.size(); }
    const BaseForm& component(unsigned mask) const;
    const std::vector<BaseForm>& components() const noexcept {
        return components_;
    }
    void set_component(unsigned mask, BaseForm q);
    int total_dim() const;

    bool operator==(const LoopComponents& o) const;
    bool operator!=(const LoopComponents& o) const { return !(*this == o); }

private:
    BaseField field_;
    int nvars_;
    std::vector<BaseForm> components_;
};

/// The loop form of the component family: the orthogonal sum over subsets I
/// (ascending bitmask) of t_I times the constant lift of q_I, where t_I is
/// the product of the variables in I.
DiagForm build_loop_form(const LoopComponents& cs);

/// Component recovery; equal to witt_class, named for the round-trip
/// contract with build_loop_form.
WittClass components_of(const DiagForm& q);

/// True iff every component is anisotropic over the base field; equivalent
/// to anisotropy of the loop form over the full tower.
bool loop_is_anisotropic(const LoopComponents& cs);

enum class ClassifyKind { Isometric, DistinctRank, DistinctWittClass };

struct ClassifyVerdict {
    ClassifyKind kind;
    /// Least witnessing subset bitmask, set for DistinctWittClass.
    std::optional<unsigned> witness;
};

/// Isometry decision with a named failing invariant. Rank is compared
/// first; otherwise the least subset with distinct Witt-class components
/// witnesses the failure.
ClassifyVerdict classify(const DiagForm& q, const DiagForm& r);

struct NormalFormResult {
    DiagForm canonical;
    WittClass witt;
    int index;
};

/// The unique rank-preserving canonical representative: the class lift of
/// the Witt class padded with hyperbolic planes on the right.
NormalFormResult normal_form(const SymMatrix& a);

} // namespace loopwitt
