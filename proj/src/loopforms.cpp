#include "loopwitt/loopforms.hpp"

namespace loopwitt {

LoopComponents::LoopComponents(const BaseField& field, int nvars)
    : field_(field), nvars_(nvars) {
    if (nvars < 0 || nvars > 16)
        fail(errc::ambient_too_large,
             "subset table needs 0 <= n <= 16, got " + std::to_string(nvars));
    components_.assign(size_t{1} << nvars, BaseForm(field));
}

LoopComponents::LoopComponents(const BaseField& field, int nvars,
                               std::vector<BaseForm> components)
    : LoopComponents(field, nvars) {
    if (components.size() != components_.size())
        fail(errc::bad_input, "component table must cover all 2^n subsets");
    for (const auto& c : components)
        if (c.field() != field_)
            fail(errc::field_mismatch, "component over a different field");
    components_ = std::move(components);
}

const BaseForm& LoopComponents::component(unsigned mask) const {
    if (mask >= components_.size())
        fail(errc::bad_input, "subset bitmask out of range");
    return components_[mask];
}

void LoopComponents::set_component(unsigned mask, BaseForm q) {
    if (mask >= components_.size())
        fail(errc::bad_input, "subset bitmask out of range");
    if (q.field() != field_)
        fail(errc::field_mismatch, "component over a different field");
    components_[mask] = std::move(q);
}

int LoopComponents::total_dim() const {
    int d = 0;
    for (const auto& c : components_) d += c.dim();
    return d;
}

bool LoopComponents::operator==(const LoopComponents& o) const {
    if (field_ != o.field_)
        fail(errc::field_mismatch, "comparing components over different fields");
    if (nvars_ != o.nvars_)
        fail(errc::ambient_mismatch, "comparing components over different towers");
    return components_ == o.components_;
}

DiagForm build_loop_form(const LoopComponents& cs) {
    std::vector<SqClassFn> entries;
    entries.reserve(static_cast<size_t>(cs.total_dim()));
    for (size_t mask = 0; mask < cs.subset_count(); ++mask) {
        std::vector<uint8_t> par(static_cast<size_t>(cs.nvars()), 0);
        for (int b = 0; b < cs.nvars(); ++b)
            if (mask & (size_t{1} << b)) par[static_cast<size_t>(b)] = 1;
        for (const auto& cls :
             cs.component(static_cast<unsigned>(mask)).entries())
            entries.emplace_back(cs.field(), par, cls);
    }
    return DiagForm(cs.field(), cs.nvars(), std::move(entries));
}

WittClass components_of(const DiagForm& q) { return witt_class(q); }

bool loop_is_anisotropic(const LoopComponents& cs) {
    for (const auto& c : cs.components())
        if (base_is_isotropic(c)) return false;
    return true;
}

ClassifyVerdict classify(const DiagForm& q, const DiagForm& r) {
    if (q.field() != r.field())
        fail(errc::field_mismatch, "forms over different fields");
    if (q.nvars() != r.nvars())
        fail(errc::ambient_mismatch, "forms over different towers");
    if (q.dim() != r.dim())
        return {ClassifyKind::DistinctRank, std::nullopt};
    WittClass wq = witt_class(q);
    WittClass wr = witt_class(r);
    for (unsigned mask = 0; mask < wq.subset_count(); ++mask)
        if (wq.component(mask) != wr.component(mask))
            return {ClassifyKind::DistinctWittClass, mask};
    return {ClassifyKind::Isometric, std::nullopt};
}

NormalFormResult normal_form(const SymMatrix& a) {
    DiagResult d = diagonalize(a);
    WittClass w = witt_class(d.form);
    const int c = (d.form.dim() - w.total_dim()) / 2;
    DiagForm canonical =
        orth_sum(class_lift(w), hyperbolic(a.field(), a.nvars(), c));
    return {std::move(canonical), std::move(w), c};
}

} // namespace loopwitt
