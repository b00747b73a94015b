#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loopwitt/formlang.hpp"

using json = nlohmann::ordered_json;
using namespace loopwitt;

namespace {

struct Common {
    std::string field_text;
    int vars = 0;
    bool as_json = false;
    std::string file;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--field", c.field_text,
                    "base field: Fp:<odd prime> or R")
        ->required();
    sub->add_option("--vars", c.vars,
                    "number of Laurent variables in the ambient tower")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--json", c.as_json, "machine-readable JSON output");
    sub->add_option("--file", c.file,
                    "read the single input expression from a file");
}

std::string read_stream(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> resolve_inputs(const Common& c,
                                        std::vector<std::string> positional) {
    if (!c.file.empty()) {
        std::ifstream f(c.file);
        if (!f) fail(errc::bad_input, "cannot open file: " + c.file);
        return {read_stream(f)};
    }
    bool used_stdin = false;
    for (std::string& s : positional) {
        if (s != "-") continue;
        if (used_stdin)
            fail(errc::bad_input, "stdin ('-') may be used at most once");
        used_stdin = true;
        s = read_stream(std::cin);
    }
    return positional;
}

json subset_json(unsigned mask) {
    json a = json::array();
    for (int i = 0; mask >> i; ++i)
        if (mask >> i & 1u) a.push_back(i + 1);
    return a;
}

json entries_json(const DiagForm& q) {
    json a = json::array();
    for (const SqClassFn& e : q.entries())
        a.push_back({{"rep", e.str()},
                     {"unit", e.base().str()},
                     {"subset", subset_json(e.bitmask())}});
    return a;
}

json matrix_json(const QuotMat& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& entry : row) r.push_back(entry.str());
        rows.push_back(std::move(r));
    }
    return rows;
}

json components_json(const WittClass& w) {
    json a = json::array();
    for (unsigned mask = 0; mask < w.subset_count(); ++mask)
        a.push_back({{"subset", subset_json(mask)},
                     {"form", render(w.component(mask))}});
    return a;
}

std::string subset_text(unsigned mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; mask >> i; ++i) {
        if (!(mask >> i & 1u)) continue;
        if (!first) s += ", ";
        s += std::to_string(i + 1);
        first = false;
    }
    return s + "}";
}

std::string element_text(const TameGaloisGroup& g, size_t idx) {
    auto el = g.element(idx);
    std::string s = "(";
    for (int i = 0; i < g.r(); ++i) {
        if (i) s += ", ";
        s += std::to_string(el.a[static_cast<size_t>(i)]);
    }
    return s + "; " + std::to_string(el.s) + ")";
}

const char* classify_text(ClassifyKind k) {
    switch (k) {
    case ClassifyKind::Isometric: return "Isometric";
    case ClassifyKind::DistinctRank: return "DistinctRank";
    case ClassifyKind::DistinctWittClass: return "DistinctWittClass";
    }
    return "";
}

const char* conjugacy_text(ConjugacyKind k) {
    switch (k) {
    case ConjugacyKind::Conjugate: return "Conjugate";
    case ConjugacyKind::NotConjugate: return "NotConjugate";
    case ConjugacyKind::ClassEqualityOnly: return "ClassEqualityOnly";
    }
    return "";
}

struct Output {
    json result;
    json certificate = nullptr;
    std::string human;
};

DiagOrthCocycle expect_orth(CocycleInput&& in) {
    if (!std::holds_alternative<DiagOrthCocycle>(in))
        fail(errc::bad_input,
             "this command needs units/exp cocycle data, not a value table");
    return std::get<DiagOrthCocycle>(std::move(in));
}

Output run_diagonalize(const std::string& text, const ParseContext& ctx) {
    SymMatrix a = parse_matrix(text, ctx);
    DiagResult d = diagonalize(a);
    json pivots = json::array();
    for (const auto& p : d.pivots) pivots.push_back(p.str());
    Output out;
    out.result = {{"form", render(d.form)}, {"entries", entries_json(d.form)}};
    out.certificate = {{"pivots", pivots},
                       {"basis", matrix_json(d.basis.matrix())},
                       {"basis_inverse", matrix_json(d.basis.inverse())}};
    std::ostringstream os;
    os << render(d.form) << "\n";
    os << "pivots:";
    for (const auto& p : d.pivots) os << " " << p.str();
    os << "\nP = " << matrix_json(d.basis.matrix()).dump()
       << "\nP^-1 = " << matrix_json(d.basis.inverse()).dump();
    out.human = os.str();
    return out;
}

Output run_witt_class(const std::string& text, const ParseContext& ctx) {
    DiagForm q = parse_form_as_diag(text, ctx);
    WittClass w = witt_class(q);
    int index = witt_index(q);
    Output out;
    out.result = {{"components", components_json(w)},
                  {"witt_index", index},
                  {"anisotropic_dim", w.total_dim()}};
    out.human = render(w) + "\nwitt index: " + std::to_string(index);
    return out;
}

Output run_witt_index(const std::string& text, const ParseContext& ctx) {
    DiagForm q = parse_form_as_diag(text, ctx);
    int index = witt_index(q);
    Output out;
    out.result = index;
    out.human = std::to_string(index);
    return out;
}

Output run_anisotropic(const std::string& text, const ParseContext& ctx) {
    DiagForm q = parse_form_as_diag(text, ctx);
    const unsigned count = 1u << q.nvars();
    std::vector<std::vector<SquareClass>> buckets(count);
    for (const SqClassFn& e : q.entries())
        buckets[e.bitmask()].push_back(e.base());
    json witness = nullptr;
    std::string human_witness;
    bool aniso = true;
    for (unsigned mask = 0; mask < count && aniso; ++mask) {
        BaseForm b(ctx.field, buckets[mask]);
        if (!base_is_isotropic(b)) continue;
        aniso = false;
        witness = {{"subset", subset_json(mask)}, {"form", render(b)}};
        human_witness =
            " (isotropic component " + subset_text(mask) + ": " + render(b) + ")";
    }
    Output out;
    out.result = {{"anisotropic", aniso}, {"witness", witness}};
    out.human = (aniso ? "true" : "false") + human_witness;
    return out;
}

Output run_decompose(const std::string& text, const ParseContext& ctx) {
    DiagForm q = parse_form_as_diag(text, ctx);
    auto [q0, copies] = witt_decompose(q);
    Output out;
    out.result = {{"anisotropic_part", render(q0)},
                  {"entries", entries_json(q0)},
                  {"hyperbolic_count", copies}};
    out.human =
        "q0 = " + render(q0) + "\nhyperbolic copies: " + std::to_string(copies);
    return out;
}

Output run_isometric(const std::string& a, const std::string& b,
                     const ParseContext& ctx) {
    DiagForm q = parse_form_as_diag(a, ctx);
    DiagForm r = parse_form_as_diag(b, ctx);
    ClassifyVerdict v = classify(q, r);
    Output out;
    out.result = {{"verdict", classify_text(v.kind)},
                  {"witness_subset",
                   v.witness ? subset_json(*v.witness) : json(nullptr)}};
    out.human = classify_text(v.kind);
    if (v.witness) out.human += " at " + subset_text(*v.witness);
    return out;
}

Output run_loop_build(const std::string& text, const ParseContext& ctx) {
    LoopComponents cs = parse_components(text, ctx);
    DiagForm q = build_loop_form(cs);
    Output out;
    out.result = {{"form", render(q)}, {"entries", entries_json(q)}};
    out.human = render(q);
    return out;
}

Output run_cocycle_check(const std::string& text, const ParseContext& ctx) {
    CocycleInput in = parse_cocycle(text, ctx);
    LoopCocycle table = std::holds_alternative<DiagOrthCocycle>(in)
                            ? diag_orth_to_table(std::get<DiagOrthCocycle>(in))
                            : std::get<LoopCocycle>(std::move(in));
    ValidationResult vr = validate_cocycle(table);
    Output out;
    json pair = nullptr;
    if (vr.failing_pair) {
        auto [i, j] = *vr.failing_pair;
        pair = {{"left", i},
                {"right", j},
                {"left_element", element_text(table.group(), i)},
                {"right_element", element_text(table.group(), j)}};
    }
    out.result = {{"valid", vr.valid}, {"failing_pair", pair}};
    out.human = vr.valid ? "valid"
                         : "invalid at " +
                               element_text(table.group(),
                                            vr.failing_pair->first) +
                               " * " +
                               element_text(table.group(),
                                            vr.failing_pair->second);
    return out;
}

Output run_cocycle_form(const std::string& text, const ParseContext& ctx) {
    DiagOrthCocycle c = expect_orth(parse_cocycle(text, ctx));
    DiagForm q = cocycle_to_diag_form(c);
    Output out;
    out.result = {{"form", render(q)}, {"entries", entries_json(q)}};
    out.human = render(q);
    return out;
}

Output run_cocycle_conjugate(const std::string& a, const std::string& b,
                             const ParseContext& ctx) {
    DiagOrthCocycle cx = expect_orth(parse_cocycle(a, ctx));
    DiagOrthCocycle cy = expect_orth(parse_cocycle(b, ctx));
    ConjugacyVerdict v = conjugacy_test(cx, cy);
    Output out;
    out.result = {{"verdict", conjugacy_text(v.kind)},
                  {"forms_verdict", classify_text(v.forms.kind)},
                  {"witness_subset", v.forms.witness
                                         ? subset_json(*v.forms.witness)
                                         : json(nullptr)},
                  {"anisotropic", v.anisotropic}};
    out.human = conjugacy_text(v.kind);
    if (v.forms.witness)
        out.human += " (components differ at " + subset_text(*v.forms.witness) +
                     ")";
    return out;
}

struct Dispatch {
    std::string name;
    int arity = 1;
    Common common;
    std::string in1;
    std::string in2;
    CLI::Option* opt1 = nullptr;
    CLI::Option* opt2 = nullptr;

    /// Positionals actually given, in order.
    std::vector<std::string> given() const {
        std::vector<std::string> out;
        if (opt1 && opt1->count()) out.push_back(in1);
        if (opt2 && opt2->count()) out.push_back(in2);
        return out;
    }
};

Output run(const Dispatch& d, const ParseContext& ctx,
           const std::vector<std::string>& in) {
    if (d.name == "diagonalize") return run_diagonalize(in[0], ctx);
    if (d.name == "witt-class") return run_witt_class(in[0], ctx);
    if (d.name == "witt-index") return run_witt_index(in[0], ctx);
    if (d.name == "anisotropic") return run_anisotropic(in[0], ctx);
    if (d.name == "decompose") return run_decompose(in[0], ctx);
    if (d.name == "isometric") return run_isometric(in[0], in[1], ctx);
    if (d.name == "loop-build") return run_loop_build(in[0], ctx);
    if (d.name == "cocycle-check") return run_cocycle_check(in[0], ctx);
    if (d.name == "cocycle-form") return run_cocycle_form(in[0], ctx);
    return run_cocycle_conjugate(in[0], in[1], ctx);
}

int finish(const Dispatch& d, const std::vector<std::string>& inputs) {
    json envelope;
    envelope["command"] = d.name;
    envelope["field"] = d.common.field_text;
    envelope["vars"] = d.common.vars;
    envelope["input"] =
        inputs.size() == 1 ? json(inputs[0]) : json(inputs);

    int code = 0;
    try {
        BaseField field = BaseField::parse_name(d.common.field_text);
        ParseContext ctx{field, d.common.vars};
        Output out = run(d, ctx, inputs);
        envelope["result"] = std::move(out.result);
        envelope["certificate"] = std::move(out.certificate);
        envelope["error"] = nullptr;
        if (!d.common.as_json) {
            std::cout << out.human << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        code = 2;
        envelope["result"] = nullptr;
        envelope["certificate"] = nullptr;
        envelope["error"] = {{"code", e.code()},
                             {"message", e.what()},
                             {"line", e.line()},
                             {"column", e.column()}};
        if (!d.common.as_json) {
            std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
            return code;
        }
    } catch (const Error& e) {
        code = 1;
        envelope["result"] = nullptr;
        envelope["certificate"] = nullptr;
        envelope["error"] = {{"code", e.code()}, {"message", e.what()}};
        if (!d.common.as_json) {
            std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
            return code;
        }
    }
    std::cout << envelope.dump(2) << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Witt-group calculator for quadratic forms over "
                 "iterated Laurent series fields"};
    app.require_subcommand(1);

    struct SubSpec {
        const char* name;
        const char* desc;
        int arity;
        const char* meta;
    };
    const SubSpec specs[] = {
        {"diagonalize", "congruence-diagonalize a symmetric Gram matrix", 1,
         "MATRIX"},
        {"witt-class", "component table of the Witt class over all subsets", 1,
         "FORM"},
        {"witt-index", "number of split hyperbolic planes", 1, "FORM"},
        {"anisotropic", "decide anisotropy, with an isotropic witness", 1,
         "FORM"},
        {"decompose", "anisotropic kernel and hyperbolic multiplicity", 1,
         "FORM"},
        {"isometric", "classify two forms up to isometry", 2, "FORM"},
        {"loop-build", "assemble a form from a component table", 1,
         "COMPONENTS"},
        {"cocycle-check", "validate a cocycle spec", 1, "COCYCLE"},
        {"cocycle-form", "diagonal form attached to orthogonal cocycle data",
         1, "COCYCLE"},
        {"cocycle-conjugate", "decide conjugacy of two orthogonal cocycles", 2,
         "COCYCLE"},
    };

    std::vector<Dispatch> dispatches(std::size(specs));
    Dispatch* chosen = nullptr;
    for (size_t i = 0; i < std::size(specs); ++i) {
        Dispatch& d = dispatches[i];
        d.name = specs[i].name;
        d.arity = specs[i].arity;
        CLI::App* sub = app.add_subcommand(specs[i].name, specs[i].desc);
        add_common(sub, d.common);
        d.opt1 = sub->add_option("input", d.in1, specs[i].meta);
        if (specs[i].arity == 2)
            d.opt2 = sub->add_option("input2", d.in2, specs[i].meta);
        sub->callback([&chosen, &d] { chosen = &d; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto usage_error = [](const std::string& msg) {
        std::cerr << "error[bad_input]: " << msg << "\n";
        return 2;
    };
    std::vector<std::string> positional = chosen->given();
    if (!chosen->common.file.empty() && chosen->arity != 1)
        return usage_error("--file is only valid for single-input commands");
    if (!chosen->common.file.empty() && !positional.empty())
        return usage_error(
            "give either a positional expression or --file, not both");
    if (chosen->common.file.empty() &&
        static_cast<int>(positional.size()) != chosen->arity)
        return usage_error("expected " + std::to_string(chosen->arity) +
                           " input expression(s)");

    try {
        std::vector<std::string> inputs =
            resolve_inputs(chosen->common, std::move(positional));
        return finish(*chosen, inputs);
    } catch (const Error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 1;
    }
}
