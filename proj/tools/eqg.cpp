// eqg — command line front end: translate diagrams to formulas, enumerate
// models, check the Peirce reading, render SVG, and format diagram files.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eqg/corpus.hpp"
#include "eqg/diagram.hpp"
#include "eqg/formula.hpp"
#include "eqg/render.hpp"
#include "eqg/semantics.hpp"
#include "eqg/translate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitGuard = 2;
constexpr int kExitDomain = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void check_domain_names(const std::vector<std::string>& domain) {
    for (const std::string& c : domain) {
        bool ok = !c.empty() && (std::islower(static_cast<unsigned char>(c[0])) ||
                                 std::isdigit(static_cast<unsigned char>(c[0])));
        for (char ch : c)
            ok &= std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
        if (!ok)
            throw InputError("domain constant '" + c +
                             "' must match [a-z0-9][A-Za-z0-9_]*");
    }
}

/// Diagram files (.eg) are translated with the equilibrium reading;
/// formula files (.qel) are parsed directly.
eqg::FormulaPtr load_formula(const std::string& path) {
    std::string text = read_file(path);
    if (ends_with(path, ".eg")) return eqg::to_formula(eqg::parse_diagram(text));
    if (ends_with(path, ".qel")) return eqg::parse_formula(text);
    throw InputError("expected a .eg or .qel input file: '" + path + "'");
}

// ── Subcommand bodies ───────────────────────────────────────────────────────

int run_translate(const std::string& input, const std::string& dialect) {
    eqg::Diagram d = eqg::parse_diagram(read_file(input));
    eqg::FormulaPtr f =
        dialect == "classical" ? eqg::to_classical_formula(d) : eqg::to_formula(d);
    std::cout << eqg::print_formula(f) << "\n";
    return kExitOk;
}

int run_models(const std::string& input, const std::string& mode,
               const std::vector<std::string>& domain, std::size_t guard, bool prune,
               bool as_json) {
    check_domain_names(domain);
    eqg::FormulaPtr f = load_formula(input);
    eqg::Signature sig = eqg::signature_of(f, domain);
    eqg::EnumOptions opts;
    opts.atom_guard = guard;
    opts.prune_facts = prune;

    nlohmann::json out = nlohmann::json::array();
    std::size_t count = 0;

    auto atoms_json = [](const eqg::Interpretation& i) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& atom : i.atoms()) a.push_back(atom.to_string());
        return a;
    };

    if (mode == "ht") {
        auto models = eqg::ht_models(f, sig, opts);
        count = models.size();
        for (const auto& [h, t] : models) {
            if (as_json) out.push_back({atoms_json(h), atoms_json(t)});
            else std::cout << "(" << h.to_string() << ", " << t.to_string() << ")\n";
        }
    } else {
        auto models = mode == "classical" ? eqg::models_classical(f, sig, opts)
                                          : eqg::equilibrium_models(f, sig, opts);
        count = models.size();
        for (const auto& m : models) {
            if (as_json) out.push_back(atoms_json(m));
            else std::cout << m.to_string() << "\n";
        }
    }
    if (as_json) std::cout << out.dump() << "\n";
    else std::cout << count << " model(s)\n";
    return kExitOk;
}

int run_check_peirce(const std::string& input, const std::vector<std::string>& domain,
                     std::size_t guard) {
    check_domain_names(domain);
    eqg::Diagram d = eqg::parse_diagram(read_file(input));
    eqg::FormulaPtr f = eqg::to_formula(d);
    eqg::FormulaPtr g = eqg::to_classical_formula(d);
    eqg::Signature sig = eqg::signature_of(eqg::conj(f, g), domain);
    eqg::EnumOptions opts;
    opts.atom_guard = guard;

    auto mf = eqg::models_classical(f, sig, opts);
    auto mg = eqg::models_classical(g, sig, opts);
    std::set<eqg::Interpretation> sf(mf.begin(), mf.end());
    std::set<eqg::Interpretation> sg(mg.begin(), mg.end());
    if (sf == sg) {
        std::cout << "EQUIVALENT\n";
        return kExitOk;
    }
    std::cout << "NOT EQUIVALENT\n";
    for (const auto& m : sf)
        if (!sg.count(m)) {
            std::cout << "witness " << m.to_string() << " satisfies only the equilibrium reading\n";
            return 1;
        }
    for (const auto& m : sg)
        if (!sf.count(m)) {
            std::cout << "witness " << m.to_string() << " satisfies only the Peirce reading\n";
            return 1;
        }
    return 1;
}

int run_render(const std::string& input, const std::string& output, const std::string& style) {
    eqg::Diagram d = eqg::parse_diagram(read_file(input));
    eqg::RenderNode tree = eqg::layout(
        d, style == "peirce" ? eqg::RenderStyle::Peirce : eqg::RenderStyle::Equilibrium);
    std::ofstream out(output, std::ios::binary);
    if (!out) throw InputError("cannot write '" + output + "'");
    out << eqg::to_svg(tree);
    return kExitOk;
}

int run_fmt(const std::string& input) {
    eqg::Diagram d = eqg::parse_diagram(read_file(input));
    std::string text = eqg::print_diagram(d);
    if (!text.empty()) std::cout << text << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equilibrium existential graph toolkit"};
    app.require_subcommand(1);

    std::string input, output, dialect = "qel", mode = "equilibrium", style = "equilibrium";
    std::vector<std::string> domain;
    std::size_t guard = 16;
    bool prune = false, as_json = false;

    CLI::App* translate = app.add_subcommand("translate", "read a diagram as a formula");
    translate->add_option("input", input, "diagram file (.eg)")->required();
    translate->add_option("--dialect", dialect, "qel | classical")
        ->check(CLI::IsMember({"qel", "classical"}));

    CLI::App* models = app.add_subcommand("models", "enumerate models of a diagram or formula");
    models->add_option("input", input, "diagram (.eg) or formula (.qel) file")->required();
    models->add_option("--mode", mode, "classical | ht | equilibrium")
        ->check(CLI::IsMember({"classical", "ht", "equilibrium"}));
    models->add_option("--domain", domain, "extra domain constants")->delimiter(',');
    models->add_option("--guard", guard, "atom count guard (default 16)");
    models->add_flag("--prune", prune, "force top-level fact atoms into every candidate");
    models->add_flag("--json", as_json, "machine-readable output");

    CLI::App* check = app.add_subcommand(
        "check-peirce", "check the equilibrium and Peirce readings classically agree");
    check->add_option("input", input, "diagram file (.eg)")->required();
    check->add_option("--domain", domain, "extra domain constants")->delimiter(',');
    check->add_option("--guard", guard, "atom count guard (default 16)");

    CLI::App* render = app.add_subcommand("render", "render a diagram to SVG");
    render->add_option("input", input, "diagram file (.eg)")->required();
    render->add_option("-o,--output", output, "output SVG path")->required();
    render->add_option("--style", style, "equilibrium | peirce")
        ->check(CLI::IsMember({"equilibrium", "peirce"}));

    CLI::App* fmt = app.add_subcommand("fmt", "print the canonical form of a diagram");
    fmt->add_option("input", input, "diagram file (.eg)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (translate->parsed()) return run_translate(input, dialect);
        if (models->parsed()) return run_models(input, mode, domain, guard, prune, as_json);
        if (check->parsed()) return run_check_peirce(input, domain, guard);
        if (render->parsed()) return run_render(input, output, style);
        if (fmt->parsed()) return run_fmt(input);
    } catch (const eqg::GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const eqg::EmptyDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
