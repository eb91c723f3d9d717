#include "forest_hopf/cli.hpp"

#include "forest_hopf/checks.hpp"
#include "forest_hopf/ck_hopf.hpp"
#include "forest_hopf/errors.hpp"
#include "forest_hopf/lincomb.hpp"
#include "forest_hopf/rota_baxter.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

namespace fhopf {

namespace {

struct Options {
    std::string alphabet = "a,b";
    std::string weight = "L";
    std::string format = "text";
    std::size_t max_vertices = 5;
};

struct Config {
    Alphabet alphabet;
    Weight weight;
    bool weight_explicit = false;
    Format format = Format::text;
    std::size_t max_vertices = 5;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Config make_config(const Options& o, bool weight_explicit) {
    Config cfg;
    try {
        cfg.alphabet = Alphabet::from_list(o.alphabet);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--alphabet: ") + e.what());
    }
    try {
        cfg.weight = parse_weight(o.weight);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--weight: ") + e.what());
    }
    cfg.weight_explicit = weight_explicit;
    if (o.format == "text")
        cfg.format = Format::text;
    else if (o.format == "latex")
        cfg.format = Format::latex;
    else if (o.format == "json")
        cfg.format = Format::json;
    else
        throw UsageError("--format must be text, latex or json");
    cfg.max_vertices = o.max_vertices;
    return cfg;
}

// Inline text, `@path` for a file, or `-` for stdin.
std::string read_expression(const std::string& arg, std::istream& in) {
    if (arg == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream file(arg.substr(1));
        if (!file) throw UsageError("cannot read " + arg.substr(1));
        return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    }
    return arg;
}

LinComb read_lincomb(const std::string& arg, const Config& cfg, std::istream& in) {
    return parse_lincomb(read_expression(arg, in), cfg.alphabet).specialized(cfg.weight);
}

void require_rbf_operand(const LinComb& a) {
    for (const auto& [f, c] : a)
        if (!is_rbf(f)) throw DomainError("operand outside Ш(X)");
}

void print(std::ostream& out, const LinComb& a, const Config& cfg) {
    out << render(a.specialized(cfg.weight), cfg.alphabet, cfg.format) << '\n';
}

void print(std::ostream& out, const TensorComb& t, const Config& cfg) {
    out << render(t.specialized(cfg.weight), cfg.alphabet, cfg.format) << '\n';
}

std::string render_words(const LinComb& a, const Config& cfg) {
    if (cfg.format == Format::json) {
        nlohmann::json terms = nlohmann::json::array();
        for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it)
            terms.push_back({{"coeff", poly_to_json(it->second)}, {"word", to_json(theta_inv(it->first), cfg.alphabet)}});
        return nlohmann::json{{"terms", std::move(terms)}}.dump();
    }
    if (cfg.format == Format::text) return render(a, cfg.alphabet);
    // LaTeX: words with floor brackets.
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        if (!it->second.is_one()) os << '(' << it->second.to_string() << ")\\,";
        os << render(theta_inv(it->first), cfg.alphabet, Format::latex);
    }
    return os.str();
}

void print_report(std::ostream& out, std::ostream& err, const std::vector<CheckReport>& reports, const Config& cfg) {
    if (cfg.format == Format::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            nlohmann::json fails = nlohmann::json::array();
            for (const auto& f : r.failures)
                fails.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
            nlohmann::json entry{{"suite", r.suite}, {"instances", r.instances}, {"failures", std::move(fails)}};
            if (!r.skipped.empty()) entry["skipped"] = r.skipped;
            arr.push_back(std::move(entry));
        }
        out << arr.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            if (!r.skipped.empty()) {
                out << r.suite << ": skipped (" << r.skipped << ")\n";
                continue;
            }
            out << r.suite << ": " << r.instances << " instances, " << r.failures.size() << " failures"
                << (r.ok() ? "" : " FAIL") << '\n';
            for (const auto& f : r.failures)
                out << "  input:    " << f.input << "\n  expected: " << f.expected << "\n  actual:   " << f.actual << '\n';
        }
    }
    // Timings vary between runs, so they stay off stdout.
    for (const auto& r : reports)
        if (r.skipped.empty())
            err << r.suite << ": " << std::fixed << std::setprecision(3) << r.elapsed_seconds << "s\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Connes-Kreimer and Rota-Baxter forest algebras", "forest-hopf"};
    app.require_subcommand(1);
    Options opts;
    auto* weight_opt = app.add_option("--weight", opts.weight, "Weight: a rational or L (symbolic)");
    app.add_option("--alphabet", opts.alphabet, "Comma-separated decoration letters");
    app.add_option("--format", opts.format, "Output format: text, latex or json");
    app.add_option("--max-vertices", opts.max_vertices, "Vertex bound for check and enumerate");

    std::string algebra = "ck";
    std::string expr1, expr2;
    auto add_algebra = [&](CLI::App* sub) {
        sub->add_option("--algebra", algebra, "ck (concatenation) or rb (Rota-Baxter)")
            ->check(CLI::IsMember({"ck", "rb"}));
    };

    auto* parse_cmd = app.add_subcommand("parse", "Canonicalize a linear combination");
    parse_cmd->add_option("expr", expr1)->required();

    auto* mul_cmd = app.add_subcommand("mul", "Multiply two linear combinations");
    add_algebra(mul_cmd);
    mul_cmd->add_option("lhs", expr1)->required();
    mul_cmd->add_option("rhs", expr2)->required();

    auto* coprod_cmd = app.add_subcommand("coprod", "Coproduct");
    add_algebra(coprod_cmd);
    coprod_cmd->add_option("expr", expr1)->required();

    auto* antipode_cmd = app.add_subcommand("antipode", "Antipode");
    add_algebra(antipode_cmd);
    antipode_cmd->add_option("expr", expr1)->required();

    auto* phi_cmd = app.add_subcommand("phi", "Project leaf-decorated forests onto Rota-Baxter forests");
    phi_cmd->add_option("expr", expr1)->required();

    std::string direction = "to-word";
    auto* theta_cmd = app.add_subcommand("theta", "Convert between bracketed words and forests");
    theta_cmd->add_option("--direction", direction, "to-word or to-forest")
        ->check(CLI::IsMember({"to-word", "to-forest"}));
    theta_cmd->add_option("expr", expr1)->required();

    std::string suite;
    auto* check_cmd = app.add_subcommand("check", "Run an exhaustive law-checking suite");
    check_cmd->add_option("suite", suite)->required();

    std::string kind;
    bool all_decorations = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "List basis forests up to --max-vertices");
    enum_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"forests", "rbf"}));
    enum_cmd->add_flag("--all-decorations", all_decorations, "Allow letters on internal vertices");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Config cfg = make_config(opts, weight_opt->count() > 0);

        if (parse_cmd->parsed()) {
            print(out, read_lincomb(expr1, cfg, in), cfg);
        } else if (mul_cmd->parsed()) {
            LinComb a = read_lincomb(expr1, cfg, in), b = read_lincomb(expr2, cfg, in);
            if (algebra == "rb") {
                require_rbf_operand(a);
                require_rbf_operand(b);
                print(out, diamond(a, b), cfg);
            } else {
                print(out, bilinear_extend(concat_basis, a, b), cfg);
            }
        } else if (coprod_cmd->parsed()) {
            LinComb a = read_lincomb(expr1, cfg, in);
            if (algebra == "rb") require_rbf_operand(a);
            print(out, algebra == "rb" ? coproduct_rb(a) : coproduct_ck(a), cfg);
        } else if (antipode_cmd->parsed()) {
            LinComb a = read_lincomb(expr1, cfg, in);
            if (algebra == "rb") {
                if (!cfg.weight.is_zero()) throw WeightError("antipode only defined at weight 0");
                require_rbf_operand(a);
                print(out, antipode_rb(a, cfg.weight), cfg);
            } else {
                print(out, antipode_ck(a), cfg);
            }
        } else if (phi_cmd->parsed()) {
            print(out, phi(read_lincomb(expr1, cfg, in)), cfg);
        } else if (theta_cmd->parsed()) {
            LinComb a = read_lincomb(expr1, cfg, in);
            for (const auto& [f, c] : a)
                if (!is_leaf_decorated(f)) throw DomainError("not in the image of θ");
            if (direction == "to-word")
                out << render_words(a, cfg) << '\n';
            else
                print(out, a, cfg);
        } else if (check_cmd->parsed()) {
            CheckConfig cc{cfg.alphabet, cfg.weight, cfg.weight_explicit, cfg.max_vertices, 0};
            std::vector<CheckReport> reports;
            try {
                reports = run_checks(suite, cc);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            print_report(out, err, reports, cfg);
            for (const auto& r : reports)
                if (!r.ok()) return kExitCheckFailed;
        } else if (enum_cmd->parsed()) {
            std::vector<Forest> forests = kind == "rbf" ? enumerate_rbf(cfg.max_vertices, cfg.alphabet)
                                                        : enumerate_forests(cfg.max_vertices, cfg.alphabet,
                                                                            !all_decorations);
            if (cfg.format == Format::json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& f : forests) arr.push_back(to_json(f, cfg.alphabet));
                out << nlohmann::json{{"forests", std::move(arr)}, {"count", forests.size()}}.dump() << '\n';
            } else {
                for (const auto& f : forests) out << render(f, cfg.alphabet, cfg.format) << '\n';
                out << "count: " << forests.size() << '\n';
            }
        }
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const WeightError& e) {
        err << "error: " << e.what() << '\n';
        return kExitWeight;
    }
}

}  // namespace fhopf
