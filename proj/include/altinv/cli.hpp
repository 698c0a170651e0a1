#pragma once

// Command-line surface: argv parsing into typed commands, dispatch into the
// library, and rendering as aligned text or JSON. Exit codes: 0 when every
// assertion passed, 1 on a failed assertion or unfactorable input, 2 on a
// usage error.

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "etale.hpp"
#include "fields.hpp"
#include "fixed_modules.hpp"
#include "lambda_tables.hpp"
#include "milnor.hpp"
#include "verify.hpp"
#include "witt.hpp"

namespace altinv::cli {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HelpRequested {
    std::string text;
};

struct FactorizeCmd {
    std::string element;
    int generators = 0;
    bool as_json = false;
};

struct SWCmd {
    std::vector<std::string> classes;
    int generators = 0;
    bool as_json = false;
};

struct TraceFormCmd {
    std::string field;
    std::vector<std::string> polys;
    bool as_json = false;
};

struct ZTableCmd {
    int n = 0;
    bool as_json = false;
};

struct SweepCmd {
    std::string field;
    int max_n = 0;
    bool as_json = false;
};

struct FixedModuleCmd {
    int rank = 0;
    std::string action; // "trivial", "a3", "s3", or empty with explicit matrices
    std::vector<std::string> matrices;
    int cutoff = 0;
    bool as_json = false;
};

struct TorsorsCmd {
    std::string field;
    int n = 0;
    bool as_json = false;
};

struct VerifyCmd {
    std::string suite;
    bool as_json = false;
};

using Command = std::variant<FactorizeCmd, SWCmd, TraceFormCmd, ZTableCmd, SweepCmd,
                             FixedModuleCmd, TorsorsCmd, VerifyCmd>;

namespace detail {

inline LinearAction parse_action(const FixedModuleCmd& cmd) {
    if (!cmd.matrices.empty()) {
        LinearAction action{cmd.rank, {}};
        for (const auto& text : cmd.matrices) {
            // rows separated by ';', row i lists the coefficients of the
            // image of x_{j+1} in column j
            std::vector<std::uint32_t> cols(cmd.rank, 0);
            std::stringstream ss{text};
            std::string row;
            int i = 0;
            while (std::getline(ss, row, ';')) {
                if (static_cast<int>(row.size()) != cmd.rank || i >= cmd.rank)
                    throw UsageError("matrix must have rank x rank bits");
                for (int j = 0; j < cmd.rank; ++j) {
                    if (row[j] != '0' && row[j] != '1') throw UsageError("matrix bits must be 0/1");
                    if (row[j] == '1') cols[j] |= 1u << i;
                }
                ++i;
            }
            if (i != cmd.rank) throw UsageError("matrix must have rank x rank bits");
            action.gens.push_back(std::move(cols));
        }
        action.validate();
        return action;
    }
    if (cmd.action == "trivial") return LinearAction::trivial(cmd.rank);
    if (cmd.action == "a3") {
        if (cmd.rank != 2) throw UsageError("action a3 needs --rank 2");
        return LinearAction::cyclic_three();
    }
    if (cmd.action == "s3") {
        if (cmd.rank != 2) throw UsageError("action s3 needs --rank 2");
        return LinearAction::full_s3();
    }
    throw UsageError("unknown action (use trivial, a3, s3, or --matrix)");
}

inline Field parse_field_checked(const std::string& spec) {
    try {
        return Field::parse(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

} // namespace detail

/// Parses the argument vector (without the program name). Throws UsageError
/// on malformed input and HelpRequested for -h/--help.
inline Command parse_command(const std::vector<std::string>& args) {
    CLI::App app{"exact computer algebra for quadratic-form invariants of alternating groups"};
    app.require_subcommand(1);

    FactorizeCmd fac;
    auto* s_fac = app.add_subcommand("factorize", "normal form of a graded element");
    s_fac->add_option("--element", fac.element, "element, e.g. \"1 + x1 + e*x2\"")->required();
    s_fac->add_option("--generators", fac.generators, "generator count of the ambient ring")
        ->required()
        ->check(CLI::Range(0, 32));
    s_fac->add_flag("--json", fac.as_json, "machine-readable output");

    SWCmd sw;
    auto* s_sw = app.add_subcommand("sw", "total Stiefel-Whitney class of square classes");
    s_sw->add_option("--classes", sw.classes, "degree-1 classes (repeatable), e.g. x1, 0, x1+x2")
        ->required();
    s_sw->add_option("--generators", sw.generators, "generator count of the ambient ring")
        ->required()
        ->check(CLI::Range(0, 32));
    s_sw->add_flag("--json", sw.as_json, "machine-readable output");

    TraceFormCmd tf;
    auto* s_tf = app.add_subcommand("traceform", "trace form of an etale algebra");
    s_tf->add_option("--field", tf.field, "qc, real, f:p or f:p^k")->required();
    s_tf->add_option("--poly", tf.polys, "monic irreducible factor, e.g. X^2-3 (repeatable)")
        ->required();
    s_tf->add_flag("--json", tf.as_json, "machine-readable output");

    ZTableCmd zt;
    auto* s_zt = app.add_subcommand("ztable", "integer relation table for the lambda-powers");
    s_zt->add_option("--n", zt.n, "rank")->required()->check(CLI::Range(1, 64));
    s_zt->add_flag("--json", zt.as_json, "machine-readable output");

    SweepCmd sweep;
    auto* s_sweep = app.add_subcommand("sweep", "verify the lambda relations on every torsor class");
    s_sweep->add_option("--field", sweep.field, "f:p or real")->required();
    s_sweep->add_option("--max-n", sweep.max_n, "largest rank")->required()->check(CLI::Range(1, 12));
    s_sweep->add_flag("--json", sweep.as_json, "machine-readable output");

    FixedModuleCmd fm;
    auto* s_fm = app.add_subcommand("fixedmodule", "graded fixed submodule of the cohomology model");
    s_fm->add_option("--rank", fm.rank, "number of degree-1 generators")
        ->required()
        ->check(CLI::Range(1, 8));
    s_fm->add_option("--action", fm.action, "trivial, a3 or s3");
    s_fm->add_option("--matrix", fm.matrices, "generator matrix rows, e.g. 01;11 (repeatable)");
    s_fm->add_option("--cutoff", fm.cutoff, "largest degree")->required()->check(CLI::Range(0, 12));
    s_fm->add_flag("--json", fm.as_json, "machine-readable output");

    TorsorsCmd tors;
    auto* s_tors = app.add_subcommand("torsors", "torsor classes with their trace-form invariants");
    s_tors->add_option("--field", tors.field, "f:p")->required();
    s_tors->add_option("--n", tors.n, "degree")->required()->check(CLI::Range(1, 14));
    s_tors->add_flag("--json", tors.as_json, "machine-readable output");

    VerifyCmd ver;
    auto* s_ver = app.add_subcommand("verify", "run a named verification suite");
    s_ver->add_option("--suite", ver.suite, "suite name or \"all\"")->required();
    s_ver->add_flag("--json", ver.as_json, "machine-readable output");

    std::vector<const char*> argv{"altinv"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    // validate parameters before dispatch
    if (s_fac->parsed()) {
        try {
            parse_milnor(fac.element, fac.generators);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return fac;
    }
    if (s_sw->parsed()) {
        try {
            for (const auto& c : sw.classes) parse_milnor(c, sw.generators);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return sw;
    }
    if (s_tf->parsed()) {
        Field F = detail::parse_field_checked(tf.field);
        try {
            for (const auto& ps : tf.polys) parse_polynomial(F, ps);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return tf;
    }
    if (s_zt->parsed()) return zt;
    if (s_sweep->parsed()) {
        Field F = detail::parse_field_checked(sweep.field);
        if (F.kind() == FieldKind::QuadraticallyClosed)
            throw UsageError("sweep requires a finite or real closed field");
        if (F.is_finite() && F.extension_degree() != 1)
            throw UsageError("sweep runs over prime fields");
        return sweep;
    }
    if (s_fm->parsed()) {
        detail::parse_action(fm);
        return fm;
    }
    if (s_tors->parsed()) {
        Field F = detail::parse_field_checked(tors.field);
        if (!F.is_finite() || F.extension_degree() != 1)
            throw UsageError("torsors are enumerated over prime fields");
        return tors;
    }
    if (s_ver->parsed()) {
        if (ver.suite != "all") {
            auto names = suite_names();
            if (std::find(names.begin(), names.end(), ver.suite) == names.end())
                throw UsageError("unknown suite: " + ver.suite);
        }
        return ver;
    }
    throw UsageError("no subcommand given");
}

struct Report {
    bool ok = true;
    bool as_json = false;
    std::string text;
    json data;

    std::string rendered() const { return as_json ? data.dump(2) : text; }
};

namespace detail {

inline json sweep_row_json(const SweepInstance& row) {
    json j;
    j["n"] = row.n;
    j["label"] = row.label;
    if (row.split_count) j["split"] = row.split_count;
    j["rank"] = row.rank;
    j["disc"] = row.disc_class;
    j["witt"] = row.witt;
    j["lambdas"] = row.lambdas;
    j["divisibility"] = row.divisibility_ok;
    j["taylor"] = row.taylor_ok;
    j["table"] = row.table_ok;
    return j;
}

} // namespace detail

inline Report run_command(const Command& command) {
    Report report;
    std::ostringstream out;

    if (const auto* cmd = std::get_if<FactorizeCmd>(&command)) {
        report.as_json = cmd->as_json;
        MilnorElement x = parse_milnor(cmd->element, cmd->generators);
        if (!x.constant_term()) throw UsageError("element must have constant term 1");
        auto nf = p_factorize(x);
        report.data["element"] = x.to_string();
        if (!nf) {
            report.ok = false;
            report.data["factorizable"] = false;
            out << "not factorizable: " << x.to_string() << "\n";
        } else {
            report.data["factorizable"] = true;
            json factors = json::array();
            for (std::size_t j = 0; j < nf->factors.size(); ++j) {
                factors.push_back(nf->factors[j].to_string());
                out << "a" << j << " = " << nf->factors[j].to_string() << "\n";
            }
            if (nf->factors.empty()) out << "1 (empty factorization)\n";
            report.data["factors"] = factors;
        }
    } else if (const auto* cmd = std::get_if<SWCmd>(&command)) {
        report.as_json = cmd->as_json;
        std::vector<MilnorElement> alphas;
        for (const auto& c : cmd->classes) alphas.push_back(parse_milnor(c, cmd->generators));
        SWClass w = sw_total(alphas);
        json comps = json::array();
        for (int i = 0; i <= w.total.max_degree(); ++i) {
            out << "w" << i << " = " << w.component(i).to_string() << "\n";
            comps.push_back(w.component(i).to_string());
        }
        report.data["total"] = w.total.to_string();
        report.data["components"] = comps;
    } else if (const auto* cmd = std::get_if<TraceFormCmd>(&command)) {
        report.as_json = cmd->as_json;
        Field F = Field::parse(cmd->field);
        std::vector<Polynomial> factors;
        for (const auto& ps : cmd->polys) factors.push_back(parse_polynomial(F, ps));
        EtaleAlgebra L = EtaleAlgebra::from_factors(F, std::move(factors));
        DiagonalForm q = trace_form(L);
        GWPolynomial lam = lambda_poly(q);
        out << form_to_string(q) << "\n";
        report.data["field"] = F.spec();
        report.data["form"] = form_to_string(q);
        report.data["rank"] = q.rank();
        report.data["disc"] = square_class_string(F, disc(q));
        report.data["witt"] = witt_class(q).to_string();
        json lambdas = json::array();
        for (int i = 0; i <= q.rank(); ++i) lambdas.push_back(lam.coefficient(i).to_string());
        report.data["lambdas"] = lambdas;
    } else if (const auto* cmd = std::get_if<ZTableCmd>(&command)) {
        report.as_json = cmd->as_json;
        RelationTable T = lambda_relation_table(cmd->n);
        out << "n=" << T.n << " m=" << T.m << " c=" << T.c << "\n";
        json rows = json::array();
        for (int j = 0; j <= T.n; ++j) {
            out << T.row_to_string(j) << "\n";
            json row = json::array();
            for (int i = 0; i <= T.m; ++i) row.push_back(T.z[j][i].str());
            rows.push_back(row);
        }
        report.data["n"] = T.n;
        report.data["m"] = T.m;
        report.data["c"] = T.c;
        report.data["z"] = rows;
    } else if (const auto* cmd = std::get_if<SweepCmd>(&command)) {
        report.as_json = cmd->as_json;
        Field F = Field::parse(cmd->field);
        SweepReport rep = F.is_finite() ? sweep_verify(F.prime(), cmd->max_n)
                                        : sweep_verify_real(cmd->max_n);
        report.ok = rep.all_ok();
        json rows = json::array();
        for (const auto& row : rep.rows) {
            rows.push_back(detail::sweep_row_json(row));
            out << (row.ok() ? "[PASS] " : "[FAIL] ") << "n=" << row.n << " " << row.label
                << " rank=" << row.rank << " disc=" << row.disc_class << " witt=" << row.witt
                << "\n";
        }
        out << (report.ok ? "all instances pass" : "FAILURES PRESENT") << "\n";
        report.data["field"] = rep.field_spec;
        report.data["max_n"] = rep.n_max;
        report.data["rows"] = rows;
        report.data["ok"] = report.ok;
    } else if (const auto* cmd = std::get_if<FixedModuleCmd>(&command)) {
        report.as_json = cmd->as_json;
        LinearAction action = detail::parse_action(*cmd);
        ModuleBasisReport rep = fixed_submodule_H(action, cmd->cutoff);
        out << "degree dimensions:";
        for (int d = 0; d <= rep.cutoff; ++d) out << " " << rep.dims[d];
        out << "\n";
        json gens = json::array();
        for (const auto& g : rep.generators) {
            out << "generator (degree " << g.max_degree() << "): " << g.to_string() << "\n";
            gens.push_back(g.to_string());
        }
        report.data["rank"] = cmd->rank;
        report.data["cutoff"] = rep.cutoff;
        report.data["dims"] = rep.dims;
        report.data["generators"] = gens;
    } else if (const auto* cmd = std::get_if<TorsorsCmd>(&command)) {
        report.as_json = cmd->as_json;
        Field F = Field::parse(cmd->field);
        json rows = json::array();
        for (const auto& cls : enumerate_An_torsors(F.prime(), cmd->n)) {
            EtaleAlgebra L = algebra_from_cycle_type(F.prime(), cls.type);
            DiagonalForm q = trace_form(L);
            GWPolynomial lam = lambda_poly(q);
            json row;
            row["cycle_type"] = cls.type.to_string();
            row["split"] = cls.split_count;
            row["rank"] = q.rank();
            row["disc"] = square_class_string(F, disc(q));
            row["witt"] = witt_class(q).to_string();
            json lambdas = json::array();
            for (int i = 0; i <= q.rank(); ++i) lambdas.push_back(lam.coefficient(i).to_string());
            row["lambdas"] = lambdas;
            rows.push_back(row);
            out << cls.type.to_string() << " split=" << cls.split_count << " rank=" << q.rank()
                << " disc=" << square_class_string(F, disc(q)) << " witt="
                << witt_class(q).to_string() << "\n";
        }
        report.data["field"] = F.spec();
        report.data["n"] = cmd->n;
        report.data["rows"] = rows;
    } else if (const auto* cmd = std::get_if<VerifyCmd>(&command)) {
        report.as_json = cmd->as_json;
        auto suites = run_suite(cmd->suite);
        json jsuites = json::array();
        for (const auto& suite : suites) {
            json checks = json::array();
            for (const auto& check : suite.checks) {
                out << (check.pass ? "[PASS] " : "[FAIL] ") << suite.name << ": " << check.name;
                if (!check.detail.empty()) out << " (" << check.detail << ")";
                out << "\n";
                checks.push_back({{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
                if (!check.pass) report.ok = false;
            }
            jsuites.push_back({{"suite", suite.name}, {"checks", checks}});
        }
        out << (report.ok ? "all checks pass" : "FAILURES PRESENT") << "\n";
        report.data["suites"] = jsuites;
        report.data["ok"] = report.ok;
    }

    report.text = out.str();
    return report;
}

/// Full entry point; returns the process exit code.
inline int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        Command cmd = parse_command(args);
        Report report = run_command(cmd);
        out << report.rendered();
        if (report.as_json) out << "\n";
        return report.ok ? 0 : 1;
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace altinv::cli
