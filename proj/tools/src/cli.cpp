#include "ainf_cli/cli.hpp"

#include "ainf/checks.hpp"
#include "ainf/error.hpp"
#include "ainf/extension.hpp"
#include "ainf/pdcorrect.hpp"
#include "ainf/transfer.hpp"
#include "ainf/tty.hpp"
#include "ainf_cli/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>

namespace ainf::cli {

namespace {

struct Options {
    std::string path;
    int pmax = 6;
    bool pmax_given = false;
    bool strict_unital = false;
    std::optional<int> level, k, l, n, theta_degree;
    std::string omega;
    int jobs = 1;
    std::string out;
};

// Collects human lines, reports and the JSON result of one command.
struct Outcome {
    std::vector<std::string> lines;
    Report report;
    json result = json::object();
    bool finding = false;
};

void add_report_lines(Outcome& o, const Report& r) {
    for (const auto& i : r.items)
        o.lines.push_back(i.passed ? i.name + ": pass" : i.name + ": FAIL at " + i.witness);
    o.report.merge(r);
}

std::string betti_line(const std::map<int, std::size_t>& b) {
    std::string s;
    for (auto [d, n] : b)
        if (n) s += (s.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(n);
    return s.empty() ? "(zero)" : s;
}

json betti_json(const std::map<int, std::size_t>& b) {
    json out = json::object();
    for (auto [d, n] : b)
        if (n) out[std::to_string(d)] = n;
    return out;
}

json vanishing_json(const VanishingCertificate& v) {
    json table = json::array();
    for (std::size_t p = 0; p < v.table_zero.size(); ++p) table.push_back(v.table_zero[p]);
    json out = {{"pmax", v.pmax},
                {"top_degree", v.top_degree},
                {"connectivity", v.connectivity},
                {"strictly_unital", v.strictly_unital},
                {"table_zero", table},
                {"notes", v.notes}};
    out["degree_bound"] = v.degree_bound ? json(*v.degree_bound) : json(nullptr);
    out["connectivity_bound"] = v.connectivity_bound ? json(*v.connectivity_bound) : json(nullptr);
    out["certified_from"] = v.certified_from ? json(*v.certified_from) : json(nullptr);
    return out;
}

void add_vanishing_lines(Outcome& o, const VanishingCertificate& v) {
    for (std::size_t p = 2; p < v.table_zero.size(); ++p)
        o.lines.push_back("m_" + std::to_string(p + 1) + (v.table_zero[p] ? " = 0" : " != 0"));
    if (v.degree_bound) o.lines.push_back("degree bound: m_p = 0 for p >= " + std::to_string(*v.degree_bound));
    if (v.certified_from) o.lines.push_back("certified: m_p = 0 for all p >= " + std::to_string(*v.certified_from));
    else o.lines.push_back("certified: no vanishing bound");
    for (const auto& n : v.notes) o.lines.push_back("note: " + n);
}

const Dga& need_dga(const AlgebraFile& f, const char* command) {
    if (!f.dga) throw MalformedInput(std::string(command) + " needs a dga or symplectic file");
    return *f.dga;
}

Outcome cmd_check(const AlgebraFile& f, const Options& o) {
    Outcome out;
    if (f.dga) add_report_lines(out, check_dga_axioms(*f.dga));
    if (f.structure) {
        add_report_lines(out, check_stasheff(*f.structure, std::min(o.pmax, f.structure->pmax())));
        if (f.structure->unit()) add_report_lines(out, check_strict_unitality(*f.structure, *f.structure->unit()));
    }
    if (f.kind == "symplectic" && out.report.passed()) {
        LefschetzContext ctx(SymplecticModel(*f.dga, *f.omega));
        add_report_lines(out, ctx.check_identities());
    }
    return out;
}

Outcome cmd_cohomology(const AlgebraFile& f, const Options&) {
    Outcome out;
    if (f.dga) {
        auto ring = cohomology_ring(*f.dga);
        auto b = ring.splitting.betti();
        out.lines.push_back("betti: " + betti_line(b));
        add_report_lines(out, ring.representative_independence);
        out.result = {{"betti", betti_json(b)}, {"ring", dga_json(ring.ring)}};
    } else {
        auto s = compute_splitting(as_linear(f.structure->m(1)));
        out.lines.push_back("betti: " + betti_line(s.betti()));
        out.result = {{"betti", betti_json(s.betti())}};
    }
    return out;
}

TransferResult transfer_of(const AlgebraFile& f, const Options& o) {
    if (o.strict_unital) return f.dga ? strictly_unital_transfer(*f.dga, o.pmax) : strictly_unital_transfer(*f.structure, o.pmax);
    if (f.dga) return kadeishvili_transfer(*f.dga, compute_splitting(f.dga->d()), o.pmax);
    return kadeishvili_transfer(*f.structure, compute_splitting(as_linear(f.structure->m(1))), o.pmax);
}

Outcome cmd_transfer(const AlgebraFile& f, const Options& o) {
    Outcome out;
    TransferResult t = transfer_of(f, o);
    add_report_lines(out, check_stasheff(*t.minimal, o.pmax));
    add_report_lines(out, check_morphism(*t.morphism, o.pmax));
    if (o.strict_unital) {
        add_report_lines(out, check_strict_unitality(*t.minimal, *t.minimal->unit()));
        add_report_lines(out, check_strict_unitality(*t.morphism, *t.minimal->unit(), *t.source->unit()));
    }
    auto v = vanishing_profile(*t.minimal);
    add_vanishing_lines(out, v);
    out.result = {{"minimal", structure_json(*t.minimal)}, {"morphism", morphism_json(*t.morphism)},
                  {"vanishing", vanishing_json(v)}};
    return out;
}

Outcome cmd_extend(const AlgebraFile& f, const Options& o) {
    Outcome out;
    const Dga& a = need_dga(f, "extend");
    Vector omega;
    if (!o.omega.empty()) omega = parse_element(a, o.omega);
    else if (f.omega) omega = *f.omega;
    else throw MalformedInput("extend needs --omega or an omega field");
    int theta = 1;
    if (o.theta_degree) theta = *o.theta_degree;
    else if (auto d = omega.degree_in(*a.space())) theta = *d - 1;
    auto ext = extend_dga(a, omega, theta);
    auto b = compute_splitting(ext.dga.d()).betti();
    out.lines.push_back("theta degree: " + std::to_string(theta));
    out.lines.push_back("extension betti: " + betti_line(b));
    out.result = {{"extension", dga_json(ext.dga)}, {"betti", betti_json(b)}};
    if (a.d().is_zero()) {
        auto model = formal_extension_minimal_model(a, omega, o.pmax);
        add_report_lines(out, model.report);
        auto v = vanishing_profile(*model.transfer.minimal);
        add_vanishing_lines(out, v);
        out.result["minimal"] = structure_json(*model.transfer.minimal);
        out.result["vanishing"] = vanishing_json(v);
    } else {
        out.lines.push_back("base differential is nonzero: formal model skipped");
    }
    return out;
}

Outcome cmd_tty(const AlgebraFile& f, const Options& o) {
    Outcome out;
    if (f.kind != "symplectic") throw MalformedInput("tty needs a symplectic file");
    int level = o.level.value_or(f.level.value_or(0));
    int pmax = o.pmax_given ? o.pmax : 5;
    auto ctx = std::make_shared<const LefschetzContext>(SymplecticModel(*f.dga, *f.omega));
    add_report_lines(out, ctx->check_identities());
    auto complex = build_filtered_complex(ctx, level);
    add_report_lines(out, complex.report);
    auto tty = build_tty_structure(complex, pmax);
    add_report_lines(out, tty.report);
    add_report_lines(out, compare_with_extension(ctx, level));
    out.lines.insert(out.lines.begin(), "level " + std::to_string(level) + ", dims " + betti_line(complex.space->dims()));
    out.result = {{"level", level}, {"structure", structure_json(*tty.structure)}};
    return out;
}

Outcome cmd_pdcorrect(const AlgebraFile& f, const Options& o) {
    Outcome out;
    int k = o.k.value_or(f.pd && f.pd->connectivity ? *f.pd->connectivity : -1);
    if (k < 0) throw MalformedInput("pdcorrect needs --k or pd.connectivity");
    int l = o.l.value_or(3);
    TransferResult t = f.structure ? self_transfer(*f.structure, o.pmax) : strictly_unital_transfer(*f.dga, o.pmax);
    const GradedSpace& h = *t.minimal->space();
    int detected = h.degrees().back();
    int N = f.pd && f.pd->top_degree ? *f.pd->top_degree : detected;
    if (N != detected || h.in_degree(N).size() != 1) {
        auto cert = non_orientable_certificate(*t.minimal, N, k, l);
        out.lines = cert.lines;
        add_report_lines(out, cert.report);
        out.result = {{"branch", "non-orientable"}, {"certificate", cert.lines}};
        return out;
    }
    auto r = pd_correct(make_cyclic_pd_input(t, k, l), o.pmax);
    out.lines = r.certificate;
    add_report_lines(out, r.report);
    out.result = {{"branch", "orientable"},
                  {"corrected", structure_json(*r.corrected)},
                  {"morphism", morphism_json(*r.morphism)},
                  {"certificate", r.certificate}};
    return out;
}

Outcome cmd_torus(const Options& o) {
    Outcome out;
    auto w = torus_nonformality_witness(o.n.value_or(2), o.pmax);
    out.lines = w.lines;
    add_report_lines(out, w.model.report);
    if (!w.nonzero || !w.ratio || !w.m2_vanishes) out.report.fail("witness", "m3 is not a nonzero multiple of the class");
    out.result = {{"n", w.n}, {"ratio", w.ratio ? json(format_scalar(*w.ratio)) : json(nullptr)}, {"lines", w.lines}};
    return out;
}

Outcome cmd_cpn(const Options& o) {
    Outcome out;
    auto c = cpn_formality_certificate(o.n.value_or(2), o.pmax);
    out.lines = c.lines;
    add_report_lines(out, c.model.report);
    if (!c.vanishing.certified_from || *c.vanishing.certified_from > 3) out.report.fail("formal", "no degree certificate");
    out.result = {{"n", c.n}, {"cohomology_degrees", c.cohomology_degrees}, {"vanishing", vanishing_json(c.vanishing)}};
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"A-infinity minimal models with exact rational arithmetic", "ainf"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool file) {
        if (file) sub->add_option("path", o.path, "algebra JSON file")->required();
        sub->add_option("--pmax", o.pmax, "largest arity computed")->check(CLI::Range(1, 12));
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
        sub->add_option("--out", o.out, "write the JSON certificate here");
    };
    auto* check = app.add_subcommand("check", "axiom and identity checks for the file kind");
    auto* cohomology = app.add_subcommand("cohomology", "Betti numbers and cohomology ring");
    auto* transfer = app.add_subcommand("transfer", "minimal model by homotopy transfer");
    auto* extend = app.add_subcommand("extend", "extension by theta with d theta = omega");
    auto* tty = app.add_subcommand("tty", "filtered A-infinity algebra of a symplectic model");
    auto* pdcorrect = app.add_subcommand("pdcorrect", "correction of a cyclic PD minimal model");
    auto* torus = app.add_subcommand("torus-witness", "non-formality witness on T^{2n}");
    auto* cpn = app.add_subcommand("cpn-witness", "formality certificate for the CP^n extension");
    for (auto* s : {check, cohomology, transfer, extend, tty, pdcorrect}) common(s, true);
    for (auto* s : {torus, cpn}) {
        common(s, false);
        s->add_option("--n", o.n, "dimension parameter")->check(CLI::Range(1, 8));
    }
    transfer->add_flag("--strict-unital", o.strict_unital, "keep the unit in the harmonic basis");
    extend->add_option("--omega", o.omega, "closed element, e.g. \"e1*e2 + e3*e4\"");
    extend->add_option("--theta-degree", o.theta_degree, "degree of theta");
    tty->add_option("--level", o.level, "filtration level l");
    pdcorrect->add_option("--k", o.k, "connectivity");
    pdcorrect->add_option("--l", o.l, "target arity (default 3)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    for (auto* s : app.get_subcommands())
        if (s->count("--pmax")) o.pmax_given = true;
    set_parallelism(o.jobs);

    const std::string command = app.get_subcommands().front()->get_name();
    Outcome result;
    std::string bytes;
    try {
        if (command == "torus-witness") {
            result = cmd_torus(o);
        } else if (command == "cpn-witness") {
            result = cmd_cpn(o);
        } else {
            AlgebraFile f = load_algebra(o.path, o.pmax, &bytes);
            if (command == "check") result = cmd_check(f, o);
            else if (command == "cohomology") result = cmd_cohomology(f, o);
            else if (command == "transfer") result = cmd_transfer(f, o);
            else if (command == "extend") result = cmd_extend(f, o);
            else if (command == "tty") result = cmd_tty(f, o);
            else result = cmd_pdcorrect(f, o);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (!e.is_finding()) return 2;
        result.finding = true;
        result.lines.push_back(std::string("finding: ") + e.what());
        result.report.fail("exception", e.what());
    }

    for (const auto& line : result.lines) out << line << "\n";
    const bool passed = result.report.passed() && !result.finding;
    out << (passed ? "result: pass" : "result: fail") << "\n";

    if (!o.out.empty()) {
        json cert = {{"schema", kCertificateSchema},
                     {"command", command},
                     {"tool_version", kToolVersion},
                     {"pmax", o.pmax},
                     {"passed", passed},
                     {"lines", result.lines},
                     {"reports", report_json(result.report)},
                     {"result", result.result}};
        cert["input_digest"] = bytes.empty() ? json(nullptr) : json(digest(bytes));
        std::ofstream file(o.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << o.out << "'\n";
            return 2;
        }
        file << cert.dump(2) << "\n";
    }
    return passed ? 0 : 1;
}

}  // namespace ainf::cli
