#include "qbp/cli.hpp"

#include <filesystem>
#include <ostream>

#include <CLI11.hpp>

#include "qbp/bootstrap.hpp"
#include "qbp/io.hpp"
#include "qbp/metrics.hpp"
#include "qbp/td.hpp"

namespace qbp {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kIoError = 3;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

TdLabel parse_family(const std::string& s) {
    if (s.size() != 4 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("family must be four digits, e.g. 0123", 0);
    return TdLabel{s[0] - '0', s[1] - '0', s[2] - '0', s[3] - '0'};
}

std::vector<ClassicalCode> parse_codes(const std::string& list, int p) {
    std::vector<std::string> specs = split_commas(list);
    if (static_cast<int>(specs.size()) != p)
        throw std::invalid_argument("need exactly p=" + std::to_string(p) + " code specs, got " +
                                    std::to_string(specs.size()));
    std::vector<ClassicalCode> codes;
    codes.reserve(specs.size());
    for (const std::string& s : specs) codes.push_back(parse_code_spec(s));
    return codes;
}

std::vector<ClassicalCode> rep_codes(int p, int L) {
    std::vector<ClassicalCode> codes;
    for (int i = 0; i < p; ++i) codes.push_back(repetition_code(L));
    return codes;
}

int cmd_solve(int p, int q, int w, bool json, std::ostream& out) {
    ForkComplexSpec spec = solve_fork(p, q, w);
    if (json) {
        out << fork_to_json_text(spec);
        return kOk;
    }
    out << "fork complex (" << p << "," << q << "," << w << ")\n";
    for (const LevelSolution& lvl : spec.levels) {
        out << "level t=" << lvl.t << ": " << lvl.canonical_generators.size() << " generator"
            << (lvl.canonical_generators.size() == 1 ? "" : "s") << "\n";
        for (const Poly& g : lvl.canonical_generators) out << "  " << render_poly(g) << "\n";
    }
    return kOk;
}

int cmd_build(int p, int q, int w, const std::string& codes_arg, const std::string& out_base,
              const std::string& format, std::ostream& out) {
    std::vector<ClassicalCode> codes = parse_codes(codes_arg, p);
    ForkComplexSpec spec = solve_fork(p, q, w);
    CssCode code = build_css(spec, codes);

    const bool mtx = format == "mtx";
    const std::string ext = mtx ? ".mtx" : ".alist";
    auto dump = mtx ? export_mtx : export_alist;
    write_file(out_base + ".hx" + ext, dump(code.h_x));
    write_file(out_base + ".hz" + ext, dump(code.h_z));
    write_file(out_base + ".json", css_metadata(code, p, q, w).dump(2) + "\n");

    out << "n = " << code.n_qubits << "\n"
        << "x_checks = " << code.h_x.rows << "\n"
        << "z_checks = " << code.h_z.rows << "\n"
        << "wrote " << out_base << ".hx" << ext << ", " << out_base << ".hz" << ext << ", "
        << out_base << ".json\n";
    return kOk;
}

SparseMatrix load_matrix(const std::string& base, const std::string& which) {
    namespace fs = std::filesystem;
    const std::string alist_path = base + "." + which + ".alist";
    const std::string mtx_path = base + "." + which + ".mtx";
    if (fs::exists(alist_path)) return import_alist(read_file(alist_path));
    if (fs::exists(mtx_path)) return import_mtx(read_file(mtx_path));
    throw std::runtime_error("no " + alist_path + " or " + mtx_path);
}

int cmd_params(const std::string& base, const std::string& distance, std::size_t trials,
               std::uint64_t seed, std::size_t kernel_limit, std::ostream& out) {
    CssCode code;
    code.h_x = load_matrix(base, "hx");
    code.h_z = load_matrix(base, "hz");
    if (code.h_x.cols != code.h_z.cols)
        throw std::invalid_argument("h_x and h_z disagree on the qubit count");
    code.n_qubits = code.h_x.cols;

    const std::size_t k = logical_count(code);
    out << "n = " << code.n_qubits << "\n";
    out << "k = " << k << "\n";
    if (distance == "none") return kOk;

    auto one_side = [&](Side side) {
        if (distance == "exact") return distance_exact(code, side, kernel_limit);
        return distance_estimate(code, side, trials, seed);
    };
    DistanceResult dx = one_side(Side::X);
    DistanceResult dz = one_side(Side::Z);
    out << "d_x = " << render_distance(dx) << "\n";
    out << "d_z = " << render_distance(dz) << "\n";
    if (dx.d && dz.d)
        out << "[[" << code.n_qubits << ", " << k << ", " << std::min(*dx.d, *dz.d) << "]]\n";
    return kOk;
}

int cmd_verify(const std::string& target, int L, std::ostream& out) {
    bool pass = false;
    if (target == "xcube") {
        CssCode qbp_code = build_css(solve_fork(3, 2, 0), rep_codes(3, L));
        TdLabel label{0, 1, 2, 3};
        CssCode td_code = td_build(label, L);
        pass = codes_equivalent(qbp_code, td_code, dual_qubit_bijection(qbp_code, label, L));
        out << (pass ? "ok" : "FAIL") << ": (3,2,0) product of rep(" << L
            << ") matches the X-cube lattice construction on the dual lattice\n";
    } else if (target == "4dtoric") {
        std::vector<ClassicalCode> codes = rep_codes(4, L);
        CssCode code = build_css(solve_fork(4, 2, 1), codes);
        CssCode ref = hgp_reference(codes, 2);
        const std::size_t k = logical_count(code);
        pass = rowspace_equal(code.h_x, ref.h_x) && rowspace_equal(code.h_z, ref.h_z) && k == 6;
        out << (pass ? "ok" : "FAIL") << ": (4,2,1) product of rep(" << L
            << ") is the 4D toric code (n=" << code.n_qubits << ", k=" << k << ")\n";
    } else if (target == "hgp") {
        pass = true;
        for (int p = 2; p <= 4; ++p) {
            for (int q = 1; q <= p - 1; ++q) {
                std::vector<ClassicalCode> codes = rep_codes(p, L);
                CssCode code = build_css(solve_fork(p, q, q - 1), codes);
                CssCode ref = hgp_reference(codes, q);
                bool ok = rowspace_equal(code.h_x, ref.h_x) && rowspace_equal(code.h_z, ref.h_z);
                out << (ok ? "ok" : "FAIL") << ": (" << p << "," << q << "," << q - 1
                    << ") matches the tensor-product segment\n";
                pass = pass && ok;
            }
        }
    } else {
        throw std::invalid_argument("unknown verify target: " + target);
    }
    return pass ? kOk : kVerifyFailed;
}

int cmd_sweep(const std::string& families_arg, int L, const std::string& csv_path,
              std::size_t trials, std::uint64_t seed, std::ostream& out) {
    std::vector<TdLabel> families;
    if (!families_arg.empty()) {
        for (const std::string& f : split_commas(families_arg)) families.push_back(parse_family(f));
    }
    SweepOptions opt;
    opt.trials = trials;
    opt.seed = seed;
    std::vector<SweepRow> rows = sweep_table(families, L, opt);
    const std::string csv = sweep_csv(rows);
    if (!csv_path.empty()) {
        write_file(csv_path, csv);
        out << "wrote " << csv_path << " (" << rows.size() << " rows)\n";
    } else {
        out << csv;
    }
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quantum bootstrap product code toolkit"};
    app.require_subcommand(1);

    int p = 0, q = 0, w = 0, L = 3;
    bool json = false;
    std::string codes_arg, out_base, format = "alist";
    std::string base, distance = "none", target, families_arg, csv_path;
    std::size_t trials = 1000, kernel_limit = kDefaultKernelLimit;
    std::uint64_t seed = 7;

    CLI::App* solve = app.add_subcommand("solve", "solve the bootstrap equation for a triple");
    solve->add_option("--p", p, "number of input codes")->required();
    solve->add_option("--q", q, "qubit chain degree")->required();
    solve->add_option("--w", w, "X-check chain degree")->required();
    solve->add_flag("--json", json, "emit JSON");

    CLI::App* build = app.add_subcommand("build", "assemble the CSS check matrices");
    build->add_option("--p", p)->required();
    build->add_option("--q", q)->required();
    build->add_option("--w", w)->required();
    build->add_option("--codes", codes_arg, "comma-separated code specs (rep:L | alist:path | random:NxM:seed)")
        ->required();
    build->add_option("--out", out_base, "output base path")->required();
    build->add_option("--format", format, "matrix format")->check(CLI::IsMember({"alist", "mtx"}));

    CLI::App* params = app.add_subcommand("params", "compute code parameters from saved matrices");
    params->add_option("base", base, "base path of a build")->required();
    params->add_option("--distance", distance, "distance mode")
        ->check(CLI::IsMember({"none", "exact", "estimate"}));
    params->add_option("--trials", trials, "estimation trials");
    params->add_option("--seed", seed, "estimation seed");
    params->add_option("--kernel-limit", kernel_limit, "exact enumeration kernel budget");

    CLI::App* verify = app.add_subcommand("verify", "check a named equivalence");
    verify->add_option("--target", target, "xcube | 4dtoric | hgp")->required();
    verify->add_option("--L", L, "repetition length");

    CLI::App* sweep = app.add_subcommand("sweep", "parameter table over tetra-digit families");
    sweep->add_option("--families", families_arg, "comma-separated four-digit labels, e.g. 0123")
        ->required();
    sweep->add_option("--L", L, "lattice size")->required();
    sweep->add_option("--csv", csv_path, "CSV output path");
    std::size_t sweep_trials = 64;
    std::uint64_t sweep_seed = 1;
    sweep->add_option("--trials", sweep_trials, "estimation trials");
    sweep->add_option("--seed", sweep_seed, "estimation seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (app.got_subcommand(solve)) return cmd_solve(p, q, w, json, out);
        if (app.got_subcommand(build)) return cmd_build(p, q, w, codes_arg, out_base, format, out);
        if (app.got_subcommand(params))
            return cmd_params(base, distance, trials, seed, kernel_limit, out);
        if (app.got_subcommand(verify)) return cmd_verify(target, L, out);
        if (app.got_subcommand(sweep))
            return cmd_sweep(families_arg, L, csv_path, sweep_trials, sweep_seed, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    }
    err << "error: no subcommand\n";
    return kUsage;
}

}  // namespace qbp
