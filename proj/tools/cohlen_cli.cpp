#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cohlen/suites.hpp"

namespace fs = std::filesystem;
using namespace cohlen;

namespace {

json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_file(const fs::path &path, const std::string &content)
{
    if (!path.parent_path().empty())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
}

int cmd_decompose(const std::string &input, const std::string &out_dir)
{
    PerfectComplex x = complex_from_json(read_json_file(input));
    Barcode bc = barcode(x);
    std::cout << "barcode " << bc.to_string() << "\n";
    std::cout << "total rank " << bc.total_rank() << "\n";
    if (!out_dir.empty()) {
        json j;
        j["barcode"] = barcode_to_json(bc);
        j["total_rank"] = bc.total_rank();
        write_file(fs::path(out_dir) / "barcode.json", j.dump(2) + "\n");
    }
    return 0;
}

int cmd_chi(const std::string &input, bool module_k, int n_lo, int n_hi, int s_max,
            const std::string &probes_file, const std::string &out_dir)
{
    PerfectComplex x = complex_from_json(read_json_file(input));
    const CoeffAlgebra &alg = x.algebra();

    std::vector<std::pair<std::string, PerfectComplex>> probes;
    if (!probes_file.empty()) {
        json j = read_json_file(probes_file);
        size_t i = 0;
        for (const auto &doc : j)
            probes.emplace_back("probe" + std::to_string(i++), complex_from_json(doc));
    } else {
        for (int s = 0; s <= s_max; ++s)
            probes.emplace_back("X(0," + std::to_string(s) + ")", PerfectComplex::bar(alg, 0, s));
    }

    CohFunction chi = module_k
                          ? CohFunction::of_stalk_module(StalkModule::simple_over_dual(alg, 0))
                          : CohFunction::of_complex(x);
    std::vector<ChiTableRow> rows;
    for (const auto &[name, p] : probes)
        for (int n = n_lo; n <= n_hi; ++n)
            rows.push_back({name, n, chi.eval(p.shift(n))});
    std::cout << "probe\tshift\tvalue\n";
    for (const auto &r : rows)
        std::cout << r.probe << "\t" << r.shift << "\t" << r.value << "\n";
    if (!out_dir.empty())
        write_file(fs::path(out_dir) / "chi_table.csv", chi_table_csv(rows));
    return 0;
}

int cmd_verify(const std::string &suite, const RunConfig &cfg)
{
    SuiteReport rep = run_suite(suite, cfg);
    std::cout << rep.to_text();
    if (!cfg.out_dir.empty()) {
        write_file(fs::path(cfg.out_dir) / (suite + "_report.json"), rep.to_json().dump(2) + "\n");
        if (suite == "spectrum") {
            CoeffAlgebra alg = CoeffAlgebra::dual_numbers(field_of(cfg));
            SpectrumWindow w = enumerate_sp_dual_numbers(alg, std::max(3, cfg.r_max));
            auto [csv, summary] = spectrum_report(w);
            write_file(fs::path(cfg.out_dir) / "spectrum_table.csv", csv);
            write_file(fs::path(cfg.out_dir) / "spectrum_summary.json", summary.dump(2) + "\n");
        }
    }
    return rep.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"exact length functions on perfect complexes"};
    app.require_subcommand(1);

    std::string input, out_dir, probes_file, nrange;
    bool module_k = false;
    RunConfig cfg;
    std::string suite;
    int m_max = 4, s_max = 4;

    auto *dec = app.add_subcommand("decompose", "barcode of a complex over the dual numbers");
    dec->add_option("input", input, "complex JSON file")->required();
    dec->add_option("--out", out_dir, "output directory for machine-readable results");

    std::string chi_nrange;
    auto *chi = app.add_subcommand("chi", "length table of a complex over a probe window");
    chi->add_option("input", input, "complex JSON file")->required();
    chi->add_flag("--module-k", module_k, "evaluate the simple stalk class instead");
    chi->add_option("--n-range", chi_nrange, "probe shift window a:b");
    chi->add_option("--r-max", s_max, "longest probe string");
    chi->add_option("--probes", probes_file, "JSON file with a list of probe complexes");
    chi->add_option("--out", out_dir, "output directory for the CSV table");

    auto *ver = app.add_subcommand("verify", "run a named verification suite");
    ver->add_option("suite", suite,
                    "one of: theorem1 axioms decompose ar-exact schanuel spectrum spec-embedding")
        ->required()
        ->check(CLI::IsMember(verify_suite_names()));
    ver->add_option("--field", cfg.field, "coefficient field: a prime, or Q");
    ver->add_option("--seed", cfg.seed, "random seed");
    ver->add_option("--r-max", cfg.r_max, "spectrum window size");
    ver->add_option("--n-range", nrange, "degree window a:b");
    ver->add_option("--out", out_dir, "output directory for reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (dec->parsed())
            return cmd_decompose(input, out_dir);
        if (chi->parsed()) {
            int lo = -m_max, hi = m_max;
            if (!chi_nrange.empty()) {
                auto colon = chi_nrange.find(':');
                require(colon != std::string::npos, "--n-range expects a:b");
                lo = std::stoi(chi_nrange.substr(0, colon));
                hi = std::stoi(chi_nrange.substr(colon + 1));
            }
            return cmd_chi(input, module_k, lo, hi, s_max, probes_file, out_dir);
        }
        if (ver->parsed()) {
            cfg.out_dir = out_dir;
            if (!nrange.empty()) {
                auto colon = nrange.find(':');
                require(colon != std::string::npos, "--n-range expects a:b");
                cfg.n_lo = std::stoi(nrange.substr(0, colon));
                cfg.n_hi = std::stoi(nrange.substr(colon + 1));
            }
            return cmd_verify(suite, cfg);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
