#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "mukai/report.hpp"
#include "mukai/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariantFailure = 1;
constexpr int kExitUsage = 2;

struct OutputTarget {
    std::string path; // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file '" + path + "'");
        out << text;
    }
};

int sweep_threads(long range_size) {
    if (const char* env = std::getenv("MUKAI_WALLS_THREADS")) {
        char* end = nullptr;
        long parsed = std::strtol(env, &end, 10);
        if (end && *end == '\0' && parsed >= 1)
            return static_cast<int>(parsed);
        std::cerr << "ignoring malformed MUKAI_WALLS_THREADS='" << env << "'\n";
    }
    unsigned hw = std::thread::hardware_concurrency();
    long def = hw == 0 ? 1 : static_cast<long>(hw);
    return static_cast<int>(std::min<long>(def, std::max<long>(1, range_size)));
}

bool parse_range(const std::string& text, long& lo, long& hi) {
    auto sep = text.find("..");
    if (sep == std::string::npos)
        return false;
    try {
        std::size_t used = 0;
        lo = std::stol(text.substr(0, sep), &used);
        if (used != sep)
            return false;
        std::string rest = text.substr(sep + 2);
        hi = std::stol(rest, &used);
        return used == rest.size();
    } catch (const std::exception&) {
        return false;
    }
}

int run_table(long genus, const std::string& format, const OutputTarget& out) {
    if (genus < 4) {
        std::cerr << "genus must be >= 4\n";
        return kExitUsage;
    }
    mukai::GenusReport report = mukai::assemble_report(mukai::GenusContext(genus));
    switch (mukai::parse_format(format)) {
    case mukai::Format::Md: out.write(mukai::render_table_md(report)); break;
    case mukai::Format::Csv: out.write(mukai::render_table_csv(report)); break;
    case mukai::Format::Json: out.write(mukai::render_report_json(report)); break;
    }
    return kExitOk;
}

int run_report(long genus, const std::string& format, const OutputTarget& out,
               std::string (*md)(const mukai::GenusReport&),
               std::string (*json)(const mukai::GenusReport&)) {
    if (genus < 4) {
        std::cerr << "genus must be >= 4\n";
        return kExitUsage;
    }
    mukai::GenusReport report = mukai::assemble_report(mukai::GenusContext(genus));
    switch (mukai::parse_format(format)) {
    case mukai::Format::Md: out.write(md(report)); break;
    case mukai::Format::Json: out.write(json(report)); break;
    case mukai::Format::Csv:
        std::cerr << "csv is only available for the table command\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_verify(const std::string& range, bool quiet, const OutputTarget& out) {
    long lo = 0, hi = 0;
    if (!parse_range(range, lo, hi) || lo < 4 || hi < lo) {
        std::cerr << "range must be of the form a..b with 4 <= a <= b\n";
        return kExitUsage;
    }
    int threads = sweep_threads(hi - lo + 1);
    mukai::SweepResult result = mukai::verify_range(lo, hi, threads);

    std::string text;
    if (!quiet)
        text += "checked " + std::to_string(result.genera_checked) +
                (result.genera_checked == 1 ? " genus, " : " genera, ") +
                std::to_string(result.pairs_checked) + " pairs\n";
    for (const auto& f : result.failures)
        text += "FAIL g=" + std::to_string(f.genus) + " invariant=" + f.invariant_id +
                " witness=" + f.witness + "\n";
    text += result.ok() ? "verify: pass\n" : "verify: fail\n";
    out.write(text);
    return result.ok() ? kExitOk : kExitInvariantFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact wall-and-chamber data for the birational models of Bl_X P^g "
                 "over a Picard-rank-1 K3 of genus g"};
    app.require_subcommand(1);

    long genus = 0;
    std::string format = "md";
    std::string out_path;
    std::string range;
    bool quiet = false;

    auto add_common = [&](CLI::App* cmd, bool with_genus) {
        if (with_genus)
            cmd->add_option("--genus", genus, "genus (>= 4)")->required();
        cmd->add_option("--format", format, "output format: md, csv or json");
        cmd->add_option("--out", out_path, "output file (default stdout)");
        cmd->add_flag("--quiet", quiet, "suppress progress output");
    };

    CLI::App* table = app.add_subcommand("table", "per-genus wall table");
    add_common(table, true);
    CLI::App* verify = app.add_subcommand("verify", "invariant sweep over a genus range");
    verify->add_option("--range", range, "genus range a..b")->required();
    verify->add_option("--out", out_path, "output file (default stdout)");
    verify->add_flag("--quiet", quiet, "suppress progress output");
    CLI::App* duality = app.add_subcommand("duality", "dual-pair map and certificates");
    add_common(duality, true);
    CLI::App* sod = app.add_subcommand("sod", "semiorthogonal block ledger");
    add_common(sod, true);
    CLI::App* cones = app.add_subcommand("cones", "ample-cone chamber table");
    add_common(cones, true);
    CLI::App* lattice = app.add_subcommand("lattice", "Mukai lattice data");
    add_common(lattice, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    OutputTarget out{out_path};
    try {
        if (table->parsed())
            return run_table(genus, format, out);
        if (verify->parsed())
            return run_verify(range, quiet, out);
        if (duality->parsed()) {
            if (genus >= 4 && genus % 4 != 3) {
                std::cerr << "duality data exists only for g = 3 mod 4 (got g = "
                          << genus << ")\n";
                return kExitUsage;
            }
            return run_report(genus, format, out, mukai::render_duality_md,
                              mukai::render_duality_json);
        }
        if (sod->parsed())
            return run_report(genus, format, out, mukai::render_sod_md, mukai::render_sod_json);
        if (cones->parsed())
            return run_report(genus, format, out, mukai::render_cones_md,
                              mukai::render_cones_json);
        if (lattice->parsed())
            return run_report(genus, format, out, mukai::render_lattice_md,
                              mukai::render_lattice_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariantFailure;
    }
    return kExitUsage;
}
