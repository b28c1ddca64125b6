// congruence-lab command line: residue censuses, Hecke pipeline steps,
// eigen-prime probes, almost-prime counts and square-class analysis, wired
// for reproducible experiment scripts.
//
// Exit codes: 0 ok, 2 usage, 3 unhit residue class, 4 memory cap,
// 5 precision exhausted.

#include <CLI11.hpp>

#include "conglab/arith.hpp"
#include "conglab/census.hpp"
#include "conglab/config.hpp"
#include "conglab/hecke.hpp"
#include "conglab/partitions.hpp"
#include "conglab/qseries.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace conglab;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

std::vector<std::int64_t> split_ints(const std::string& s, char sep) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        std::string tok = s.substr(
            pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty())
            throw std::invalid_argument("empty field in '" + s + "'");
        out.push_back(std::stoll(tok));
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return out;
}

RealCharacter parse_char(const std::string& spec) {
    if (spec == "trivial")
        return RealCharacter::trivial(1);
    if (spec.rfind("trivial:", 0) == 0)
        return RealCharacter::trivial(std::stoull(spec.substr(8)));
    if (spec.rfind("kron:", 0) == 0)
        return RealCharacter::kronecker_char(std::stoll(spec.substr(5)));
    throw std::invalid_argument("bad --char (want trivial|trivial:m|kron:d)");
}

FormMeta parse_meta(const std::string& weight, std::int64_t level,
                    const std::string& char_spec) {
    RealCharacter chi = parse_char(char_spec);
    if (weight.rfind("int:", 0) == 0)
        return FormMeta::integer_weight(std::stoll(weight.substr(4)), level,
                                        chi);
    if (weight.rfind("half:", 0) == 0)
        return FormMeta::half_integral(std::stoll(weight.substr(5)), level,
                                       chi);
    throw std::invalid_argument("bad --weight (want int:k|half:lambda)");
}

struct CensusArgs {
    std::string sequence;
    std::uint64_t modulus = 0;
    std::int64_t xmax = 0;
    int s = 1;
    double ratio = 2.0;
    std::string curve = "sqrt";
    std::string out;
};

int run_census(const CensusArgs& args) {
    Modulus m(args.modulus);
    std::vector<std::uint64_t> values;
    if (args.sequence == "partition") {
        values = p_table(m, args.xmax).values;
    } else if (args.sequence.rfind("regular:", 0) == 0) {
        auto pa = split_ints(args.sequence.substr(8), ',');
        if (pa.size() != 2)
            throw std::invalid_argument("--sequence regular wants regular:p,a");
        values = regular_table(static_cast<std::uint64_t>(pa[0]),
                               static_cast<int>(pa[1]), m, args.xmax);
    } else if (args.sequence.rfind("file:", 0) == 0) {
        QSeries f = deserialize(read_file(args.sequence.substr(5)));
        if (f.modulus() % m.value != 0)
            throw std::invalid_argument(
                "file modulus must be a multiple of --modulus");
        if (f.precision() < args.xmax)
            throw std::invalid_argument("file precision below --xmax");
        values = f.data();
    } else {
        throw std::invalid_argument(
            "bad --sequence (want partition|regular:p,a|file:PATH)");
    }

    CensusTable table = census(values, m, args.xmax, args.ratio);
    CurveKind kind;
    if (args.curve == "sqrt")
        kind = CurveKind::SqrtX;
    else if (args.curve == "linear")
        kind = CurveKind::LinearX;
    else
        throw std::invalid_argument("bad --curve (want sqrt|linear)");
    WdReport report = wd_report(table, args.s, kind);
    write_output(args.out, wd_csv(report));

    if (!report.unhit.empty()) {
        std::cerr << "unhit residue classes:";
        for (std::uint64_t r : report.unhit)
            std::cerr << ' ' << r;
        std::cerr << '\n';
        return 3;
    }
    return 0;
}

struct HeckeArgs {
    std::string input;
    std::string weight;
    std::int64_t level = 1;
    std::string char_spec = "trivial";
    std::vector<std::uint64_t> ps;
    std::string out;
};

int run_hecke(const HeckeArgs& args) {
    QSeries f = deserialize(read_file(args.input));
    FormMeta meta = parse_meta(args.weight, args.level, args.char_spec);
    QSeries image = hecke_iterate(f, meta, args.ps);
    write_output(args.out, serialize(image));
    return 0;
}

struct ProbeArgs {
    std::string input;
    std::string weight;
    std::int64_t level = 1;
    std::string char_spec = "trivial";
    std::string cls;
    std::uint64_t scalar = 2;
    std::string vset;
    int budget = 50;
    std::string out;
};

int run_probe(const ProbeArgs& args) {
    QSeries f = deserialize(read_file(args.input));
    FormMeta meta = parse_meta(args.weight, args.level, args.char_spec);

    std::vector<ProbeReport> reports;
    std::string descriptor;
    if (!args.vset.empty()) {
        auto ni = split_ints(args.vset, ',');
        if (ni.size() != 2)
            throw std::invalid_argument("--vset wants n0,i");
        reports = probe_integer(f, meta, ni[0], static_cast<int>(ni[1]),
                                args.budget);
        descriptor = "primes l with a(n0*l^i) = (i+1)a(n0), n0,i = " + args.vset;
    } else {
        if (args.cls.empty())
            throw std::invalid_argument("probe needs --class a,m or --vset n0,i");
        auto am = split_ints(args.cls, ',');
        if (am.size() != 2 || am[1] < 1)
            throw std::invalid_argument("--class wants a,m with m >= 1");
        reports = probe_eigen(f, meta, am[0],
                              static_cast<std::uint64_t>(am[1]), args.scalar,
                              args.budget);
        descriptor = "primes p = " + args.cls + " with f|T = " +
                     std::to_string(args.scalar) + "f";
    }
    write_output(args.out, probe_jsonl(reports));

    for (const ProbeReport& r : reports)
        if (r.p_divides_level)
            std::cerr << "warning: probed p=" << r.p << " divides the level\n";
    DensityEstimate est = density_estimate(descriptor, reports);
    std::cerr << "verified proportion " << est.density << " (primes up to "
              << est.sample_bound << ")\n";
    return 0;
}

struct PisArgs {
    std::string set;
    int s = 1;
    std::uint64_t x = 0;
    bool with_repetition = false;
};

int run_pis(const PisArgs& args) {
    std::vector<std::uint64_t> primes;
    if (args.set == "all") {
        primes = primes_up_to(args.x);
    } else if (args.set.rfind("class:", 0) == 0) {
        auto am = split_ints(args.set.substr(6), ',');
        if (am.size() != 2 || am[1] < 1)
            throw std::invalid_argument("--set class wants class:a,m");
        primes = primes_in_class(am[0], static_cast<std::uint64_t>(am[1]),
                                 args.x);
    } else if (args.set.rfind("file:", 0) == 0) {
        std::istringstream in(read_file(args.set.substr(5)));
        std::uint64_t p;
        while (in >> p) {
            if (!is_prime(p))
                throw std::invalid_argument("prime set file contains " +
                                            std::to_string(p) +
                                            ", which is not prime");
            primes.push_back(p);
        }
    } else {
        throw std::invalid_argument(
            "bad --set (want file:PATH|class:a,m|all)");
    }
    std::cout << pi_s(primes, args.s, args.x, args.with_repetition) << '\n';
    return 0;
}

struct SquareClassArgs {
    std::string input;
    std::uint64_t ell = 0;
    std::string out;
};

int run_squareclass(const SquareClassArgs& args) {
    QSeries f = deserialize(read_file(args.input));
    std::string text;
    for (std::uint64_t k : square_class_support(f, args.ell)) {
        text += std::to_string(k);
        text += '\n';
    }
    write_output(args.out, text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"congruence-lab: coefficient residue experiments on "
                 "truncated q-expansions"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    app.add_option("--seed", seed,
                   "seed for randomized diagnostics (outputs stay "
                   "byte-deterministic for fixed flags and seed)");

    CensusArgs census_args;
    CLI::App* census_cmd = app.add_subcommand(
        "census", "residue-class census of a coefficient sequence");
    census_cmd->add_option("--sequence", census_args.sequence,
                           "partition|regular:p,a|file:PATH")
        ->required();
    census_cmd->add_option("--modulus", census_args.modulus, "modulus M")
        ->required();
    census_cmd->add_option("--xmax", census_args.xmax, "census bound X")
        ->required();
    census_cmd->add_option("--s", census_args.s, "log log exponent (default 1)");
    census_cmd->add_option("--ratio", census_args.ratio,
                           "checkpoint ratio (default 2)");
    census_cmd->add_option("--curve", census_args.curve,
                           "comparison curve: sqrt|linear (default sqrt)");
    census_cmd->add_option("--out", census_args.out, "output CSV path");

    HeckeArgs hecke_args;
    CLI::App* hecke_cmd = app.add_subcommand(
        "hecke", "apply Hecke operators to a QS1 series");
    hecke_cmd->add_option("--input", hecke_args.input, "QS1 input path")
        ->required();
    hecke_cmd->add_option("--weight", hecke_args.weight, "int:k|half:lambda")
        ->required();
    hecke_cmd->add_option("--level", hecke_args.level, "level N (default 1)");
    hecke_cmd->add_option("--char", hecke_args.char_spec,
                          "trivial|trivial:m|kron:d (default trivial)");
    hecke_cmd->add_option("--p", hecke_args.ps,
                          "prime to apply (repeatable, left to right)");
    hecke_cmd->add_option("--out", hecke_args.out, "output QS1 path");

    ProbeArgs probe_args;
    CLI::App* probe_cmd = app.add_subcommand(
        "probe", "eigen-prime probe f|T = c*f, or coefficient probe "
                 "a(n0*l^i) = (i+1)a(n0)");
    probe_cmd->add_option("--input", probe_args.input, "QS1 input path")
        ->required();
    probe_cmd->add_option("--weight", probe_args.weight, "int:k|half:lambda")
        ->required();
    probe_cmd->add_option("--level", probe_args.level, "level N (default 1)");
    probe_cmd->add_option("--char", probe_args.char_spec,
                          "trivial|trivial:m|kron:d (default trivial)");
    probe_cmd->add_option("--class", probe_args.cls,
                          "congruence class a,m to draw primes from");
    probe_cmd->add_option("--scalar", probe_args.scalar,
                          "eigen scalar c (default 2)");
    probe_cmd->add_option("--vset", probe_args.vset,
                          "n0,i for the coefficient probe");
    probe_cmd->add_option("--budget", probe_args.budget,
                          "number of primes to probe (default 50)");
    probe_cmd->add_option("--out", probe_args.out, "output JSONL path");

    PisArgs pis_args;
    CLI::App* pis_cmd = app.add_subcommand(
        "pis", "count n <= X that are products of s distinct set primes");
    pis_cmd->add_option("--set", pis_args.set, "file:PATH|class:a,m|all")
        ->required();
    pis_cmd->add_option("--s", pis_args.s, "number of prime factors")
        ->required();
    pis_cmd->add_option("--x", pis_args.x, "bound X")->required();
    pis_cmd->add_flag("--with-repetition", pis_args.with_repetition,
                      "count products with repeated primes instead");

    SquareClassArgs sq_args;
    CLI::App* sq_cmd = app.add_subcommand(
        "squareclass", "squarefree kernels of the mod-ell support");
    sq_cmd->add_option("--input", sq_args.input, "QS1 input path")->required();
    sq_cmd->add_option("--ell", sq_args.ell, "odd prime ell")->required();
    sq_cmd->add_option("--out", sq_args.out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (census_cmd->parsed())
            return run_census(census_args);
        if (hecke_cmd->parsed())
            return run_hecke(hecke_args);
        if (probe_cmd->parsed())
            return run_probe(probe_args);
        if (pis_cmd->parsed())
            return run_pis(pis_args);
        if (sq_cmd->parsed())
            return run_squareclass(sq_args);
    } catch (const MemoryCapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const PrecisionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
