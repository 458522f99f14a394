#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "eswap/laws.hpp"
#include "eswap/moments.hpp"
#include "eswap/permutation.hpp"
#include "eswap/spectrum.hpp"
#include "eswap/states.hpp"
#include "eswap/verify.hpp"
#include "manifest.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

// exit codes: 0 ok, 1 verification failure, 2 usage, 3 bound exceeded, 4 IO/data
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;
constexpr int kExitIo = 4;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

eswap::Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const eswap::BigInt num(text.substr(0, slash));
        const eswap::BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        return eswap::Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        eswap::BigInt den = 1;
        for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
        return eswap::Rational(eswap::BigInt(digits), den);
    }
    return eswap::Rational(eswap::BigInt(text));
}

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::string out = ".";
    int threads = 1;
    std::string format = "csv";
};

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::system_error(errno, std::generic_category(),
                                    "cannot open " + path.string());
    return f;
}

void write_manifest(const std::filesystem::path& dir, eswap::cli::RunManifest m,
                    const std::vector<std::string>& outputs) {
    for (const auto& name : outputs)
        m.output_digests[name] = eswap::cli::fnv1a64_hex_of_file((dir / name).string());
    auto f = open_output(dir / "manifest.json");
    f << m.to_json().dump(2) << "\n";
}

// ---- moments exact ----------------------------------------------------

struct MomentsExactOpts {
    std::string swap_case = "indep";
    int p = 1;
    long d1 = 1, d2 = 1, s = 1;
    int max_p = 0;  // 0 = per-case default
};

int cmd_moments_exact(const MomentsExactOpts& o, const GlobalOpts& g) {
    eswap::Rational value;
    if (o.swap_case == "indep")
        value = eswap::exact_moment_indep(o.p, o.d1, o.d2, o.s,
                                          o.max_p > 0 ? o.max_p : 8);
    else
        value = eswap::exact_moment_equal(o.p, o.d1, o.d2, o.s,
                                          o.max_p > 0 ? o.max_p : 4);
    std::ostringstream vs;
    vs << value;
    if (g.format == "json") {
        nlohmann::json j{{"case", o.swap_case}, {"p", o.p},     {"d1", o.d1},
                         {"d2", o.d2},          {"s", o.s},     {"value", vs.str()}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << vs.str() << "\n";
    }
    return 0;
}

// ---- moments limit -----------------------------------------------------

struct MomentsLimitOpts {
    int p = 1;
    std::string c;  // optional rational
};

int cmd_moments_limit(const MomentsLimitOpts& o, const GlobalOpts& g) {
    const auto poly = eswap::limit_moment(o.p);
    std::string result;
    if (!o.c.empty()) {
        std::ostringstream vs;
        vs << poly.evaluate(parse_rational(o.c));
        result = vs.str();
    } else {
        result = poly.to_string();
    }
    if (g.format == "json") {
        std::cout << nlohmann::json{{"p", o.p}, {"value", result}}.dump() << "\n";
    } else {
        std::cout << result << "\n";
    }
    return 0;
}

// ---- verify ------------------------------------------------------------

int cmd_verify(int pmax) {
    if (pmax < 2 || pmax > 8) {
        std::cerr << "verify: --pmax must be in [2, 8]\n";
        return kExitBound;
    }
    const auto results = eswap::run_verification(pmax);
    bool all_ok = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        if (!r.passed) all_ok = false;
    }
    return all_ok ? 0 : kExitVerifyFail;
}

// ---- simulate ----------------------------------------------------------

struct SimulateOpts {
    std::string swap_case = "indep";
    int d = 0, d1 = 0, d2 = 0;
    int s = 0;
    std::string c;
    int p_max = 4;
    int samples = 100;
};

int cmd_simulate(const SimulateOpts& o, const GlobalOpts& g) {
    int d1 = o.d1, d2 = o.d2;
    if (o.d > 0) d1 = d2 = o.d;
    if (d1 < 1 || d2 < 1) {
        std::cerr << "simulate: specify --d or both --d1 and --d2\n";
        return kExitUsage;
    }
    if ((o.s > 0) == !o.c.empty()) {
        std::cerr << "simulate: exactly one of --s and --c must be given\n";
        return kExitUsage;
    }
    eswap::Rational c_ratio;
    int s = o.s;
    if (!o.c.empty()) {
        c_ratio = parse_rational(o.c);
        // s = round(c * d2), ties away from zero; the realized s is recorded
        const eswap::Rational exact_s = c_ratio * d2;
        s = static_cast<int>((2 * numerator(exact_s) + denominator(exact_s)) /
                             (2 * denominator(exact_s)));
        if (s < 1) s = 1;
    } else {
        c_ratio = eswap::Rational(s, d2);
    }
    const auto swap_case =
        o.swap_case == "equal" ? eswap::SwapCase::equal : eswap::SwapCase::indep;

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<eswap::EmpiricalSpectrum> specs(static_cast<size_t>(o.samples));
    {
        std::atomic<int> next{0};
        auto worker = [&]() {
            for (int i = next.fetch_add(1); i < o.samples; i = next.fetch_add(1))
                specs[static_cast<size_t>(i)] = eswap::sample_spectrum(
                    swap_case, d1, d2, s, g.seed, static_cast<std::uint64_t>(i));
        };
        if (g.threads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < g.threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
    }

    const std::filesystem::path dir(g.out);
    std::filesystem::create_directories(dir);

    {
        auto f = open_output(dir / "eigs.csv");
        f << "sample_index,eig_index,value\n";
        for (int i = 0; i < o.samples; ++i) {
            const auto& eigs = specs[static_cast<size_t>(i)].eigenvalues;
            for (size_t k = 0; k < eigs.size(); ++k)
                f << i << "," << k << "," << fmt17(eigs[k]) << "\n";
        }
    }

    {
        const double norm = static_cast<double>(d2) * d2;
        auto f = open_output(dir / "moments.csv");
        f << "p,mean,stderr,limit_value,exploratory\n";
        const bool exploratory = swap_case == eswap::SwapCase::equal;
        for (int p = 1; p <= o.p_max; ++p) {
            double mean = 0.0;
            std::vector<double> vals(static_cast<size_t>(o.samples));
            for (int i = 0; i < o.samples; ++i) {
                double acc = 0.0;
                for (double lam : specs[static_cast<size_t>(i)].eigenvalues)
                    acc += std::pow(lam, p);
                vals[static_cast<size_t>(i)] = acc / norm;
                mean += vals[static_cast<size_t>(i)];
            }
            mean /= o.samples;
            double var = 0.0;
            for (double v : vals) var += (v - mean) * (v - mean);
            const double se =
                o.samples > 1 ? std::sqrt(var / (o.samples - 1) / o.samples) : 0.0;
            const double limit_value =
                static_cast<double>(eswap::limit_moment(p).evaluate(c_ratio));
            f << p << "," << fmt17(mean) << "," << fmt17(se) << ","
              << fmt17(limit_value) << "," << (exploratory ? "true" : "false")
              << "\n";
        }
    }

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    eswap::cli::RunManifest m;
    m.command = "simulate";
    m.parameters = {{"case", o.swap_case}, {"d1", d1},
                    {"d2", d2},            {"s", s},
                    {"c", o.c},            {"pmax", o.p_max},
                    {"samples", o.samples}, {"threads", g.threads},
                    {"exploratory", swap_case == eswap::SwapCase::equal}};
    m.seed = g.seed;
    m.tool_version = kToolVersion;
    m.duration_seconds = secs;
    write_manifest(dir, std::move(m), {"eigs.csv", "moments.csv"});
    return 0;
}

// ---- spectrum ----------------------------------------------------------

struct SpectrumOpts {
    std::string input;  // eigs.csv; empty = inline simulation
    std::string law = "z_limit";
    std::string c = "1";
    int bins = 50;
    std::string swap_case = "indep";
    int d = 0;
    int s = 0;
    std::string sim_c;
};

std::vector<double> read_eigs_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::system_error(errno, std::generic_category(),
                                     "cannot open " + path);
    std::vector<double> values;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1) continue;  // header
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string::npos)
            throw std::runtime_error("malformed CSV at line " +
                                     std::to_string(lineno));
        try {
            size_t used = 0;
            const std::string field = line.substr(c2 + 1);
            values.push_back(std::stod(field, &used));
            if (used != field.size()) throw std::invalid_argument("trailing data");
        } catch (const std::exception&) {
            throw std::runtime_error("malformed CSV at line " +
                                     std::to_string(lineno));
        }
    }
    if (values.empty()) throw std::runtime_error("no eigenvalues in " + path);
    return values;
}

int cmd_spectrum(const SpectrumOpts& o, const GlobalOpts& g) {
    std::vector<double> values;
    if (!o.input.empty()) {
        values = read_eigs_csv(o.input);
    } else {
        if (o.d < 1 || ((o.s > 0) == !o.sim_c.empty())) {
            std::cerr << "spectrum: give --in, or --d with exactly one of --s/--sim-c\n";
            return kExitUsage;
        }
        int s = o.s;
        if (!o.sim_c.empty()) {
            const auto cr = parse_rational(o.sim_c);
            const eswap::Rational exact_s = cr * o.d;
            s = static_cast<int>((2 * numerator(exact_s) + denominator(exact_s)) /
                                 (2 * denominator(exact_s)));
        }
        const auto swap_case = o.swap_case == "equal" ? eswap::SwapCase::equal
                                                      : eswap::SwapCase::indep;
        values = eswap::sample_spectrum(swap_case, o.d, o.d, s, g.seed).eigenvalues;
    }
    std::sort(values.begin(), values.end());

    const double c = static_cast<double>(parse_rational(o.c));
    const auto law = o.law == "semicircle" ? eswap::LimitLaw::semicircle()
                                           : eswap::LimitLaw::z_limit(c);
    const double ks = eswap::ks_distance(values, law);

    const std::filesystem::path dir(g.out);
    std::filesystem::create_directories(dir);
    {
        auto f = open_output(dir / "hist.csv");
        f << "bin_center,height\n";
        for (const auto& bin : eswap::histogram(values, o.bins))
            f << fmt17(bin.center) << "," << fmt17(bin.height) << "\n";
    }
    nlohmann::json report{{"law", o.law},
                          {"c", c},
                          {"n", values.size()},
                          {"ks", ks},
                          {"seed", g.seed}};
    {
        auto f = open_output(dir / "ks.json");
        f << report.dump(2) << "\n";
    }
    std::cout << report.dump() << "\n";
    return 0;
}

// ---- ppt scan ----------------------------------------------------------

struct PptScanOpts {
    int d = 2;
    std::string s_list = "2,16,64,200";
    int samples = 100;
};

int cmd_ppt_scan(const PptScanOpts& o, const GlobalOpts& g) {
    std::vector<int> s_values;
    std::stringstream ss(o.s_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        s_values.push_back(std::stoi(tok));
    }
    if (s_values.empty()) {
        std::cerr << "ppt scan: empty --s list\n";
        return kExitUsage;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const auto points = eswap::ppt_scan(o.d, s_values, o.samples, g.seed);

    const std::filesystem::path dir(g.out);
    std::filesystem::create_directories(dir);
    {
        auto f = open_output(dir / "ppt.csv");
        f << "d,s,samples,ppt_fraction,ci_halfwidth,seed\n";
        for (const auto& p : points)
            f << p.d << "," << p.s << "," << p.samples << ","
              << fmt17(p.ppt_fraction) << "," << fmt17(p.ci_halfwidth) << ","
              << g.seed << "\n";
    }
    eswap::cli::RunManifest m;
    m.command = "ppt scan";
    m.parameters = {{"d", o.d}, {"s", o.s_list}, {"samples", o.samples}};
    m.seed = g.seed;
    m.tool_version = kToolVersion;
    m.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(dir, std::move(m), {"ppt.csv"});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement-swap random matrix experiments"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--seed", g.seed, "master RNG seed");
    app.add_option("--out", g.out, "output directory");
    app.add_option("--threads", g.threads, "worker threads for sampling");
    app.add_option("--format", g.format, "stdout format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* moments = app.add_subcommand("moments", "exact and limit moments");
    moments->require_subcommand(1);

    MomentsExactOpts me;
    auto* mexact = moments->add_subcommand("exact", "exact E Tr[W^p] as a fraction");
    mexact->add_option("--case", me.swap_case)->check(CLI::IsMember({"indep", "equal"}));
    mexact->add_option("--p", me.p)->required();
    mexact->add_option("--d1", me.d1)->required();
    mexact->add_option("--d2", me.d2)->required();
    mexact->add_option("--s", me.s)->required();
    mexact->add_option("--max-p", me.max_p, "override the enumeration bound");

    MomentsLimitOpts ml;
    auto* mlimit = moments->add_subcommand("limit", "limit moment as a Laurent polynomial in c");
    mlimit->add_option("--p", ml.p)->required();
    mlimit->add_option("--c", ml.c, "evaluate exactly at a rational c (p/q)");

    int verify_pmax = 6;
    auto* verify = app.add_subcommand("verify", "run the exhaustive identity suite");
    verify->add_option("--pmax", verify_pmax);

    SimulateOpts sim;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo spectra and moments of Z");
    simulate->add_option("--case", sim.swap_case)->check(CLI::IsMember({"indep", "equal"}));
    simulate->add_option("--d", sim.d, "sets d1 = d2 = d");
    simulate->add_option("--d1", sim.d1);
    simulate->add_option("--d2", sim.d2);
    simulate->add_option("--s", sim.s);
    simulate->add_option("--c", sim.c, "ratio s/d2 as a rational; s = round(c*d2)");
    simulate->add_option("--pmax", sim.p_max);
    simulate->add_option("--samples", sim.samples);

    SpectrumOpts sp;
    auto* spectrum = app.add_subcommand("spectrum", "KS distance and histogram of a spectrum");
    spectrum->add_option("--in", sp.input, "eigs.csv from a simulate run");
    spectrum->add_option("--law", sp.law)->check(CLI::IsMember({"z_limit", "semicircle"}));
    spectrum->add_option("--c", sp.c, "law parameter c");
    spectrum->add_option("--bins", sp.bins);
    spectrum->add_option("--case", sp.swap_case)->check(CLI::IsMember({"indep", "equal"}));
    spectrum->add_option("--d", sp.d, "inline draw: d1 = d2 = d");
    spectrum->add_option("--s", sp.s, "inline draw: environment dimension");
    spectrum->add_option("--sim-c", sp.sim_c, "inline draw: ratio, s = round(c*d)");

    auto* ppt = app.add_subcommand("ppt", "PPT experiments");
    ppt->require_subcommand(1);
    PptScanOpts pso;
    auto* pscan = ppt->add_subcommand("scan", "PPT fraction of induced states per s");
    pscan->add_option("--d", pso.d)->required();
    pscan->add_option("--s", pso.s_list, "comma-separated s values");
    pscan->add_option("--samples", pso.samples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (mexact->parsed()) return cmd_moments_exact(me, g);
        if (mlimit->parsed()) return cmd_moments_limit(ml, g);
        if (verify->parsed()) return cmd_verify(verify_pmax);
        if (simulate->parsed()) return cmd_simulate(sim, g);
        if (spectrum->parsed()) return cmd_spectrum(sp, g);
        if (pscan->parsed()) return cmd_ppt_scan(pso, g);
    } catch (const eswap::bound_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBound;
    } catch (const std::system_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
