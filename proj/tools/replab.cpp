// Batch front end: every experiment is a subcommand writing CSV/JSON plus a
// run manifest. Identical config => byte-identical outputs.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "replab/certificate.hpp"
#include "replab/orbit.hpp"
#include "replab/periodic.hpp"
#include "replab/shiftlab.hpp"
#include "replab/symbolic.hpp"

using nlohmann::json;
using namespace replab;

namespace {

constexpr const char* kVersion = "0.1.0";

struct RunContext {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;

    void set(const std::string& key, const std::string& value) { config.emplace_back(key, value); }
    void set(const std::string& key, double value) { set(key, fmt17(value)); }
    void set(const std::string& key, long value) { set(key, std::to_string(value)); }

    std::string canonical() const {
        std::ostringstream os;
        os << command;
        for (const auto& [k, v] : config) os << ";" << k << "=" << v;
        return os.str();
    }
    std::string hash() const { return hash_hex(canonical()); }

    json config_json() const {
        json j;
        for (const auto& [k, v] : config) j[k] = v;
        return j;
    }
};

void write_manifest(const RunContext& ctx, const std::string& out_path, double elapsed_ms,
                    const std::vector<std::string>& artifacts) {
    json m;
    m["command"] = ctx.command;
    m["config"] = ctx.config_json();
    m["config_hash"] = ctx.hash();
    m["version"] = kVersion;
    m["elapsed_ms"] = elapsed_ms;
    m["artifacts"] = artifacts;
    std::ofstream f(out_path + ".manifest.json");
    f << m.dump(2) << "\n";
}

std::ofstream open_csv(const std::string& path, const RunContext& ctx, const std::string& header) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << "# config_hash=" << ctx.hash() << "\n" << header << "\n";
    return f;
}

void write_json(const std::string& path, const RunContext& ctx, json j) {
    j["config_hash"] = ctx.hash();
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << j.dump(2) << "\n";
}

json orbit_to_json(const PeriodicOrbit& orb) {
    json j;
    j["period"] = orb.least_period;
    j["points"] = orb.points;
    j["multiplier"] = orb.multiplier;
    j["mean"] = orb.mean;
    j["residual"] = orb.residual;
    return j;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

Map1D make_named_map(const std::string& kind, double a, double b, double alpha) {
    if (kind == "f") return make_replicator_map(MapParams(a, b));
    if (kind == "g") return make_conjugate_map(MapParams(a, b));
    if (kind == "rotation") return make_rotation(alpha);
    if (kind == "doubling") return make_doubling();
    throw CLI::ValidationError("--map", "unknown map kind " + kind);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"replicator-map laboratory"};
    app.require_subcommand(1);

    unsigned jobs = 1;
    app.add_option("--jobs", jobs, "worker cap for scans")->capture_default_str();

    std::string b_str = "1/3";
    double a = 8.0, alpha = 0.6180339887498949, x0 = 0.5, tol = 1e-8;
    long n = 100;
    int period = 1, depth = 10, max_n = 12, grid = 10000, degree = 16;
    std::string out = "out.json", map_kind = "f";

    // orbit
    auto* orbit_cmd = app.add_subcommand("orbit", "iterate a map, write k,x_k,S_k series");
    orbit_cmd->add_option("--map", map_kind, "f|g|rotation|doubling")->capture_default_str();
    orbit_cmd->add_option("--a", a)->capture_default_str();
    orbit_cmd->add_option("--b", b_str, "decimal or fraction like 1/3")->capture_default_str();
    orbit_cmd->add_option("--alpha", alpha)->capture_default_str();
    orbit_cmd->add_option("--x0", x0)->capture_default_str();
    orbit_cmd->add_option("--n", n)->capture_default_str();
    orbit_cmd->add_option("--out", out)->capture_default_str();

    // periodic
    auto* per_cmd = app.add_subcommand("periodic", "locate and refine periodic orbits");
    per_cmd->add_option("--map", map_kind, "f|g")->capture_default_str();
    per_cmd->add_option("--a", a)->capture_default_str();
    per_cmd->add_option("--b", b_str)->capture_default_str();
    per_cmd->add_option("--period", period)->capture_default_str();
    per_cmd->add_option("--out", out)->capture_default_str();

    // bifurcation
    double a_min = 4.5, a_max = 16.0, factor = 1.05;
    int steps = 200, samples = 32;
    long transient = 100000;
    auto* bif_cmd = app.add_subcommand("bifurcation", "attractor samples across an a-range");
    bif_cmd->add_option("--b", b_str)->capture_default_str();
    bif_cmd->add_option("--a-min", a_min)->capture_default_str();
    bif_cmd->add_option("--a-max", a_max)->capture_default_str();
    bif_cmd->add_option("--steps", steps)->capture_default_str();
    bif_cmd->add_option("--samples", samples)->capture_default_str();
    bif_cmd->add_option("--transient", transient)->capture_default_str();
    bif_cmd->add_option("--out", out)->capture_default_str();

    // certify
    bool require_pass = false;
    std::string k_out;
    auto* cert_cmd = app.add_subcommand("certify", "hyperbolicity certificate for g_{a,b}");
    cert_cmd->add_option("--a", a)->capture_default_str();
    cert_cmd->add_option("--b", b_str)->capture_default_str();
    cert_cmd->add_option("--depth", depth)->capture_default_str();
    cert_cmd->add_option("--k-out", k_out, "also write the invariant-set intervals as CSV");
    cert_cmd->add_flag("--require-pass", require_pass, "exit 1 unless the certificate passes");
    cert_cmd->add_option("--out", out)->capture_default_str();

    // find-a0
    auto* a0_cmd = app.add_subcommand("find-a0", "smallest grid a with a passing certificate");
    a0_cmd->add_option("--b", b_str)->capture_default_str();
    a0_cmd->add_option("--a-min", a_min)->capture_default_str();
    a0_cmd->add_option("--a-max", a_max)->capture_default_str();
    a0_cmd->add_option("--factor", factor)->capture_default_str();
    a0_cmd->add_option("--depth", depth)->capture_default_str();
    a0_cmd->add_option("--out", out)->capture_default_str();

    // symbolic
    long dense_blocks = 0;
    int words_n = 0;
    std::string words_out;
    auto* sym_cmd = app.add_subcommand("symbolic", "admissible word counts and enumerations");
    sym_cmd->add_option("--max-n", max_n)->capture_default_str();
    sym_cmd->add_option("--words", words_n, "also list cyclic admissible words of this length");
    sym_cmd->add_option("--words-out", words_out)->capture_default_str();
    sym_cmd->add_option("--dense-blocks", dense_blocks, "emit this many dense-orbit blocks");
    sym_cmd->add_option("--out", out)->capture_default_str();

    // shiftlab
    int rank_periods = 0;
    long sample_n = 2000;
    std::string curve_out;
    auto* lab_cmd = app.add_subcommand("shiftlab", "coboundary least squares and rank probes");
    lab_cmd->add_option("--a", a)->capture_default_str();
    lab_cmd->add_option("--b", b_str)->capture_default_str();
    lab_cmd->add_option("--degree", degree)->capture_default_str();
    lab_cmd->add_option("--samples", sample_n)->capture_default_str();
    lab_cmd->add_option("--rank-periods", rank_periods,
                        "include a rank probe over cycles up to this period");
    lab_cmd->add_option("--curve-out", curve_out, "residual-vs-basis-size CSV");
    lab_cmd->add_option("--out", out)->capture_default_str();

    // conjugacy-check
    auto* conj_cmd = app.add_subcommand("conjugacy-check", "h o f vs g o h and mirror symmetry");
    conj_cmd->add_option("--a", a)->capture_default_str();
    conj_cmd->add_option("--b", b_str)->capture_default_str();
    conj_cmd->add_option("--grid", grid)->capture_default_str();
    conj_cmd->add_option("--out", out)->capture_default_str();

    // mean-law
    int max_period = 6;
    auto* mean_cmd = app.add_subcommand("mean-law", "orbit means vs b up to a period bound");
    mean_cmd->add_option("--a", a)->capture_default_str();
    mean_cmd->add_option("--b", b_str)->capture_default_str();
    mean_cmd->add_option("--max-period", max_period)->capture_default_str();
    mean_cmd->add_option("--tol", tol)->capture_default_str();
    mean_cmd->add_option("--out", out)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        set_jobs(jobs);
        const double b = parse_real_or_fraction(b_str);
        Timer timer;
        RunContext ctx;

        if (*orbit_cmd) {
            ctx.command = "orbit";
            ctx.set("map", map_kind);
            ctx.set("a", a);
            ctx.set("b", b);
            ctx.set("alpha", alpha);
            ctx.set("x0", x0);
            ctx.set("n", n);
            const Map1D map = make_named_map(map_kind, a, b, alpha);
            const double ref = map_kind == "f" ? b : 0.0;
            const Orbit orb = iterate(map, x0, n);
            auto f = open_csv(out, ctx, "k,x_k,S_k");
            double S = 0.0;
            for (std::size_t k = 0; k < orb.points.size(); ++k) {
                f << k << "," << fmt17(orb.points[k]) << "," << fmt17(S) << "\n";
                S += orb.points[k] - ref;
            }
            f.close();
            write_manifest(ctx, out, timer.ms(), {out});
            return 0;
        }

        if (*per_cmd) {
            ctx.command = "periodic";
            ctx.set("map", map_kind);
            ctx.set("a", a);
            ctx.set("b", b);
            ctx.set("period", static_cast<long>(period));
            const MapParams p(a, b);
            FindResult res;
            if (map_kind == "f") {
                res = find_periodic_f(p, period);
            } else if (map_kind == "g") {
                const HyperbolicCertificate cert = certify(p, 2, 50);
                const Map1D g = make_conjugate_map(p);
                const double M = std::max(std::abs(cert.lm.g_min), std::abs(cert.lm.g_max)) + 1.0;
                res = find_periodic(g, period, -M, M);
            } else {
                throw CLI::ValidationError("--map", "periodic supports f|g");
            }
            json j;
            j["period"] = period;
            j["solution_count"] = res.solution_count;
            json arr = json::array();
            for (const auto& orb : res.orbits) arr.push_back(orbit_to_json(orb));
            j["orbits"] = arr;
            write_json(out, ctx, j);
            write_manifest(ctx, out, timer.ms(), {out});
            return 0;
        }

        if (*bif_cmd) {
            ctx.command = "bifurcation";
            ctx.set("b", b);
            ctx.set("a_min", a_min);
            ctx.set("a_max", a_max);
            ctx.set("steps", static_cast<long>(steps));
            ctx.set("samples", static_cast<long>(samples));
            ctx.set("transient", transient);
            const auto rows = bifurcation_scan(b, a_min, a_max, steps, samples, transient);
            auto f = open_csv(out, ctx, "a,sample");
            for (const auto& r : rows) f << fmt17(r.a) << "," << fmt17(r.sample) << "\n";
            f.close();
            write_manifest(ctx, out, timer.ms(), {out});
            return 0;
        }

        if (*cert_cmd) {
            ctx.command = "certify";
            ctx.set("a", a);
            ctx.set("b", b);
            ctx.set("depth", static_cast<long>(depth));
            const HyperbolicCertificate cert = certify(MapParams(a, b), depth);
            write_json(out, ctx, to_json(cert));
            std::vector<std::string> artifacts{out};
            if (!k_out.empty() && cert.pass) {
                const KApproximation k = approximate_K(cert, depth);
                auto f = open_csv(k_out, ctx, "label,left,right");
                for (const auto& c : k.components)
                    f << c.word.to_string() << "," << fmt17(c.lo) << "," << fmt17(c.hi) << "\n";
                f.close();
                artifacts.push_back(k_out);
            }
            write_manifest(ctx, out, timer.ms(), artifacts);
            return (require_pass && !cert.pass) ? 1 : 0;
        }

        if (*a0_cmd) {
            ctx.command = "find-a0";
            ctx.set("b", b);
            ctx.set("a_min", a_min);
            ctx.set("a_max", a_max);
            ctx.set("factor", factor);
            ctx.set("depth", static_cast<long>(depth));
            const FindA0Result res = find_a0(b, a_min, a_max, factor, depth);
            json j;
            j["found"] = res.found;
            if (res.found) {
                j["a0"] = res.a0;
                j["passes_2a"] = res.passes_2a;
                j["passes_4a"] = res.passes_4a;
            } else {
                j["message"] = "no certificate in range";
            }
            json tbl = json::array();
            for (const auto& [av, ok] : res.table) tbl.push_back({{"a", av}, {"pass", ok}});
            j["table"] = tbl;
            write_json(out, ctx, j);
            write_manifest(ctx, out, timer.ms(), {out});
            return 0;
        }

        if (*sym_cmd) {
            ctx.command = "symbolic";
            ctx.set("max_n", static_cast<long>(max_n));
            ctx.set("words", static_cast<long>(words_n));
            ctx.set("dense_blocks", dense_blocks);
            json tbl = json::array();
            for (int k = 1; k <= max_n; ++k) {
                const CountTable t = counts(k);
                tbl.push_back({{"n", k},
                               {"A_n", t.A.str()},
                               {"B_n", t.B.str()},
                               {"F_n", t.F.str()},
                               {"L_n", t.L.str()}});
            }
            json j;
            j["counts"] = tbl;
            if (dense_blocks > 0) j["dense_orbit_prefix"] = dense_orbit_prefix(dense_blocks);
            write_json(out, ctx, j);
            std::vector<std::string> artifacts{out};
            if (words_n > 0) {
                const std::string path = words_out.empty() ? out + ".words.txt" : words_out;
                std::ofstream f(path);
                for (const auto& w : enumerate_periodic(words_n).words)
                    f << w.to_string() << "\n";
                artifacts.push_back(path);
            }
            write_manifest(ctx, out, timer.ms(), artifacts);
            return 0;
        }

        if (*lab_cmd) {
            ctx.command = "shiftlab";
            ctx.set("a", a);
            ctx.set("b", b);
            ctx.set("degree", static_cast<long>(degree));
            ctx.set("samples", sample_n);
            ctx.set("rank_periods", static_cast<long>(rank_periods));
            const MapParams p(a, b);
            const Map1D f = make_replicator_map(p);
            const auto cp = critical_points(p, MapKind::Replicator);
            const double fmin = eval_f(p, cp.hi), fmax = eval_f(p, cp.lo);
            const double delta = 1e-3 * (fmax - fmin);
            std::vector<double> xs(sample_n);
            for (long i = 0; i < sample_n; ++i)
                xs[i] = fmin + delta + (fmax - fmin - 2 * delta) * (i + 0.5) / sample_n;
            auto psi = [b](double x) { return x - b; };

            json j;
            json curve = json::array();
            for (int d = 2; d <= degree; d += 2) {
                FunctionBasis basis = chebyshev_basis(d, fmin, fmax);
                add_logit(basis);
                const LsqResult r = coboundary_lsq(f, psi, basis, xs);
                curve.push_back({{"basis_size", static_cast<int>(basis.members.size())},
                                 {"rms_residual", r.rms_residual}});
                if (d == degree || d + 2 > degree) {
                    j["rms_residual"] = r.rms_residual;
                    j["logit_coefficient"] = r.coefficients.back();
                    j["expected_logit_coefficient"] = -1.0 / a;
                    j["condition"] = r.condition;
                    j["ill_conditioned"] = r.ill_conditioned;
                }
            }
            j["residual_curve"] = curve;
            if (rank_periods > 0) {
                std::vector<EmpiricalMeasure> measures;
                for (int k = 1; k <= rank_periods; ++k)
                    for (const auto& orb : find_periodic_f(p, k).orbits)
                        if (orb.points.front() > 0.0 && orb.points.front() < 1.0)
                            measures.push_back(orbit_measure(orb));
                FunctionBasis basis = chebyshev_basis(degree, fmin, fmax);
                j["rank"] = measure_rank_probe(measures, basis);
                j["measure_count"] = measures.size();
            }
            write_json(out, ctx, j);
            std::vector<std::string> artifacts{out};
            if (!curve_out.empty()) {
                auto cf = open_csv(curve_out, ctx, "basis_size,rms_residual");
                for (const auto& row : curve)
                    cf << row["basis_size"].get<int>() << ","
                       << fmt17(row["rms_residual"].get<double>()) << "\n";
                artifacts.push_back(curve_out);
            }
            write_manifest(ctx, out, timer.ms(), artifacts);
            return 0;
        }

        if (*conj_cmd) {
            ctx.command = "conjugacy-check";
            ctx.set("a", a);
            ctx.set("b", b);
            ctx.set("grid", static_cast<long>(grid));
            const MapParams p(a, b);
            json j;
            j["conjugacy_residual"] = conjugacy_residual(p, grid);
            j["symmetry_residual"] = symmetry_residual(p, grid);
            write_json(out, ctx, j);
            write_manifest(ctx, out, timer.ms(), {out});
            return 0;
        }

        if (*mean_cmd) {
            ctx.command = "mean-law";
            ctx.set("a", a);
            ctx.set("b", b);
            ctx.set("max_period", static_cast<long>(max_period));
            ctx.set("tol", tol);
            const MapParams p(a, b);
            std::vector<PeriodicOrbit> all;
            for (int k = 1; k <= max_period; ++k) {
                auto res = find_periodic_f(p, k);
                all.insert(all.end(), res.orbits.begin(), res.orbits.end());
            }
            const MeanLawReport rep = verify_mean_law(all, b, tol);
            json j;
            j["orbits_checked"] = rep.orbits_checked;
            j["worst_deviation"] = rep.worst_deviation;
            j["worst_period"] = rep.worst_period;
            j["violations"] = rep.violations;
            write_json(out, ctx, j);
            write_manifest(ctx, out, timer.ms(), {out});
            return rep.violations > 0 ? 1 : 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
