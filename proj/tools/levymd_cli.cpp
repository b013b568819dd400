// Command-line front end: deterministic simulation and verification runs
// driven by a JSON manifest, emitting CSV or JSON tables.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "levymd/config.hpp"
#include "levymd/csv.hpp"
#include "levymd/mittag_leffler.hpp"
#include "levymd/parallel.hpp"
#include "levymd/rate_functions.hpp"
#include "levymd/subordinators.hpp"
#include "levymd/verification.hpp"

namespace {

using namespace levymd;

// ==== small parsers ==========================================================

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) throw std::runtime_error("bad numeric list entry: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::runtime_error("empty numeric list");
    return out;
}

// Axis spec "lo:hi:n", comma-separated per axis; n=1 collapses to lo.
std::vector<std::vector<double>> parse_grid(const std::string& s) {
    std::vector<std::vector<double>> axes;
    std::stringstream ss(s);
    std::string axis;
    while (std::getline(ss, axis, ',')) {
        std::stringstream as(axis);
        std::string part;
        std::vector<std::string> parts;
        while (std::getline(as, part, ':')) parts.push_back(part);
        if (parts.size() != 3) {
            throw std::runtime_error("bad grid axis '" + axis + "': expected lo:hi:n");
        }
        const double lo = std::stod(parts[0]);
        const double hi = std::stod(parts[1]);
        const long n = std::stol(parts[2]);
        if (n < 1) throw std::runtime_error("bad grid axis '" + axis + "': n must be >= 1");
        std::vector<double> points;
        points.reserve(static_cast<std::size_t>(n));
        for (long k = 0; k < n; ++k) {
            points.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) /
                                               static_cast<double>(n - 1));
        }
        axes.push_back(std::move(points));
    }
    if (axes.empty()) throw std::runtime_error("empty grid spec");
    return axes;
}

// Set spec like "x1>=0.5" or "x2<=-0.25" (axes are 1-based).
HalfSpace parse_set(const std::string& s, std::size_t dim) {
    const auto ge = s.find(">=");
    const auto le = s.find("<=");
    const bool upper = ge != std::string::npos;
    const auto pos = upper ? ge : le;
    if (pos == std::string::npos || s.empty() || s[0] != 'x') {
        throw std::runtime_error("bad set spec '" + s + "': expected e.g. x1>=0.5");
    }
    const std::string axis_part = s.substr(1, pos - 1);
    const std::string bound_part = s.substr(pos + 2);
    std::size_t used = 0;
    const long axis = std::stol(axis_part, &used);
    if (used != axis_part.size() || axis < 1 || static_cast<std::size_t>(axis) > dim) {
        throw std::runtime_error("bad set spec '" + s + "': axis out of range");
    }
    const double bound = std::stod(bound_part, &used);
    if (used != bound_part.size()) {
        throw std::runtime_error("bad set spec '" + s + "': bad bound");
    }
    return HalfSpace{static_cast<std::size_t>(axis - 1), bound, upper};
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

// ==== shared emit plumbing ===================================================

struct IoFlags {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> output;
    std::optional<std::string> format;
    unsigned threads = 0;
};

void add_io_flags(CLI::App* sub, IoFlags& io) {
    sub->add_option("--seed", io.seed, "Override the manifest seed");
    sub->add_option("--output", io.output, "Output path ('-' for stdout)");
    sub->add_option("--format", io.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", io.threads, "Worker thread count (0 = auto)");
}

void apply_io_flags(RunConfig& cfg, const IoFlags& io) {
    if (io.seed) cfg.seed = *io.seed;
    if (io.output) cfg.output = *io.output;
    if (io.format) cfg.format = *io.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
}

unsigned effective_threads(const IoFlags& io) {
    return io.threads > 0 ? io.threads : default_thread_count();
}

void emit(const Table& table, const RunConfig& cfg) {
    const std::string body = cfg.format == OutputFormat::Csv
                                 ? render_csv(table)
                                 : render_json(table, cfg.echo, cfg.seed, kVersion);
    write_output(cfg.output, body);
}

// Iterate the Cartesian product of grid axes in row-major order.
template <typename Fn>
void for_each_grid_point(const std::vector<std::vector<double>>& axes, Fn&& fn) {
    std::vector<std::size_t> idx(axes.size(), 0);
    std::vector<double> point(axes.size());
    for (;;) {
        for (std::size_t a = 0; a < axes.size(); ++a) point[a] = axes[a][idx[a]];
        fn(point);
        std::size_t a = axes.size();
        while (a > 0) {
            --a;
            if (++idx[a] < axes[a].size()) break;
            idx[a] = 0;
            if (a == 0) return;
        }
    }
}

// ==== subcommands ============================================================

int run_ml_eval(double alpha, double x, bool log_scale, const IoFlags& io) {
    RunConfig cfg;  // no manifest: defaults drive the output plumbing
    apply_io_flags(cfg, io);
    Table table;
    table.columns = {"alpha", "x", "value"};
    const MLOrder order{alpha};
    const double value = log_scale ? mittag_leffler_log(order, x) : mittag_leffler(order, x);
    table.add({Cell::number(alpha), Cell::number(x), Cell::number(value)});
    emit(table, cfg);
    return 0;
}

int run_simulate(const std::string& config_path, const std::string& kind, double nu, double t,
                 std::size_t n, const IoFlags& io) {
    if (kind == "inverse-stable") {
        RunConfig cfg;
        if (!config_path.empty()) cfg = load_config(config_path);
        apply_io_flags(cfg, io);
        Table table;
        table.columns = {"replica", "t", "value"};
        const StableIndex index{nu};
        for (std::size_t r = 0; r < n; ++r) {
            RandomStream rng(cfg.seed, r);
            table.add({Cell::number(static_cast<double>(r)), Cell::number(t),
                       Cell::number(sample_inverse_stable(index, t, rng))});
        }
        emit(table, cfg);
        return 0;
    }
    if (kind != "process") {
        throw std::runtime_error("unknown --kind '" + kind + "': expected process or inverse-stable");
    }
    RunConfig cfg = load_config(config_path);
    apply_io_flags(cfg, io);
    Table table;
    table.columns = {"replica", "component", "value"};
    for (std::size_t r = 0; r < n; ++r) {
        RandomStream rng(cfg.seed, r);
        const auto x = cfg.condition == 1 ? sample_cond1(*cfg.cond1, t, rng)
                                          : sample_cond2(*cfg.cond2, t, rng);
        for (std::size_t i = 0; i < x.size(); ++i) {
            table.add({Cell::number(static_cast<double>(r)),
                       Cell::number(static_cast<double>(i + 1)), Cell::number(x[i])});
        }
    }
    emit(table, cfg);
    return 0;
}

LimitCumulant make_function(const RunConfig& cfg, const std::string& name) {
    const bool is_cond1 = cfg.condition == 1;
    if (name == "psi") {
        if (!is_cond1) throw std::runtime_error("function psi requires a condition-1 manifest");
        return make_psi(*cfg.cond1);
    }
    if (name == "upsilon") {
        if (is_cond1) throw std::runtime_error("function upsilon requires a condition-2 manifest");
        return make_upsilon(*cfg.cond2);
    }
    if (name == "psi-tilde") {
        if (!is_cond1) throw std::runtime_error("function psi-tilde requires a condition-1 manifest");
        return make_psi_tilde(*cfg.cond1, cfg.mean());
    }
    if (name == "upsilon-tilde") {
        if (is_cond1) throw std::runtime_error("function upsilon-tilde requires a condition-2 manifest");
        return make_upsilon_tilde(*cfg.cond2, cfg.mean());
    }
    throw std::runtime_error("unknown --function '" + name + "'");
}

int run_rate(const std::string& config_path, const std::string& function, bool conj,
             const std::string& grid_spec, const IoFlags& io) {
    RunConfig cfg = load_config(config_path);
    apply_io_flags(cfg, io);
    const auto f = make_function(cfg, function);
    const auto axes = parse_grid(grid_spec);
    if (axes.size() != f.dim) {
        throw std::runtime_error("grid has " + std::to_string(axes.size()) + " axes but the function takes " +
                                 std::to_string(f.dim));
    }
    Table table;
    const char* arg_name = conj ? "x" : "theta";
    for (std::size_t i = 0; i < f.dim; ++i) {
        table.columns.push_back(arg_name + std::to_string(i + 1));
    }
    table.columns.push_back("value");
    if (conj) {
        for (std::size_t i = 0; i < f.dim; ++i) {
            table.columns.push_back("theta" + std::to_string(i + 1));
        }
    }
    const auto opts = ConjugateOptions::boxed(f);
    for_each_grid_point(axes, [&](const std::vector<double>& point) {
        std::vector<Cell> row;
        for (const double v : point) row.push_back(Cell::number(v));
        if (conj) {
            const auto result = conjugate(f, point, opts);
            row.push_back(Cell::number(result.value));
            for (std::size_t i = 0; i < f.dim; ++i) {
                // Divergent points have no maximizer; the cells stay empty.
                row.push_back(result.argmax ? Cell::number((*result.argmax)[i])
                                            : Cell::label(""));
            }
        } else {
            row.push_back(Cell::number(f.eval(point)));
        }
        table.add(std::move(row));
    });
    emit(table, cfg);
    return 0;
}

int run_verify_weak(const std::string& config_path, const std::string& t_list, std::size_t n,
                    const IoFlags& io) {
    RunConfig cfg = load_config(config_path);
    apply_io_flags(cfg, io);
    const unsigned threads = effective_threads(io);
    const auto ts = parse_list(t_list);
    const auto m = cfg.mean();
    const std::size_t h = cfg.dim();

    Table table;
    table.columns = {"t", "metric", "index", "value"};
    for (const double t : ts) {
        const auto diag = cfg.condition == 1
                              ? weak_limit_ks_cond1(*cfg.cond1, m, t, n, cfg.seed, threads)
                              : weak_limit_ks_cond2(*cfg.cond2, m, t, n, cfg.seed, threads);
        for (std::size_t i = 0; i < diag.ks.size(); ++i) {
            table.add({Cell::number(t), Cell::label("ks"), Cell::number(static_cast<double>(i + 1)),
                       Cell::number(diag.ks[i])});
        }
        table.add({Cell::number(t), Cell::label("ks-threshold"), Cell::number(0),
                   Cell::number(diag.ks_threshold)});
    }

    // Limit-MGF cross-check; t-independent, reported with t = 0.
    std::vector<std::vector<double>> probes;
    for (std::size_t i = 0; i < h; ++i) {
        std::vector<double> plus(h, 0.0), minus(h, 0.0);
        plus[i] = 0.25;
        minus[i] = -0.25;
        probes.push_back(plus);
        probes.push_back(minus);
    }
    probes.emplace_back(h, 0.25);
    for (std::size_t p = 0; p < probes.size(); ++p) {
        const auto est = cfg.condition == 1
                             ? mc_limit_mgf_cond1(*cfg.cond1, m, probes[p], n, cfg.seed, threads)
                             : mc_limit_mgf_cond2(*cfg.cond2, m, probes[p], n, cfg.seed, threads);
        const double exact = cfg.condition == 1 ? limit_mgf_cond1(*cfg.cond1, m, probes[p])
                                                : limit_mgf_cond2(*cfg.cond2, m, probes[p]);
        const double z = est.se > 0.0 ? (est.mean - exact) / est.se : 0.0;
        table.add({Cell::number(0), Cell::label("mgf-z"), Cell::number(static_cast<double>(p + 1)),
                   Cell::number(z)});
    }
    emit(table, cfg);
    return 0;
}

int run_verify_rates(bool moderate, const std::string& config_path, double gamma,
                     const std::string& t_grid, std::size_t n, const std::string& set_spec,
                     const IoFlags& io) {
    RunConfig cfg = load_config(config_path);
    apply_io_flags(cfg, io);
    const unsigned threads = effective_threads(io);
    const auto ts = parse_list(t_grid);
    const auto set = parse_set(set_spec, cfg.dim());

    MdDiagnostic diag;
    if (moderate) {
        const ScalingFamily scale(gamma);
        const auto m = cfg.mean();
        diag = cfg.condition == 1
                   ? estimate_md_rate_cond1(*cfg.cond1, m, scale, ts, n, set, cfg.seed, threads)
                   : estimate_md_rate_cond2(*cfg.cond2, m, scale, ts, n, set, cfg.seed, threads);
    } else {
        diag = cfg.condition == 1 ? estimate_ld_rate_cond1(*cfg.cond1, ts, n, set, cfg.seed, threads)
                                  : estimate_ld_rate_cond2(*cfg.cond2, ts, n, set, cfg.seed, threads);
    }

    Table table;
    table.columns = {"t", "estimate", "se", "target"};
    for (const auto& pt : diag.points) {
        table.add({Cell::number(pt.t), Cell::number(pt.estimate), Cell::number(pt.se),
                   Cell::number(diag.target)});
    }
    emit(table, cfg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-changed Levy process simulation and deviation-rate verification"};
    app.require_subcommand(1);

    // ml-eval
    auto* ml = app.add_subcommand("ml-eval", "Evaluate the Mittag-Leffler function E_alpha(x)");
    double ml_alpha = 1.0, ml_x = 0.0;
    bool ml_log = false;
    IoFlags ml_io;
    ml->add_option("--alpha", ml_alpha, "Order in (0, 1]")->required();
    ml->add_option("--x", ml_x, "Argument")->required();
    ml->add_flag("--log", ml_log, "Return log E_alpha(x)");
    add_io_flags(ml, ml_io);

    // simulate
    auto* sim = app.add_subcommand("simulate", "Draw process or subordinator replicas");
    std::string sim_config, sim_kind = "process";
    double sim_nu = 0.5, sim_t = 1.0;
    std::size_t sim_n = 10;
    IoFlags sim_io;
    sim->add_option("--config", sim_config, "JSON manifest path");
    sim->add_option("--kind", sim_kind, "process (default) or inverse-stable");
    sim->add_option("--nu", sim_nu, "Stability index for --kind inverse-stable");
    sim->add_option("--t", sim_t, "Time horizon")->required();
    sim->add_option("--n", sim_n, "Replica count")->required();
    add_io_flags(sim, sim_io);

    // rate
    auto* rate = app.add_subcommand("rate", "Evaluate limit cumulants or their conjugates on a grid");
    std::string rate_config, rate_function, rate_grid;
    bool rate_conj = false;
    IoFlags rate_io;
    rate->add_option("--config", rate_config, "JSON manifest path")->required();
    rate->add_option("--function", rate_function, "psi | upsilon | psi-tilde | upsilon-tilde")
        ->required();
    rate->add_flag("--conjugate", rate_conj, "Emit the Legendre-Fenchel conjugate instead");
    rate->add_option("--grid", rate_grid, "Per-axis grid lo:hi:n[,lo:hi:n...]")->required();
    add_io_flags(rate, rate_io);

    // verify-weak
    auto* vw = app.add_subcommand("verify-weak", "Compare the scaled process against its weak limit");
    std::string vw_config, vw_t;
    std::size_t vw_n = 20000;
    IoFlags vw_io;
    vw->add_option("--config", vw_config, "JSON manifest path")->required();
    vw->add_option("--t", vw_t, "Comma-separated evaluation times")->required();
    vw->add_option("--n", vw_n, "Replicas per time");
    add_io_flags(vw, vw_io);

    // verify-ld / verify-md
    auto* vl = app.add_subcommand("verify-ld", "Estimate the large-deviation decay rate of a half-space");
    std::string vl_config, vl_tgrid, vl_set;
    std::size_t vl_n = 100000;
    IoFlags vl_io;
    vl->add_option("--config", vl_config, "JSON manifest path")->required();
    vl->add_option("--t-grid", vl_tgrid, "Comma-separated time grid")->required();
    vl->add_option("--n", vl_n, "Replicas per time");
    vl->add_option("--set", vl_set, "Half-space like x1>=0.5")->required();
    add_io_flags(vl, vl_io);

    auto* vm = app.add_subcommand("verify-md", "Estimate the moderate-deviation decay rate of a half-space");
    std::string vm_config, vm_tgrid, vm_set;
    double vm_gamma = 0.5;
    std::size_t vm_n = 100000;
    IoFlags vm_io;
    vm->add_option("--config", vm_config, "JSON manifest path")->required();
    vm->add_option("--gamma", vm_gamma, "Scaling exponent in (0, 1); a(t) = t^-gamma");
    vm->add_option("--t-grid", vm_tgrid, "Comma-separated time grid")->required();
    vm->add_option("--n", vm_n, "Replicas per time");
    vm->add_option("--set", vm_set, "Half-space like x1>=0.5")->required();
    add_io_flags(vm, vm_io);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*ml) return run_ml_eval(ml_alpha, ml_x, ml_log, ml_io);
        if (*sim) return run_simulate(sim_config, sim_kind, sim_nu, sim_t, sim_n, sim_io);
        if (*rate) return run_rate(rate_config, rate_function, rate_conj, rate_grid, rate_io);
        if (*vw) return run_verify_weak(vw_config, vw_t, vw_n, vw_io);
        if (*vl) return run_verify_rates(false, vl_config, 0.5, vl_tgrid, vl_n, vl_set, vl_io);
        if (*vm) return run_verify_rates(true, vm_config, vm_gamma, vm_tgrid, vm_n, vm_set, vm_io);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
