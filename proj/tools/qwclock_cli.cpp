// qwclock: scenario runner. Every subcommand writes one CSV table.

#include <CLI11.hpp>

#include <qwclock/qwclock.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace qwclock;

namespace {

constexpr int exit_parameter = 2;
constexpr int exit_resource = 3;
constexpr int exit_failure = 1;

class Csv {
public:
    explicit Csv(std::vector<std::string> columns) : columns_(std::move(columns)) {
        for (std::size_t i = 0; i < columns_.size(); ++i) buf_ << (i ? "," : "") << columns_[i];
        buf_ << '\n';
    }

    void row(const std::vector<double>& values) {
        if (values.size() != columns_.size()) throw std::logic_error("csv row width mismatch");
        char cell[40];
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!std::isfinite(values[i])) {
                throw std::runtime_error("non-finite value in column " + columns_[i]);
            }
            std::snprintf(cell, sizeof cell, "%.15g", values[i] == 0.0 ? 0.0 : values[i]);
            buf_ << (i ? "," : "") << cell;
        }
        buf_ << '\n';
        ++rows_;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }

    void write(const std::string& path) const {
        if (path.empty()) {
            std::cout << buf_.str() << std::flush;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + path);
        f << buf_.str();
    }

private:
    std::vector<std::string> columns_;
    std::ostringstream buf_;
    std::size_t rows_ = 0;
};

struct Options {
    int s = 129;
    double lambda = 1.0;
    int mu = 7;
    int n = 5;
    int epsilon = 9;
    int k = 1;
    int x0 = 1;
    int g = 3;
    int active = -1;
    int grid = 200;
    int outcome = 1;
    double tau = 10.5;
    double t_start = 0.0;
    std::optional<double> t_max;
    double t_step = 0.1;
    std::string variant = "localized";
    std::string family = "localized";
    std::string output = "bloch";
    std::string out;
};

std::vector<double> time_grid(const Options& o, double default_max) {
    return uniform_grid(o.t_start, o.t_max.value_or(default_max), o.t_step);
}

void add_chain(CLI::App* sub, Options& o) {
    sub->add_option("--s", o.s, "number of chain sites")->capture_default_str();
    sub->add_option("--lambda", o.lambda, "hopping strength")->capture_default_str();
}

void add_mu(CLI::App* sub, Options& o) {
    sub->add_option("--mu", o.mu, "Grover register size parameter (chi = arcsin 2^(-mu/2))")->capture_default_str();
}

void add_times(CLI::App* sub, Options& o, const std::string& default_max) {
    sub->add_option("--t-start", o.t_start, "first sample time")->capture_default_str();
    sub->add_option("--t-max", o.t_max, "last sample time (default " + default_max + ")");
    sub->add_option("--t-step", o.t_step, "sample spacing")->capture_default_str();
}

void add_out(CLI::App* sub, Options& o) { sub->add_option("--out", o.out, "output path (default stdout)"); }

ChainSpec chain(const Options& o) { return ChainSpec(o.s, o.lambda); }

CursorWavefunction initial_cursor(const ChainSpec& spec, const Options& o) {
    if (o.variant == "flat") return flat_state(spec, o.n);
    if (o.variant == "gamma") return gamma_state(spec, o.n);
    return CursorWavefunction::basis_state(spec, 1);
}

SpeedLaw variant_law(const ChainSpec& spec, const Options& o) {
    if (o.variant == "flat") return law_pad_cn(o.n);
    if (o.variant == "gamma") return law_general(gamma_state(spec, o.n));
    return law_localized();
}

void run_register(const Options& o, const PrimitiveProgram& program, double default_max,
                  const std::vector<std::string>& columns,
                  const std::function<std::vector<double>(const RegisterTrajectory&, std::size_t)>& pick) {
    const auto spec = chain(o);
    const auto g = grover_params(o.mu);
    const auto tr = register_trajectory(std::make_shared<const PrimitiveProgram>(program), initial_register(g),
                                        CursorWavefunction::basis_state(spec, 1), time_grid(o, default_max));
    Csv csv(columns);
    for (std::size_t i = 0; i < tr.size(); ++i) csv.row(pick(tr, i));
    csv.write(o.out);
}

void cmd_bloch(const Options& o) {
    run_register(o, PrimitiveProgram::toy(o.s, grover_params(o.mu).alpha), o.s, {"t", "s1", "s3", "r", "gamma"},
                 [](const RegisterTrajectory& tr, std::size_t i) {
                     return std::vector<double>{tr.t[i], tr.s1[i], tr.s3[i], tr.r[i], tr.gamma[i]};
                 });
}

void cmd_entropy(const Options& o) {
    run_register(o, PrimitiveProgram::toy(o.s, grover_params(o.mu).alpha), 2.0 * o.s, {"t", "S"},
                 [](const RegisterTrajectory& tr, std::size_t i) { return std::vector<double>{tr.t[i], tr.entropy[i]}; });
}

void cmd_probability(const Options& o) {
    run_register(o, PrimitiveProgram::toy(o.s, grover_params(o.mu).alpha), 1.2 * o.s,
                 {"t", "p_target", "p_undesired", "lambda1", "lambda2"}, [](const RegisterTrajectory& tr, std::size_t i) {
                     return std::vector<double>{tr.t[i], tr.p_success[i], 1.0 - tr.p_success[i], tr.lambda1[i],
                                                tr.lambda2[i]};
                 });
}

void cmd_alternating(const Options& o) {
    run_register(o, PrimitiveProgram::alternating(o.s, grover_params(o.mu)), o.s, {"t", "s1", "s3", "r", "p_target", "S"},
                 [](const RegisterTrajectory& tr, std::size_t i) {
                     return std::vector<double>{tr.t[i], tr.s1[i], tr.s3[i], tr.r[i], tr.p_success[i], tr.entropy[i]};
                 });
}

// Position moments of the free cursor with the matching speed-law reference line.
void cmd_position(const Options& o, bool variance) {
    const auto spec = chain(o);
    const auto psi0 = initial_cursor(spec, o);
    const auto law = variant_law(spec, o);
    const CursorPropagator prop(psi0);
    const auto start = position_statistics(psi0);
    Csv csv({"t", variance ? "var_q" : "mean_q", "reference"});
    for (double t : time_grid(o, o.s)) {
        const auto st = position_statistics(prop.at(t));
        const double vt = o.lambda * t;
        if (variance) {
            csv.row({t, st.variance, start.variance + vt * vt * law.variance()});
        } else {
            csv.row({t, st.mean, start.mean + vt * law.mean()});
        }
    }
    csv.write(o.out);
}

void cmd_launchpad(const Options& o) {
    const auto spec = chain(o);
    const auto g = grover_params(o.mu);
    const int optimal = static_cast<int>(std::floor(pi / 4.0 * std::pow(2.0, o.mu / 2.0)));
    const int epsilon = o.variant == "localized" ? 1 : 2 * o.n - 1;
    const int active = o.active >= 0 ? o.active : std::min(optimal, o.s - epsilon);
    const auto program = o.variant == "localized" ? PrimitiveProgram::telomere(o.s, g.alpha, active)
                                                  : PrimitiveProgram::pad_window(o.s, g.alpha, epsilon, active);
    const auto initial = MachineState::product(std::make_shared<const PrimitiveProgram>(program), initial_register(g),
                                               initial_cursor(spec, o));
    const MachineEvolver ev(initial);
    Csv csv({"t", "p_target", "S", "r", "mean_q"});
    for (double t : time_grid(o, 3.0 * o.s)) {
        const auto st = ev.at(t);
        const Matrix2c rho = st.register_density();
        const double r = bloch(rho).norm();
        const auto p = st.cursor_distribution();
        csv.row({t, success_probability(rho), entropy_from_radius(r), r,
                 position_statistics(std::span<const double>(p)).mean});
    }
    csv.write(o.out);
}

void cmd_multi(const Options& o) {
    const auto spec = chain(o);
    const auto gp = grover_params(o.mu);
    const Matrix2c gate = rotation(gp.alpha);
    const auto initial = SectorState::product(spec, initial_register(gp), OccupationSet::leftmost(o.g, o.s));
    const SingleLinkEvolver ev(initial, o.x0, gate);
    Csv csv({"t", "p_target", "S", "s1", "s3", "r", "mean_passed"});
    for (double t : time_grid(o, 4.0 * o.s)) {
        const auto st = ev.at(t);
        const Matrix2c rho = st.register_density();
        const auto b = bloch(rho);
        const auto counts = count_past_link_distribution(st, o.x0);
        double passed = 0.0;
        for (std::size_t m = 0; m < counts.size(); ++m) passed += static_cast<double>(m) * counts[m];
        csv.row({t, success_probability(rho), entropy_from_radius(b.norm()), b.s1, b.s3, b.norm(), passed});
    }
    csv.write(o.out);
}

void cmd_measure(const Options& o) {
    const auto spec = chain(o);
    const auto g = grover_params(o.mu);
    auto program = std::make_shared<const PrimitiveProgram>(PrimitiveProgram::toy(o.s, g.alpha));
    const auto initial = MachineState::product(program, initial_register(g), CursorWavefunction::basis_state(spec, 1));
    require(o.tau >= 0.0, "measurement time tau must be >= 0");
    const auto [after, prob] = measure_register_sigma3(evolve(initial, o.tau), o.outcome);
    if (o.output == "cdf") {
        require(o.grid >= 2, "grid needs at least 2 points");
        const auto measured = machine_speed_law(after);
        const auto unmeasured = machine_speed_law(initial);
        Csv csv({"v", "cdf_measured", "cdf_unmeasured"});
        for (int i = 0; i < o.grid; ++i) {
            const double v = static_cast<double>(i) / (o.grid - 1);
            csv.row({v, measured.cdf(v), unmeasured.cdf(v)});
        }
        csv.write(o.out);
        return;
    }
    Options grid = o;
    if (!o.t_max) grid.t_max = 4.0 * o.tau;
    if (grid.t_start == 0.0) grid.t_start = o.tau;
    require(grid.t_start >= o.tau, "bloch output after a measurement starts at t >= tau");
    const MachineEvolver ev(after);
    Csv csv({"t", "s1", "s3", "r"});
    for (double t : time_grid(grid, 4.0 * o.tau)) {
        const auto b = bloch(ev.at(t - o.tau).register_density());
        csv.row({t, b.s1, b.s3, b.norm()});
    }
    csv.write(o.out);
}

// Density sampled at v = sin p on a midpoint grid in p; sum(f * weight) approximates the integral of f.
void cmd_speed_density(const Options& o) {
    require(o.grid >= 1, "grid needs at least 1 point");
    const SpeedLaw law = [&] {
        if (o.family == "shifted") return law_shifted(o.x0);
        if (o.family == "pad-ck") return law_pad_ck(o.epsilon, o.k);
        if (o.family == "pad-cn") return law_pad_cn(o.n);
        if (o.family == "gamma") return law_general(gamma_state(chain(o), o.n));
        return law_localized();
    }();
    const double dp = pi / (2.0 * o.grid);
    Csv csv({"v", "f", "cdf", "weight"});
    for (int i = 0; i < o.grid; ++i) {
        const double p = (i + 0.5) * dp;
        const double v = std::sin(p);
        csv.row({v, law.density(v), law.cdf(v), std::cos(p) * dp});
    }
    csv.write(o.out);
}

struct CheckResult {
    std::string name;
    double deviation;
};

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

std::vector<CheckResult> machine_checks(const ChainSpec& spec, const GroverParams& g, const PrimitiveProgram& program,
                                        const std::string& label, const std::vector<double>& times) {
    const auto initial = MachineState::product(std::make_shared<const PrimitiveProgram>(program), initial_register(g),
                                               CursorWavefunction::basis_state(spec, 1));
    const MachineEvolver fast(initial);
    const DenseEvolver dense(DenseHamiltonian::sector(spec, program, 1));
    double amp = 0.0;
    double rho = 0.0;
    double balance = 0.0;
    for (double t : times) {
        const auto st = fast.at(t);
        const Eigen::VectorXcd v = dense.evolve(initial.flattened(), t);
        amp = std::max(amp, max_abs(st.flattened() - v));
        const Eigen::MatrixXcd reg = partial_trace(v, Subsystem::register_part);
        rho = std::max(rho, max_abs(st.register_density() - reg));
        balance = std::max(balance, std::abs(von_neumann_entropy(reg) -
                                             von_neumann_entropy(partial_trace(v, Subsystem::cursor_part))));
    }
    return {{label + "_amplitudes", amp}, {label + "_register_density", rho}, {label + "_entropy_balance", balance}};
}

int cmd_oracle_check(const Options& o) {
    const auto spec = chain(o);
    require(o.s >= 3, "oracle-check needs s >= 3");
    const auto g = grover_params(o.mu);
    std::vector<double> times;
    for (int j = 1; j <= 20; ++j) times.push_back(2.0 * o.s * j / 20.0);

    std::vector<CheckResult> results = machine_checks(spec, g, PrimitiveProgram::toy(o.s, g.alpha), "toy", times);
    for (auto& r : machine_checks(spec, g, PrimitiveProgram::alternating(o.s, g), "alternating", times)) results.push_back(r);

    const auto pair = SectorState::product(spec, initial_register(g), OccupationSet::leftmost(2, o.s));
    const DenseEvolver free_dense(DenseHamiltonian::sector(spec, PrimitiveProgram::identity(o.s), 2));
    const int x0 = std::max(2, o.s / 2);
    std::vector<Matrix2c> links(static_cast<std::size_t>(o.s - 1), Matrix2c::Identity());
    links[static_cast<std::size_t>(x0 - 1)] = rotation(g.alpha);
    const DenseEvolver link_dense(DenseHamiltonian::sector(spec, PrimitiveProgram(o.s, links), 2));
    const SingleLinkEvolver link_fast(pair, x0, rotation(g.alpha));
    double free_dev = 0.0;
    double link_dev = 0.0;
    for (double t : times) {
        free_dev = std::max(free_dev, max_abs(propagate_free_sector(pair, t).flattened() - free_dense.evolve(pair.flattened(), t)));
        link_dev = std::max(link_dev, max_abs(link_fast.at(t).flattened() - link_dense.evolve(pair.flattened(), t)));
    }
    results.push_back({"free_sector_n2", free_dev});
    results.push_back({"single_link_n2", link_dev});

    std::ostringstream table;
    table << "check,max_deviation\n";
    bool ok = true;
    char cell[40];
    for (const auto& r : results) {
        std::snprintf(cell, sizeof cell, "%.15g", r.deviation);
        table << r.name << ',' << cell << '\n';
        ok = ok && r.deviation < 1e-10;
    }
    if (o.out.empty()) {
        std::cout << table.str() << std::flush;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + o.out);
        f << table.str();
    }
    if (!ok) std::cerr << "oracle-check: deviation above 1e-10\n";
    return ok ? 0 : exit_failure;
}

// key=value lines; blank lines and '#' comments ignored. A "command" key names the subcommand.
std::vector<std::pair<std::string, std::string>> read_scenario(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CLI::FileError::Missing(path);
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    auto trim = [](std::string v) {
        const auto b = v.find_first_not_of(" \t\r");
        const auto e = v.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    while (std::getline(f, line)) {
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw CLI::ConversionError("scenario line without '=': " + line);
        std::string key = trim(line.substr(0, eq));
        while (!key.empty() && key.front() == '-') key.erase(0, 1);
        entries.emplace_back(key, trim(line.substr(eq + 1)));
    }
    return entries;
}

struct Arguments {
    std::vector<std::string> args;
    std::optional<std::string> unknown_command;
};

// Splices scenario-file flags in right after the subcommand so later command-line flags win.
// Only --scenario and help are top-level; with a "command" key in the file, the subcommand
// may be omitted and every remaining flag goes to it.
Arguments expand_arguments(int argc, char** argv, const std::vector<std::string>& commands) {
    Arguments out;
    std::vector<std::string> top;
    std::vector<std::string> rest(argv + 1, argv + argc);
    std::optional<std::string> scenario;
    std::size_t i = 0;
    for (; i < rest.size(); ++i) {
        const std::string& a = rest[i];
        if (a == "--scenario" && i + 1 < rest.size()) {
            scenario = rest[i + 1];
            top.push_back(a);
            top.push_back(rest[++i]);
        } else if (a.rfind("--scenario=", 0) == 0) {
            scenario = a.substr(11);
            top.push_back(a);
        } else if (a == "-h" || a == "--help") {
            top.push_back(a);
        } else {
            break;
        }
    }
    rest.erase(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(i));

    std::optional<std::string> command;
    if (!rest.empty() && std::find(commands.begin(), commands.end(), rest.front()) != commands.end()) {
        command = rest.front();
        rest.erase(rest.begin());
    }
    std::vector<std::string> preset;
    if (scenario) {
        for (const auto& [key, value] : read_scenario(*scenario)) {
            if (key == "command") {
                if (!command) command = value;
                continue;
            }
            preset.push_back("--" + key);
            preset.push_back(value);
        }
    }
    if (!command && !rest.empty() && rest.front().rfind("-", 0) != 0) {
        out.unknown_command = rest.front();
        return out;
    }
    if (command && std::find(commands.begin(), commands.end(), *command) == commands.end()) {
        out.unknown_command = *command;
        return out;
    }
    out.args = top;
    if (command) {
        out.args.push_back(*command);
        out.args.insert(out.args.end(), preset.begin(), preset.end());
    }
    out.args.insert(out.args.end(), rest.begin(), rest.end());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-walk clock simulator: scenario tables as CSV", "qwclock"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    std::string scenario;
    app.add_option("--scenario", scenario, "key=value file preloading flags; command-line flags override it");

    const std::vector<std::string> variants{"localized", "flat", "gamma"};
    std::vector<std::unique_ptr<Options>> store;
    auto make = [&](const char* name, const char* help) {
        store.push_back(std::make_unique<Options>());
        return std::pair<CLI::App*, Options*>{app.add_subcommand(name, help), store.back().get()};
    };

    {
        auto [sub, o] = make("bloch", "Bloch vector (s1, s3), radius and polar angle, toy program");
        add_chain(sub, *o), add_mu(sub, *o), add_times(sub, *o, "s"), add_out(sub, *o);
        sub->callback([o] { cmd_bloch(*o); });
    }
    {
        auto [sub, o] = make("entropy", "register von Neumann entropy, toy program");
        add_chain(sub, *o), add_mu(sub, *o), add_times(sub, *o, "2s"), add_out(sub, *o);
        sub->callback([o] { cmd_entropy(*o); });
    }
    {
        auto [sub, o] = make("probability", "target/undesired probabilities with eigenvalue bounds");
        add_chain(sub, *o), add_mu(sub, *o), add_times(sub, *o, "1.2s"), add_out(sub, *o);
        sub->callback([o] { cmd_probability(*o); });
    }
    for (const bool variance : {false, true}) {
        auto [sub, o] = make(variance ? "var-q" : "mean-q",
                             variance ? "variance of the cursor position with the t^2 speed-law reference"
                                      : "mean cursor position with the mean-speed reference line");
        add_chain(sub, *o), add_times(sub, *o, "s"), add_out(sub, *o);
        sub->add_option("--n", o->n, "launch-pad mode count for flat/gamma")->capture_default_str();
        sub->add_option("--variant", o->variant, "initial cursor state")->check(CLI::IsMember(variants))->capture_default_str();
        sub->callback([o, variance] { cmd_position(*o, variance); });
    }
    {
        auto [sub, o] = make("launchpad", "Grover window driven from a launch pad (or a telomere for localized)");
        o->s = 50;
        o->mu = 10;
        add_chain(sub, *o), add_mu(sub, *o), add_times(sub, *o, "3s"), add_out(sub, *o);
        sub->add_option("--n", o->n, "launch-pad mode count")->capture_default_str();
        sub->add_option("--variant", o->variant, "initial cursor state")->check(CLI::IsMember(variants))->capture_default_str();
        sub->add_option("--active", o->active, "number of active links (default floor(pi/4 2^(mu/2)))");
        sub->callback([o] { cmd_launchpad(*o); });
    }
    {
        auto [sub, o] = make("alternating", "oracle/estimation alternation A, B, A, ...");
        add_chain(sub, *o), add_mu(sub, *o), add_times(sub, *o, "s"), add_out(sub, *o);
        sub->callback([o] { cmd_alternating(*o); });
    }
    {
        auto [sub, o] = make("multi", "g excitations from {1..g}, single Grover link at x0");
        o->s = 20;
        o->mu = 4;
        o->x0 = 6;
        add_chain(sub, *o), add_mu(sub, *o), add_times(sub, *o, "4s"), add_out(sub, *o);
        sub->add_option("--g", o->g, "number of excitations")->capture_default_str();
        sub->add_option("--x0", o->x0, "active link")->capture_default_str();
        sub->callback([o] { cmd_multi(*o); });
    }
    {
        auto [sub, o] = make("measure", "sigma3 measurement at tau: later Bloch trajectory or speed CDFs");
        add_chain(sub, *o), add_mu(sub, *o), add_times(sub, *o, "4 tau"), add_out(sub, *o);
        sub->add_option("--tau", o->tau, "measurement time")->capture_default_str();
        sub->add_option("--outcome", o->outcome, "observed sigma3 value")->check(CLI::IsMember({-1, 1}))->capture_default_str();
        sub->add_option("--output", o->output, "bloch or cdf")->check(CLI::IsMember({"bloch", "cdf"}))->capture_default_str();
        sub->add_option("--grid", o->grid, "speed grid points for cdf output")->capture_default_str();
        sub->callback([o] { cmd_measure(*o); });
    }
    {
        auto [sub, o] = make("speed-density", "asymptotic speed density and CDF");
        o->s = 50;
        add_chain(sub, *o), add_out(sub, *o);
        sub->add_option("--family", o->family, "speed law")
            ->check(CLI::IsMember({"localized", "shifted", "pad-ck", "pad-cn", "gamma"}))
            ->capture_default_str();
        sub->add_option("--x0", o->x0, "start site for shifted")->capture_default_str();
        sub->add_option("--epsilon", o->epsilon, "pad length for pad-ck")->capture_default_str();
        sub->add_option("--k", o->k, "pad mode for pad-ck")->capture_default_str();
        sub->add_option("--n", o->n, "mode count for pad-cn and gamma")->capture_default_str();
        sub->add_option("--grid", o->grid, "number of sample points")->capture_default_str();
        sub->callback([o] { cmd_speed_density(*o); });
    }
    int oracle_status = 0;
    {
        auto [sub, o] = make("oracle-check", "compare analytic propagation with the dense oracle");
        o->s = 8;
        o->mu = 4;
        add_chain(sub, *o), add_mu(sub, *o), add_out(sub, *o);
        sub->callback([o, &oracle_status] { oracle_status = cmd_oracle_check(*o); });
    }

    std::vector<std::string> commands;
    for (const auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) commands.push_back(sub->get_name());

    try {
        Arguments parsed = expand_arguments(argc, argv, commands);
        if (parsed.unknown_command) {
            std::cerr << "error: unknown subcommand " << *parsed.unknown_command << "\n\n" << app.help();
            return exit_parameter;
        }
        std::reverse(parsed.args.begin(), parsed.args.end());
        app.parse(parsed.args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return exit_parameter;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid parameter: " << e.what() << '\n';
        return exit_parameter;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameter: " << e.what() << '\n';
        return exit_parameter;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return oracle_status;
}
