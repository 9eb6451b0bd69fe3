#include "sgqi/errors.hpp"
#include "sgqi/experiments.hpp"
#include "sgqi/oracle.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

sgqi::ExperimentConfig load_run_config(const std::string& config) {
    namespace fs = std::filesystem;
    if (fs::exists(config)) return sgqi::parse_config_file(config);
    const auto& bundled = sgqi::bundled_configs();
    if (auto it = bundled.find(config); it != bundled.end()) {
        std::istringstream is(it->second);
        return sgqi::parse_config(is);
    }
    throw sgqi::config_error("no such config file or bundled name: '" + config + "'");
}

int cmd_run(const std::string& config, const std::string& out_dir, int threads,
            const std::string& endpoint, std::uint64_t budget) {
    sgqi::ExperimentConfig cfg = load_run_config(config);
    if (threads > 0) cfg.threads = threads;
    if (!endpoint.empty())
        cfg.endpoint = endpoint == "duplicate" ? sgqi::EndpointPolicy::duplicate
                                               : sgqi::EndpointPolicy::identify;
    if (budget > 0) cfg.budget = budget;
    cfg.validate();

    const auto rows = sgqi::run_experiment(cfg);
    if (out_dir.empty()) {
        sgqi::write_csv(rows, std::cout);
    } else {
        std::filesystem::create_directories(out_dir);
        const auto base = std::filesystem::path(out_dir) / cfg.name;
        std::ofstream csv(base.string() + ".csv");
        sgqi::write_csv(rows, csv);
        std::ofstream json(base.string() + ".json");
        sgqi::write_json_summary(cfg, rows, json);
        std::cout << "wrote " << base.string() << ".csv and .json\n";
    }
    return 0;
}

int cmd_count(int d, int n_min, int n_max, std::uint64_t budget) {
    std::cout << "n,sparse_nodes,full_nodes\n";
    for (int n = n_min; n <= n_max; ++n) {
        const auto sparse = sgqi::count_sparse_nodes(n, d, sgqi::GridConvention::cube, budget);
        sgqi::LevelIndex full{std::vector<int>(d, n)};
        std::cout << n << ',' << sparse << ','
                  << sgqi::subgrid_size(full, sgqi::GridConvention::cube) << '\n';
    }
    return 0;
}

int cmd_check() {
    int failures = 0;
    auto report = [&](const char* what, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
        if (!ok) ++failures;
    };

    // quadrature of the divided kernel reproduces constants:
    // sum_j w(h) Psi_{c,h}(x - j h) ~ 1
    {
        double worst = 0.0;
        const int m = 64;
        const double h = 1.0 / m;
        for (double c : {0.05, 0.02}) {
            for (double x : {0.0, 0.3, 0.71}) {
                double sum = 0.0;
                for (int j = 0; j < m; ++j)
                    sum += sgqi::node_weight(h, sgqi::WeightRule::trig) *
                           sgqi::eval_psi_ch(c, h, x - j * h, 0);
                worst = std::max(worst, std::abs(sum - 1.0));
            }
        }
        report("kernel quadrature normalization", worst < 5e-2);
    }
    // each subgrid reproduces constants, so the signed subgrid count is 1
    {
        bool ok = true;
        for (int d : {1, 2, 3, 5, 10}) {
            const auto plan = sgqi::combination_plan(2, d);
            long long sum = 0;
            for (const auto& shell : plan.shells)
                sum += shell.coeff * static_cast<long long>(shell.levels.size());
            ok = ok && sum == 1;
        }
        report("signed subgrid count equals 1", ok);
    }
    // inclusion-exclusion count equals direct union count
    {
        bool ok = true;
        for (int d = 1; d <= 3; ++d)
            for (int n = d; n <= 5; ++n)
                ok = ok && sgqi::count_sparse_nodes(n, d) == sgqi::count_sparse_nodes_union(n, d);
        report("sparse node counts (formula vs union)", ok);
    }
    // closed-form divided kernel identity at h -> 0:
    // Psi_c(x) = pi c^2 (c^2+1) / (2 (c^2 + sin^2 pi x)^{3/2})
    {
        const double pi = std::acos(-1.0);
        double worst = 0.0;
        for (double c : {0.1, 0.01}) {
            for (int i = 0; i < 100; ++i) {
                const double x = i / 100.0;
                const double s2 = c * c + std::sin(pi * x) * std::sin(pi * x);
                const double closed = pi * c * c * (c * c + 1.0) / (2.0 * std::pow(s2, 1.5));
                worst = std::max(worst,
                                 std::abs(sgqi::eval_psi_c(c, x) - closed) / std::abs(closed));
            }
        }
        report("second-order kernel closed form", worst < 1e-10);
    }
    std::cout << (failures == 0 ? "all checks passed\n" : "checks failed\n");
    return failures == 0 ? 0 : 1;
}

int cmd_table(const std::string& name, const std::string& out_dir) {
    const auto& bundled = sgqi::bundled_configs();
    if (name.empty()) {
        for (const auto& [key, text] : bundled) std::cout << key << '\n';
        return 0;
    }
    auto it = bundled.find(name);
    if (it == bundled.end()) throw sgqi::config_error("unknown bundled config '" + name + "'");
    if (out_dir.empty()) {
        std::cout << it->second;
    } else {
        std::filesystem::create_directories(out_dir);
        const auto path = std::filesystem::path(out_dir) / (name + ".cfg");
        std::ofstream os(path);
        os << it->second;
        std::cout << "wrote " << path.string() << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse-grid quasi-interpolation experiment runner"};
    app.require_subcommand(1);

    std::string config, out_dir, endpoint, table_name;
    int threads = 0;
    std::uint64_t budget = 0;
    int count_d = 2, count_n_min = 1, count_n_max = 7;

    auto* run = app.add_subcommand("run", "run an experiment config (path or bundled name)");
    run->add_option("--config", config, "config file path or bundled name")->required();
    run->add_option("--out", out_dir, "output directory for CSV/JSON");
    run->add_option("--threads", threads, "evaluation threads");
    run->add_option("--endpoint", endpoint, "identify|duplicate")
        ->check(CLI::IsMember({"identify", "duplicate"}));
    run->add_option("--budget", budget, "node budget cap");

    auto* count = app.add_subcommand("count", "print sparse vs full grid sizes");
    count->add_option("--d", count_d, "dimension");
    count->add_option("--n-min", count_n_min, "lowest level");
    count->add_option("--n-max", count_n_max, "highest level");
    count->add_option("--budget", budget, "node budget cap");

    auto* check = app.add_subcommand("check", "run the built-in invariant suite");
    (void)check;

    auto* table = app.add_subcommand("table", "re-emit a bundled config (no name: list)");
    table->add_option("name", table_name, "bundled config name");
    table->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(config, out_dir, threads, endpoint, budget);
        if (count->parsed())
            return cmd_count(count_d, count_n_min, count_n_max,
                             budget > 0 ? budget : sgqi::kDefaultNodeBudget);
        if (check->parsed()) return cmd_check();
        if (table->parsed()) return cmd_table(table_name, out_dir);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const sgqi::budget_error& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return 3;
    } catch (const sgqi::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
