// Copyright 2026 The SwarmVQC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// swarmvqc: command-line front end.
//
//   swarmvqc train-pso  --dataset synth --data-dir data --dims 40 --out runs/a
//   swarmvqc train-adam --config adam.cfg --seed 3 --out runs/b
//   swarmvqc evaluate   --run runs/a --split test --shots 1024
//   swarmvqc prune      --circuit runs/a/circuit.txt
//   swarmvqc export-qasm --circuit runs/a/circuit.txt --out a.qasm
//   swarmvqc report     runs/a runs/b --split test
//   swarmvqc gen-synthetic --out data --dataset synth

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "swarmvqc/analysis.hpp"
#include "swarmvqc/circuit_io.hpp"
#include "swarmvqc/error.hpp"
#include "swarmvqc/harness.hpp"
#include "swarmvqc/metrics.hpp"
#include "swarmvqc/statevector.hpp"
#include "swarmvqc/text_util.hpp"

namespace fs = std::filesystem;
using namespace swarmvqc;

namespace {

struct TrainFlags {
    std::string config;
    std::vector<std::pair<std::string, std::string>> overrides;
    bool quiet = false;
};

// Registers a string flag that, when given, becomes a config override.
void override_flag(CLI::App *app, TrainFlags &flags, const std::string &name,
                   const std::string &key, const std::string &help) {
    app->add_option_function<std::string>(
        name,
        [&flags, key](const std::string &value) {
            flags.overrides.emplace_back(key, value);
        },
        help);
}

void add_train_flags(CLI::App *app, TrainFlags &flags) {
    app->add_option("--config", flags.config, "key = value config file")
        ->check(CLI::ExistingFile);
    override_flag(app, flags, "--dataset", "dataset", "dataset name");
    override_flag(app, flags, "--data-dir", "data_dir",
                  "directory holding <dataset>_{train,val,test}.csv");
    override_flag(app, flags, "--train", "train", "explicit train CSV");
    override_flag(app, flags, "--val", "val", "explicit validation CSV");
    override_flag(app, flags, "--test", "test", "explicit test CSV");
    override_flag(app, flags, "--dims", "dims", "swarm dimensions (pso)");
    override_flag(app, flags, "--particles", "particles", "swarm size");
    override_flag(app, flags, "--iterations", "iterations", "swarm rounds");
    override_flag(app, flags, "--fitness", "fitness_mode",
                  "error_rate or cross_entropy");
    override_flag(app, flags, "--epochs", "epochs", "adam epochs");
    override_flag(app, flags, "--batch", "batch", "adam batch size");
    override_flag(app, flags, "--lr", "lr", "adam learning rate");
    override_flag(app, flags, "--seed", "seed", "master seed");
    override_flag(app, flags, "--shots", "shots",
                  "also evaluate a test subset with this many shots");
    override_flag(app, flags, "--shot-subset", "shot_subset",
                  "size of the shot-evaluated test subset");
    override_flag(app, flags, "--out", "out", "run directory");
    app->add_flag("-q,--quiet", flags.quiet, "no progress output");
}

int run_training(const TrainFlags &flags, Method method) {
    ExperimentConfig config;
    if (!flags.config.empty()) {
        config = load_config_file(flags.config);
    }
    config.method = method;
    for (const auto &[key, value] : flags.overrides) {
        config.set(key, value);
    }
    if (config.method != method) {
        throw InvalidArgument("config method conflicts with the subcommand");
    }
    RunOptions options;
    options.log = flags.quiet ? nullptr : &std::cerr;
    const auto summary = run_experiment(config, options);
    std::cout << "run: " << summary.directory.generic_string() << '\n';
    for (const auto &row : summary.metrics) {
        std::cout << row.method << ' ' << row.split << ' '
                  << format_percent(row.accuracy) << '\n';
    }
    return 0;
}

Split parse_split(const std::string &name) {
    if (name == "train") {
        return Split::Train;
    }
    if (name == "val") {
        return Split::Validation;
    }
    if (name == "test") {
        return Split::Test;
    }
    throw InvalidArgument("unknown split '" + name + "'");
}

void print_evaluation(const Evaluation &ev, std::size_t samples) {
    std::cout << "samples: " << samples << '\n'
              << "accuracy: " << format_double(ev.accuracy) << " ("
              << format_percent(ev.accuracy) << ")\n"
              << "class,precision,recall,f1\n";
    for (const auto &m : ev.report) {
        std::cout << m.label << ',' << format_double(m.precision) << ','
                  << format_double(m.recall) << ',' << format_double(m.f1)
                  << '\n';
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"PSO architecture search for variational quantum classifiers"};
    app.require_subcommand(1);

    TrainFlags pso_flags;
    auto *pso = app.add_subcommand("train-pso", "search a circuit with PSO");
    add_train_flags(pso, pso_flags);

    TrainFlags adam_flags;
    auto *adam = app.add_subcommand("train-adam",
                                    "train the fixed ansatz with Adam");
    add_train_flags(adam, adam_flags);

    std::string eval_run;
    std::string eval_split = "test";
    std::string eval_data;
    std::string eval_circuit;
    std::size_t eval_shots = 0;
    std::uint64_t eval_seed = 0;
    std::size_t eval_limit = 0;
    auto *eval = app.add_subcommand("evaluate", "re-evaluate a stored run");
    eval->add_option("--run", eval_run, "run directory")->required();
    eval->add_option("--split", eval_split, "train, val or test");
    eval->add_option("--data", eval_data, "CSV overriding the stored path");
    eval->add_option("--circuit", eval_circuit,
                     "circuit file overriding the stored one");
    eval->add_option("--shots", eval_shots, "measurements per sample (0 = exact)");
    eval->add_option("--seed", eval_seed, "shot sampling seed");
    eval->add_option("--limit", eval_limit, "use only the first N rows");

    std::string prune_circuit;
    std::size_t prune_readout = kReadoutQubit;
    auto *prune = app.add_subcommand("prune", "light-cone dead gate report");
    prune->add_option("--circuit", prune_circuit, "circuit file")->required();
    prune->add_option("--readout", prune_readout, "measured qubit");

    std::string qasm_circuit;
    std::string qasm_out;
    auto *qasm = app.add_subcommand("export-qasm", "write OpenQASM 2.0");
    qasm->add_option("--circuit", qasm_circuit, "circuit file")->required();
    qasm->add_option("--out", qasm_out, "output file (default stdout)");

    std::vector<std::string> report_runs;
    std::string report_split = "test";
    auto *report = app.add_subcommand("report", "accuracy table over runs");
    report->add_option("runs", report_runs, "run directories")->required();
    report->add_option("--split", report_split, "metrics split to tabulate");

    std::string synth_out;
    std::string synth_name = "synthetic";
    std::size_t synth_features = 64;
    std::size_t synth_train = 500;
    std::size_t synth_val = 200;
    std::size_t synth_test = 200;
    double synth_separation = 4.0;
    std::uint64_t synth_seed = 0;
    auto *synth = app.add_subcommand("gen-synthetic",
                                     "write a two-Gaussian dataset");
    synth->add_option("--out", synth_out, "output directory")->required();
    synth->add_option("--dataset", synth_name, "file name prefix");
    synth->add_option("--features", synth_features, "feature count");
    synth->add_option("--train", synth_train, "train rows");
    synth->add_option("--val", synth_val, "validation rows");
    synth->add_option("--test", synth_test, "test rows");
    synth->add_option("--separation", synth_separation, "distance of means");
    synth->add_option("--seed", synth_seed, "seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (pso->parsed()) {
            return run_training(pso_flags, Method::Pso);
        }
        if (adam->parsed()) {
            return run_training(adam_flags, Method::Adam);
        }
        if (eval->parsed()) {
            const StoredRun run = load_run(eval_run);
            Dataset data = load_split_for_run(run, parse_split(eval_split),
                                              eval_data);
            if (eval_limit > 0 && eval_limit < data.size()) {
                data = data.slice(0, eval_limit);
            }
            const Circuit circuit = eval_circuit.empty()
                                        ? run.circuit
                                        : read_circuit_file(eval_circuit);
            const auto shots = eval_shots == 0
                                   ? std::nullopt
                                   : std::optional<std::size_t>(eval_shots);
            print_evaluation(evaluate(circuit, data, shots, eval_seed),
                             data.size());
            return 0;
        }
        if (prune->parsed()) {
            const auto circuit = read_circuit_file(prune_circuit);
            std::cout << format_prune_report(
                prune_dead_gates(circuit, prune_readout));
            return 0;
        }
        if (qasm->parsed()) {
            const auto text = circuit_to_qasm(read_circuit_file(qasm_circuit));
            if (qasm_out.empty()) {
                std::cout << text;
            } else {
                write_text_file(qasm_out, text);
            }
            return 0;
        }
        if (report->parsed()) {
            std::vector<MetricRow> rows;
            for (const auto &dir : report_runs) {
                const auto more = metrics_from_csv(
                    read_text_file(fs::path(dir) / "metrics.csv"));
                rows.insert(rows.end(), more.begin(), more.end());
            }
            std::cout << render_results_table(results_table(rows, report_split));
            return 0;
        }
        if (synth->parsed()) {
            fs::create_directories(synth_out);
            const std::uint64_t direction_seed = synth_seed;
            const std::pair<Split, std::size_t> parts[] = {
                {Split::Train, synth_train},
                {Split::Validation, synth_val},
                {Split::Test, synth_test}};
            for (const auto &[split, rows] : parts) {
                const auto ds = make_two_gaussians(
                    rows, synth_features, synth_separation,
                    synth_seed * 3 + static_cast<std::uint64_t>(split) + 1,
                    direction_seed, split);
                const fs::path path =
                    fs::path(synth_out) /
                    (synth_name + "_" + std::string(split_name(split)) + ".csv");
                write_text_file(path, dataset_to_csv(ds));
                std::cout << path.generic_string() << '\n';
            }
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
