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

#include "swarmvqc/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "swarmvqc/analysis.hpp"
#include "swarmvqc/circuit_io.hpp"
#include "swarmvqc/error.hpp"
#include "swarmvqc/random.hpp"
#include "swarmvqc/statevector.hpp"
#include "swarmvqc/text_util.hpp"

namespace swarmvqc {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::size_t to_size(std::string_view key, std::string_view value) {
    const auto v = parse_unsigned(value);
    if (!v) {
        throw InvalidArgument("config '" + std::string(key) +
                              "' expects a nonnegative integer, got '" +
                              std::string(value) + "'");
    }
    return *v;
}

double to_real(std::string_view key, std::string_view value) {
    const auto v = parse_double(value);
    if (!v || !std::isfinite(*v)) {
        throw InvalidArgument("config '" + std::string(key) +
                              "' expects a number, got '" +
                              std::string(value) + "'");
    }
    return *v;
}

std::string hex64(std::uint64_t v) {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx",
                  static_cast<unsigned long long>(v));
    return buffer;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

void log_line(const RunOptions &options, const std::string &line) {
    if (options.log != nullptr) {
        *options.log << line << '\n';
    }
}

} // namespace

std::string_view method_name(Method method) {
    return method == Method::Pso ? "pso" : "adam";
}

Method parse_method(std::string_view name) {
    if (name == "pso") {
        return Method::Pso;
    }
    if (name == "adam") {
        return Method::Adam;
    }
    throw InvalidArgument("unknown method '" + std::string(name) +
                          "' (expected pso or adam)");
}

void ExperimentConfig::set(std::string_view key, std::string_view value) {
    if (key == "dataset") {
        dataset = value;
    } else if (key == "data_dir") {
        data_dir = fs::path(std::string(value));
    } else if (key == "train") {
        train_path = fs::path(std::string(value));
    } else if (key == "val") {
        val_path = fs::path(std::string(value));
    } else if (key == "test") {
        test_path = fs::path(std::string(value));
    } else if (key == "method") {
        method = parse_method(value);
    } else if (key == "dims") {
        swarm.dimensions = to_size(key, value);
    } else if (key == "n_qubits") {
        n_qubits = to_size(key, value);
    } else if (key == "pca_k") {
        pca_k = to_size(key, value);
    } else if (key == "particles") {
        swarm.n_particles = to_size(key, value);
    } else if (key == "iterations") {
        swarm.iterations = to_size(key, value);
    } else if (key == "c1_start") {
        swarm.c1_start = to_real(key, value);
    } else if (key == "c1_end") {
        swarm.c1_end = to_real(key, value);
    } else if (key == "c2_start") {
        swarm.c2_start = to_real(key, value);
    } else if (key == "c2_end") {
        swarm.c2_end = to_real(key, value);
    } else if (key == "w_start") {
        swarm.w_start = to_real(key, value);
    } else if (key == "w_end") {
        swarm.w_end = to_real(key, value);
    } else if (key == "v_max") {
        swarm.v_max = to_real(key, value);
    } else if (key == "fitness_mode") {
        fitness_mode = parse_fitness_mode(value);
    } else if (key == "epochs") {
        epochs = to_size(key, value);
    } else if (key == "batch") {
        batch_size = to_size(key, value);
    } else if (key == "lr") {
        learning_rate = to_real(key, value);
    } else if (key == "shots") {
        const auto n = to_size(key, value);
        shots = n == 0 ? std::nullopt : std::optional<std::size_t>(n);
    } else if (key == "shot_subset") {
        shot_subset = to_size(key, value);
    } else if (key == "seed") {
        seed = to_size(key, value);
    } else if (key == "out") {
        out_dir = fs::path(std::string(value));
    } else {
        throw InvalidArgument("unknown config key '" + std::string(key) + "'");
    }
}

void ExperimentConfig::validate() const {
    if (dataset.empty()) {
        throw InvalidArgument("dataset name is required");
    }
    if (n_qubits < 2 || n_qubits > 16) {
        throw InvalidArgument("n_qubits must lie in 2..16");
    }
    if (pca_k != n_qubits) {
        throw InvalidArgument("pca_k (" + std::to_string(pca_k) +
                              ") must equal n_qubits (" +
                              std::to_string(n_qubits) + ")");
    }
    if (method == Method::Pso) {
        if (swarm.dimensions == 0 || swarm.dimensions % kSlotsPerGate != 0) {
            throw InvalidArgument("dims must be a positive multiple of 4, got " +
                                  std::to_string(swarm.dimensions));
        }
        swarm.validate();
    } else {
        if (epochs == 0 || batch_size == 0) {
            throw InvalidArgument("epochs and batch must be positive");
        }
        if (!(learning_rate >= 0.0)) {
            throw InvalidArgument("lr must be nonnegative");
        }
    }
    if (shots && shot_subset == 0) {
        throw InvalidArgument("shot_subset must be positive");
    }
    if (out_dir.empty()) {
        throw InvalidArgument("output directory (--out) is required");
    }
}

fs::path ExperimentConfig::split_path(Split split) const {
    const fs::path &explicit_path = split == Split::Train        ? train_path
                                    : split == Split::Validation ? val_path
                                                                 : test_path;
    if (!explicit_path.empty()) {
        return explicit_path;
    }
    return data_dir /
           (dataset + "_" + std::string(split_name(split)) + ".csv");
}

std::string ExperimentConfig::method_label() const {
    return method == Method::Pso ? "pso" + std::to_string(swarm.dimensions)
                                 : "adam";
}

std::vector<std::pair<std::string, std::string>>
ExperimentConfig::entries() const {
    std::vector<std::pair<std::string, std::string>> e = {
        {"dataset", dataset},
        {"train", split_path(Split::Train).generic_string()},
        {"val", split_path(Split::Validation).generic_string()},
        {"test", split_path(Split::Test).generic_string()},
        {"method", std::string(method_name(method))},
        {"n_qubits", std::to_string(n_qubits)},
        {"pca_k", std::to_string(pca_k)},
        {"seed", std::to_string(seed)},
    };
    if (method == Method::Pso) {
        e.insert(e.end(), {
                              {"dims", std::to_string(swarm.dimensions)},
                              {"particles", std::to_string(swarm.n_particles)},
                              {"iterations", std::to_string(swarm.iterations)},
                              {"c1_start", format_double(swarm.c1_start)},
                              {"c1_end", format_double(swarm.c1_end)},
                              {"c2_start", format_double(swarm.c2_start)},
                              {"c2_end", format_double(swarm.c2_end)},
                              {"w_start", format_double(swarm.w_start)},
                              {"w_end", format_double(swarm.w_end)},
                              {"v_max", format_double(swarm.v_max)},
                              {"fitness_mode",
                               std::string(fitness_mode_name(fitness_mode))},
                          });
    } else {
        e.insert(e.end(), {
                              {"epochs", std::to_string(epochs)},
                              {"batch", std::to_string(batch_size)},
                              {"lr", format_double(learning_rate)},
                          });
    }
    e.emplace_back("shots", shots ? std::to_string(*shots) : "0");
    e.emplace_back("shot_subset", std::to_string(shot_subset));
    return e;
}

std::vector<std::pair<std::string, std::string>>
parse_config_text(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::size_t line_no = 0;
    for (const auto raw : split_lines(text)) {
        ++line_no;
        const auto line = trim(strip_comment(raw));
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(line_no, "expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ParseError(line_no, "empty key");
        }
        entries.emplace_back(std::string(key), std::string(value));
    }
    return entries;
}

ExperimentConfig load_config_file(const fs::path &path) {
    ExperimentConfig config;
    for (const auto &[key, value] : parse_config_text(read_text_file(path))) {
        config.set(key, value);
    }
    return config;
}

std::string metrics_to_csv(const std::vector<MetricRow> &rows) {
    std::string csv = "dataset,method,split,accuracy\n";
    for (const auto &r : rows) {
        csv += r.dataset + ',' + r.method + ',' + r.split + ',' +
               format_double(r.accuracy) + '\n';
    }
    return csv;
}

std::vector<MetricRow> metrics_from_csv(std::string_view text) {
    std::vector<MetricRow> rows;
    std::size_t line_no = 0;
    for (const auto line : split_lines(text)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        if (line_no == 1) {
            if (trim(line) != "dataset,method,split,accuracy") {
                throw ParseError(1, "unexpected metrics header");
            }
            continue;
        }
        const auto cells = split_on(line, ',');
        if (cells.size() != 4) {
            throw ParseError(line_no, "expected 4 columns");
        }
        const auto acc = parse_double(trim(cells[3]));
        if (!acc) {
            throw ParseError(line_no, "bad accuracy value");
        }
        rows.push_back({std::string(trim(cells[0])),
                        std::string(trim(cells[1])),
                        std::string(trim(cells[2])), *acc});
    }
    return rows;
}

std::string class_rows_to_csv(const std::vector<ClassRow> &rows) {
    std::string csv = "dataset,method,class,precision,recall,f1\n";
    for (const auto &r : rows) {
        csv += r.dataset + ',' + r.method + ',' +
               std::to_string(r.metrics.label) + ',' +
               format_double(r.metrics.precision) + ',' +
               format_double(r.metrics.recall) + ',' +
               format_double(r.metrics.f1) + '\n';
    }
    return csv;
}

Evaluation evaluate(const Circuit &circuit, const Dataset &data,
                    std::optional<std::size_t> shots, std::uint64_t seed) {
    if (data.width() != circuit.n_qubits()) {
        throw InvalidArgument("feature width " + std::to_string(data.width()) +
                              " does not match circuit width " +
                              std::to_string(circuit.n_qubits()));
    }
    if (data.size() == 0) {
        throw InvalidArgument("cannot evaluate an empty split");
    }
    Evaluation ev;
    ev.predictions.resize(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        Statevector state = encode_product_state(data.row(i));
        state.apply(circuit);
        double expectation = 0.0;
        if (shots) {
            auto engine = make_engine(seed, Stream::Shots, {i});
            expectation =
                sample_expectation(state, kReadoutQubit, *shots, engine);
        } else {
            expectation = state.expectation_z(kReadoutQubit);
        }
        ev.predictions[i] = readout_from_expectation(expectation).predicted_label;
    }
    ev.accuracy = accuracy(ev.predictions, data.labels);
    ev.report = class_report(ev.predictions, data.labels);
    return ev;
}

std::string preprocessor_to_json(const Preprocessor &pre) {
    const auto vec = [](const Eigen::VectorXd &v) {
        return std::vector<double>(v.data(), v.data() + v.size());
    };
    json components = json::array();
    for (Eigen::Index r = 0; r < pre.pca.components.rows(); ++r) {
        const Eigen::VectorXd row = pre.pca.components.row(r).transpose();
        components.push_back(vec(row));
    }
    json j;
    j["format_version"] = kRunFormatVersion;
    j["pca"] = {{"mean", vec(pre.pca.mean)},
                {"components", components},
                {"explained_variance", vec(pre.pca.explained_variance)}};
    j["scaler"] = {{"min", vec(pre.scaler.min)}, {"max", vec(pre.scaler.max)}};
    return j.dump(1) + '\n';
}

Preprocessor preprocessor_from_json(std::string_view text) {
    const auto to_vec = [](const json &a) {
        const auto v = a.get<std::vector<double>>();
        return Eigen::VectorXd(
            Eigen::Map<const Eigen::VectorXd>(v.data(),
                                              static_cast<Eigen::Index>(v.size())));
    };
    try {
        const json j = json::parse(text);
        Preprocessor pre;
        pre.pca.mean = to_vec(j.at("pca").at("mean"));
        pre.pca.explained_variance = to_vec(j.at("pca").at("explained_variance"));
        const auto &rows = j.at("pca").at("components");
        pre.pca.components.resize(static_cast<Eigen::Index>(rows.size()),
                                  pre.pca.mean.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Eigen::VectorXd row = to_vec(rows[r]);
            if (row.size() != pre.pca.mean.size()) {
                throw Error("component width mismatch");
            }
            pre.pca.components.row(static_cast<Eigen::Index>(r)) =
                row.transpose();
        }
        pre.scaler.min = to_vec(j.at("scaler").at("min"));
        pre.scaler.max = to_vec(j.at("scaler").at("max"));
        if (pre.scaler.min.size() != pre.pca.components.rows() ||
            pre.scaler.max.size() != pre.pca.components.rows()) {
            throw Error("scaler width mismatch");
        }
        return pre;
    } catch (const json::exception &e) {
        throw Error(std::string("bad preprocessing file: ") + e.what());
    }
}

RunSummary run_experiment(const ExperimentConfig &config,
                          const RunOptions &options) {
    config.validate();
    const std::string method = config.method_label();

    Dataset raw[3];
    json inputs = json::object();
    const Split splits[3] = {Split::Train, Split::Validation, Split::Test};
    for (int s = 0; s < 3; ++s) {
        const fs::path path = config.split_path(splits[s]);
        const std::string text = read_text_file(path);
        try {
            raw[s] = filter_first_two_classes(parse_csv(text, splits[s]));
        } catch (const ParseError &e) {
            throw Error(path.string() + ": " + e.what());
        }
        inputs[std::string(split_name(splits[s]))] = {
            {"path", path.generic_string()},
            {"fnv1a64", hex64(fnv1a64(text))},
            {"rows_after_filter", raw[s].size()},
        };
    }
    log_line(options, "loaded " + config.dataset + ": train=" +
                          std::to_string(raw[0].size()) +
                          " val=" + std::to_string(raw[1].size()) +
                          " test=" + std::to_string(raw[2].size()));

    const Preprocessor pre = Preprocessor::fit(raw[0], config.pca_k);
    const Dataset train = pre.apply(raw[0]);
    const Dataset val = pre.apply(raw[1]);
    const Dataset test = pre.apply(raw[2]);

    fs::create_directories(config.out_dir);
    const fs::path dir = config.out_dir;

    RunSummary summary{dir, Circuit(config.n_qubits), {}, {}};
    std::string history_csv;
    std::optional<Circuit> final_circuit;

    if (config.method == Method::Pso) {
        auto swarm = config.swarm;
        swarm.seed = config.seed;
        const auto fitness =
            make_fitness(train, config.n_qubits, config.fitness_mode);
        const auto result =
            optimize(fitness, swarm, {options.threads, options.log});
        summary.circuit = decode_particle(result.best_position, config.n_qubits);
        if (summary.circuit.size() != swarm.dimensions / kSlotsPerGate) {
            throw Error("decoded circuit has the wrong gate count");
        }
        history_csv = history_to_csv(result.history);
    } else {
        const FixedAnsatz ansatz{config.n_qubits, 2};
        TrainConfig tc;
        tc.epochs = config.epochs;
        tc.batch_size = config.batch_size;
        tc.learning_rate = config.learning_rate;
        tc.seed = config.seed;
        tc.threads = options.threads;
        tc.progress = options.log;
        const auto result = train_baseline(train, val, tc, ansatz);
        summary.circuit = ansatz.build(result.best_params);
        final_circuit = ansatz.build(result.final_params);
        history_csv = training_history_to_csv(result.history);
    }

    const auto add_split_rows = [&](const Circuit &circuit,
                                    const std::string &label) {
        const Dataset *parts[3] = {&train, &val, &test};
        for (int s = 0; s < 3; ++s) {
            const auto ev = evaluate(circuit, *parts[s]);
            summary.metrics.push_back({config.dataset, label,
                                       std::string(split_name(splits[s])),
                                       ev.accuracy});
            if (splits[s] == Split::Test) {
                for (const auto &m : ev.report) {
                    summary.class_rows.push_back({config.dataset, label, m});
                }
            }
        }
    };
    add_split_rows(summary.circuit, method);
    if (final_circuit) {
        add_split_rows(*final_circuit, method + "-final");
    }

    if (config.shots) {
        const Dataset subset =
            test.slice(0, std::min(config.shot_subset, test.size()));
        const auto exact = evaluate(summary.circuit, subset);
        const auto sampled =
            evaluate(summary.circuit, subset, config.shots, config.seed);
        summary.metrics.push_back(
            {config.dataset, method, "test_subset", exact.accuracy});
        summary.metrics.push_back({config.dataset, method,
                                   "test_subset_shots" +
                                       std::to_string(*config.shots),
                                   sampled.accuracy});
    }

    const auto prune = prune_dead_gates(summary.circuit, kReadoutQubit);
    if (prune.pruned_count > prune.original_count) {
        throw Error("pruning increased the gate count");
    }
    for (const auto &row : summary.metrics) {
        if (!(row.accuracy >= 0.0 && row.accuracy <= 1.0)) {
            throw Error("accuracy outside [0, 1]");
        }
    }

    std::vector<std::string> artifacts = {"preprocess.json", "circuit.txt",
                                          "history.csv",     "metrics.csv",
                                          "class_report.csv", "prune.txt"};
    write_text_file(dir / "preprocess.json", preprocessor_to_json(pre));
    write_circuit_file(dir / "circuit.txt", summary.circuit);
    if (final_circuit) {
        write_circuit_file(dir / "circuit_final.txt", *final_circuit);
        artifacts.emplace_back("circuit_final.txt");
    }
    write_text_file(dir / "history.csv", history_csv);
    write_text_file(dir / "metrics.csv", metrics_to_csv(summary.metrics));
    write_text_file(dir / "class_report.csv",
                    class_rows_to_csv(summary.class_rows));
    write_text_file(dir / "prune.txt", format_prune_report(prune));

    json manifest;
    manifest["format_version"] = kRunFormatVersion;
    manifest["tool"] = "swarmvqc";
    json cfg = json::object();
    for (const auto &[k, v] : config.entries()) {
        cfg[k] = v;
    }
    manifest["config"] = cfg;
    manifest["inputs"] = inputs;
    manifest["readout_qubit"] = kReadoutQubit;
    manifest["artifacts"] = artifacts;
    write_text_file(dir / "manifest.json", manifest.dump(1) + '\n');

    for (const auto &row : summary.metrics) {
        log_line(options, row.method + " " + row.split + " accuracy " +
                              format_percent(row.accuracy));
    }
    return summary;
}

StoredRun load_run(const fs::path &directory) {
    StoredRun run;
    json manifest;
    try {
        manifest = json::parse(read_text_file(directory / "manifest.json"));
    } catch (const json::exception &e) {
        throw Error("bad manifest in " + directory.string() + ": " + e.what());
    }
    if (manifest.value("format_version", 0) != kRunFormatVersion) {
        throw Error("unsupported run format in " + directory.string());
    }
    for (const auto &[key, value] : manifest.at("config").items()) {
        run.config.set(key, value.get<std::string>());
    }
    run.config.out_dir = directory;
    run.preprocessor =
        preprocessor_from_json(read_text_file(directory / "preprocess.json"));
    run.circuit = read_circuit_file(directory / "circuit.txt");
    return run;
}

Dataset load_split_for_run(const StoredRun &run, Split split,
                           const fs::path &override_path) {
    const fs::path path =
        override_path.empty() ? run.config.split_path(split) : override_path;
    const Dataset raw = filter_first_two_classes(load_csv(path, split));
    if (raw.width() != run.preprocessor.pca.input_width()) {
        throw InvalidArgument("split " + path.string() + " has " +
                              std::to_string(raw.width()) +
                              " features; the run was fitted on " +
                              std::to_string(
                                  run.preprocessor.pca.input_width()));
    }
    return run.preprocessor.apply(raw);
}

ResultsTable results_table(const std::vector<MetricRow> &rows,
                           std::string_view split) {
    ResultsTable table;
    for (const auto &r : rows) {
        if (r.split != split) {
            continue;
        }
        if (std::find(table.methods.begin(), table.methods.end(), r.method) ==
            table.methods.end()) {
            table.methods.push_back(r.method);
        }
    }
    for (const auto &r : rows) {
        if (r.split != split) {
            continue;
        }
        auto it = std::find_if(table.rows.begin(), table.rows.end(),
                               [&](const auto &row) {
                                   return row.dataset == r.dataset;
                               });
        if (it == table.rows.end()) {
            table.rows.push_back(
                {r.dataset, std::vector<std::optional<double>>(
                                table.methods.size())});
            it = std::prev(table.rows.end());
        }
        const auto col = static_cast<std::size_t>(
            std::find(table.methods.begin(), table.methods.end(), r.method) -
            table.methods.begin());
        it->values[col] = r.accuracy;
    }
    return table;
}

} // namespace swarmvqc
