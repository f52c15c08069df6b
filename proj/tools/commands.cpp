#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsst/analysis.hpp"
#include "fsst/io.hpp"
#include "fsst/signals.hpp"
#include "fsst/stft.hpp"
#include "fsst/synchrosqueeze.hpp"
#include "fsst/window.hpp"

namespace fsst::cli {

namespace fs = std::filesystem;

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void check_input(const std::string& path, const std::string& flag) {
  require(!path.empty(), flag + " is required");
  require(fs::is_regular_file(path), flag + ": no such file '" + path + "'");
}

void check_output(const std::string& path, const std::string& flag) {
  require(!path.empty(), flag + " is required");
  const fs::path parent = fs::path(path).parent_path();
  require(parent.empty() || fs::is_directory(parent), flag + ": directory '" + parent.string() + "' does not exist");
  require(!fs::is_directory(path), flag + ": '" + path + "' is a directory");
}

ComplexSignal load_signal(const std::string& path) {
  std::istringstream in(read_text_file(path));
  return read_signal_csv(in);
}

TFMatrix load_matrix(const std::string& path, TfKind kind) {
  std::istringstream in(read_text_file(path));
  return read_matrix_csv(in, kind);
}

ComponentModel load_model(const std::string& path) {
  const auto text = read_text_file(path);
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DataError("'" + path + "' is not valid JSON");
  return model_from_json(j);
}

WindowSpec window_for(std::size_t n, std::size_t support) {
  require(support >= 1 && support < n,
          "--support must lie in [1, N) = [1, " + std::to_string(n) + "), got " + std::to_string(support));
  return make_hann_freq_window(n, support);
}

std::string default_model_path(const std::string& out) { return fs::path(out).replace_extension(".json").string(); }

// Samples away from the cyclic wrap-around seam.
std::pair<std::size_t, std::size_t> interior(std::size_t n) { return {n / 20, n - n / 20}; }

BinRange ridge_range(const ComponentModel& model) {
  return model.real_valued ? BinRange{0, model.n / 2 + 1} : BinRange{};
}

}  // namespace

void cmd_gen(const RunConfig& config, std::ostream&) {
  require(config.n >= 2, "--n must be at least 2");
  require(config.noise >= 0.0 && std::isfinite(config.noise), "--noise must be a non-negative number");
  check_output(config.out, "--out");
  const std::string model_path = config.model.empty() ? default_model_path(config.out) : config.model;
  check_output(model_path, "--model");
  GeneratedSignal g = [&] {
    try {
      return generate(config.signal, config.n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const ComplexSignal y = add_noise(g.x, config.noise, config.seed);
  std::ostringstream csv;
  write_signal_csv(csv, y);
  write_text_file(config.out, csv.str());
  write_text_file(model_path, model_to_json(g.model).dump(2) + "\n");
}

void cmd_transform(const RunConfig& config, std::ostream&) {
  check_output(config.out, "--out");
  std::ostringstream out;
  if (config.kind == "itvps") {
    check_input(config.model, "--model");
    const auto model = load_model(config.model);
    write_matrix_csv(out, itvps(model, model.n));
  } else {
    require(config.kind == "stft" || config.kind == "modified-stft" || config.kind == "sst",
            "--kind must be one of stft, modified-stft, sst, itvps; got '" + config.kind + "'");
    check_input(config.in, "--in");
    const auto x = load_signal(config.in);
    const auto w = window_for(x.size(), config.support);
    if (config.kind == "stft") {
      write_matrix_csv(out, stft(x, w));
    } else {
      const auto v = modified_stft(x, w);
      if (config.kind == "modified-stft") {
        write_matrix_csv(out, v);
      } else {
        write_matrix_csv(out, sst(v, inst_freq_info(v)));
      }
    }
  }
  write_text_file(config.out, out.str());
}

void cmd_reconstruct(const RunConfig& config, std::ostream& err) {
  check_input(config.sst, "--sst");
  check_output(config.out, "--out");
  require(config.band >= -1, "--band must be a half-width >= 0, or -1 for every bin");
  const bool full = config.band == -1;
  require(full || !config.model.empty(), "--model is required unless --band -1");
  const auto s = load_matrix(config.sst, TfKind::sst);
  require(s.kind() == TfKind::sst, "--sst must hold a complex matrix, not an itvps power file");
  const auto w = window_for(s.size(), config.support);

  ComplexSignal recovered = ComplexSignal::zeros(s.size());
  ComplexSignal reference = ComplexSignal::zeros(s.size());
  bool have_reference = false;
  ComponentModel model;
  if (!config.model.empty()) {
    check_input(config.model, "--model");
    model = load_model(config.model);
    if (model.n != s.size()) {
      throw DataError("model N = " + std::to_string(model.n) + " but matrix N = " + std::to_string(s.size()));
    }
  }
  if (full) {
    recovered = reconstruct_component(s, RidgeBand::full(s.size()), w);
    if (!config.model.empty()) {
      reference = model.synthesize();
      have_reference = true;
    }
  } else {
    require(config.component < model.count(),
            "--component " + std::to_string(config.component) + " is out of range; valid indices are 0.." +
                std::to_string(model.count() == 0 ? 0 : model.count() - 1));
    const auto truth = truth_ridges(model);
    const RidgeBand band{truth.curves[config.component], static_cast<std::size_t>(config.band)};
    if (model.real_valued) {
      recovered = ComplexSignal::from_real(reconstruct_real_component(s, band, w));
    } else {
      recovered = reconstruct_component(s, band, w);
    }
    reference = model.component_signal(config.component);
    have_reference = true;
  }
  std::ostringstream csv;
  write_signal_csv(csv, recovered);
  write_text_file(config.out, csv.str());
  if (have_reference) {
    const auto [lo, hi] = interior(s.size());
    err << "rel_l2_error=" << format_double(relative_l2_error(recovered.values(), reference.values(), lo, hi))
        << '\n';
  }
}

void cmd_metrics(const RunConfig& config, std::ostream&) {
  check_input(config.stft, "--stft");
  check_input(config.sst, "--sst");
  check_input(config.model, "--model");
  check_output(config.out, "--out");
  require(config.band >= 0, "--band must be non-negative for metrics");
  const auto v = load_matrix(config.stft, TfKind::modified_stft);
  const auto s = load_matrix(config.sst, TfKind::sst);
  const auto model = load_model(config.model);
  if (v.size() != s.size() || model.n != v.size()) {
    throw DataError("shape mismatch: stft N = " + std::to_string(v.size()) + ", sst N = " + std::to_string(s.size()) +
                    ", model N = " + std::to_string(model.n));
  }
  const auto w = window_for(v.size(), config.support);
  const auto truth = truth_ridges(model);
  const auto band = static_cast<std::size_t>(config.band);

  nlohmann::json j;
  j["concentration_stft"] = concentration(v, truth, band);
  j["concentration_sst"] = concentration(s, truth, band);
  const auto est = extract_ridges(s, model.count(), static_cast<std::size_t>(model.d / 2), ridge_range(model));
  auto means = nlohmann::json::array();
  auto maxes = nlohmann::json::array();
  for (const auto& e : ridge_error(est, truth)) {
    means.push_back(e.mean);
    maxes.push_back(e.max);
  }
  j["ridge_mean_err"] = means;
  j["ridge_max_err"] = maxes;
  if (v.kind() == TfKind::modified_stft) {
    BoundOptions opts;
    opts.eps = model.smoothness_eps();
    opts.real_signal = model.real_valued;
    const auto check = check_frequency_bound(model, w, v, inst_freq_info(v), opts);
    j["bound_violations"] = check.violations;
    j["bound_checked"] = check.checked;
  }
  write_text_file(config.out, j.dump(2) + "\n");
}

void cmd_plot(const RunConfig& config, std::ostream&) {
  check_input(config.in, "--in");
  check_output(config.out, "--out");
  const auto t = load_matrix(config.in, TfKind::sst);
  std::ostringstream out;
  write_pgm(out, t, config.log_scale);
  write_text_file(config.out, out.str());
}

int run(int argc, char** argv, std::ostream& err) {
  CLI::App app{"Finite STFT synchrosqueezing on cyclic signals"};
  app.require_subcommand(1);
  RunConfig config;

  auto* gen = app.add_subcommand("gen", "Generate a test signal and its component model");
  gen->add_option("--signal", config.signal, "chirp | two | interlace")->required();
  gen->add_option("--n", config.n, "Signal length N")->capture_default_str();
  gen->add_option("--noise", config.noise, "Sup-norm of additive uniform noise")->capture_default_str();
  gen->add_option("--seed", config.seed, "Noise seed")->capture_default_str();
  gen->add_option("--out", config.out, "Signal CSV path")->required();
  gen->add_option("--model", config.model, "Model JSON path (default: --out with .json extension)");

  auto* transform = app.add_subcommand("transform", "Compute a time-frequency matrix");
  transform->add_option("--kind", config.kind, "stft | modified-stft | sst | itvps")->capture_default_str();
  transform->add_option("--in", config.in, "Signal CSV (not used for itvps)");
  transform->add_option("--model", config.model, "Model JSON (itvps only)");
  transform->add_option("--support", config.support, "Window frequency support W")->capture_default_str();
  transform->add_option("--out", config.out, "Matrix CSV path")->required();

  auto* recon = app.add_subcommand("reconstruct", "Recover one component from a synchrosqueezed matrix");
  recon->add_option("--sst", config.sst, "Synchrosqueezed matrix CSV")->required();
  recon->add_option("--model", config.model, "Model JSON giving the ridge of each component");
  recon->add_option("--component", config.component, "Component index")->capture_default_str();
  recon->add_option("--band", config.band, "Band half-width in bins, -1 for all bins")->capture_default_str();
  recon->add_option("--support", config.support, "Window frequency support W")->capture_default_str();
  recon->add_option("--out", config.out, "Component CSV path")->required();

  auto* metrics = app.add_subcommand("metrics", "Compare STFT and SST against the ideal spectrum");
  metrics->add_option("--stft", config.stft, "Modified STFT matrix CSV")->required();
  metrics->add_option("--sst", config.sst, "Synchrosqueezed matrix CSV")->required();
  metrics->add_option("--model", config.model, "Model JSON")->required();
  metrics->add_option("--band", config.band, "Concentration band half-width")->capture_default_str();
  metrics->add_option("--support", config.support, "Window frequency support W")->capture_default_str();
  metrics->add_option("--out", config.out, "Metrics JSON path")->required();

  auto* plot = app.add_subcommand("plot", "Render a matrix CSV as a PGM heatmap");
  plot->add_option("--in", config.in, "Matrix CSV")->required();
  plot->add_option("--out", config.out, "PGM path")->required();
  plot->add_flag("--log", config.log_scale, "Use log10(1 + power)");

  // metrics defaults to a narrower band than reconstruct
  bool band_given = false;
  try {
    app.parse(argc, argv);
    band_given = metrics->count("--band") > 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen) {
      cmd_gen(config, err);
    } else if (*transform) {
      cmd_transform(config, err);
    } else if (*recon) {
      cmd_reconstruct(config, err);
    } else if (*metrics) {
      if (!band_given) config.band = 2;
      cmd_metrics(config, err);
    } else if (*plot) {
      cmd_plot(config, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace fsst::cli
