// Copyright 2026 The Hometown Authors
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

#include "hometown/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hometown/error.hpp"
#include "hometown/evaluation.hpp"
#include "hometown/ingest.hpp"
#include "hometown/mobility_synth.hpp"
#include "hometown/report.hpp"

namespace hometown {

namespace {

struct InputFlags {
  std::string photos;
  std::string homes;
  std::string format = "auto";
  bool lenient = false;
};

struct RuleFlags {
  std::optional<std::size_t> k;
  std::optional<double> threshold_km;
  std::size_t min_photos = 10;

  PredictorConfig config() const {
    PredictorConfig c;
    if (threshold_km) {
      c.rule = DistanceThreshold{*threshold_km};
    } else {
      c.rule = FixedK{k.value_or(5)};
    }
    c.min_photos = min_photos;
    return c;
  }
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, fmt::format("cannot open '{}'", path));
  return in;
}

// Calls `write` with the file at `path`, or with `fallback` for "" and "-".
void write_output(const std::string& path, std::ostream& fallback,
                  const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::kIo, fmt::format("cannot write '{}'", path));
  write(file);
  if (!file) throw Error(ErrorKind::kIo, fmt::format("failed writing '{}'", path));
}

std::vector<UserDataset> load_users(const InputFlags& flags, std::ostream& err) {
  const ParseOptions options{.strict = !flags.lenient};
  bool json = flags.format == "json";
  if (flags.format == "auto") {
    std::string ext = std::filesystem::path(flags.photos).extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    json = ext == ".json";
  }
  std::ifstream in = open_input(flags.photos);
  ParsedPhotos parsed = json ? parse_flickr_json(in, options) : parse_photos_csv(in, options);
  for (const RowIssue& issue : parsed.rejected) {
    err << fmt::format("warning: {} {}: {}\n", json ? "entry" : "line", issue.location,
                       issue.reason);
  }
  HomeMap homes;
  if (!flags.homes.empty()) {
    std::ifstream homes_in = open_input(flags.homes);
    homes = parse_homes_csv(homes_in);
  }
  return group_by_owner(parsed.records, homes);
}

void add_input_flags(CLI::App* cmd, InputFlags& flags, bool homes_required) {
  cmd->add_option("--photos", flags.photos, "Photo file (CSV or Flickr JSON)")->required();
  auto* homes = cmd->add_option("--homes", flags.homes, "Homes CSV: owner_id,lat,lon");
  if (homes_required) homes->required();
  cmd->add_option("--format", flags.format, "Photo file format")
      ->check(CLI::IsMember({"auto", "csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--lenient", flags.lenient, "Skip malformed rows instead of failing");
}

void add_rule_flags(CLI::App* cmd, RuleFlags& flags, bool with_min_photos) {
  auto* k = cmd->add_option("--k", flags.k, "Number of clusters (default 5)");
  auto* t = cmd->add_option("--threshold-km", flags.threshold_km,
                            "Cut MST edges longer than this many km");
  k->excludes(t);
  if (with_min_photos) {
    cmd->add_option("--min-photos", flags.min_photos, "Minimum photos per user")
        ->capture_default_str();
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hometown inference from geotagged photos", "hometown"};
  app.require_subcommand(1);

  std::string out_path;

  InputFlags predict_in;
  RuleFlags predict_rule;
  auto* predict = app.add_subcommand("predict", "Predict each user's home location");
  add_input_flags(predict, predict_in, false);
  add_rule_flags(predict, predict_rule, true);
  predict->add_option("--out", out_path, "Report JSON path");

  InputFlags eval_in;
  RuleFlags eval_rule;
  std::vector<double> thresholds(kDefaultThresholdsKm.begin(), kDefaultThresholdsKm.end());
  std::size_t cdf_resolution = kDefaultCdfResolution;
  std::string per_user_path;
  auto* eval = app.add_subcommand("eval", "Evaluate predictions against reported homes");
  add_input_flags(eval, eval_in, true);
  add_rule_flags(eval, eval_rule, true);
  eval->add_option("--thresholds", thresholds, "Comma-separated error thresholds in km")
      ->delimiter(',');
  eval->add_option("--cdf-resolution", cdf_resolution, "Points in the error CDF")
      ->capture_default_str();
  eval->add_option("--out", out_path, "Report JSON path");
  eval->add_option("--per-user", per_user_path, "Per-user error CSV path");

  InputFlags fit_in;
  FitSettings fit_settings;
  bool fit_log = false;
  std::string fit_method = "mle";
  auto* fit = app.add_subcommand("fit", "Fit the photo-to-home distance power law");
  add_input_flags(fit, fit_in, true);
  fit->add_option("--x-min-km", fit_settings.x_min_km, "Lower cutoff")->capture_default_str();
  fit->add_option("--bins", fit_settings.bins, "Histogram bins")->capture_default_str();
  fit->add_flag("--log", fit_log, "Log-spaced histogram bins");
  fit->add_option("--method", fit_method, "mle or lsq")
      ->check(CLI::IsMember({"mle", "lsq"}))
      ->capture_default_str();
  fit->add_option("--out", out_path, "Report JSON path");

  SynthParams synth_params;
  std::size_t synth_users = 31;
  std::string homes_out;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic cohort");
  synth->add_option("--users", synth_users)->capture_default_str();
  synth->add_option("--photos-per-user", synth_params.n_photos)->capture_default_str();
  synth->add_option("--exponent", synth_params.exponent)->capture_default_str();
  synth->add_option("--home-fraction", synth_params.home_fraction)->capture_default_str();
  synth->add_option("--x-min-km", synth_params.x_min_km)->capture_default_str();
  synth->add_option("--r-cap-km", synth_params.r_cap_km)->capture_default_str();
  synth->add_option("--travel-clusters", synth_params.n_travel_clusters)->capture_default_str();
  synth->add_option("--travel-spread-km", synth_params.travel_spread_km)->capture_default_str();
  synth->add_option("--travel-min-km", synth_params.travel_min_km)->capture_default_str();
  synth->add_option("--travel-max-km", synth_params.travel_max_km)->capture_default_str();
  synth->add_option("--seed", synth_params.seed)->capture_default_str();
  synth->add_option("--out", out_path, "Photo CSV path");
  synth->add_option("--homes-out", homes_out, "Homes CSV path");

  InputFlags cluster_in;
  RuleFlags cluster_rule;
  auto* cluster = app.add_subcommand("cluster", "Export MST clusters per user");
  add_input_flags(cluster, cluster_in, false);
  add_rule_flags(cluster, cluster_rule, false);
  cluster->add_option("--out", out_path, "Report JSON path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (predict->parsed()) {
      const auto users = load_users(predict_in, err);
      const Json report = predict_report(users, predict_rule.config());
      write_output(out_path, out, [&](std::ostream& o) { o << dump(report); });
    } else if (eval->parsed()) {
      const auto users = load_users(eval_in, err);
      const PredictorConfig config = eval_rule.config();
      const EvalReport result = evaluate_cohort(users, config, thresholds, cdf_resolution);
      const Json report = eval_report(result, config, thresholds, cdf_resolution);
      write_output(out_path, out, [&](std::ostream& o) { o << dump(report); });
      if (!per_user_path.empty()) {
        write_output(per_user_path, out, [&](std::ostream& o) { write_per_user_csv(o, result); });
      }
    } else if (fit->parsed()) {
      const auto users = load_users(fit_in, err);
      fit_settings.scale = fit_log ? BinScale::kLog : BinScale::kLinear;
      fit_settings.method =
          fit_method == "lsq" ? FitMethod::kLogBinnedLeastSquares : FitMethod::kMaximumLikelihood;
      const Json report = fit_report(users, fit_settings);
      write_output(out_path, out, [&](std::ostream& o) { o << dump(report); });
    } else if (synth->parsed()) {
      const auto cohort = generate_cohort(synth_params, synth_users);
      std::vector<PhotoRecord> photos;
      HomeMap homes;
      for (const SyntheticUser& user : cohort) {
        photos.insert(photos.end(), user.photos.begin(), user.photos.end());
        homes.emplace(user.user_id, user.true_home);
      }
      write_output(out_path, out, [&](std::ostream& o) { write_photos_csv(o, photos); });
      if (!homes_out.empty()) {
        write_output(homes_out, out, [&](std::ostream& o) { write_homes_csv(o, homes); });
      }
    } else if (cluster->parsed()) {
      const auto users = load_users(cluster_in, err);
      const Json report = cluster_report(users, cluster_rule.config().rule);
      write_output(out_path, out, [&](std::ostream& o) { o << dump(report); });
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(args, out, err);
}

}  // namespace hometown
