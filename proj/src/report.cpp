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

#include "hometown/report.hpp"

#include <cmath>
#include <ostream>
#include <variant>

#include <fmt/format.h>

#include "hometown/error.hpp"

namespace hometown {

double round_to(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale + 0.0;
}

namespace {

double km(double value) { return round_to(value, 3); }

Json cluster_summary(const ClusterStats& c, std::size_t id) {
  Json j;
  j["id"] = id;
  j["size"] = c.size;
  j["centroid"] = to_json(c.centroid);
  j["diameter_km"] = km(c.diameter_km);
  return j;
}

Json failure(const std::string& user_id, const Error& e) {
  Json j;
  j["user_id"] = user_id;
  j["reason"] = fmt::format("{}: {}", to_string(e.kind()), e.what());
  return j;
}

Json envelope(std::string_view command, Json config) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  j["config"] = std::move(config);
  return j;
}

}  // namespace

Json to_json(const GeoPoint& p) {
  Json j;
  j["lat"] = round_to(p.lat_deg(), 6);
  j["lon"] = round_to(p.lon_deg(), 6);
  return j;
}

Json to_json(const PredictorConfig& config) {
  Json j;
  if (const auto* fixed = std::get_if<FixedK>(&config.rule)) {
    j["mode"] = "fixed_k";
    j["k"] = fixed->k;
  } else {
    j["mode"] = "threshold";
    j["d_max_km"] = std::get<DistanceThreshold>(config.rule).d_max_km;
  }
  j["min_photos"] = config.min_photos;
  return j;
}

Json to_json(const PowerLawFit& fit) {
  Json j;
  j["method"] = to_string(fit.method);
  j["exponent"] = fit.exponent;
  j["b"] = -fit.exponent;
  j["convention"] = "density proportional to d^(-exponent), d >= x_min_km";
  j["x_min_km"] = fit.x_min_km;
  j["n_tail"] = fit.n_tail;
  if (std::isfinite(fit.log_likelihood)) {
    j["log_likelihood"] = fit.log_likelihood;
  } else {
    j["log_likelihood"] = nullptr;
  }
  return j;
}

Json to_json(const HistogramSeries& h) {
  Json j;
  j["scale"] = to_string(h.scale);
  j["bin_edges_km"] = h.bin_edges;
  j["counts"] = h.counts;
  j["densities"] = h.densities;
  return j;
}

Json predict_report(std::span<const UserDataset> users,
                    const PredictorConfig& config) {
  config.validate();
  Json report = envelope("predict", to_json(config));
  Json predictions = Json::array();
  Json failures = Json::array();
  for (const UserDataset& user : users) {
    try {
      const PredictionResult r =
          predict_hometown(user.photos(), config, user.reported_home());
      Json p;
      p["user_id"] = user.owner_id();
      p["n_photos"] = user.photos().size();
      p["predicted_home"] = to_json(r.predicted_home);
      if (user.reported_home()) {
        p["reported_home"] = to_json(*user.reported_home());
        p["error_km"] = km(*r.error_km);
      }
      p["n_clusters"] = r.cluster_set.clusters.size();
      p["chosen_cluster"] = cluster_summary(r.chosen_cluster(), r.chosen_cluster_id);
      predictions.push_back(std::move(p));
    } catch (const Error& e) {
      failures.push_back(failure(user.owner_id(), e));
    }
  }
  report["predictions"] = std::move(predictions);
  report["failures"] = std::move(failures);
  return report;
}

Json eval_report(const EvalReport& report, const PredictorConfig& config,
                 std::span<const double> thresholds_km,
                 std::size_t cdf_resolution) {
  Json cfg = to_json(config);
  cfg["thresholds_km"] = std::vector<double>(thresholds_km.begin(), thresholds_km.end());
  cfg["cdf_resolution"] = cdf_resolution;
  Json j = envelope("eval", std::move(cfg));

  Json summary;
  summary["n_users"] = report.per_user.size() + report.n_failed();
  summary["n_predicted"] = report.per_user.size();
  summary["n_failed"] = report.n_failed();
  summary["median_error_km"] =
      report.median_error_km ? Json(km(*report.median_error_km)) : Json(nullptr);
  summary["mean_error_km"] =
      report.mean_error_km ? Json(km(*report.mean_error_km)) : Json(nullptr);
  j["summary"] = std::move(summary);

  Json within = Json::array();
  for (const ThresholdFraction& t : report.fraction_within) {
    within.push_back({{"threshold_km", t.threshold_km}, {"fraction", t.fraction}});
  }
  j["fraction_within"] = std::move(within);

  Json cdf = Json::array();
  for (const CdfPoint& p : report.cdf) {
    cdf.push_back({{"km", km(p.km)}, {"fraction", p.fraction}});
  }
  j["cdf"] = std::move(cdf);

  Json rows = Json::array();
  for (const UserError& row : report.per_user) {
    Json r;
    r["user_id"] = row.user_id;
    r["error_km"] = km(row.error_km);
    r["n_photos"] = row.n_photos;
    r["chosen_cluster_size"] = row.chosen_cluster_size;
    r["predicted_home"] = to_json(row.predicted_home);
    rows.push_back(std::move(r));
  }
  j["per_user"] = std::move(rows);

  Json failures = Json::array();
  for (const UserFailure& f : report.failures) {
    failures.push_back({{"user_id", f.user_id}, {"reason", f.reason}});
  }
  j["failures"] = std::move(failures);
  return j;
}

Json cluster_report(std::span<const UserDataset> users, const ClusteringRule& rule) {
  PredictorConfig echo{rule, 1};
  echo.validate();
  Json cfg = to_json(echo);
  cfg.erase("min_photos");
  Json j = envelope("cluster", std::move(cfg));
  Json out_users = Json::array();
  Json failures = Json::array();
  for (const UserDataset& user : users) {
    try {
      const std::vector<GeoPoint> points = user.locations();
      if (const auto* fixed = std::get_if<FixedK>(&rule); fixed && fixed->k > points.size()) {
        throw Error(ErrorKind::kInvalidK,
                    fmt::format("k = {} exceeds {} photos", fixed->k, points.size()));
      }
      const ClusterSet set = cluster_points(points, rule);
      const auto& photos = user.photos();
      Json u;
      u["user_id"] = user.owner_id();
      u["n_photos"] = photos.size();
      u["n_clusters"] = set.clusters.size();
      Json clusters = Json::array();
      for (std::size_t id = 0; id < set.clusters.size(); ++id) {
        Json c = cluster_summary(set.clusters[id], id);
        Json ids = Json::array();
        for (std::size_t idx : set.clusters[id].member_indices) ids.push_back(photos[idx].photo_id);
        c["photo_ids"] = std::move(ids);
        clusters.push_back(std::move(c));
      }
      u["clusters"] = std::move(clusters);
      Json cut = Json::array();
      for (const Edge& e : set.cut_edges) {
        cut.push_back({{"from", photos[e.i].photo_id},
                       {"to", photos[e.j].photo_id},
                       {"weight_km", km(e.weight_km)}});
      }
      u["cut_edges"] = std::move(cut);
      out_users.push_back(std::move(u));
    } catch (const Error& e) {
      failures.push_back(failure(user.owner_id(), e));
    }
  }
  j["users"] = std::move(out_users);
  j["failures"] = std::move(failures);
  return j;
}

Json fit_report(std::span<const UserDataset> users, const FitSettings& settings) {
  Json cfg;
  cfg["x_min_km"] = settings.x_min_km;
  cfg["bins"] = settings.bins;
  cfg["scale"] = to_string(settings.scale);
  cfg["method"] = to_string(settings.method);
  Json j = envelope("fit", std::move(cfg));

  std::vector<double> samples;
  Json without_home = Json::array();
  std::size_t n_users_used = 0;
  for (const UserDataset& user : users) {
    if (!user.reported_home()) {
      without_home.push_back(user.owner_id());
      continue;
    }
    ++n_users_used;
    const std::vector<double> d = distances_from_home(user.photos(), *user.reported_home());
    samples.insert(samples.end(), d.begin(), d.end());
  }
  if (n_users_used == 0) throw Error(ErrorKind::kNoGroundTruth, "no user has a reported home");

  std::vector<double> histogram_samples;
  std::size_t n_zero = 0;
  for (double d : samples) {
    if (d <= 0.0) {
      ++n_zero;
      if (settings.scale == BinScale::kLog) continue;
    }
    histogram_samples.push_back(d);
  }

  j["n_users"] = n_users_used;
  j["users_without_home"] = std::move(without_home);
  j["n_samples"] = samples.size();
  j["n_zero_distance"] = n_zero;
  j["fit"] = to_json(fit_power_law(samples, settings.x_min_km, settings.method, settings.bins));
  j["histogram"] = to_json(histogram(histogram_samples, settings.bins, settings.scale));
  return j;
}

std::string dump(const Json& report) { return report.dump(2) + "\n"; }

void write_per_user_csv(std::ostream& out, const EvalReport& report) {
  out << "user_id,error_km,n_photos,chosen_cluster_size,pred_lat,pred_lon\n";
  for (const UserError& row : report.per_user) {
    out << row.user_id << ',' << fmt::format("{:.3f}", km(row.error_km)) << ','
        << row.n_photos << ',' << row.chosen_cluster_size << ','
        << fmt::format("{:.6f}", round_to(row.predicted_home.lat_deg(), 6)) << ','
        << fmt::format("{:.6f}", round_to(row.predicted_home.lon_deg(), 6)) << '\n';
  }
}

}  // namespace hometown
