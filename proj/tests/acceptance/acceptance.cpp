// Copyright 2026 The leafc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "leafc/leafc.hpp"
#include "support/dataset_tree.hpp"
#include "support/metric_oracle.hpp"
#include "support/probe_images.hpp"
#include "support/report_csv.hpp"
#include "support/synthetic_logs.hpp"
#include "support/temp_dir.hpp"

namespace {

using namespace leafc;
using Clock = std::chrono::steady_clock;

/// Collects the first few mismatches of a criterion.
struct Findings {
  std::vector<std::string> items;
  std::size_t total = 0;
  void add(const std::string& s) {
    if (items.size() < 5) items.push_back(s);
    ++total;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) add(what);
  }
  void near(double actual, double expected, double tol, const std::string& what) {
    if (!(std::abs(actual - expected) <= tol)) {
      std::ostringstream s;
      s.precision(17);
      s << what << ": got " << actual << ", expected " << expected;
      add(s.str());
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void criterion(const std::string& title, const std::function<void(Findings&, std::string&)>& body) {
  Findings f;
  std::string note;
  const auto t0 = Clock::now();
  try {
    body(f, note);
  } catch (const std::exception& e) {
    f.add(std::string("unexpected exception: ") + e.what());
  }
  const double dt = seconds_since(t0);
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", dt);
  std::cout << (f.total == 0 ? "[PASS] " : "[FAIL] ") << title << " (" << timing;
  if (!note.empty()) std::cout << "; " << note;
  std::cout << ")\n";
  for (const auto& item : f.items) std::cout << "       " << item << '\n';
  if (f.total > f.items.size()) std::cout << "       ... and " << f.total - f.items.size() << " more\n";
  if (f.total) ++failures;
}

const FrostBank& frost_bank() {
  static const FrostBank bank = FrostBank::load(std::string(LEAFC_ASSET_DIR) + "/frost");
  return bank;
}

double max_abs_diff(const ImageBuffer& a, const ImageBuffer& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(double(a.data()[i]) - b.data()[i]));
  return m;
}

double rms_diff(const ImageBuffer& a, const ImageBuffer& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    const double d = double(a.data()[i]) - b.data()[i];
    s += d * d;
  }
  return std::sqrt(s / static_cast<double>(a.data().size()));
}

std::vector<testing::SyntheticSpec> oracle_instances() {
  Rng rng(20260101);
  std::vector<testing::SyntheticSpec> specs;
  for (int i = 0; i < 200; ++i) {
    testing::SyntheticSpec s;
    s.models = static_cast<std::size_t>(rng.uniform_int(1, 5));
    s.corruptions = kCorruptionCount;
    s.images = static_cast<std::size_t>(rng.uniform_int(20, 200));
    s.classes = static_cast<std::size_t>(rng.uniform_int(2, 8));
    specs.push_back(s);
  }
  return specs;
}

void metric_oracle(Findings& f, std::string& note) {
  const auto specs = oracle_instances();
  double impl_seconds = 0;
  std::size_t degenerate = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto log = testing::synthetic_log(specs[i], 1000 + i);
    const auto tag = "instance " + std::to_string(i);
    const auto t0 = Clock::now();
    std::optional<RobustnessSummary> s;
    try {
      s = summarize(build_surface(log), "ref");
    } catch (const DegenerateReference&) {
    }
    impl_seconds += seconds_since(t0);

    std::vector<std::string> models{"ref"};
    for (std::size_t m = 1; m < specs[i].models; ++m) models.push_back("model" + std::to_string(m));
    std::vector<std::string> corruptions(kCorruptionNames.begin(), kCorruptionNames.end());
    const auto oracle = testing::oracle_summary(log, models, corruptions, "ref");
    if (!s) {
      bool zero_den = false;
      const auto& ref = oracle.at("ref");
      for (const auto& [c, e] : ref.error) {
        double den = 0;
        for (double v : e) den += v - ref.clean_error;
        zero_den |= std::abs(den) < 1e-12;
      }
      f.expect(zero_den, tag + ": DegenerateReference without a zero denominator");
      ++degenerate;
      continue;
    }
    f.expect(s->models.size() == models.size(), tag + ": model count");
    for (const auto& m : s->models) {
      const auto& o = oracle.at(m.name);
      const auto mt = tag + " " + m.name;
      f.near(m.clean_error, o.clean_error, 1e-9, mt + " clean error");
      f.near(m.mce, o.mce, 1e-9, mt + " mCE");
      f.near(m.relative_mce, o.relative_mce, 1e-9, mt + " relative mCE");
      f.expect(m.corruptions.size() == kCorruptionCount, mt + ": corruption count");
      for (const auto& c : m.corruptions) {
        const auto ct = mt + " " + c.corruption;
        f.near(c.ce, o.ce.at(c.corruption), 1e-9, ct + " CE");
        f.near(c.relative_ce, o.relative_ce.at(c.corruption), 1e-9, ct + " relative CE");
        for (int sev = 0; sev < 5; ++sev) {
          f.near(c.errors[sev], o.error.at(c.corruption)[sev], 1e-9, ct + " error s" + std::to_string(sev + 1));
          f.near(c.macro_f1[sev], o.macro_f1.at(c.corruption)[sev], 1e-9, ct + " macro-F1 s" + std::to_string(sev + 1));
        }
      }
    }
  }
  f.expect(impl_seconds < 30.0, "metric computation took " + std::to_string(impl_seconds) + " s");
  char buf[96];
  std::snprintf(buf, sizeof buf, "200 instances, metrics %.2fs, %zu degenerate", impl_seconds, degenerate);
  note = buf;
}

void self_normalization(Findings& f, std::string& note) {
  const auto specs = oracle_instances();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto log = testing::synthetic_log(specs[i], 1000 + i);
    RobustnessSummary s;
    try {
      s = summarize(build_surface(log), "ref");
    } catch (const DegenerateReference&) {
      continue;
    }
    const auto& ref = s.model("ref");
    for (const auto& c : ref.corruptions) {
      f.near(c.ce, 100.0, 1e-9, "instance " + std::to_string(i) + " " + c.corruption + " CE");
      f.near(c.relative_ce, 100.0, 1e-9, "instance " + std::to_string(i) + " " + c.corruption + " relative CE");
    }
    f.near(ref.mce, 100.0, 1e-9, "instance " + std::to_string(i) + " mCE");
    f.near(ref.relative_mce, 100.0, 1e-9, "instance " + std::to_string(i) + " relative mCE");
    ++checked;
  }
  note = std::to_string(checked) + " instances";
}

void hand_case(Findings& f, std::string& note) {
  const SeverityErrors model{0.2, 0.3, 0.4, 0.5, 0.6};
  const SeverityErrors ref{0.4, 0.5, 0.6, 0.7, 0.8};
  const double ce = corruption_error(model, ref, "hand");
  f.near(ce, 200.0 / 3.0, 1e-12, "CE");
  f.near(round_to(ce, 3), 66.667, 1e-12, "CE to three decimals");
  char buf[64];
  std::snprintf(buf, sizeof buf, "CE = %.6f", ce);
  note = buf;
}

void dataset_construction(Findings& f, std::string& note) {
  testing::TempDir dir("leafc-accept");
  testing::write_toy_dataset(dir / "clean", 2, 3, 64);
  const auto layout = scan_dataset(dir / "clean");
  BuildOptions o;
  o.global_seed = 42;
  o.table = &default_severity_table();
  o.frost = &frost_bank();

  o.workers = 1;
  const auto t0 = Clock::now();
  const auto m = build_corrupted_dataset(layout, dir / "a", o);
  const double single = seconds_since(t0);
  build_corrupted_dataset(layout, dir / "b", o);
  o.workers = 4;
  build_corrupted_dataset(layout, dir / "c", o);

  f.expect(m.complete && m.failures.empty(), "build incomplete or with failures");
  f.expect(m.subset_count() == 95, "subset count " + std::to_string(m.subset_count()));
  for (const auto& s : m.subsets)
    f.expect(s.file_count == 6, std::string(name(s.kind)) + "/" + std::to_string(s.severity) + " has " +
                                    std::to_string(s.file_count) + " files");
  const auto a = testing::read_tree(dir / "a");
  f.expect(a.size() == 95 * 6, "tree holds " + std::to_string(a.size()) + " files");
  f.expect(a == testing::read_tree(dir / "b"), "same-seed re-run differs");
  f.expect(testing::stable_manifest(dir / "a") == testing::stable_manifest(dir / "b"), "re-run manifest differs");
  f.expect(a == testing::read_tree(dir / "c"), "4-worker build differs from 1-worker build");
  f.expect(testing::stable_manifest(dir / "a") == testing::stable_manifest(dir / "c"), "4-worker manifest differs");
  f.expect(verify_corrupted_tree(dir / "a").empty(), "tree does not match its manifest");
  f.expect(single < 60.0, "single-threaded build took " + std::to_string(single) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "single-threaded build %.2fs", single);
  note = buf;
}

void invariant_suite(Findings& f, std::string& note) {
  const auto probes = testing::probe_set(20);
  const auto& table = default_severity_table();
  double worst_drop = 0;
  for (auto k : kAllCorruptions) {
    double prev = -1;
    for (int s = 1; s <= 5; ++s) {
      const auto spec = table.resolve(k, s);
      const auto tag = std::string(name(k)) + " s" + std::to_string(s);
      double rms = 0;
      for (std::size_t i = 0; i < probes.size(); ++i) {
        const Rng rng(derive_seed(7, "probe" + std::to_string(i), name(k), s));
        const auto out = apply_corruption(probes[i], spec, rng, &frost_bank());
        f.expect(out.width() == probes[i].width() && out.height() == probes[i].height(), tag + ": size changed");
        bool finite = true, in_range = true;
        for (float v : out.data()) {
          finite &= std::isfinite(v);
          in_range &= v >= 0.0f && v <= 1.0f;
        }
        f.expect(finite, tag + ": NaN or inf in output");
        f.expect(in_range, tag + ": value outside [0,1]");
        f.expect(out == apply_corruption(probes[i], spec, rng, &frost_bank()), tag + ": not deterministic");
        rms += rms_diff(out, probes[i]) / static_cast<double>(probes.size());
      }
      if (prev >= 0) {
        worst_drop = std::max(worst_drop, prev - rms);
        if (rms < prev - 1e-4) {
          char buf[128];
          std::snprintf(buf, sizeof buf, "%s: mean RMS %.6f below severity %d (%.6f)", tag.c_str(), rms, s - 1, prev);
          f.add(buf);
        }
      }
      prev = rms;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "largest RMS drop %.2e", worst_drop);
  note = buf;
}

void identity_points(Findings& f, std::string&) {
  const ImageBuffer flat(40, 30, 0.37f);
  const auto& table = default_severity_table();
  for (auto k : kAllCorruptions) {
    if (group_of(k) != CorruptionGroup::blur) continue;
    for (int s = 1; s <= 5; ++s)
      f.expect(max_abs_diff(apply_corruption(flat, table.resolve(k, s), Rng(3)), flat) <= 1e-6,
               std::string(name(k)) + " s" + std::to_string(s) + " changes a constant image");
  }
  for (int s = 1; s <= 5; ++s)
    f.expect(max_abs_diff(apply_corruption(flat, table.resolve(CorruptionKind::contrast, s), Rng(3)), flat) <= 1e-6,
             "contrast s" + std::to_string(s) + " changes a constant image");
  const auto probe = testing::make_probe_image(3);
  auto same = [&](CorruptionParams p, const std::string& what) {
    f.expect(max_abs_diff(apply_corruption(probe, make_spec(std::move(p)), Rng(5)), probe) <= 1e-6, what);
  };
  same(GaussianNoiseParams{0.0}, "zero-sigma gaussian noise");
  same(SpeckleNoiseParams{0.0}, "zero-sigma speckle noise");
  same(ImpulseNoiseParams{0.0}, "zero-amount impulse noise");
  same(PixelateParams{1.0}, "unit pixelate");
  same(ElasticParams{0.0, 0.04, 0.0}, "zero-displacement elastic");
}

void kernel_oracle(Findings& f, std::string&) {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    ImageBuffer img(16, 16);
    for (auto& v : img.data()) v = static_cast<float>(rng.uniform());
    const long n = 1 + 2 * rng.uniform_int(0, 4), r = n / 2;
    std::vector<double> w(static_cast<std::size_t>(n * n));
    double sum = 0;
    for (auto& v : w) sum += v = rng.uniform();
    for (auto& v : w) v /= sum;
    const Kernel2D k(static_cast<std::size_t>(n), w);
    const auto out = convolve2d(img, k);
    double worst = 0;
    for (long y = 0; y < 16; ++y)
      for (long x = 0; x < 16; ++x)
        for (std::size_t c = 0; c < 3; ++c) {
          double acc = 0;
          for (long j = 0; j < n; ++j)
            for (long i = 0; i < n; ++i) {
              const long sx = std::clamp(x + i - r, 0L, 15L), sy = std::clamp(y + j - r, 0L, 15L);
              acc += w[static_cast<std::size_t>(j * n + i)] *
                     img.at(static_cast<std::size_t>(sx), static_cast<std::size_t>(sy), c);
            }
          acc = std::clamp(acc, 0.0, 1.0);
          worst = std::max(worst, std::abs(acc - out.at(static_cast<std::size_t>(x), static_cast<std::size_t>(y), c)));
        }
    f.expect(worst <= 1e-6, "trial " + std::to_string(trial) + " deviates by " + std::to_string(worst));
  }
}

std::string slurp(const fs::path& p) {
  const auto b = read_file(p);
  return std::string(b.begin(), b.end());
}

void report_round_trip(Findings& f, std::string& note) {
  const auto summary = summarize(build_surface(testing::synthetic_log({4, kCorruptionCount, 60, 8}, 77)), "ref");
  testing::TempDir a("leafc-accept"), b("leafc-accept");
  std::size_t cells = 0;
  for (const auto& fmt : {NumberFormat{}, NumberFormat::comma()}) {
    const auto dir_a = a / std::string(1, fmt.delimiter()), dir_b = b / std::string(1, fmt.delimiter());
    fs::create_directories(dir_a);
    fs::create_directories(dir_b);
    const auto files = write_report(build_report(summary), dir_a, fmt);
    write_report(build_report(summary), dir_b, fmt);
    for (const auto& file : files)
      f.expect(read_file(dir_a / file) == read_file(dir_b / file), file + " bytes differ between runs");

    for (const bool relative : {false, true}) {
      const auto file = relative ? "relative_table.csv" : "mce_table.csv";
      const auto rows = testing::parse_rows(slurp(dir_a / file), fmt.delimiter());
      f.expect(rows.size() == 3 + kCorruptionCount, std::string(file) + ": row count");
      if (rows.size() != 3 + kCorruptionCount) continue;
      for (std::size_t m = 0; m < summary.models.size(); ++m) {
        const auto& model = summary.models[m];
        f.expect(rows[0][2 + m] == model.name, std::string(file) + ": column order");
        auto cell = [&](std::size_t row) { return testing::parse_cell(rows[row][2 + m], fmt.decimal); };
        f.expect(cell(1).value == round_to(100 * model.clean_error, 1), std::string(file) + " " + model.name + " Error");
        f.expect(cell(2).value == round_to(relative ? model.relative_mce : model.mce, 1),
                 std::string(file) + " " + model.name + " mean row");
        cells += 2;
        for (std::size_t c = 3; c < rows.size(); ++c) {
          const auto& score = model.at(rows[c][1]);
          const auto parsed = cell(c);
          f.expect(parsed.value == round_to(relative ? score.relative_ce : score.ce, 0),
                   std::string(file) + " " + model.name + " " + rows[c][1]);
          f.expect(parsed.flagged == (relative && score.relative_ce_flagged),
                   std::string(file) + " " + model.name + " " + rows[c][1] + " flag");
          ++cells;
        }
      }
    }
    for (const auto& model : summary.models) {
      const auto rows = testing::parse_rows(slurp(dir_a / ("ranking_" + model.name + ".csv")), fmt.delimiter());
      const auto ranking = rank_corruptions(summary, model.name);
      f.expect(rows.size() == ranking.size() + 1, "ranking_" + model.name + ": row count");
      for (std::size_t i = 0; i < ranking.size() && i + 1 < rows.size(); ++i) {
        f.expect(rows[i + 1][1] == ranking[i].corruption, "ranking_" + model.name + ": order");
        f.expect(testing::parse_cell(rows[i + 1][2], fmt.decimal).value == round_to(ranking[i].mean_macro_f1, 4),
                 "ranking_" + model.name + " " + ranking[i].corruption);
        ++cells;
      }
    }
  }
  note = std::to_string(cells) + " cells checked";
}

}  // namespace

int main() {
  criterion("metric oracle equivalence", metric_oracle);
  criterion("self-normalization of the reference model", self_normalization);
  criterion("corruption error hand case", hand_case);
  criterion("dataset construction on the toy dataset", dataset_construction);
  criterion("corruption invariant suite", invariant_suite);
  criterion("identity fixed points", identity_points);
  criterion("kernel oracle", kernel_oracle);
  criterion("report round-trip and byte determinism", report_round_trip);
  std::cout << (failures == 0 ? "all acceptance criteria passed\n" : std::to_string(failures) + " criteria failed\n");
  return failures == 0 ? 0 : 1;
}
