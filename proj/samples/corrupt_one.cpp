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

// Applies one corruption to one image:
//   corrupt_one <in.png|jpg> <kind> <severity> <out.png> [seed]

#include <cstdlib>
#include <iostream>
#include <string>

#include "leafc/leafc.hpp"

int main(int argc, char** argv) {
  if (argc < 5) {
    std::cerr << "usage: corrupt_one <in> <kind> <severity> <out.png> [seed]\n";
    return 1;
  }
  try {
    const auto kind = leafc::kind_from_name(argv[2]);
    const int severity = std::stoi(argv[3]);
    const std::uint64_t seed = argc > 5 ? std::stoull(argv[5]) : 0;

    const auto clean = leafc::dequantize(leafc::load_image(argv[1]));
    const auto spec = leafc::default_severity_table().resolve(kind, severity);
    leafc::FrostBank frost;
    if (kind == leafc::CorruptionKind::frost) frost = leafc::FrostBank::load(std::string(LEAFC_SAMPLE_ASSETS) + "/frost");
    const auto out = leafc::apply_corruption(clean, spec, leafc::Rng(seed), &frost);
    leafc::write_file(argv[4], leafc::encode_png(leafc::quantize(out)));
    std::cout << leafc::name(kind) << " s" << severity << ": rms " << leafc::rms_difference(clean, out) << '\n';
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}
