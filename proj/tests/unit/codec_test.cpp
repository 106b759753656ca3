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

#include <gtest/gtest.h>

#include <cmath>

#include "leafc/image/codec.hpp"
#include "leafc/image/rng.hpp"
#include "support/probe_images.hpp"
#include "support/temp_dir.hpp"
#include "leafc/image/quantize.hpp"

namespace leafc {
namespace {

Raster8 random_raster(std::size_t w, std::size_t h, std::uint64_t seed) {
  Rng rng(seed);
  Raster8 r(w, h);
  for (auto& v : r.data()) v = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
  return r;
}

double psnr(const Raster8& a, const Raster8& b) {
  double se = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    const double d = double(a.data()[i]) - b.data()[i];
    se += d * d;
  }
  const double mse = se / static_cast<double>(a.data().size());
  return 10 * std::log10(255.0 * 255.0 / mse);
}

TEST(Codec, PngRoundTripIsLossless) {
  const auto r = random_raster(17, 9, 1);
  const auto bytes = encode_png(r);
  EXPECT_EQ(sniff_format(bytes), ImageFormat::png);
  EXPECT_EQ(decode_png(bytes), r);
  EXPECT_EQ(decode_image(bytes), r);
}

TEST(Codec, PngEncodingIsDeterministic) {
  const auto r = random_raster(32, 32, 2);
  EXPECT_EQ(encode_png(r), encode_png(r));
}

TEST(Codec, JpegQualityControlsFidelity) {
  const auto r = quantize(testing::make_probe_image(3, 96, 96));
  const auto hi = decode_jpeg(encode_jpeg(r, 95));
  const auto lo = decode_jpeg(encode_jpeg(r, 10));
  EXPECT_EQ(hi.width(), 96u);
  EXPECT_EQ(sniff_format(encode_jpeg(r, 50)), ImageFormat::jpeg);
  EXPECT_GT(psnr(r, hi), psnr(r, lo));
  EXPECT_GT(psnr(r, hi), 30.0);
  EXPECT_EQ(encode_jpeg(r, 40), encode_jpeg(r, 40));
}

TEST(Codec, JpegRejectsBadQuality) {
  const auto r = random_raster(8, 8, 3);
  EXPECT_THROW(encode_jpeg(r, 0), InvalidArgument);
  EXPECT_THROW(encode_jpeg(r, 101), InvalidArgument);
}

TEST(Codec, GarbageIsAnIoError) {
  const Bytes junk = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  EXPECT_EQ(sniff_format(junk), ImageFormat::unknown);
  EXPECT_THROW(decode_image(junk), IoError);
  Bytes truncated = encode_png(random_raster(8, 8, 4));
  truncated.resize(truncated.size() / 2);
  EXPECT_THROW(decode_png(truncated), IoError);
  const Bytes bad_jpeg = {0xff, 0xd8, 0xff, 0x00, 0x01};
  EXPECT_THROW(decode_jpeg(bad_jpeg), IoError);
}

TEST(Codec, FileHelpers) {
  testing::TempDir dir;
  const auto r = random_raster(5, 4, 5);
  write_file(dir / "a.png", encode_png(r));
  EXPECT_EQ(load_image(dir / "a.png"), r);
  EXPECT_THROW(load_image(dir / "missing.png"), IoError);
  EXPECT_THROW(write_file(dir / "no/such/dir/x.png", encode_png(r)), IoError);
}

}  // namespace
}  // namespace leafc
