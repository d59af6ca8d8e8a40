// Copyright 2026 The alphaneg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "alphaneg/io.hpp"
#include "alphaneg/states.hpp"
#include "test_util.hpp"

namespace alphaneg {
namespace {

const std::string kData = ALPHANEG_DATA_DIR;

TEST(Json, MatrixRoundTrip) {
  Rng rng(1);
  const ComplexMatrix m = ginibre(3, 2, rng);
  EXPECT_MATRIX_NEAR(matrix_from_json(matrix_to_json(m), 3, 2), m, 0.0);
  EXPECT_THROW(matrix_from_json(matrix_to_json(m), 2, 2), Error);
  EXPECT_THROW(matrix_from_json(Json::parse("[[[1, 0, 0]]]"), 1, 1), Error);
  EXPECT_THROW(matrix_from_json(Json::parse("[[[\"a\", 0]]]"), 1, 1), Error);
}

TEST(Json, Dimensions) {
  EXPECT_EQ(dims_from_json(Json::parse("[3]"), "d"), BipartitionDims(3, 1));
  EXPECT_EQ(dims_from_json(Json::parse("[2, 3]"), "d"), BipartitionDims(2, 3));
  for (const char* bad : {"[]", "[1, 2, 3]", "[0]", "[2.5]", "[65]", "3"}) {
    EXPECT_THROW(dims_from_json(Json::parse(bad), "d"), Error) << bad;
  }
}

TEST(Json, StateRoundTripThroughFile) {
  const BipartiteState rho = random_state({2, 3}, 2, 7);
  const std::string path = ::testing::TempDir() + "alphaneg_state.json";
  save_json(path, state_to_json(rho));
  const BipartiteState back = load_state(path);
  EXPECT_EQ(back.dims(), rho.dims());
  EXPECT_MATRIX_NEAR(back.matrix(), rho.matrix(), 1e-15);
}

TEST(Json, StateValidation) {
  EXPECT_THROW(state_from_json(Json::parse(R"({"dims": [2, 2]})")), Error);
  Json j = state_to_json(max_entangled(2));
  j["matrix"][0][0] = Json::array({2.0, 0.0});
  EXPECT_THROW(state_from_json(j), Error);
  // A Hermitian operator of trace != 1 passes with raw = true.
  EXPECT_NO_THROW(state_from_json(j, true));
  j["matrix"][0][1] = Json::array({0.0, 1.0});
  EXPECT_THROW(state_from_json(j, true), Error);
}

TEST(Json, SampleFiles) {
  EXPECT_MATRIX_NEAR(load_state(kData + "/phi2.json").matrix(), max_entangled(2).matrix(), 1e-12);
  EXPECT_TRUE(ppt_membership(load_state(kData + "/werner_ppt.json")));
  EXPECT_FALSE(ppt_membership(load_state(kData + "/npt_3x3.json")));
  EXPECT_THROW(load_state(kData + "/non_hermitian.json"), Error);
  EXPECT_THROW(load_state(kData + "/non_hermitian.json", true), Error);
  const SuperOperator id = load_channel(kData + "/identity_qubit.json");
  EXPECT_MATRIX_NEAR(id.matrix(), identity(4), 0.0);
  EXPECT_THROW(load_state(kData + "/does_not_exist.json"), Error);
}

TEST(Json, ChannelRoundTripAndValidation) {
  Rng rng(2);
  const SuperOperator ch = random_channel({2, 1}, {3, 1}, 2, rng).superop();
  const SuperOperator back = channel_from_json(channel_to_json(ch));
  EXPECT_MATRIX_NEAR(back.matrix(), ch.matrix(), 0.0);
  EXPECT_EQ(back.out_dims(), ch.out_dims());

  // The partial transpose is trace preserving but not completely positive.
  const Json pt = channel_to_json(partial_transpose_superop({2, 2}));
  EXPECT_THROW(channel_from_json(pt), Error);
  Json j = channel_to_json(ch);
  j["kind"] = "unknown";
  EXPECT_THROW(channel_from_json(j), Error);
  const Json half = Json{{"kind", "kraus"},
                         {"dims_in", {2}},
                         {"dims_out", {2}},
                         {"data", {matrix_to_json(identity(2) / 2.0)}}};
  EXPECT_THROW(channel_from_json(half), Error);
}

TEST(Json, MalformedFile) {
  const std::string path = ::testing::TempDir() + "alphaneg_bad.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  try {
    read_json_file(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
  }
}

}  // namespace
}  // namespace alphaneg
