// Copyright 2026 The crossbcast Authors
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


#include <gtest/gtest.h>

#include "crossbcast/properties.hpp"

namespace crossbcast {
namespace {

TEST(PropertySuite, AllHold) {
  PropertyOptions opt;
  opt.seed = 2;
  opt.vectors = 5000;
  opt.samples = 5000;
  opt.networks = 120;
  const auto results = run_property_suite(opt);
  ASSERT_GE(results.size(), 8u);
  for (const auto& r : results) {
    EXPECT_TRUE(r.ok()) << r.name << ": " << r.first_violation;
    EXPECT_GT(r.cases, 0u) << r.name;
  }
}

TEST(PropertySuite, Deterministic) {
  PropertyOptions opt;
  opt.networks = 20;
  opt.vectors = opt.samples = 200;
  const auto a = run_property_suite(opt);
  const auto b = run_property_suite(opt);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].cases, b[i].cases);
  }
}

}  // namespace
}  // namespace crossbcast
