// Copyright 2026 The Authors.
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

#include "fairloc/instance_io.h"

#include <gtest/gtest.h>

#include "fairloc/errors.h"
#include "fairloc/families.h"
#include "test_util.h"

namespace fairloc {
namespace {

TEST(ParseInstanceTest, Examples) {
  const GroupedProfile p = ParseInstance(
      R"({"schema_version":1,"groups":[[0,0.6666666667],[1,1]]})");
  EXPECT_EQ(p.group_count(), 2);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_DOUBLE_EQ(p.group_locations(1)[1], 0.6666666667);
  const GroupedProfile single = ParseInstance(R"({"schema_version":1,"groups":[[3]]})");
  EXPECT_EQ(single.size(), 1u);
  EXPECT_EQ(single.agent(0).location, 3);
}

TEST(ParseInstanceTest, RejectsOtherVersions) {
  EXPECT_THROW(ParseInstance(R"({"schema_version":2,"groups":[[0]]})"),
               ParseError);
  EXPECT_THROW(ParseInstance(R"({"groups":[[0]]})"), ParseError);
}

TEST(ParseInstanceTest, SyntaxErrorsCarryPosition) {
  try {
    ParseInstance("{\"schema_version\":1,\n  \"groups\": [[0,]]}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 1u);
  }
}

TEST(ParseInstanceTest, ShapeErrors) {
  EXPECT_THROW(ParseInstance("[1, 2]"), ParseError);
  EXPECT_THROW(ParseInstance(R"({"schema_version":1,"groups":[0]})"),
               ParseError);
  EXPECT_THROW(ParseInstance(R"({"schema_version":1,"groups":[["a"]]})"),
               ParseError);
  EXPECT_THROW(ParseInstance(
                   R"({"schema_version":1,"groups":[[0]],"expected":[{"mechanism":"XYZ","objective":"mtgc"}]})"),
               ParseError);
}

TEST(ParseInstanceTest, InvalidProfilesAreValidationErrors) {
  EXPECT_THROW(ParseInstance(R"({"schema_version":1,"groups":[[0],[]]})"),
               ValidationError);
  EXPECT_THROW(ParseInstance(R"({"schema_version":1,"groups":[]})"),
               ValidationError);
}

TEST(ParseInstanceFileTest, ReadsAnnotations) {
  const InstanceFile f = ParseInstanceFile(R"({
    "schema_version": 1, "name": "demo", "groups": [[0], [1]],
    "expected": [{"mechanism": "MDM", "objective": "alt-b-total",
                  "mechanism_value": "inf", "ratio": "inf",
                  "outcome": [[0, 1]], "note": "x"}]})");
  EXPECT_EQ(f.name, "demo");
  ASSERT_EQ(f.expected.size(), 1u);
  const Expectation& e = f.expected[0];
  EXPECT_EQ(e.mechanism.Name(), "MDM");
  EXPECT_EQ(e.objective.Name(), "alt-b-total");
  EXPECT_EQ(*e.ratio, kInfinity);
  EXPECT_FALSE(e.optimal_value.has_value());
  ASSERT_TRUE(e.outcome.has_value());
  EXPECT_EQ(e.outcome->front(), (SupportPoint{0, 1}));
  EXPECT_EQ(e.note, "x");
}

TEST(SerializeInstanceTest, RoundTrip) {
  testing::ProfileGenerator gen(61, 12, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const GroupedProfile p = gen.Next(trial % 2 == 0);
    EXPECT_EQ(ParseInstance(SerializeInstance(p)), p);
  }
  const InstanceFile f =
      ParseInstanceFile(SerializeInstance(MajorityGroupTightProfile(), "tight"));
  EXPECT_EQ(f.name, "tight");
  EXPECT_EQ(f.profile, MajorityGroupTightProfile());
}

TEST(FixtureCorpusTest, EveryFileLoadsAndIsAnnotated) {
  const auto files = testing::LoadFixtures();
  EXPECT_GE(files.size(), 10u);
  for (const InstanceFile& f : files) {
    EXPECT_FALSE(f.name.empty());
    EXPECT_FALSE(f.expected.empty()) << f.name;
  }
}

TEST(NumberJsonTest, InfinityIsAString) {
  EXPECT_EQ(NumberToJson(kInfinity), "inf");
  EXPECT_EQ(NumberToJson(1.5), 1.5);
  EXPECT_EQ(NumberFromJson("inf"), kInfinity);
  EXPECT_EQ(NumberFromJson(2), 2);
  EXPECT_THROW(NumberFromJson("nan"), ParseError);
}

}  // namespace
}  // namespace fairloc
