// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "tailmix/error.hpp"
#include "tailmix/sample.hpp"

using namespace tailmix;

namespace {

Error capture(void (*fn)()) {
  try {
    fn();
  } catch (const Error &e) {
    return e;
  }
  FAIL("expected an Error");
  return Error(ErrorKind::Data, "unreachable");
}

}  // namespace

TEST_SUITE("sample") {

TEST_CASE("label normalization canonicalizes integer tokens") {
  CHECK(normalize_label("1") == "1");
  CHECK(normalize_label(" 007 ") == "7");
  CHECK(normalize_label("+12") == "12");
  CHECK(normalize_label("-0") == "0");
  CHECK(normalize_label("-012") == "-12");
  CHECK(normalize_label("0000") == "0");
  // longer than any machine integer, still canonicalized
  CHECK(normalize_label("000123456789012345678901234567890") ==
        "123456789012345678901234567890");
  // non-integer tokens only get trimmed
  CHECK(normalize_label("  treated ") == "treated");
  CHECK(normalize_label("1.5") == "1.5");
  CHECK(normalize_label("1e3") == "1e3");
  CHECK(normalize_label("-") == "-");
  CHECK(normalize_label("   ") == "");
}

TEST_CASE("from_observations validates and counts") {
  const Sample s = testsupport::make_sample({1.0, 2.0, 3.0, 4.0, 5.0},
                                            {"a", "b", "a", "b", "b"});
  CHECK(s.size() == 5);
  CHECK(s.label_counts().at("a") == 2);
  CHECK(s.label_counts().at("b") == 3);
  CHECK(s.has_label("a"));
  CHECK_FALSE(s.has_label("c"));
  CHECK(s.labels() == std::vector<std::string>{"a", "b"});
  CHECK(s.subset_count({"a", "b"}) == 5);
  CHECK(s.subset_count({"a", "zzz"}) == 2);
  CHECK(s.complement({"a"}) == LabelSet{"b"});
  CHECK(s.complement({"a", "b"}).empty());

  CHECK_THROWS_AS(Sample::from_observations(
                      {{std::numeric_limits<double>::quiet_NaN(), "a"}}),
                  Error);
  CHECK_THROWS_AS(Sample::from_observations({{1.0, ""}}), Error);
}

TEST_CASE("csv ingestion maps columns and normalizes labels") {
  std::istringstream in(
      "id,wage,group\r\n"
      "1,10.5,01\n"
      "2,-3.25,0\n"
      "3,1e2,treated\n");
  const Sample s = ingest_csv(in, "wage", "group", "test");
  CHECK(s.size() == 3);
  CHECK(s.observations()[0].y == 10.5);
  CHECK(s.observations()[0].x == "1");  // "01" canonicalized
  CHECK(s.observations()[1].y == -3.25);
  CHECK(s.observations()[2].y == 100.0);
  CHECK(s.observations()[2].x == "treated");
}

TEST_CASE("csv ingestion error taxonomy") {
  auto kind_of = [](const char *text, const char *ycol = "y") {
    std::istringstream in(text);
    try {
      ingest_csv(in, ycol, "x", "test");
    } catch (const Error &e) {
      return e.kind();
    }
    return ErrorKind::Io;  // placeholder meaning "no throw"
  };
  CHECK(kind_of("") == ErrorKind::EmptyInput);
  CHECK(kind_of("y,x\n") == ErrorKind::EmptyInput);
  CHECK(kind_of("y,x\n1,a\n", "wage") == ErrorKind::Schema);
  CHECK(kind_of("y,x\nnope,a\n") == ErrorKind::Data);
  CHECK(kind_of("y,x\ninf,a\n") == ErrorKind::Data);
  CHECK(kind_of("y,x\n1,\n") == ErrorKind::Data);
  CHECK(kind_of("y,x\n1\n") == ErrorKind::Data);  // short row
  CHECK(kind_of("y,x\n1,a\n") == ErrorKind::Io);  // clean parse
  CHECK_THROWS_AS(ingest_csv("/nonexistent/path.csv", "y", "x"), Error);
}

TEST_CASE("csv data errors carry the offending row number") {
  std::istringstream in("y,x\n1,a\n2,b\nbad,c\n");
  try {
    ingest_csv(in, "y", "x", "test");
    FAIL("expected a Data error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Data);
    CHECK(std::string(e.what()).find("row 3") != std::string::npos);
  }
}

TEST_CASE("partition spec parsing") {
  const Partition two = parse_partition_spec("a,b|c");
  CHECK(two.a == LabelSet{"a", "b"});
  CHECK(two.b == LabelSet{"c"});
  CHECK_FALSE(two.c.has_value());

  const Partition three = parse_partition_spec("1| 02 |3,4");
  CHECK(three.a == LabelSet{"1"});
  CHECK(three.b == LabelSet{"2"});  // labels normalized inside specs too
  REQUIRE(three.c.has_value());
  CHECK(*three.c == LabelSet{"3", "4"});

  CHECK_THROWS_AS(parse_partition_spec("a"), Error);
  CHECK_THROWS_AS(parse_partition_spec("a|b|c|d"), Error);
  CHECK_THROWS_AS(parse_partition_spec("|b"), Error);
  CHECK_THROWS_AS(parse_partition_spec("a,,b|c"), Error);
}

TEST_CASE("partition validation") {
  const Sample s = testsupport::make_sample({1, 2, 3, 4, 5, 6},
                                            {"a", "b", "c", "a", "b", "c"});
  validate_partition(s, Partition{{"a"}, {"b"}, LabelSet{"c"}}, true);
  validate_partition(s, Partition{{"a"}, {"b"}, std::nullopt}, false);

  // missing cover
  CHECK_THROWS_AS(
      validate_partition(s, Partition{{"a"}, {"b"}, std::nullopt}, true),
      Error);
  // overlap
  CHECK_THROWS_AS(
      validate_partition(s, Partition{{"a", "b"}, {"b"}, LabelSet{"c"}}, true),
      Error);
  // unknown label
  CHECK_THROWS_AS(
      validate_partition(s, Partition{{"a"}, {"zzz"}, std::nullopt}, false),
      Error);
  const Error e = capture([] {
    const Sample s2 = testsupport::make_sample({1, 2}, {"a", "b"});
    validate_partition(s2, Partition{{}, {"b"}, std::nullopt}, false);
  });
  CHECK(e.kind() == ErrorKind::Partition);
}

TEST_CASE("subset_view preserves observation order") {
  const Sample s = testsupport::make_sample({5, 1, 4, 2, 3},
                                            {"a", "b", "a", "b", "a"});
  CHECK(subset_view(s, {"a"}) == std::vector<double>{5, 4, 3});
  CHECK(subset_view(s, {"b"}) == std::vector<double>{1, 2});
  CHECK(subset_view(s, {"a", "b"}) == std::vector<double>{5, 1, 4, 2, 3});
}

}  // TEST_SUITE
