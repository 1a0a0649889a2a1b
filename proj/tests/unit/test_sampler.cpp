#include <doctest.h>

#include <cmath>

#include "telemelody/errors.hpp"
#include "telemelody/sampler.hpp"

using namespace telemelody;

TEST_CASE("a single positive weight always wins") {
  SamplerConfig cfg;
  RandomSource rng(1);
  for (int i = 0; i < 20; ++i)
    CHECK(sample_categorical({1, 0, 0}, cfg, rng) == 0);
}

TEST_CASE("top_k of one is argmax, ties to the lower index") {
  SamplerConfig cfg;
  cfg.top_k = 1;
  RandomSource rng(2);
  CHECK(sample_categorical({0.2, 0.9, 0.5}, cfg, rng) == 1);
  CHECK(sample_categorical({0.7, 0.7, 0.7}, cfg, rng) == 0);
}

TEST_CASE("equal weights split evenly under any temperature") {
  SamplerConfig cfg;
  cfg.temperature = 0.5;
  RandomSource rng(3);
  int zeros = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i)
    if (sample_categorical({1, 1}, cfg, rng) == 0) ++zeros;
  const double freq = static_cast<double>(zeros) / draws;
  CHECK(std::abs(freq - 0.5) < 0.01);
}

TEST_CASE("temperature sharpens the powered distribution") {
  SamplerConfig cfg;
  cfg.temperature = 0.5;  // weights squared: 4:1 becomes 16:1
  RandomSource rng(4);
  int zeros = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i)
    if (sample_categorical({4, 1}, cfg, rng) == 0) ++zeros;
  const double freq = static_cast<double>(zeros) / draws;
  CHECK(std::abs(freq - 16.0 / 17.0) < 0.01);
}

TEST_CASE("top_k masks the tail") {
  SamplerConfig cfg;
  cfg.top_k = 2;
  RandomSource rng(5);
  for (int i = 0; i < 200; ++i) {
    const int idx = sample_categorical({5, 4, 1, 1}, cfg, rng);
    CHECK(idx <= 1);
  }
}

TEST_CASE("all-zero weights raise") {
  SamplerConfig cfg;
  RandomSource rng(6);
  CHECK_THROWS_AS(sample_categorical({0, 0, 0}, cfg, rng), AllZeroWeights);
  CHECK_THROWS_AS(sample_categorical({}, cfg, rng), AllZeroWeights);
}

TEST_CASE("the stream is deterministic per seed") {
  SamplerConfig cfg;
  std::vector<int> a, b;
  {
    RandomSource rng(99);
    for (int i = 0; i < 50; ++i)
      a.push_back(sample_categorical({1, 2, 3, 4}, cfg, rng));
  }
  {
    RandomSource rng(99);
    for (int i = 0; i < 50; ++i)
      b.push_back(sample_categorical({1, 2, 3, 4}, cfg, rng));
  }
  CHECK(a == b);
}
