#include <fjsa/serialize.hpp>

#include <gtest/gtest.h>

#include <fstream>

using namespace fjsa;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("fjsa_test_" + name + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Sha256, KnownDigests) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(JordanJson, RoundTripPreservesStructure) {
  const auto alg = build_free_jordan(1, 1, 4);
  const std::string text = jordan_to_json(alg);
  const FrontierBuild back = jordan_from_json(text);
  EXPECT_FALSE(back.budget_hit);
  EXPECT_EQ(graded_dims(back.algebra), graded_dims(alg));
  EXPECT_EQ(jordan_to_json(back.algebra), text);
  const auto x = back.algebra.basis(1, 0), y = back.algebra.basis(1, 1);
  EXPECT_EQ(back.algebra.multiply(back.algebra.multiply(x, y), x).coords,
            alg.multiply(alg.multiply(alg.basis(1, 0), alg.basis(1, 1)), alg.basis(1, 0)).coords);
  // restored algebras keep growing consistently
  FrontierBuild grown = jordan_from_json(text);
  grown.algebra.extend(5);
  EXPECT_EQ(graded_dims(grown.algebra), graded_dims(build_free_jordan(1, 1, 5)));
}

TEST(JordanJson, RejectsBadInput) {
  EXPECT_THROW(jordan_from_json("{}"), FormatError);
  EXPECT_THROW(jordan_from_json("not json"), FormatError);
  std::string text = jordan_to_json(build_free_jordan(0, 2, 2));
  const auto pos = text.find("\"version\":1");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 11, "\"version\":9");
  EXPECT_THROW(jordan_from_json(text), FormatError);
}

TEST(HomologyJson, RoundTrip) {
  const HomologyReport rep = compute_homology(0, 1, 3, 4);
  const std::string text = homology_report_to_json(rep);
  const HomologyReport back = homology_report_from_json(text);
  EXPECT_EQ(homology_report_to_json(back), text);
  EXPECT_EQ(back.at(2, 2).weights, rep.at(2, 2).weights);
  EXPECT_EQ(back.euler[3].lambda, rep.euler[3].lambda);
  EXPECT_THROW(homology_report_from_json(jordan_to_json(build_free_jordan(1, 0, 1))), FormatError);
}

TEST(CacheStore, AtomicWriteAndLoad) {
  const Cache cache(fresh_dir("store"));
  EXPECT_FALSE(cache.load("k").has_value());
  cache.store("k", "payload");
  EXPECT_EQ(cache.load("k"), "payload");
  cache.store("k", "second");
  EXPECT_EQ(cache.load("k"), "second");
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(cache.dir())) {
    ++files;
    EXPECT_EQ(e.path().extension(), ".json");
  }
  EXPECT_EQ(files, 1u);
  fs::remove_all(cache.dir());
}

TEST(CacheStore, KeysSeparateInputs) {
  const std::string k = jordan_cache_key(1, 1, 4, 100);
  EXPECT_EQ(k.size(), 64u);
  EXPECT_EQ(k, jordan_cache_key(1, 1, 4, 100));
  EXPECT_NE(k, jordan_cache_key(1, 1, 5, 100));
  EXPECT_NE(k, jordan_cache_key(1, 2, 4, 100));
  EXPECT_NE(k, jordan_cache_key(1, 1, 4, 101));
}

TEST(CacheStore, CachedBuildHitsAndMatches) {
  const Cache cache(fresh_dir("build"));
  const CachedBuild first = cached_free_jordan(cache, 0, 2, 4, 1'000'000);
  EXPECT_FALSE(first.cache_hit);
  const CachedBuild second = cached_free_jordan(cache, 0, 2, 4, 1'000'000);
  EXPECT_TRUE(second.cache_hit);
  EXPECT_EQ(jordan_to_json(second.build.algebra), jordan_to_json(first.build.algebra));

  // corrupted entries are rebuilt
  std::ofstream(cache.path_for(jordan_cache_key(0, 2, 4, 1'000'000))) << "garbage";
  const CachedBuild third = cached_free_jordan(cache, 0, 2, 4, 1'000'000);
  EXPECT_FALSE(third.cache_hit);
  EXPECT_EQ(graded_dims(third.build.algebra), graded_dims(first.build.algebra));
  fs::remove_all(cache.dir());
}

TEST(CacheStore, DefaultDirHonoursEnvironment) {
  ::setenv("FJSA_CACHE_DIR", "/tmp/fjsa-env-cache", 1);
  EXPECT_EQ(Cache::default_dir(), fs::path("/tmp/fjsa-env-cache"));
  ::unsetenv("FJSA_CACHE_DIR");
  EXPECT_NE(Cache::default_dir(), fs::path("/tmp/fjsa-env-cache"));
}

TEST(CacheStore, UnwritableDirectoryStillBuilds) {
  const fs::path blocker = fresh_dir("blocker");
  std::ofstream(blocker) << "a file, not a directory";
  const Cache cache(blocker / "sub");
  const CachedBuild b = cached_free_jordan(cache, 1, 0, 3, 1'000'000);
  EXPECT_FALSE(b.cache_hit);
  EXPECT_FALSE(b.store_error.empty());
  EXPECT_EQ(graded_dims(b.build.algebra), (std::vector<GDim>{GDim(1, 0), GDim(1, 0), GDim(1, 0)}));
  fs::remove(blocker);
}
