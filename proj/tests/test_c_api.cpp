#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstring>
#include <string>
#include <thread>

#include "sw/sw.h"

using nlohmann::json;

namespace {

struct Pair {
  sw_pair* ptr = nullptr;
  ~Pair() { sw_pair_destroy(ptr); }
};

std::string take(char* s) {
  std::string out(s ? s : "");
  sw_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(sw_version()) > 0);
  CHECK(std::string(sw_status_name(SW_OK)) == "ok");
  CHECK(std::string(sw_status_name(SW_ERR_INPUT)) == "input");
  CHECK(std::string(sw_status_name(SW_ERR_INTERNAL)) == "internal");
}

TEST_CASE("pair lifecycle and queries") {
  const int64_t n[] = {4, 2};
  const int64_t n2[] = {0, 0};
  Pair pair;
  REQUIRE(sw_pair_create(5, 2, 1, n, 2, n2, 2, nullptr, &pair.ptr) == SW_OK);
  CHECK(sw_pair_weakly_generic(pair.ptr) == 1);
  CHECK(sw_pair_strongly_generic(pair.ptr) == 0);
  int64_t count = 0;
  CHECK(sw_pair_wexp_count(pair.ptr, &count) == SW_OK);
  CHECK(count == 4);
  CHECK(std::string(sw_last_error()).empty());
  sw_pair_destroy(nullptr);
}

TEST_CASE("input errors carry a status and message") {
  const int64_t n[] = {2};
  const int64_t n2[] = {0};
  sw_pair* pair = reinterpret_cast<sw_pair*>(0x1);
  CHECK(sw_pair_create(4, 1, 1, n, 1, n2, 1, nullptr, &pair) == SW_ERR_INPUT);
  CHECK(pair == nullptr);
  CHECK(std::string(sw_last_error()).rfind("shape: ", 0) == 0);
  const int64_t bad[] = {0};
  CHECK(sw_pair_create(5, 1, 1, bad, 1, n2, 1, nullptr, &pair) == SW_ERR_INPUT);
  CHECK(std::string(sw_last_error()).rfind("n: ", 0) == 0);
  const sw_flags cyc{0, 1, 0, 0};
  CHECK(sw_pair_create(5, 1, 1, n, 1, n2, 1, &cyc, &pair) == SW_ERR_INPUT);
  CHECK(std::string(sw_last_error()).rfind("flags: ", 0) == 0);
  CHECK(sw_pair_create(5, 1, 1, n, 1, n2, 0, nullptr, &pair) == SW_ERR_INPUT);
  CHECK(sw_pair_create(5, 1, 1, n, 1, n2, 1, nullptr, nullptr) == SW_ERR_INPUT);
  char* out = nullptr;
  CHECK(sw_render_packets(nullptr, SW_FORMAT_JSON, &out) == SW_ERR_INPUT);
  CHECK(out == nullptr);
}

TEST_CASE("renderings") {
  const int64_t n[] = {2};
  const int64_t n2[] = {0};
  Pair pair;
  REQUIRE(sw_pair_create(5, 1, 1, n, 1, n2, 1, nullptr, &pair.ptr) == SW_OK);
  char* out = nullptr;
  REQUIRE(sw_render_weights(pair.ptr, "2:0", SW_FORMAT_JSON, &out) == SW_OK);
  const auto doc = json::parse(take(out));
  CHECK(doc["schema"] == "sw/1");
  CHECK(doc["weight_set"] == json::array({"1/0"}));
  REQUIRE(sw_render_jah(pair.ptr, "1/0", SW_FORMAT_JSON, &out) == SW_OK);
  CHECK(json::parse(take(out))["ell"] == json::array({1}));
  REQUIRE(sw_render_sset(pair.ptr, "3/2", SW_FORMAT_TSV, &out) == SW_OK);
  CHECK_FALSE(take(out).empty());
  REQUIRE(sw_render_packets(pair.ptr, SW_FORMAT_PRETTY, &out) == SW_OK);
  CHECK_FALSE(take(out).empty());
  CHECK(sw_render_jah(pair.ptr, "2/0", SW_FORMAT_JSON, &out) == SW_ERR_NOT_A_WEIGHT);
  CHECK(sw_render_jah(pair.ptr, "1/0/0", SW_FORMAT_JSON, &out) == SW_ERR_INPUT);
  CHECK(sw_render_weights(pair.ptr, "9:0", SW_FORMAT_JSON, &out) == SW_ERR_INPUT);
  CHECK(sw_render_weights(pair.ptr, nullptr, static_cast<sw_format>(7), &out) == SW_ERR_INPUT);
}

TEST_CASE("precondition outside weak genericity") {
  const int64_t n[] = {3};
  const int64_t n2[] = {0};
  Pair pair;
  REQUIRE(sw_pair_create(5, 1, 3, n, 1, n2, 1, nullptr, &pair.ptr) == SW_OK);
  CHECK(sw_pair_weakly_generic(pair.ptr) == 0);
  char* out = nullptr;
  CHECK(sw_render_weights(pair.ptr, "3:0", SW_FORMAT_JSON, &out) == SW_ERR_PRECONDITION);
}

TEST_CASE("congruence rendering") {
  const int64_t c[] = {4, 2};
  char* out = nullptr;
  REQUIRE(sw_render_congruence(5, 2, nullptr, 0, c, 2, -1, SW_FORMAT_JSON, &out) == SW_OK);
  CHECK(json::parse(take(out))["r"] == json::array({5, 1}));
  CHECK(sw_render_congruence(5, 2, nullptr, 0, c, 2, 1, SW_FORMAT_JSON, &out) == SW_ERR_INPUT);
  CHECK(std::string(sw_last_error()).rfind("tau0: ", 0) == 0);
  const int64_t J[] = {2};
  CHECK(sw_render_congruence(5, 2, J, 1, c, 2, -1, SW_FORMAT_JSON, &out) == SW_ERR_INPUT);
  const int64_t bad[] = {5, 2};
  CHECK(sw_render_congruence(5, 2, nullptr, 0, bad, 2, -1, SW_FORMAT_JSON, &out) == SW_ERR_INPUT);
}

TEST_CASE("verify") {
  const int64_t primes[] = {5};
  sw_verify_config config;
  sw_verify_config_init(&config);
  config.primes = primes;
  config.primes_len = 1;
  config.suites = "gen-conj,congruence";
  config.deterministic = 1;
  char* out = nullptr;
  int64_t violations = -1;
  REQUIRE(sw_verify(&config, SW_FORMAT_JSON, &out, &violations) == SW_OK);
  CHECK(violations == 0);
  const auto doc = json::parse(take(out));
  CHECK(doc["schema"] == "sw/1");
  config.suites = "bogus";
  CHECK(sw_verify(&config, SW_FORMAT_JSON, &out, nullptr) == SW_ERR_INPUT);
  config.suites = nullptr;
  config.filter = "sometimes";
  CHECK(sw_verify(&config, SW_FORMAT_JSON, &out, nullptr) == SW_ERR_INPUT);
}

TEST_CASE("last error is per thread") {
  const int64_t n[] = {2};
  sw_pair* pair = nullptr;
  REQUIRE(sw_pair_create(4, 1, 1, n, 1, n, 1, nullptr, &pair) == SW_ERR_INPUT);
  std::string other = "unset";
  std::thread([&] { other = sw_last_error(); }).join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(sw_last_error()).empty());
}
