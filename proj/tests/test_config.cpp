#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "qnetsim/config.hpp"
#include "qnetsim/csv.hpp"

using namespace qns;

TEST_CASE("FNV-1a fingerprint matches the reference vectors") {
  CHECK(fnv1a64("") == 14695981039346656037ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("qnetsim") != fnv1a64("qnetsiM"));
}

TEST_CASE("CSV cells format consistently") {
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(229254.4) == "229254.4");
  CHECK(format_fingerprint(0) == "0000000000000000");
  CHECK(format_fingerprint(0xaf63dc4c8601ec8cULL) == "af63dc4c8601ec8c");
}

TEST_CASE("shipped default config loads with the calibrated choices") {
  const RunConfig cfg = load_run_config("config/default.json");

  CHECK(cfg.channels == 144);
  CHECK(cfg.link.convention == EmissionConvention::PerArm);
  CHECK(cfg.link.p_bsm == 0.5);
  CHECK(cfg.tdm.atoms == 100000);
  CHECK(cfg.tdm.t_ent_s == Catch::Approx(1.09e-6));
  CHECK(cfg.catalog.version == "1.0");
  CHECK(cfg.phonons.modes.size() == 3);
  CHECK_FALSE(cfg.phonons.populated_from_external_tables);

  const ScenarioSpec& intra = find_scenario(cfg.scenarios,
                                             ScenarioKind::IntraRack);
  CHECK(intra.total_fiber_km == Catch::Approx(0.010));
  CHECK(intra.switch_hops == 2);

  CHECK(cfg.noise.converter.kind == ConverterKind::Chi2Dfg);
  CHECK(cfg.noise.converter.per_photon_infidelity ==
        Catch::Approx(0.0278));
  CHECK(cfg.noise.mux_crosstalk_db == 60.0);

  REQUIRE(cfg.job.demands.size() == 2);
  CHECK(cfg.job.demands[0].pairs == 1000);
  CHECK(cfg.job_arch == Architecture::RqiDwdm);
  CHECK(cfg.mode == SimMode::Deterministic);
  CHECK(cfg.seed == 12345);
  CHECK(cfg.out_dir == "out");
  CHECK_FALSE(cfg.worst_case);

  CHECK(cfg.n_tot_list.size() == 7);
  CHECK(cfg.node_list.size() == 12);
  CHECK(cfg.temperatures_k.size() == 4);
  CHECK(cfg.pump_sweep.points == 41);
  CHECK(cfg.ratio_pump_sweep.points == 35);

  CHECK(cfg.fingerprint != 0);
}

TEST_CASE("config overrides change the fingerprint deterministically") {
  nlohmann::json j = load_config_json("config/default.json");
  const RunConfig base = parse_run_config(j, "config");

  j["seed"] = 777;
  const RunConfig reseeded = parse_run_config(j, "config");
  CHECK(reseeded.seed == 777);
  CHECK(reseeded.fingerprint != base.fingerprint);

  // Same document, same fingerprint.
  const RunConfig again = parse_run_config(j, "config");
  CHECK(again.fingerprint == reseeded.fingerprint);

  // The output directory is plumbing: redirecting the same run elsewhere
  // must not change its provenance hash.
  j["out_dir"] = "somewhere_else";
  const RunConfig redirected = parse_run_config(j, "config");
  CHECK(redirected.out_dir == "somewhere_else");
  CHECK(redirected.fingerprint == reseeded.fingerprint);
  j.erase("out_dir");

  j["worst_case"] = true;
  CHECK(parse_run_config(j, "config").worst_case);
  j["worst_case"] = "yes";
  CHECK_THROWS_AS(parse_run_config(j, "config"), config_error);
}

TEST_CASE("invalid configurations are rejected as config errors") {
  CHECK_THROWS_AS(load_run_config("config/no_such.json"), config_error);

  nlohmann::json j = load_config_json("config/default.json");

  auto expect_rejected = [&](const nlohmann::json& doc) {
    CHECK_THROWS_AS(parse_run_config(doc, "config"), config_error);
  };

  nlohmann::json bad = j;
  bad["catalog"] = "nowhere/catalog.json";
  expect_rejected(bad);

  bad = j;
  bad["channels"] = 0;
  expect_rejected(bad);

  bad = j;
  bad["sweeps"]["n_tot"] = nlohmann::json::array();
  expect_rejected(bad);

  bad = j;
  bad["mode"] = "quick";
  expect_rejected(bad);

  bad = j;
  bad["link"]["convention"] = "sideways";
  expect_rejected(bad);

  bad = j;
  bad["fidelity"]["converter"] = "chi7";
  expect_rejected(bad);

  bad = j;
  bad["job"]["demands"] = {{{"qpu_pair", 0}, {"pairs", 0}}};
  expect_rejected(bad);

  // Malformed JSON text.
  const char* path = "build/broken_config_test.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_config_json(path), config_error);
  std::remove(path);
}

TEST_CASE("relative paths resolve against the config directory") {
  // The shipped config references ../data/...; loading from the repo root
  // exercises the config-directory fallback.
  const RunConfig cfg = load_run_config("config/default.json");
  CHECK(cfg.catalog_path.find("data") != std::string::npos);

  nlohmann::json j = load_config_json("config/default.json");
  j["catalog"] = "data/catalog.json";  // resolves against the working dir
  const RunConfig direct = parse_run_config(j, "config");
  CHECK(direct.catalog.p_emit == 0.5);
}

TEST_CASE("sweep defaults fill in when the config omits them") {
  nlohmann::json j = load_config_json("config/default.json");
  j.erase("sweeps");
  const RunConfig cfg = parse_run_config(j, "config");
  CHECK(cfg.n_tot_list.size() == 7);
  CHECK(cfg.node_list.front() == 1);
  CHECK(cfg.node_list.back() == 12);
  CHECK(cfg.temperatures_k ==
        std::vector<double>{240.0, 270.0, 300.0, 330.0});
  CHECK(cfg.pump_sweep.start_nm == Catch::Approx(1594.22));
  CHECK(cfg.pump_sweep.end_nm == Catch::Approx(1602.32));
  CHECK(cfg.ratio_pump_sweep.start_nm == Catch::Approx(1278.0));

  // Channel count defaults to the configured grid.
  j.erase("channels");
  CHECK(parse_run_config(j, "config").channels == 144);
}
