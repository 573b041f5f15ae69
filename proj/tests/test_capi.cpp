/*
 * Copyright 2026 The cdwork Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <cstring>
#include <string>

#include "cdwork/cdwork.h"
#include "doctest.h"

TEST_CASE("version and status names") {
    CHECK(std::string(cdwork_version()) == "0.1.0");
    CHECK(std::string(cdwork_status_name(CDWORK_TRUNCATION)) == "TruncationError");
    CHECK(std::string(cdwork_status_name(static_cast<cdwork_status>(42))) == "unknown");
}

TEST_CASE("oscillator handle") {
    cdwork_ho* ho = nullptr;
    REQUIRE(cdwork_ho_create(1.0, 3.0, 0.8, 120, 1.0, &ho) == CDWORK_OK);
    cdwork_work_moments m{};
    REQUIRE(cdwork_ho_work_moments(ho, 0.4, &m) == CDWORK_OK);
    CHECK(std::abs(m.mean_cd - m.mean_adiabatic) < 1e-8);
    CHECK(m.excess_geometric == doctest::Approx(1.951).epsilon(5e-4));
    CHECK(std::abs(m.excess_direct - m.excess_geometric) < 1e-6 * m.excess_geometric);
    CHECK(m.variance_cd - m.variance_adiabatic == doctest::Approx(m.excess_direct).epsilon(1e-9));

    CHECK(cdwork_ho_work_moments(ho, 2.0, &m) == CDWORK_INVALID_ARGUMENT);
    CHECK(std::strlen(cdwork_last_error()) > 0);

    double worst = 0.0;
    REQUIRE(cdwork_ho_certificate(ho, 3, 1, 21, &worst) == CDWORK_OK);
    CHECK(worst >= 1.0 - 1e-6);
    REQUIRE(cdwork_ho_certificate(ho, 0, 0, 21, &worst) == CDWORK_OK);
    CHECK(worst < 0.999);
    REQUIRE(cdwork_ho_set_auxiliary_scale(ho, 2.0) == CDWORK_OK);
    REQUIRE(cdwork_ho_certificate(ho, 0, 1, 21, &worst) == CDWORK_OK);
    CHECK(worst < 1.0 - 1e-6);
    cdwork_ho_destroy(ho);
}

TEST_CASE("speed limit through the handle") {
    cdwork_ho* ho = nullptr;
    REQUIRE(cdwork_ho_create(1.0, 3.0, 1.6, 120, 1.0, &ho) == CDWORK_OK);
    cdwork_speed_limit r{};
    REQUIRE(cdwork_ho_speed_limit(ho, 201, &r) == CDWORK_OK);
    CHECK(r.equality_holds == 1);
    CHECK(r.chain_holds == 1);
    CHECK(r.ordering_holds == 1);
    CHECK(r.bures_length <= r.eta_length + 1e-8);
    CHECK(r.eta_length <= r.metric_length + 1e-8);
    cdwork_ho_destroy(ho);
}

TEST_CASE("handle errors") {
    cdwork_ho* ho = nullptr;
    CHECK(cdwork_ho_create(1.0, 3.0, 0.8, 40, 1.0, &ho) == CDWORK_TRUNCATION);
    CHECK(ho == nullptr);
    CHECK(cdwork_ho_create(1.0, 3.0, 0.8, 120, 1.0, nullptr) == CDWORK_INVALID_ARGUMENT);
    CHECK(cdwork_ho_create(-1.0, 3.0, 0.8, 120, 1.0, &ho) == CDWORK_INVALID_ARGUMENT);
    CHECK(cdwork_ho_create(1.0, 3.0, 0.8, 120, INFINITY, &ho) == CDWORK_OK);
    cdwork_ho_destroy(ho);
    cdwork_ho_destroy(nullptr);
    cdwork_session_destroy(nullptr);
}

TEST_CASE("Ising entry points") {
    double g = 0.0;
    REQUIRE(cdwork_ising_ground_metric(4, 1.0, &g) == CDWORK_OK);
    CHECK(g == doctest::Approx(0.375));
    CHECK(cdwork_ising_ground_metric(5, 1.0, &g) == CDWORK_INVALID_ARGUMENT);
    double cost = 0.0;
    REQUIRE(cdwork_ising_cost(32, 1.0, &cost) == CDWORK_OK);
    CHECK(cost > 0.0);
    const size_t sites[] = {32, 64, 128, 256, 512, 1024};
    double alpha = 0.0, rms = 0.0;
    REQUIRE(cdwork_ising_scaling(sites, 6, 1.0, &alpha, &rms) == CDWORK_OK);
    CHECK(alpha >= 0.50);
    CHECK(alpha <= 0.53);
}

TEST_CASE("sessions and configuration") {
    cdwork_session* s = nullptr;
    REQUIRE(cdwork_session_create(&s) == CDWORK_OK);
    int passed = -1;
    CHECK(cdwork_run(s, "ion-waveforms", "{\"colour\": 1}", &passed) == CDWORK_CONFIG);
    CHECK(std::string(cdwork_last_error()).find("colour") != std::string::npos);
    CHECK(cdwork_run(s, "ion-waveforms", "{not json", &passed) == CDWORK_CONFIG);
    CHECK(cdwork_run(s, "plot", nullptr, &passed) == CDWORK_CONFIG);
    REQUIRE(cdwork_run(s, "ion-waveforms", "{\"out\": \"capi_out\"}", &passed) == CDWORK_OK);
    CHECK(passed == 1);
    CHECK(std::string(cdwork_session_report(s)).find("roundtrip") != std::string::npos);
    CHECK(cdwork_session_line_count(s) >= 1);
    CHECK(cdwork_session_line(s, 1000) == nullptr);
    cdwork_session_destroy(s);

    char hash[32];
    REQUIRE(cdwork_config_hash("verify", "{}", hash, sizeof hash) == CDWORK_OK);
    CHECK(std::strlen(hash) == 16);
    char tiny[4];
    CHECK(cdwork_config_hash("verify", "{}", tiny, sizeof tiny) == CDWORK_INVALID_ARGUMENT);
}
