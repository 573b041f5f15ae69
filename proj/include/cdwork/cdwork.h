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

#ifndef CDWORK_CDWORK_H
#define CDWORK_CDWORK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CDWORK_API __declspec(dllexport)
#else
#define CDWORK_API __attribute__((visibility("default")))
#endif

/* Units: hbar = 1, mass = 1 unless a mass argument is given. */

typedef enum cdwork_status {
    CDWORK_OK = 0,
    CDWORK_INVALID_ARGUMENT = 1,
    CDWORK_NON_HERMITIAN_INPUT = 2,
    CDWORK_DEGENERACY = 3,
    CDWORK_STEP_NOT_CONVERGED = 4,
    CDWORK_TRUNCATION = 5,
    CDWORK_QUADRATURE_NOT_CONVERGED = 6,
    CDWORK_SUPERCRITICAL_DRIVE = 7,
    CDWORK_INVALID_DETUNING = 8,
    CDWORK_NOT_A_STATE = 9,
    CDWORK_CONFIG = 10,
    CDWORK_IO = 11,
    CDWORK_INTERNAL = 99
} cdwork_status;

typedef struct cdwork_session cdwork_session;
typedef struct cdwork_ho cdwork_ho;

CDWORK_API const char* cdwork_version(void);
CDWORK_API const char* cdwork_status_name(cdwork_status status);

/* Message of the most recent failure on the calling thread, "" if none. */
CDWORK_API const char* cdwork_last_error(void);

/* Sessions run the figure and verification commands. */
CDWORK_API cdwork_status cdwork_session_create(cdwork_session** out);
CDWORK_API void cdwork_session_destroy(cdwork_session* session);

/* command is one of "ho-figure1", "ising-figure2", "ion-waveforms", "verify";
 * config_json is a JSON object (NULL for defaults). *passed is set to 1 when
 * every physics check passed. Output files go to the configured directory. */
CDWORK_API cdwork_status cdwork_run(cdwork_session* session, const char* command, const char* config_json,
                                    int* passed);

/* JSON report of the last successful cdwork_run; valid until the next call. */
CDWORK_API const char* cdwork_session_report(const cdwork_session* session);
/* Number of human-readable check lines and access to each one. */
CDWORK_API size_t cdwork_session_line_count(const cdwork_session* session);
CDWORK_API const char* cdwork_session_line(const cdwork_session* session, size_t index);

/* Canonical JSON and FNV-1a hash of a validated configuration. */
CDWORK_API cdwork_status cdwork_config_hash(const char* command, const char* config_json, char* buffer,
                                            size_t buffer_size);

/* Harmonic oscillator ramp omega_i -> omega_f over tau (quintic), Fock basis of
 * dimension fock_dim, initial ensemble at inverse temperature beta (INFINITY
 * for the ground state). */
CDWORK_API cdwork_status cdwork_ho_create(double omega_i, double omega_f, double tau, size_t fock_dim,
                                          double beta, cdwork_ho** out);
CDWORK_API void cdwork_ho_destroy(cdwork_ho* ho);

/* Scale applied to the closed-form auxiliary term (1 is exact). */
CDWORK_API cdwork_status cdwork_ho_set_auxiliary_scale(cdwork_ho* ho, double scale);

typedef struct cdwork_work_moments {
    double mean_cd;
    double mean_adiabatic;
    double variance_cd;
    double variance_adiabatic;
    double excess_direct;
    double excess_geometric;
} cdwork_work_moments;

CDWORK_API cdwork_status cdwork_ho_work_moments(const cdwork_ho* ho, double t, cdwork_work_moments* out);

typedef struct cdwork_speed_limit {
    double metric_length;
    double bures_length;
    double eta_length;
    double mean_excess_fluctuation;
    double mean_energy_fluctuation;
    double excess_bound;
    double energy_bound;
    int equality_holds;
    int chain_holds;
    int ordering_holds;
} cdwork_speed_limit;

CDWORK_API cdwork_status cdwork_ho_speed_limit(const cdwork_ho* ho, size_t grid_points, cdwork_speed_limit* out);

/* Worst fidelity over levels 0..max_level with (with_auxiliary = 1) or
 * without the auxiliary term; grid_points time samples. */
CDWORK_API cdwork_status cdwork_ho_certificate(const cdwork_ho* ho, size_t max_level, int with_auxiliary,
                                               size_t grid_points, double* worst_fidelity);

/* Transverse-field Ising ring of even size `sites`. */
CDWORK_API cdwork_status cdwork_ising_ground_metric(size_t sites, double lambda, double* out);
CDWORK_API cdwork_status cdwork_ising_cost(size_t sites, double delta, double* out);
CDWORK_API cdwork_status cdwork_ising_scaling(const size_t* sites, size_t count, double delta, double* exponent,
                                              double* residual_rms);

#ifdef __cplusplus
}
#endif

#endif
