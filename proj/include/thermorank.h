/* Copyright 2026 The thermorank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the thermorank library.
 *
 * Conventions:
 *  - Functions returning tr_status report failure with a nonzero code; the
 *    message (and the source position for parse errors) is then available
 *    from tr_last_error() on the calling thread until its next failing call.
 *  - Output handles are written only on success and must be released with
 *    the matching *_free function. Strings returned through char** are owned
 *    by the caller and released with tr_string_free.
 *  - const char* results of accessors are owned by the handle and stay valid
 *    until it is freed.
 */
#ifndef THERMORANK_H_
#define THERMORANK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(THERMORANK_BUILDING)
#define TR_API __declspec(dllexport)
#else
#define TR_API __declspec(dllimport)
#endif
#else
#define TR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define TR_API_VERSION 1

typedef enum tr_status {
  TR_OK = 0,
  TR_ERR_DIVISION_BY_ZERO = 1,
  TR_ERR_UNKNOWN_LABEL = 2,
  TR_ERR_ALL_ZERO_COLUMN = 3,
  TR_ERR_ZERO_REFERENCE_MEAN = 4,
  TR_ERR_VALIDATION = 5,
  TR_ERR_PARSE = 6,
  TR_ERR_UNKNOWN_FIXTURE = 7,
  TR_ERR_BAD_EDIT = 8,
  TR_ERR_MISSING_REFERENCE = 9,
  TR_ERR_SHAPE_MISMATCH = 10,
  TR_ERR_INVALID_ARGUMENT = 11,
  TR_ERR_INTERNAL = 12
} tr_status;

typedef enum tr_mode { TR_MODE_CRISP = 0, TR_MODE_FUZZY = 1 } tr_mode;

typedef enum tr_quality_reference {
  TR_QUALITY_ACROSS_EXPERTS = 0,
  TR_QUALITY_ACROSS_ALTERNATIVES = 1
} tr_quality_reference;

typedef enum tr_quality_basis {
  TR_BASIS_RAW = 0,
  TR_BASIS_NORMALIZED = 1
} tr_quality_basis;

typedef enum tr_aggregation {
  TR_AGGREGATION_AUTO = 0,
  TR_AGGREGATION_WEIGHTED_SUM = 1,
  TR_AGGREGATION_MEAN_OF_WEIGHTED = 2
} tr_aggregation;

typedef enum tr_weight_normalization {
  TR_WEIGHTS_AS_GIVEN = 0,
  TR_WEIGHTS_COLUMN_MAX = 1
} tr_weight_normalization;

typedef enum tr_zero_mean_policy {
  TR_ZERO_MEAN_ERROR = 0,
  TR_ZERO_MEAN_QUALITY_ONE_IF_EXACT = 1
} tr_zero_mean_policy;

typedef enum tr_normalization {
  TR_NORMALIZATION_LINEAR = 0,
  TR_NORMALIZATION_VECTOR = 1
} tr_normalization;

typedef struct tr_config {
  int quality_reference;    /* tr_quality_reference */
  int quality_basis;        /* tr_quality_basis */
  int aggregation;          /* tr_aggregation */
  int weight_normalization; /* tr_weight_normalization */
  int zero_mean_policy;     /* tr_zero_mean_policy */
} tr_config;

typedef struct tr_row {
  const char* alternative;
  double energy;  /* U */
  double exergy;  /* X */
  double entropy; /* S = U - X */
  int rank_energy;
  int rank_exergy;
} tr_row;

typedef struct tr_topsis_row {
  const char* alternative;
  double closeness; /* NaN when the ideals coincide */
  double separation_positive;
  double separation_negative;
  int rank;
} tr_topsis_row;

typedef struct tr_panel tr_panel;
typedef struct tr_report tr_report;
typedef struct tr_topsis tr_topsis;

TR_API int tr_api_version(void);
TR_API const char* tr_status_name(tr_status status);

/* Message of the calling thread's most recent failure ("" if none). */
TR_API const char* tr_last_error(void);
/* 1-based position of the most recent parse failure; 0 when unknown. */
TR_API void tr_last_error_position(size_t* line, size_t* column);

TR_API void tr_string_free(char* s);

/* Engine defaults for a mode. */
TR_API tr_status tr_config_defaults(tr_mode mode, tr_config* out);

/* Built-in datasets. */
TR_API size_t tr_fixture_count(void);
TR_API const char* tr_fixture_name(size_t index);

/* Panels. */
TR_API tr_status tr_panel_load_fixture(const char* name, tr_panel** out);
TR_API tr_status tr_panel_parse_json(const char* text, size_t length,
                                     tr_panel** out);
TR_API tr_status tr_panel_parse_csv(const char* ratings, size_t ratings_length,
                                    const char* criteria,
                                    size_t criteria_length, const char* name,
                                    tr_panel** out);
TR_API tr_status tr_panel_clone(const tr_panel* panel, tr_panel** out);
TR_API void tr_panel_free(tr_panel* panel);

/* Applies "dm:alternative:criterion=value"; the panel is unchanged on
 * failure. */
TR_API tr_status tr_panel_apply_edit(tr_panel* panel, const char* edit);

TR_API tr_status tr_panel_to_json(const tr_panel* panel, char** out);
TR_API tr_status tr_panel_to_csv(const tr_panel* panel, char** ratings,
                                 char** criteria);
TR_API uint64_t tr_panel_checksum(const tr_panel* panel);

TR_API tr_mode tr_panel_mode(const tr_panel* panel);
TR_API const char* tr_panel_name(const tr_panel* panel);
TR_API const char* tr_panel_description(const tr_panel* panel);
TR_API size_t tr_panel_alternative_count(const tr_panel* panel);
TR_API size_t tr_panel_criterion_count(const tr_panel* panel);
TR_API size_t tr_panel_dm_count(const tr_panel* panel);
TR_API const char* tr_panel_alternative(const tr_panel* panel, size_t index);
TR_API const char* tr_panel_criterion(const tr_panel* panel, size_t index);
TR_API const char* tr_panel_dm(const tr_panel* panel, size_t index);

/* TR_ERR_VALIDATION unless the panel is valid with at least
 * min_alternatives alternatives (ranking needs 2). */
TR_API tr_status tr_panel_validate(const tr_panel* panel,
                                   size_t min_alternatives);

/* Published reference ranking. TR_ERR_MISSING_REFERENCE when absent. */
TR_API tr_status tr_panel_reference(const tr_panel* panel, const char** method,
                                    const int** ranks, size_t* count);

/* Thermodynamic indicators. config may be NULL for the mode's defaults. */
TR_API tr_status tr_run(const tr_panel* panel, const tr_config* config,
                        tr_report** out);
TR_API void tr_report_free(tr_report* report);
TR_API size_t tr_report_size(const tr_report* report);
TR_API tr_status tr_report_row(const tr_report* report, size_t index,
                               tr_row* out);
/* "weighted-sum" or "mean". */
TR_API const char* tr_report_aggregation(const tr_report* report);
TR_API size_t tr_report_warning_count(const tr_report* report);
TR_API const char* tr_report_warning_code(const tr_report* report,
                                          size_t index);
TR_API const char* tr_report_warning_message(const tr_report* report,
                                             size_t index);
/* detail != 0 adds per-decision-maker values and per-cell intermediates. */
TR_API tr_status tr_report_to_json(const tr_report* report, int detail,
                                   char** out);

/* TOPSIS baseline on the decision-maker mean of a crisp panel (m >= 2). */
TR_API tr_status tr_topsis_run(const tr_panel* panel,
                               tr_normalization normalization,
                               tr_topsis** out);
TR_API void tr_topsis_free(tr_topsis* result);
TR_API size_t tr_topsis_size(const tr_topsis* result);
TR_API tr_status tr_topsis_row_at(const tr_topsis* result, size_t index,
                                  tr_topsis_row* out);
TR_API int tr_topsis_degenerate(const tr_topsis* result);
TR_API tr_status tr_topsis_to_json(const tr_topsis* result, char** out);

#ifdef __cplusplus
}
#endif

#endif /* THERMORANK_H_ */
