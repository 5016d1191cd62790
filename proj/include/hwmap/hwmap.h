/* Copyright (c) 2026 hwmap developers
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the Heisenberg-Weyl map toolkit. All entry points return a
 * status code and (on request) an opaque result handle carrying a JSON
 * document. Handles must be released with hwmap_result_free.
 */

#ifndef HWMAP_HWMAP_H
#define HWMAP_HWMAP_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Mirrors the CLI exit convention. */
#define HWMAP_OK 0           /* success, every checked claim passed */
#define HWMAP_ERR_FAILURE 1  /* ran to completion but a claim failed */
#define HWMAP_ERR_INPUT 2    /* malformed input or unusable parameters */

typedef struct hwmap_result hwmap_result;

/* Library version string, e.g. "1.0.0". Never NULL. */
const char* hwmap_version(void);

/* Run the full verification suite.
 *
 * config_json is an optional JSON object (NULL or "" for defaults):
 *   {"dims": [2,3,...], "tolerance": 1e-10, "chi": "+"|"-", "seed": 0}
 *
 * On return *out (if out != NULL) holds the report; call hwmap_result_json
 * to read it. Returns HWMAP_OK if all claims passed, HWMAP_ERR_FAILURE if
 * any claim failed, HWMAP_ERR_INPUT on bad config.
 */
int hwmap_verify(const char* config_json, hwmap_result** out);

/* Analyze the map built from a weight file:
 *   {"d": int, "chi": "+"|"-", "weights": [[k, l, value], ...]}
 * Missing indices default to 0. Returns HWMAP_OK with the analysis report,
 * or HWMAP_ERR_INPUT on malformed input.
 */
int hwmap_channel(const char* weights_json, hwmap_result** out);

/* Mutually unbiased bases for odd prime d. chi is "+", "-", or NULL for "+".
 * Returns HWMAP_ERR_INPUT when d is not an odd prime.
 */
int hwmap_mub(int d, const char* chi, hwmap_result** out);

/* Transfer-matrix report for the map built from a weight file (same format
 * as hwmap_channel). */
int hwmap_rmatrix(const char* weights_json, hwmap_result** out);

/* d = 3 case study for nine weights p[0..8] in row-major (k,l) order.
 * chi is "+", "-", or NULL for "+". */
int hwmap_case_study_d3(const double p[9], const char* chi, hwmap_result** out);

/* JSON text of a result. Valid until hwmap_result_free. Never NULL for a
 * handle produced by a successful or claim-failure call. */
const char* hwmap_result_json(const hwmap_result* result);

/* Error message when a call returned HWMAP_ERR_INPUT, else "". */
const char* hwmap_result_error(const hwmap_result* result);

void hwmap_result_free(hwmap_result* result);

#ifdef __cplusplus
}
#endif

#endif /* HWMAP_HWMAP_H */
