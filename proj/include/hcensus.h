/*
 * hcensus - exact counting of integral points of bounded height on three
 * families of homogeneous varieties, growth-law prediction from boundary
 * divisor data, and pole-order verification of invariant gauge forms on
 * blowup charts.
 *
 * C interface over the C++ core: opaque handles, integer status codes,
 * malloc'd UTF-8 strings released through hc_string_free.  All functions
 * are safe to call from multiple threads on distinct handles.
 */

#ifndef HCENSUS_H
#define HCENSUS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
    HC_OK = 0,
    HC_ERR_INVALID_ARGUMENT = 1,
    HC_ERR_PARSE = 2,
    HC_ERR_IO = 3,
    HC_ERR_INTERNAL = 4
} hc_status;

/* Message for the most recent failure on this thread. */
const char* hc_last_error(void);

void hc_string_free(char* s);

const char* hc_version(void);

/* ------------------------------------------------------------------ */
/* Example parameters                                                  */
/* ------------------------------------------------------------------ */

typedef struct hc_params {
    const char* example;  /* "ex1" | "ex2" | "ex3" */
    unsigned n;           /* ex2: rank of the complement, >= 1 */
    unsigned lambda1;     /* ex2 height exponents */
    unsigned lambda2;
    unsigned kappa1;      /* ex3 height exponents */
    unsigned kappa2;
    double eta;           /* ex3 weight threshold, in (0,1] */
    const char* instance; /* ex1 quadric pair: "default" | "split" (NULL = default) */
} hc_params;

/* Fills in the documented defaults (ex2, n=1, unit exponents, eta=0.5). */
void hc_params_init(hc_params* p);

/* ------------------------------------------------------------------ */
/* Growth prediction (boundary divisor models)                         */
/* ------------------------------------------------------------------ */

typedef struct hc_model hc_model;

hc_status hc_model_preset(const hc_params* p, hc_model** out);
hc_status hc_model_from_json(const char* text, hc_model** out);
hc_status hc_model_from_file(const char* path, hc_model** out);
void hc_model_free(hc_model* m);

/* JSON: {"a":"p/q","b":int,"attaining":[...],"focusing":bool|"n/a","law":str} */
hc_status hc_model_predict(const hc_model* m, char** json_out);

/* The (d-1)/lambda ratio vector as a JSON array of "p/q" strings
 * (null entries where lambda vanishes). */
hc_status hc_model_ratios(const hc_model* m, char** json_out);

/* ------------------------------------------------------------------ */
/* Counting                                                            */
/* ------------------------------------------------------------------ */

/* Counts points of height <= radius ("p/q" or decimal string).
 * JSON: {"example","R","value","raw_count","points_scanned","seconds"}.
 * stream_path, when non-NULL, receives one JSON line per accepted point. */
hc_status hc_count(const hc_params* p, const char* radius, unsigned workers,
                   const char* stream_path, char** json_out);

/* Exhaustive oracle count over the coordinate box [-box, box]. */
hc_status hc_oracle(const hc_params* p, const char* radius, long box,
                    unsigned workers, char** json_out);

/* ------------------------------------------------------------------ */
/* Ladders and growth-law fits                                         */
/* ------------------------------------------------------------------ */

/* Geometric ladder of `steps` radii in [r_min, r_max]; returns the CSV
 * text "R,value,points_scanned,seconds".  timing=0 zeroes the seconds
 * column so repeated runs are byte-identical. */
hc_status hc_ladder_csv(const hc_params* p, const char* r_min, const char* r_max,
                        unsigned steps, unsigned workers, int timing,
                        char** csv_out);

/* Fits the growth law to ladder CSV text against the model prediction.
 * JSON: {"example","params","prediction","fit","verdict","notes"}. */
hc_status hc_fit(const hc_params* p, const char* csv_text, double tolerance,
                 char** json_out);

/* ------------------------------------------------------------------ */
/* Gauge-form pole orders                                              */
/* ------------------------------------------------------------------ */

/* Recomputes the boundary pole orders of the example's invariant gauge
 * form on its blowup charts; n selects the ex2 family member (0 = run
 * n = 1..5).  JSON: {"example","all_match","rows":[...]}. */
hc_status hc_poles(const char* example, unsigned n, char** json_out);

/* Runs a chart-chain description (JSON text, see README) and reports the
 * resulting coefficient and requested vanishing orders. */
hc_status hc_chart_chain(const char* chain_json, const char* const* order_vars,
                         size_t n_order_vars, char** json_out);

/* ------------------------------------------------------------------ */
/* Weights                                                             */
/* ------------------------------------------------------------------ */

/* Weight of an ordered unimodular triple "a,b,c;d,e,f;g,h,i". */
hc_status hc_weight(const char* triple, double eta, double* weight_out,
                    double* area_out);

#ifdef __cplusplus
}
#endif

#endif /* HCENSUS_H */
