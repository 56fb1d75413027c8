/*
 * kleinforge C API
 *
 * Generalised Klein bottles as computable objects: group actions,
 * symmetry-respecting scalar/vector fields, equivariant Fourier bases,
 * streamline integration, spiking-network simulation and the ISI
 * embedding / intrinsic-dimension / persistence pipeline.
 *
 * All functions return KF_OK on success. On failure they return a status
 * code and leave a human-readable message in kf_last_error() (thread-local).
 * Objects returned through handle out-parameters must be released with the
 * matching *_free function. Strings returned through char** out-parameters
 * must be released with kf_string_free.
 *
 * Handles returned by kf_field_parse keep their space alive internally, so
 * the space handle may be freed before fields derived from it.
 */
#ifndef KLEINFORGE_H
#define KLEINFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define KF_API __declspec(dllexport)
#else
#define KF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kf_status {
  KF_OK = 0,
  KF_ERROR_INVALID_ARGUMENT = 1,
  KF_ERROR_VALIDATION = 2,
  KF_ERROR_IO = 3,
  KF_ERROR_UNSUPPORTED = 4,
  KF_ERROR_RUNTIME = 5
} kf_status;

typedef struct kf_space kf_space;
typedef struct kf_field kf_field;

KF_API const char* kf_version(void);

/* Message for the last failing call on this thread; never NULL. */
KF_API const char* kf_last_error(void);

KF_API void kf_string_free(char* s);

/* Caps internal worker threads; 0 restores the hardware default. */
KF_API void kf_set_threads(int n);

/* ---- spaces ------------------------------------------------------------ */

/* Parses and validates a space spec (see FORMATS.md for the JSON schema). */
KF_API kf_status kf_space_parse(const char* json, kf_space** out);
KF_API void kf_space_free(kf_space* sp);

KF_API int kf_space_k1(const kf_space* sp);
KF_API int kf_space_k2(const kf_space* sp);

/* Rank/kernel of the flip matrix, hidden tori, generators; JSON report. */
KF_API kf_status kf_space_info(const kf_space* sp, char** out_json);
KF_API kf_status kf_space_generators(const kf_space* sp, char** out_json);

/* point/canonical have k1+k2 entries (x then y); group_a has k1 entries and
 * group_b k2 entries, giving the element with act(g, canonical) = point. */
KF_API kf_status kf_space_canonicalize(const kf_space* sp, const double* point, double* canonical,
                                       long long* group_a, long long* group_b);
KF_API kf_status kf_space_act(const kf_space* sp, const long long* a, const long long* b,
                              const double* point, double* out);
KF_API kf_status kf_space_equivalent(const kf_space* sp, const double* p, const double* q,
                                     double tol, int* out);

/* ---- fields ------------------------------------------------------------ */

KF_API kf_status kf_field_parse(const kf_space* sp, const char* json, kf_field** out);
KF_API void kf_field_free(kf_field* f);
KF_API int kf_field_is_scalar(const kf_field* f);

KF_API kf_status kf_field_eval_scalar(const kf_field* f, const double* point, double* out);
/* out has k1+k2 entries: X components then Y components. */
KF_API kf_status kf_field_eval_vector(const kf_field* f, const double* point, double* out);

KF_API kf_status kf_field_check_symmetry(const kf_field* f, size_t n_samples, double tol,
                                         uint64_t seed, double* max_residual, int* passed);

/* Samples the field on a grid^dim lattice over the fundamental domain.
 * csv_path is required; svg_path (scalar fields, dim == 2 only) is optional.
 * header_comment, when non-NULL, is emitted as a leading '#' line. */
KF_API kf_status kf_field_sample_scalar(const kf_field* f, size_t grid, const char* csv_path,
                                        const char* svg_path, const char* header_comment);
KF_API kf_status kf_field_sample_vector(const kf_field* f, size_t grid, const char* csv_path,
                                        const char* header_comment);

/* ---- harmonics ---------------------------------------------------------- */

/* kind is "scalar" or "vector"; enumerates |lambda_i| <= lmax, |zeta_j| <= zmax.
 * Returns a JSON report with orbit blocks, exact rational operators, kernel
 * bases and realized real trig basis functions. */
KF_API kf_status kf_harmonics_basis(const kf_space* sp, const char* kind, long long lmax,
                                    long long zmax, char** out_json);

/* ---- flow ---------------------------------------------------------------- */

/* Integrates a grid^dim lattice of seeds with fixed-step RK4 and writes
 * traj_id,t,folded coords...,speed rows; every stride-th sample is emitted. */
KF_API kf_status kf_flow_streamlines(const kf_field* f, size_t grid, double step, size_t steps,
                                     size_t stride, const char* csv_path,
                                     const char* header_comment);

/* ---- spiking networks ---------------------------------------------------- */

/* Random strongly connected digraph with i.i.d. uniform transit times.
 * Returns the graph JSON (schema in FORMATS.md). */
KF_API kf_status kf_sds_generate(size_t nodes, double density, double delta, double transit_lo,
                                 double transit_hi, uint64_t seed, size_t max_tries,
                                 char** out_json);

/* Event-driven run kicked with one spike at kick; stops at max_time or after
 * max_spikes firings of the observed node (max_spikes < 0: unbounded).
 * Writes node,time rows for every firing. */
KF_API kf_status kf_sds_run(const char* graph_json, size_t kick, size_t observe, double max_time,
                            long long max_spikes, const char* spikes_csv_path,
                            const char* header_comment);

/* Extracts inter-spike intervals of one node from a spikes CSV, drops the
 * first burn_in intervals, writes one interval per line. */
KF_API kf_status kf_sds_isi(const char* spikes_csv_path, size_t node, size_t burn_in,
                            const char* isi_csv_path, const char* header_comment,
                            size_t* n_intervals);

/* ---- ISI embedding and topology ------------------------------------------ */

/* Sliding-window embedding of a one-column CSV; writes one point per row. */
KF_API kf_status kf_tda_embed(const char* isi_csv_path, size_t window, double dedup_tol,
                              const char* cloud_csv_path, const char* header_comment,
                              size_t* out_points);

/* Two-nearest-neighbour intrinsic dimension. method: "mle" or "cdf". */
KF_API kf_status kf_tda_dim2nn(const double* points, size_t n, size_t dim, double discard,
                               const char* method, double* d_hat, size_t* n_used);
KF_API kf_status kf_tda_dim2nn_file(const char* cloud_csv_path, double discard, const char* method,
                                    double* d_hat, size_t* n_used);

/* Rips persistence in degrees 0 and 1; returns degree,birth,death CSV ("inf"
 * marks essential classes). max_points <= 0 selects the default cap of 400. */
KF_API kf_status kf_tda_rips_file(const char* cloud_csv_path, double r_max, long long max_points,
                                  char** out_csv);

/* d_hat across a window range; returns window,d_hat,n_points CSV. */
KF_API kf_status kf_tda_profile(const char* isi_csv_path, size_t w_min, size_t w_max,
                                double dedup_tol, double discard, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* KLEINFORGE_H */
