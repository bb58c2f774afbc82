/* rim — recursive contour-integral eigenvalue search for matrix pencils.
 *
 * C interface to the shared library. All functions are thread-compatible:
 * distinct handles may be used from distinct threads concurrently, but a
 * single handle must not be mutated while in use. Handles are created and
 * destroyed with the matching _free function.
 *
 * Every fallible call returns a rim_status; on failure a human-readable
 * message is available from rim_last_error() (thread-local).
 */
#ifndef RIM_H
#define RIM_H

#if defined(_WIN32)
#define RIM_API __declspec(dllexport)
#elif defined(__GNUC__) || defined(__clang__)
#define RIM_API __attribute__((visibility("default")))
#else
#define RIM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rim_status {
  RIM_OK = 0,
  RIM_ERR_INVALID_ARGUMENT = 1,
  RIM_ERR_DIMENSION_MISMATCH = 2,
  RIM_ERR_SINGULAR_SHIFT = 3,
  RIM_ERR_PARSE = 4,
  RIM_ERR_IO = 5,
  RIM_ERR_SOLVER = 6,
  RIM_ERR_MAX_DEPTH = 7,
  RIM_ERR_MESH = 8,
  RIM_ERR_INTERNAL = 9
} rim_status;

RIM_API const char* rim_status_name(rim_status status);

/* Message for the most recent failure on this thread; never NULL. */
RIM_API const char* rim_last_error(void);

RIM_API void rim_version(int* major, int* minor, int* patch);

/* ---------------------------------------------------------------- pencils */

typedef struct rim_pencil rim_pencil;

/* Upper-bidiagonal test pencil: A has diagonal (size-1)/100 .. 0/100 and
 * superdiagonal 1/100; B is diagonal with num_ones trailing ones. The
 * finite spectrum is {0, 0.01, ..., (num_ones-1)/100}. */
RIM_API rim_status rim_pencil_example3(int size, int num_ones, rim_pencil** out);

/* Symmetric tridiagonal Wilkinson-type matrix, diagonal n/2..1,1..n/2,
 * off-diagonal entries -1; B is the identity. n must be even and >= 2. */
RIM_API rim_status rim_pencil_wilkinson(int n, rim_pencil** out);

/* A = diag(re + i*im), B = I. im may be NULL for a real spectrum. */
RIM_API rim_status rim_pencil_diagonal(const double* re, const double* im,
                                       int count, rim_pencil** out);

/* Load A and B from Matrix Market files (coordinate or array, real,
 * integer or complex fields, general/symmetric/skew/hermitian). */
RIM_API rim_status rim_pencil_load_matrix_market(const char* path_a,
                                                 const char* path_b,
                                                 rim_pencil** out);

RIM_API rim_status rim_pencil_save_matrix_market(const rim_pencil* pencil,
                                                 const char* path_a,
                                                 const char* path_b);

RIM_API int rim_pencil_dim(const rim_pencil* pencil);
RIM_API int rim_pencil_is_complex(const rim_pencil* pencil);
RIM_API void rim_pencil_free(rim_pencil* pencil);

/* ------------------------------------------------------------ meshes, FEM */

typedef struct rim_mesh rim_mesh;

/* Criss-cross triangulation of the unit square with cell size ~h.
 * jitter in [0, 0.5) displaces interior vertices by up to jitter*h
 * (deterministic in seed); boundary vertices are never moved. */
RIM_API rim_status rim_mesh_unit_square(double h, double jitter,
                                        unsigned long long seed,
                                        rim_mesh** out);

/* Polar triangulation of a disc centred at the origin; ring spacing ~h,
 * boundary vertices exactly on the circle. */
RIM_API rim_status rim_mesh_disc(double radius, double h, rim_mesh** out);

RIM_API int rim_mesh_vertex_count(const rim_mesh* mesh);
RIM_API int rim_mesh_triangle_count(const rim_mesh* mesh);
RIM_API int rim_mesh_boundary_count(const rim_mesh* mesh);
RIM_API double rim_mesh_size(const rim_mesh* mesh); /* max edge length */

/* Plain-text dump: "V T" header, V lines "x y flag", T lines "i j k". */
RIM_API rim_status rim_mesh_save_text(const rim_mesh* mesh, const char* path);
RIM_API void rim_mesh_free(rim_mesh* mesh);

/* Interior-transmission block pencil A x = k^2 B x built with linear
 * elements on the mesh, constant index of refraction. Dimension is
 * 2*N_interior + N_boundary. */
RIM_API rim_status rim_pencil_transmission(const rim_mesh* mesh,
                                           double refraction_index,
                                           rim_pencil** out);

/* Neumann Laplacian pencil S x = lambda M x over all mesh vertices. */
RIM_API rim_status rim_pencil_neumann(const rim_mesh* mesh, rim_pencil** out);

/* ----------------------------------------------------------------- search */

typedef struct rim_rect {
  double re_min, re_max, im_min, im_max;
} rim_rect;

typedef struct rim_search_config {
  double epsilon;            /* terminal region size, > 0 */
  int num_vectors;           /* random probe vectors J, >= 1 */
  double amplifier;          /* K */
  double threshold;          /* admissibility cutoff; <= 0 means K/10 */
  unsigned long long seed;   /* probe-vector generator seed */
  int max_depth;             /* recursion safety bound */
} rim_search_config;

/* epsilon=1e-3, num_vectors=3, amplifier=10, threshold=K/10, seed=1,
 * max_depth=60. */
RIM_API rim_search_config rim_search_config_default(void);

typedef struct rim_report rim_report;

/* Locate all eigenvalues of the pencil inside the rectangle. On
 * RIM_ERR_MAX_DEPTH a partial report is still returned (and flagged
 * incomplete); any other failure leaves *out untouched. */
RIM_API rim_status rim_solve(const rim_pencil* pencil, rim_rect region,
                             const rim_search_config* config,
                             rim_report** out);

RIM_API int rim_report_eigenvalue_count(const rim_report* report);
RIM_API void rim_report_eigenvalue(const rim_report* report, int i,
                                   double* re, double* im, int* box_count);

/* Terminal admissible boxes, sorted by (re_min, im_min). */
RIM_API int rim_report_box_count(const rim_report* report);
RIM_API rim_rect rim_report_box(const rim_report* report, int i);

RIM_API int rim_report_complete(const rim_report* report);

RIM_API void rim_report_stats(const rim_report* report,
                              unsigned long long* factorizations,
                              unsigned long long* solves,
                              unsigned long long* regions_visited,
                              int* degenerate_nodes);

/* Exploration tree flattened in visit (depth-first) order. */
typedef struct rim_region_record {
  rim_rect rect;
  int depth;
  double chi;
  int admissible;
  int terminal;
} rim_region_record;

RIM_API int rim_report_visit_count(const rim_report* report);
RIM_API rim_region_record rim_report_visit(const rim_report* report, int i);

/* Per-probe-vector norms (|Py_j|, |P(K Py_j)|) for visit i. Writes at most
 * cap entries into each array (either may be NULL); returns J. */
RIM_API int rim_report_visit_norms(const rim_report* report, int i,
                                   double* proj_norms, double* reproj_norms,
                                   int cap);

RIM_API void rim_report_free(rim_report* report);

/* ---------------------------------------------------------------- oracles */

/* Bessel function of the first kind, 0 <= m <= 60, 0 <= x <= 60. */
RIM_API rim_status rim_bessel_j(int m, double x, double* out);

/* First `count` positive zeros of J_m below x = 60. Returns the number
 * written, or a negative rim_status on error. */
RIM_API int rim_bessel_j_zeros(int m, int count, double* out, int capacity);

typedef struct rim_te_root {
  int m;         /* angular order */
  double k;      /* wavenumber root */
  double lambda; /* k^2 */
} rim_te_root;

/* Exact interior-transmission eigenvalues of the radius-1/2 disc with
 * refraction index 16: roots of the Bessel dispersion relations for
 * angular orders 0..m_max with k in (0, k_max]. Results are sorted by k.
 * Returns the total number of roots found (which may exceed capacity;
 * only the first `capacity` are written), or a negative rim_status. */
RIM_API int rim_oracle_disc_te(double k_max, int m_max, rim_te_root* out,
                               int capacity);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RIM_H */
