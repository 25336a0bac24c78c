#ifndef WSURF_H
#define WSURF_H

#include <stddef.h>
#include <stdint.h>

#if defined(WSURF_BUILDING_LIBRARY)
#define WSURF_API __attribute__((visibility("default")))
#else
#define WSURF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns a status; on failure a message for the calling
   thread is available from wsurf_last_error() until the next failing call. */
typedef enum wsurf_status {
    WSURF_OK = 0,
    WSURF_ERR_BRANCH_CUT = 1,
    WSURF_ERR_DOMAIN = 2,
    WSURF_ERR_TOLERANCE = 3,
    WSURF_ERR_EVALUATION = 4,
    WSURF_ERR_UNKNOWN_EQUATION = 5,
    WSURF_ERR_OUTSIDE_FIXTURE = 6,
    WSURF_ERR_SINGULAR_POINT = 7,
    WSURF_ERR_PATH_PLANNING = 8,
    WSURF_ERR_STEP_UNDERFLOW = 9,
    WSURF_ERR_STENCIL = 10,
    WSURF_ERR_EMPTY_MESH = 11,
    WSURF_ERR_IO = 12,
    WSURF_ERR_PARSE = 13,
    WSURF_ERR_INVALID_ARGUMENT = 14,
    WSURF_ERR_OUT_OF_MEMORY = 98,
    WSURF_ERR_INTERNAL = 99
} wsurf_status;

typedef struct wsurf_complex {
    double re, im;
} wsurf_complex;

typedef struct wsurf_constants {
    wsurf_complex c1, c2, lambda;
} wsurf_constants;

typedef enum wsurf_source { WSURF_SOURCE_NUMERIC = 0, WSURF_SOURCE_CLOSED_FORM = 1 } wsurf_source;

typedef enum wsurf_grid_kind { WSURF_GRID_POLAR = 0, WSURF_GRID_CARTESIAN = 1 } wsurf_grid_kind;

/* Node (i, j): i runs over [a0, a1] (r or x), j over [b0, b1] (theta or y). */
typedef struct wsurf_grid {
    wsurf_grid_kind kind;
    double a0, a1, b0, b1;
    int n1, n2;
} wsurf_grid;

typedef enum wsurf_node_status {
    WSURF_NODE_OK = 0,
    WSURF_NODE_EXCLUDED = 1,
    WSURF_NODE_OUTSIDE_REGION = 2,
    WSURF_NODE_FAILED = 3
} wsurf_node_status;

/* Matrices are row-major. Geometry fields are meaningful only when
   has_geometry is nonzero. */
typedef struct wsurf_sample {
    int i, j;
    wsurf_complex z;
    double F[3];
    wsurf_complex Ftilde[4];
    wsurf_complex Fst[4];
    wsurf_complex chi;
    double u;
    wsurf_complex Q;
    int has_geometry;
    double H;
    double conformality;
    double metric;
    double hopf;
    double hopf_holomorphy;
    double liouville;
    double u_data;
    wsurf_complex Q_data;
} wsurf_sample;

typedef struct wsurf_surface_counts {
    size_t nodes;
    size_t vertices;
    size_t faces;
    size_t excluded;
    size_t outside_region;
    size_t failed;
} wsurf_surface_counts;

typedef struct wsurf_residual {
    const char* name; /* owned by the report */
    double value;
    double threshold;
    wsurf_complex worst_point;
    size_t samples;
    int pass;
} wsurf_residual;

typedef struct wsurf_equation wsurf_equation;
typedef struct wsurf_data wsurf_data;
typedef struct wsurf_surface wsurf_surface;
typedef struct wsurf_report wsurf_report;

WSURF_API const char* wsurf_version(void);
WSURF_API const char* wsurf_status_string(wsurf_status status);
WSURF_API const char* wsurf_last_error(void);

/* "a+bi", "2", "-i", "1.5e-3-2i". */
WSURF_API wsurf_status wsurf_parse_complex(const char* text, wsurf_complex* out);

/* Catalog. Strings returned by equation accessors live as long as the handle. */
WSURF_API int wsurf_equation_count(void);
WSURF_API const char* wsurf_equation_id_at(int index);

WSURF_API wsurf_status wsurf_equation_create(const char* id, wsurf_equation** out);
/* User ODE from a key = value file or string (see README). */
WSURF_API wsurf_status wsurf_equation_load(const char* path, wsurf_equation** out);
WSURF_API wsurf_status wsurf_equation_from_text(const char* text, wsurf_equation** out);
WSURF_API void wsurf_equation_destroy(wsurf_equation* eq);

/* Rebuilds the equation with the new value; unknown names are rejected. */
WSURF_API wsurf_status wsurf_equation_set_param(wsurf_equation* eq, const char* name, wsurf_complex value);

WSURF_API const char* wsurf_equation_id(const wsurf_equation* eq);
WSURF_API const char* wsurf_equation_title(const wsurf_equation* eq);
WSURF_API const char* wsurf_equation_note(const wsurf_equation* eq);
WSURF_API const char* wsurf_equation_region(const wsurf_equation* eq); /* "" when unrestricted */
WSURF_API int wsurf_equation_param_count(const wsurf_equation* eq);
WSURF_API wsurf_status wsurf_equation_param(const wsurf_equation* eq, int index, const char** name, wsurf_complex* value,
                                            const char** description);
WSURF_API wsurf_status wsurf_equation_defaults(const wsurf_equation* eq, wsurf_constants* constants, wsurf_complex* xi0,
                                               wsurf_grid* grid);
WSURF_API int wsurf_equation_in_region(const wsurf_equation* eq, wsurf_complex z);
WSURF_API int wsurf_equation_has_closed_form(const wsurf_equation* eq, const wsurf_constants* constants);

/* Weierstrass data. tol <= 0 keeps the default tolerances. */
WSURF_API wsurf_status wsurf_data_create(const wsurf_equation* eq, const wsurf_constants* constants, wsurf_source source,
                                         double tol, wsurf_data** out);
WSURF_API void wsurf_data_destroy(wsurf_data* data);
WSURF_API wsurf_status wsurf_data_value(const wsurf_data* data, wsurf_complex z, wsurf_complex* eta_sq,
                                        wsurf_complex* chi);

/* Immersion at one point, integrated from xi0. */
WSURF_API wsurf_status wsurf_sample_point(const wsurf_data* data, wsurf_complex xi0, wsurf_complex xi, int geometry,
                                          wsurf_sample* out);

/* "polar:r0,r1,t0,t1[,n1,n2]" or "cartesian:x0,x1,y0,y1[,n1,n2]". */
WSURF_API wsurf_status wsurf_grid_parse(const char* text, wsurf_grid* out);

/* threads == 0 uses the hardware concurrency; the result does not depend on it. */
WSURF_API wsurf_status wsurf_surface_create(const wsurf_data* data, wsurf_complex xi0, const wsurf_grid* grid,
                                            int geometry, unsigned threads, wsurf_surface** out);
WSURF_API void wsurf_surface_destroy(wsurf_surface* surface);
WSURF_API wsurf_status wsurf_surface_counts_get(const wsurf_surface* surface, wsurf_surface_counts* out);
WSURF_API wsurf_node_status wsurf_surface_node_status(const wsurf_surface* surface, int i, int j);
WSURF_API const char* wsurf_surface_node_error(const wsurf_surface* surface, int i, int j);
WSURF_API wsurf_status wsurf_surface_vertex(const wsurf_surface* surface, size_t index, wsurf_sample* out);
WSURF_API wsurf_status wsurf_surface_face(const wsurf_surface* surface, size_t index, int corners[4]);
/* format: "obj", "ply" or "csv". */
WSURF_API wsurf_status wsurf_surface_export(const wsurf_surface* surface, const char* format, const char* path,
                                            size_t* bytes_written);
/* Renders into a buffer owned by the surface, valid until the next call on it. */
WSURF_API wsurf_status wsurf_surface_render(wsurf_surface* surface, const char* format, const char** text,
                                            size_t* length);

WSURF_API wsurf_status wsurf_verify_run(const wsurf_data* data, wsurf_complex xi0, int samples, uint64_t seed,
                                        wsurf_report** out);
WSURF_API void wsurf_report_destroy(wsurf_report* report);
WSURF_API size_t wsurf_report_count(const wsurf_report* report);
WSURF_API wsurf_status wsurf_report_entry(const wsurf_report* report, size_t index, wsurf_residual* out);
WSURF_API int wsurf_report_passed(const wsurf_report* report);

#ifdef __cplusplus
}
#endif

#endif
