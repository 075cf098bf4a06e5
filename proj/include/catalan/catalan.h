#ifndef CATALAN_CATALAN_H
#define CATALAN_CATALAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CATALAN_API __declspec(dllexport)
#else
#define CATALAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum catalan_status {
  CATALAN_OK = 0,
  CATALAN_E_ILLEGAL_CHARACTER = 1,
  CATALAN_E_NEGATIVE_PREFIX = 2,
  CATALAN_E_UNBALANCED_WORD = 3,
  CATALAN_E_EMPTY_INPUT = 4,
  CATALAN_E_INDEX_OUT_OF_RANGE = 5,
  CATALAN_E_SIZE_MISMATCH = 6,
  CATALAN_E_NOT_COMPARABLE = 7,
  CATALAN_E_CROSSING_PARTITION = 8,
  CATALAN_E_UNKNOWN_BLOCK = 9,
  CATALAN_E_MALFORMED_MAP = 10,
  CATALAN_E_INVALID_REALIZER = 11,
  CATALAN_E_NOT_STACK = 12,
  CATALAN_E_PRECONDITION = 13,
  CATALAN_E_LIMIT_EXCEEDED = 14,
  CATALAN_E_PARSE_ERROR = 15,
  CATALAN_E_INTERNAL = 16,
  CATALAN_E_INVALID_ARGUMENT = 17,
  CATALAN_E_OUT_OF_MEMORY = 18
} catalan_status;

typedef struct catalan_path catalan_path;
typedef struct catalan_realizer catalan_realizer;

typedef struct catalan_classification {
  int valid;
  int minimal;
  int maximal;
  int min_and_max;
  int stack;
  size_t cw_triangles;
  size_t ccw_triangles;
} catalan_classification;

/* Message of the last failure on the calling thread; "" after success. */
CATALAN_API const char* catalan_last_error(void);
CATALAN_API const char* catalan_status_name(catalan_status status);
/* Every char* returned through an out parameter is released with this. */
CATALAN_API void catalan_string_free(char* text);

CATALAN_API catalan_status catalan_path_parse(const char* word, catalan_path** out);
CATALAN_API catalan_status catalan_path_from_descents(const int* descents, size_t n, catalan_path** out);
CATALAN_API void catalan_path_free(catalan_path* path);
CATALAN_API size_t catalan_path_size(const catalan_path* path);
CATALAN_API catalan_status catalan_path_word(const catalan_path* path, char** out);
/* e_i for 0 <= i <= n. */
CATALAN_API catalan_status catalan_path_exceedence(const catalan_path* path, size_t i, int* out);

/* Forms: "word", "tree", "binary", "partition". */
CATALAN_API catalan_status catalan_convert(const char* from, const char* to, const char* input, char** out);

/* Lattices: "stanley", "tamari", "kreweras". */
CATALAN_API catalan_status catalan_order(const char* lattice, const catalan_path* lower, const catalan_path* upper, int* out);
/* JSON array of the words covering `path`. */
CATALAN_API catalan_status catalan_covers_json(const char* lattice, const catalan_path* path, char** out);
CATALAN_API catalan_status catalan_count_intervals(const char* lattice, size_t n, uint64_t* out);
/* Closed-form interval count as a decimal string. */
CATALAN_API catalan_status catalan_formula(const char* lattice, size_t n, char** out);

CATALAN_API catalan_status catalan_phi(const catalan_path* lower, const catalan_path* upper, catalan_realizer** out);
CATALAN_API void catalan_realizer_free(catalan_realizer* realizer);
CATALAN_API size_t catalan_realizer_size(const catalan_realizer* realizer);
CATALAN_API catalan_status catalan_realizer_to_json(const catalan_realizer* realizer, char** out);
CATALAN_API catalan_status catalan_realizer_from_json(const char* json, catalan_realizer** out);
CATALAN_API catalan_status catalan_realizer_to_dot(const catalan_realizer* realizer, char** out);
/* Opaque, deterministic canonical code in hex; colored != 0 includes the colouring. */
CATALAN_API catalan_status catalan_realizer_code(const catalan_realizer* realizer, int colored, char** out);
CATALAN_API catalan_status catalan_psi(const catalan_realizer* realizer, catalan_path** lower, catalan_path** upper);
CATALAN_API catalan_status catalan_classify(const catalan_realizer* realizer, catalan_classification* out);

/* cap = 0 selects the default cap. *passed is 1 when every identity holds. */
CATALAN_API catalan_status catalan_census(size_t n, size_t shards, int counts_only, size_t cap, char** report_json, int* passed);
CATALAN_API catalan_status catalan_hasse_dot(const char* lattice, size_t n, char** out);

#ifdef __cplusplus
}
#endif

#endif
