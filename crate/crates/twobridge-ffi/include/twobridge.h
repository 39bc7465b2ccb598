/* C ABI for the twobridge knot minimality library.
 *
 * Conventions:
 *  - Knots are opaque handles created by tb_knot_new and released by
 *    tb_knot_free.
 *  - Fallible calls return a TbStatus; output parameters are written only
 *    on TB_OK.
 *  - Returned strings are NUL-terminated UTF-8 owned by the library; free
 *    them with tb_string_free. tb_version is static and must not be freed.
 */

#ifndef TWOBRIDGE_H
#define TWOBRIDGE_H

#include <stdint.h>
#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum TbStatus {
    TB_OK = 0,
    TB_NULL_ARGUMENT = 1,
    TB_LINK_NOT_KNOT = 2,   /* even p: a two-component link, not a knot */
    TB_NOT_REDUCED = 3,     /* gcd(p, q) != 1 */
    TB_INVALID_INPUT = 4,
    TB_DOMAIN_ERROR = 5,    /* other domain errors (e.g. trivial knot) */
} TbStatus;

typedef enum TbVerdict {
    TB_MINIMAL = 0,
    TB_NON_MINIMAL = 1,
    TB_UNDECIDED = 2,
    TB_OUT_OF_THEOREM_SCOPE = 3,
} TbVerdict;

typedef struct TbKnot TbKnot;

/* Create a knot handle for b(p, q); (p, q) is canonicalized. */
TbStatus tb_knot_new(int64_t p, int64_t q, TbKnot **out);

/* Release a knot handle. NULL is a no-op. */
void tb_knot_free(TbKnot *knot);

/* Canonical Schubert parameters. */
int64_t tb_knot_p(const TbKnot *knot);
int64_t tb_knot_q(const TbKnot *knot);

/* 1 if trivial, else 0. */
int tb_knot_is_trivial(const TbKnot *knot);

/* Crossing number; TB_DOMAIN_ERROR for the trivial knot. */
TbStatus tb_knot_crossing_number(const TbKnot *knot, int64_t *out);

/* Alexander polynomial as text, e.g. "4t^2-7t+4". Free with
 * tb_string_free. */
TbStatus tb_knot_alexander(const TbKnot *knot, char **out);

/* Classify with the given search bounds (0, 0 selects the defaults).
 * reasons may be NULL; otherwise it receives a comma-separated reason
 * string to free with tb_string_free. */
TbStatus tb_knot_classify(const TbKnot *knot,
                          size_t max_segments,
                          int64_t max_connector,
                          TbVerdict *verdict,
                          char **reasons);

/* Theorem-encoded oracle verdict (may be TB_OUT_OF_THEOREM_SCOPE). */
TbStatus tb_knot_oracle(const TbKnot *knot, TbVerdict *verdict);

/* Release a string returned by this library. NULL is a no-op. */
void tb_string_free(char *s);

/* Static version string; do not free. */
const char *tb_version(void);

#ifdef __cplusplus
}
#endif

#endif /* TWOBRIDGE_H */
