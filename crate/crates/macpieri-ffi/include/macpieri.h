#ifndef MACPIERI_H
#define MACPIERI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define MACPIERI_OK 0

#define MACPIERI_ERR_NULL 1

#define MACPIERI_ERR_PARSE 2

#define MACPIERI_ERR_PARAMETER 3

#define MACPIERI_ERR_DIVISION_BY_ZERO 4

#define MACPIERI_ERR_POLE 5

#define MACPIERI_ERR_DEGREE 6

#define MACPIERI_ERR_CONSISTENCY 7

#define MACPIERI_ERR_RANGE 8

#define MACPIERI_ERR_PANIC 9

// Coefficient flavor for [`macpieri_coefficient`].
typedef enum MacpieriFlavor {
  MACPIERI_FLAVOR_QT = 0,
  MACPIERI_FLAVOR_TQ = 1,
} MacpieriFlavor;

// Which expansion to compute.
typedef enum MacpieriSide {
  // `Q_λ` in products of `g_k`.
  MACPIERI_SIDE_QG = 0,
  // `P_λ` in products of `e_k`.
  MACPIERI_SIDE_PE = 1,
  // Hall–Littlewood `P_λ` in `e_k`.
  MACPIERI_SIDE_HALL_LITTLEWOOD = 2,
  // Monomial `m_λ` in `e_k`.
  MACPIERI_SIDE_MONOMIAL = 3,
  // Jack `Q_λ` in Jack `g_k`.
  MACPIERI_SIDE_JACK_Q = 4,
  // Jack `P_λ` in `e_k`.
  MACPIERI_SIDE_JACK_P = 5,
  // Schur `s_λ` in `h_k`.
  MACPIERI_SIDE_SCHUR_H = 6,
  // Schur `s_λ` in `e_k`.
  MACPIERI_SIDE_SCHUR_E = 7,
} MacpieriSide;

// Opaque full expansion.
typedef struct MacpieriExpansion MacpieriExpansion;

// Opaque rational function in `q, t` (or `α`).
typedef struct MacpieriRatFunc MacpieriRatFunc;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread, or NULL. Owned by the
// library; valid until the next failing call on the same thread.
const char *macpieri_last_error(void);

// Frees a string returned by this library. NULL is ignored.
void macpieri_string_free(char *s);

// Full expansion of the partition `parts[0..len]` (weakly decreasing).
int32_t macpieri_expand(const int64_t *parts,
                        size_t len,
                        enum MacpieriSide side,
                        struct MacpieriExpansion **out);

// Number of terms.
int32_t macpieri_expansion_len(const struct MacpieriExpansion *e, size_t *out);

// Product index of term `i`. Writes up to `cap` parts into `buf` and the
// full length into `len`; a short buffer is not an error (query with cap 0).
int32_t macpieri_expansion_index(const struct MacpieriExpansion *e,
                                 size_t i,
                                 int64_t *buf,
                                 size_t cap,
                                 size_t *len);

// Coefficient of term `i` as a new handle.
int32_t macpieri_expansion_coeff(const struct MacpieriExpansion *e,
                                 size_t i,
                                 struct MacpieriRatFunc **out);

// The expansion as JSON; free with [`macpieri_string_free`].
int32_t macpieri_expansion_json(const struct MacpieriExpansion *e, char **out);

void macpieri_expansion_free(struct MacpieriExpansion *e);

// Parses an expression such as `(t-1)/(1-q)` or `q^2*t`.
int32_t macpieri_ratfunc_parse(const char *s, struct MacpieriRatFunc **out);

// Canonical text form; free with [`macpieri_string_free`].
int32_t macpieri_ratfunc_to_string(const struct MacpieriRatFunc *r, char **out);

// Value at rational `q`, `t` given as text (`"3/4"`), returned as text.
int32_t macpieri_ratfunc_eval(const struct MacpieriRatFunc *r,
                              const char *q,
                              const char *t,
                              char **out);

// Equality of reduced forms; writes 1 or 0.
int32_t macpieri_ratfunc_equal(const struct MacpieriRatFunc *a,
                               const struct MacpieriRatFunc *b,
                               int32_t *out);

void macpieri_ratfunc_free(struct MacpieriRatFunc *r);

// Inverse Pieri coefficient `C_θ(u_1, …, u_n)` with `n = len`.
int32_t macpieri_coefficient(enum MacpieriFlavor flavor,
                             const uint32_t *theta,
                             const struct MacpieriRatFunc *const *u,
                             size_t len,
                             struct MacpieriRatFunc **out);

// Runs a verification suite (`inversions`, `pieri`, `main`,
// `specializations`, `hook`); writes the violation count.
int32_t macpieri_verify(const char *suite, uint32_t max_weight, uint64_t seed, size_t *violations);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MACPIERI_H */
