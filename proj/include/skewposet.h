/* C interface to the skewposet library: skew diagram poset queries,
 * Littlewood-Richardson decompositions, integer sequences, the
 * two-colored-partition bijection and the verification sweep.
 *
 * All objects are opaque handles; every function returns a status code
 * and reports results through out parameters. Strings returned through
 * `char**` are owned by the caller and released with sp_string_free().
 * On error, sp_last_error() returns a thread-local message.
 */
#ifndef SKEWPOSET_H
#define SKEWPOSET_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    SP_OK = 0,
    SP_ERR_PARSE = 1,
    SP_ERR_CONTAINMENT = 2,
    SP_ERR_EMPTY = 3,
    SP_ERR_OVERFLOW = 4,
    SP_ERR_AT_MINIMUM = 5,
    SP_ERR_THEOREM = 6,
    SP_ERR_MALFORMED_PAIR = 7,
    SP_ERR_DOMAIN = 8,
    SP_ERR_INTERNAL = 9
} sp_status;

typedef struct sp_skew sp_skew;
typedef struct sp_character sp_character;

const char* sp_last_error(void);
void sp_string_free(char* s);

/* --- skew diagrams ------------------------------------------------- */

/* Grammar: "lambda/mu", parts comma-separated, mu optional. */
sp_status sp_skew_parse(const char* text, sp_skew** out);
void sp_skew_free(sp_skew* d);
sp_status sp_skew_format(const sp_skew* d, char** out);
sp_status sp_skew_box_count(const sp_skew* d, int64_t* out);
sp_status sp_skew_delta(const sp_skew* d, int64_t* out);
sp_status sp_skew_rank(const sp_skew* d, int64_t* out);
sp_status sp_skew_paths(const sp_skew* d, char** outer_seq, char** inner_seq);

/* Newline-separated class representatives; up != 0 for up covers. */
sp_status sp_skew_covers(const sp_skew* d, int up, char** out);
sp_status sp_skew_covers_json(const sp_skew* d, int up, char** out);

/* geq = 1 iff class(a) >= class(b) in the poset. */
sp_status sp_skew_compare(const sp_skew* a, const sp_skew* b, int* geq);

/* Witness chain of the reduction to the staircase class. */
sp_status sp_skew_reduce(const sp_skew* d, char** chain_text);
sp_status sp_skew_reduce_json(const sp_skew* d, char** out);

/* --- skew characters ------------------------------------------------ */

sp_status sp_skew_decompose(const sp_skew* d, sp_character** out);
void sp_character_free(sp_character* ch);
sp_status sp_character_format(const sp_character* ch, char** out);
sp_status sp_character_cc(const sp_character* ch, int64_t* components, int64_t* constituents);
sp_status sp_character_one_box_pairs(const sp_character* ch, int64_t* out);

/* Full document: {skew:{lambda,mu}, terms:[{nu,coeff}], cc:[a,b], pairs:n} */
sp_status sp_skew_decompose_json(const sp_skew* d, char** out);

/* --- sequences and the bijection ------------------------------------ */

/* name is one of "p", "f", "g", "barp"; values for n = 1..max_n.
 * JSON form: [{"n":..,"value":..}, ...]. */
sp_status sp_seq_values(const char* name, int max_n, char** json);
sp_status sp_seq_text(const char* name, int max_n, char** text);

/* Aligned g/p/f table for n = 1..max_n. */
sp_status sp_seq_table(int max_n, char** text);

/* Correspondence between two-colored partitions of weight n and
 * one-box-differing pairs of weight n+2. */
sp_status sp_bijection_table(int n, char** text);
sp_status sp_bijection_table_json(int n, char** json);

/* --- verification sweep ---------------------------------------------- */

/* checks_csv: comma-separated subset of
 * lower_cc,pairs,upper,reduction,symmetry,monotonicity; NULL or "" = all.
 * pass is set to 1 when no check found violations. */
sp_status sp_verify(int max_boxes, int jobs, const char* checks_csv, uint64_t seed,
                    int* pass, char** report_text, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* SKEWPOSET_H */
