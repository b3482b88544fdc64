#ifndef GPCALC_H
#define GPCALC_H

/* C interface to the homogeneous-bundle calculator: cohomology tables,
 * tensor decompositions, Euler pairings, collection verification,
 * orthogonal projection of K0 classes, and the fiberwise Clifford
 * certificates.  All results are returned as JSON documents with sorted
 * keys; integers that fit in a signed 64-bit value are JSON numbers,
 * larger ones are decimal strings. */

#ifdef __cplusplus
extern "C" {
#endif

/* return codes */
#define GPC_OK 0         /* success; for verification commands: everything passed */
#define GPC_E_VERIFY 1   /* the computation ran but a verification failed */
#define GPC_E_USAGE 2    /* unparsable arguments, schema violations, bad input */
#define GPC_E_INTERNAL 3 /* unexpected internal failure */

typedef struct gpc_ctx gpc_ctx;

/* Create a context.  cache_dir selects the persistent result cache directory;
 * pass NULL to use the GPCALC_CACHE_DIR environment variable or a per-user
 * default.  enable_cache 0 turns persistence off entirely (in-memory
 * memoization still applies per context).  Returns NULL only on allocation
 * failure. */
gpc_ctx* gpc_ctx_new(const char* cache_dir, int enable_cache);
void gpc_ctx_free(gpc_ctx* ctx);

/* Message for the last failed call on this context ("" if none).  The pointer
 * stays valid until the next call on the same context. */
const char* gpc_last_error(const gpc_ctx* ctx);

/* Release a string returned through an out parameter. */
void gpc_string_free(char* s);

/* Common conventions for the calls below:
 *  - space: a name like "D6/P6", "D5/P5", "E7/P7".
 *  - weight: either coordinates "1,0,0,0,0,-2" (optionally bracketed), the
 *    zero weight "0", or a symbolic combination "w2", "w4-2w6", "2w1+w5" in
 *    Bourbaki numbering.  The crossed-node coordinate is the twist.
 *  - class: a builtin class name ("O_X", "Uw1", "P", "Q", "Qprime", ...)
 *    optionally twisted as "Q(-2)", a weight (parsed as the class of the
 *    irreducible bundle), or an inline JSON array of {"weight": [...],
 *    "coeff": n} terms.
 *  - collection: a path to a collection file, or the file's JSON inline.
 *  - On success *out receives a JSON document (caller frees); on GPC_E_VERIFY
 *    *out still receives the failing report when one exists; on other errors
 *    *out is NULL and gpc_last_error() describes the problem. */

/* Cohomology of the irreducible bundle, one row per twist in
 * [twist_lo, twist_hi]. */
int gpc_bbw(gpc_ctx* ctx, const char* space, const char* weight,
            int twist_lo, int twist_hi, char** out_json);

/* Euler pairing of two classes. */
int gpc_chi(gpc_ctx* ctx, const char* space, const char* class_a,
            const char* class_b, char** out_json);

/* Decomposition of the tensor product of two irreducible bundles, with the
 * fiber-dimension conservation check included in the report. */
int gpc_tensor(gpc_ctx* ctx, const char* space, const char* weight_a,
               const char* weight_b, char** out_json);

/* Gram verification of a collection file: unit diagonal, vanishing strict
 * lower triangle, and the length-versus-K0-rank comparison. */
int gpc_verify(gpc_ctx* ctx, const char* collection, char** out_json);

/* Orthogonalize the irreducible seed class against the collection's objects
 * (corrections by the object twisted down by `index`), reporting the result
 * sorted by twist then weight plus the nonzero correction steps. */
int gpc_project(gpc_ctx* ctx, const char* space, const char* seed_weight,
                const char* collection, int index, char** out_json);

/* Exactness certificates for the rank-n fiber complex, n in {5, 6}. */
int gpc_clifford(gpc_ctx* ctx, int n, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* GPCALC_H */
