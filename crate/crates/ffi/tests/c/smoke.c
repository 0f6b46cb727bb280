#include <stdio.h>
#include "froblab.h"

int main(void) {
    int64_t f = 0;
    if (froblab_frobenius_number(5, 7, 8, &f) != FROBLAB_STATUS_OK) {
        return 10;
    }
    uint64_t n = 0;
    if (froblab_n_exact(5, 7, 8, &n) != FROBLAB_STATUS_OK) {
        return 11;
    }
    if (froblab_frobenius_number(6, 10, 15, &f) != FROBLAB_STATUS_OK) {
        return 12;
    }
    int64_t bad = 0;
    FroblabStatus st = froblab_frobenius_number(4, 6, 8, &bad);
    if (st != FROBLAB_STATUS_NOT_COPRIME) {
        return 13;
    }

    FroblabResidueTable *table = NULL;
    uint64_t gens[] = {7, 8};
    if (froblab_residue_table_new(5, gens, 2, &table) != FROBLAB_STATUS_OK) {
        return 14;
    }
    int64_t tf = 0;
    froblab_residue_table_frobenius(table, &tf);
    froblab_residue_table_free(table);

    FroblabPairList *pairs = NULL;
    if (froblab_inverse_pairs(1000, &pairs) != FROBLAB_STATUS_OK) {
        return 15;
    }
    size_t count = froblab_pair_list_len(pairs);
    froblab_pair_list_free(pairs);

    printf("%lld %llu %lld %lld %zu %s\n", (long long)f, (unsigned long long)n, (long long)tf,
           (long long)bad, count, froblab_last_error_message()[0] != '\0' ? "err" : "none");
    return 0;
}
