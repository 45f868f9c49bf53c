#pragma once

#include <algorithm>

namespace tautdrg {

struct Tolerances {
    double eig = 1e-10;       // relative, eigen-decomposition and idempotent residuals
    double rank = 1e-8;       // Gram-Schmidt drop threshold (relative to input norm)
    double cluster = 1e-7;    // eigenvalue clustering, scaled by max(1, ||M||)
    double module = 1e-8;     // T-module identities
    double classify = 1e-9;   // relative, equality tests in the classification

    double cluster_for(double matrix_norm) const { return cluster * std::max(1.0, matrix_norm); }

    bool valid() const
    {
        return eig > 0 && rank > 0 && cluster > 0 && module > 0 && classify > 0;
    }
};

}  // namespace tautdrg
