#pragma once

#include <cstdint>

#include "apn/bialgebra.hpp"
#include "apn/operators.hpp"

namespace apn {

// All searches enumerate a fixed candidate order (an odometer over
// structure-constant slots, last slot fastest), verify every candidate with
// the corresponding checker before emission, and cap work at `budget`
// candidates; hitting the cap sets `truncated` instead of failing silently.
// Partitioning the index space over `workers` threads cannot change the
// output or its order.

struct ApnSearchResult {
    std::vector<APNAlgebra> algebras;
    bool truncated = false;
    std::uint64_t examined = 0;
};

// Candidate values per slot: the whole field for GF(p), the given grid for
// the rationals (must contain 0 unless sparsity enumeration covers it).
std::vector<Scalar> default_grid(FieldSpec f);

// Every (succ, prec) pair with at most `max_nonzero` nonzero structure
// constants drawn from the nonzero grid values, in (support-size,
// support-lex, value-odometer) order.
ApnSearchResult enumerate_apn(int dim, FieldSpec field, int max_nonzero,
                              std::uint64_t budget = 2'000'000,
                              std::vector<Scalar> grid = {}, int workers = 1);

struct TensorSearchResult {
    std::vector<Matrix> items;
    bool truncated = false;
    std::uint64_t examined = 0;
};

// All s over the grid with ybe_residual(a, s) = 0; with skew_only the free
// slots are the above-diagonal entries and s is completed skew-symmetrically.
TensorSearchResult search_ybe_solutions(const APNAlgebra& a, std::vector<Scalar> grid,
                                        bool skew_only, std::uint64_t budget = 2'000'000,
                                        int workers = 1);

// All T: V -> A over the grid passing check_o_operator_apn.
TensorSearchResult search_o_operators(const APNAlgebra& a, const APNRep& rep,
                                      std::vector<Scalar> grid, std::uint64_t budget = 2'000'000,
                                      int workers = 1);

}  // namespace apn
