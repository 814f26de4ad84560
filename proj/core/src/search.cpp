#include "apn/search.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace apn {

namespace {

constexpr std::uint64_t kSaturated = UINT64_MAX;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

// Runs eval over [0, n) split into contiguous per-worker ranges; results are
// concatenated in index order, so the worker count never changes the output.
template <typename Item, typename Eval>
std::vector<Item> run_indexed(std::uint64_t n, int workers, Eval eval) {
    workers = std::max(1, workers);
    if (workers == 1 || n < 2 * static_cast<std::uint64_t>(workers)) {
        std::vector<Item> out;
        for (std::uint64_t i = 0; i < n; ++i) eval(i, out);
        return out;
    }
    std::vector<std::vector<Item>> buckets(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = n * static_cast<std::uint64_t>(w) / workers;
        const std::uint64_t hi = n * static_cast<std::uint64_t>(w + 1) / workers;
        pool.emplace_back([&, lo, hi, w]() {
            for (std::uint64_t i = lo; i < hi; ++i) eval(i, buckets[static_cast<size_t>(w)]);
        });
    }
    for (auto& t : pool) t.join();
    std::vector<Item> out;
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

std::vector<Scalar> default_grid(FieldSpec f) {
    std::vector<Scalar> v;
    if (f.is_rational()) {
        for (long k = -2; k <= 2; ++k) v.push_back(Scalar::of(f, k));
    } else {
        for (unsigned k = 0; k < f.p; ++k) v.push_back(Scalar::of(f, static_cast<long>(k)));
    }
    return v;
}

ApnSearchResult enumerate_apn(int dim, FieldSpec field, int max_nonzero, std::uint64_t budget,
                              std::vector<Scalar> grid, int workers) {
    if (grid.empty()) grid = default_grid(field);
    std::vector<Scalar> nz;
    for (const auto& v : grid)
        if (!v.is_zero()) nz.push_back(v);
    const int slots = 2 * dim * dim * dim;
    max_nonzero = std::min(max_nonzero, slots);

    // Supports in (size, lex) order.
    std::vector<std::vector<int>> supports;
    for (int size = 0; size <= max_nonzero; ++size) {
        std::vector<std::vector<int>> of_size;
        std::vector<int> pick;
        auto rec2 = [&](auto&& self, int start) -> void {
            if (static_cast<int>(pick.size()) == size) {
                of_size.push_back(pick);
                return;
            }
            for (int s = start; s < slots; ++s) {
                pick.push_back(s);
                self(self, s + 1);
                pick.pop_back();
            }
        };
        rec2(rec2, 0);
        supports.insert(supports.end(), of_size.begin(), of_size.end());
    }

    std::vector<std::uint64_t> prefix(supports.size() + 1, 0);
    for (size_t i = 0; i < supports.size(); ++i)
        prefix[i + 1] = prefix[i] == kSaturated
                            ? kSaturated
                            : std::min<std::uint64_t>(
                                  kSaturated, prefix[i] + sat_pow(nz.size(), static_cast<int>(supports[i].size())));
    const std::uint64_t total = prefix.back();
    ApnSearchResult res;
    res.truncated = total > budget;
    const std::uint64_t n = std::min(total, budget);
    res.examined = n;

    auto eval = [&](std::uint64_t idx, std::vector<APNAlgebra>& out) {
        const size_t si = static_cast<size_t>(
            std::upper_bound(prefix.begin(), prefix.end(), idx) - prefix.begin() - 1);
        std::uint64_t off = idx - prefix[si];
        const auto& supp = supports[si];
        APNAlgebra cand{field, BinaryOp(dim, field), BinaryOp(dim, field)};
        for (size_t t = supp.size(); t-- > 0;) {
            const Scalar& v = nz[static_cast<size_t>(off % nz.size())];
            off /= nz.size();
            int slot = supp[t];
            BinaryOp& op = slot < slots / 2 ? cand.succ : cand.prec;
            if (slot >= slots / 2) slot -= slots / 2;
            const int i = slot / (dim * dim);
            const int j = (slot / dim) % dim;
            const int k = slot % dim;
            op.c.at(i, j, k) = v;
        }
        if (is_apn(cand.succ, cand.prec)) out.push_back(cand);
    };
    res.algebras = run_indexed<APNAlgebra>(n, workers, eval);
    return res;
}

namespace {

TensorSearchResult odometer_matrix_search(int rows, int cols, const std::vector<Scalar>& grid,
                                          std::uint64_t budget, int workers,
                                          const std::vector<std::pair<int, int>>& free_slots,
                                          FieldSpec f, bool skew,
                                          const std::function<bool(const Matrix&)>& accept) {
    const std::uint64_t total = sat_pow(grid.size(), static_cast<int>(free_slots.size()));
    TensorSearchResult res;
    res.truncated = total > budget;
    const std::uint64_t n = std::min(total, budget);
    res.examined = n;
    auto eval = [&](std::uint64_t idx, std::vector<Matrix>& out) {
        Matrix m(rows, cols, f);
        std::uint64_t off = idx;
        for (size_t t = free_slots.size(); t-- > 0;) {
            const Scalar& v = grid[static_cast<size_t>(off % grid.size())];
            off /= grid.size();
            const auto [i, j] = free_slots[t];
            m.at(i, j) = v;
            if (skew) m.at(j, i) = -v;
        }
        if (accept(m)) out.push_back(m);
    };
    res.items = run_indexed<Matrix>(n, workers, eval);
    return res;
}

}  // namespace

TensorSearchResult search_ybe_solutions(const APNAlgebra& a, std::vector<Scalar> grid,
                                        bool skew_only, std::uint64_t budget, int workers) {
    if (grid.empty()) grid = default_grid(a.field);
    const int n = a.dim();
    std::vector<std::pair<int, int>> slots;
    if (skew_only) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) slots.emplace_back(i, j);
    }
    auto accept = [&](const Matrix& s) {
        if (skew_only && !(tau2(s) + s).is_zero()) return false;
        return ybe_residual(a, s).is_zero();
    };
    return odometer_matrix_search(n, n, grid, budget, workers, slots, a.field, skew_only, accept);
}

TensorSearchResult search_o_operators(const APNAlgebra& a, const APNRep& rep,
                                      std::vector<Scalar> grid, std::uint64_t budget, int workers) {
    if (grid.empty()) grid = default_grid(a.field);
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < rep.dimV; ++j) slots.emplace_back(i, j);
    auto accept = [&](const Matrix& T) { return check_o_operator_apn(a, rep, T, true).passed; };
    return odometer_matrix_search(a.dim(), rep.dimV, grid, budget, workers, slots, a.field, false,
                                  accept);
}

}  // namespace apn
