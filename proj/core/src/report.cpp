#include "apn/report.hpp"

namespace apn {

void IdentityReport::record(std::string id, std::vector<int> index, Vec residual) {
    passed = false;
    witnesses.push_back(Witness{std::move(id), std::move(index), std::move(residual)});
}

void IdentityReport::merge(const IdentityReport& o) {
    passed = passed && o.passed;
    witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
}

bool Checker::require_zero(const std::string& id, std::vector<int> index, const Vec& residual) {
    if (!is_zero(residual)) report_.record(id, std::move(index), residual);
    return !done();
}

bool Checker::require_zero(const std::string& id, std::vector<int> index, const Matrix& residual) {
    if (!residual.is_zero()) {
        Vec flat;
        flat.reserve(static_cast<size_t>(residual.rows()) * residual.cols());
        for (int i = 0; i < residual.rows(); ++i)
            for (int j = 0; j < residual.cols(); ++j) flat.push_back(residual.at(i, j));
        report_.record(id, std::move(index), std::move(flat));
    }
    return !done();
}

bool Checker::require_zero(const std::string& id, std::vector<int> index, const Tensor3& residual) {
    if (!residual.is_zero()) {
        Vec flat;
        flat.reserve(static_cast<size_t>(residual.dim1()) * residual.dim2() * residual.dim3());
        for (int i = 0; i < residual.dim1(); ++i)
            for (int j = 0; j < residual.dim2(); ++j)
                for (int k = 0; k < residual.dim3(); ++k) flat.push_back(residual.at(i, j, k));
        report_.record(id, std::move(index), std::move(flat));
    }
    return !done();
}

bool Checker::require(const std::string& id, std::vector<int> index, bool condition) {
    if (!condition) report_.record(id, std::move(index), {});
    return !done();
}

}  // namespace apn
