#pragma once

#include <string>
#include <vector>

#include "apn/tensor3.hpp"

namespace apn {

// Outcome of an identity-family check. Witnesses name the violated equation
// tag ("Na1".."Fs1"), the basis index tuple it failed at, and the full
// residual vector, in the deterministic order the checker visited them.
struct IdentityReport {
    struct Witness {
        std::string id;
        std::vector<int> index;
        Vec residual;
    };

    bool passed = true;
    std::vector<Witness> witnesses;

    void record(std::string id, std::vector<int> index, Vec residual);
    void merge(const IdentityReport& o);
};

// Collects residuals; in quick mode it stops at the first failure so search
// loops can discard candidates cheaply.
class Checker {
public:
    explicit Checker(bool quick = false) : quick_(quick) {}

    // Each returns false once checking can stop early.
    bool require_zero(const std::string& id, std::vector<int> index, const Vec& residual);
    bool require_zero(const std::string& id, std::vector<int> index, const Matrix& residual);
    bool require_zero(const std::string& id, std::vector<int> index, const Tensor3& residual);
    bool require(const std::string& id, std::vector<int> index, bool condition);

    bool done() const { return quick_ && !report_.passed; }
    const IdentityReport& report() const { return report_; }
    IdentityReport take() { return std::move(report_); }

private:
    bool quick_;
    IdentityReport report_;
};

}  // namespace apn
