#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "canonica/lift.hpp"
#include "canonica/symgroup.hpp"

namespace canonica {

struct SuiteReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    bool ok() const { return failures.empty(); }
    void check(bool cond, const std::string& what);
};

struct VerifyOptions {
    int max_d = 4;
    int max_n = 4;
    std::uint64_t seed = 20240611;
    int samples = 200;
    Execution exec = Execution::Parallel;
};

// Weak compositions of d with exactly n parts; compositions of d with parts at most max_part.
std::vector<Weight> weak_compositions(int d, int n);
std::vector<Weight> compositions(int d, int max_part);

// lift route == closed Kazhdan-Lusztig route for l, l*, k, k*
SuiteReport verify_routes(const VerifyOptions& o);
// inversion and transpose identities between the four matrices, and on tensor space
SuiteReport verify_inversion(const VerifyOptions& o);
// bar on the coordinate algebra: involution, terminal monomials, reversal rule (m, n <= 3)
SuiteReport verify_qbar(const VerifyOptions& o);
SuiteReport verify_main1(const VerifyOptions& o);
SuiteReport verify_main2(const VerifyOptions& o);
// nonnegative coefficients of k* and of sampled structure constants
SuiteReport verify_positivity(const VerifyOptions& o);
// two-row closed products on random inputs
SuiteReport verify_pod(const VerifyOptions& o);
// R is a bijection onto Dom and commutes with e_i, f_i
SuiteReport verify_crystal(const VerifyOptions& o);
// the Bruhat order criteria on Row(mu,nu) and the column order on Dom
SuiteReport verify_orders(const VerifyOptions& o);
// Kazhdan-Lusztig polynomials of S_3 and S_4 along two linear extensions
SuiteReport verify_kl(const VerifyOptions& o);

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const VerifyOptions& o);

}  // namespace canonica
