#include "rainbow/report.hpp"

#include <sstream>

namespace rainbow {

std::string BoundReport::render() const {
    std::ostringstream os;
    os << "task: " << task << "\n";
    os << "branch: " << branch << "\n";
    os << "n: " << n << "\n";
    os << "sigma2: " << (sigma2 ? std::to_string(*sigma2) : "undefined") << "\n";
    if (domset_size > 0) {
        os << "domset_size: " << domset_size << "\n";
        os << "n1_size: " << n1_size << "\n";
        os << "n2_size: " << n2_size << "\n";
        os << "k1: " << k1 << "\n";
        os << "k2: " << k2 << "\n";
    }
    if (task == "rvc" && (d1_size > 0 || d2_size > 0)) {
        os << "d1_size: " << d1_size << "\n";
        os << "d2_size: " << d2_size << "\n";
    }
    os << "palette_size: " << palette_size << "\n";
    if (implemented_bound) os << "implemented_bound: " << implemented_bound->str() << "\n";
    if (statement_bound) os << "statement_bound: " << statement_bound->str() << "\n";
    if (resample_iterations >= 0) os << "resample_iterations: " << resample_iterations << "\n";
    if (lll_holds) os << "lll_condition: " << (*lll_holds ? "true" : "false") << "\n";
    if (task == "rvc") os << "seed: " << seed << "\n";
    os << "verified: " << (verified ? "true" : "false") << "\n";
    os << "runtime_ms: " << runtime_ms << "\n";
    return os.str();
}

}  // namespace rainbow
