#include "cullis/report.hpp"

#include <sstream>

namespace cullis {

std::string describe(const VerificationReport& report) {
    std::ostringstream out;
    out << "mode: " << (report.mode == VerificationReport::Mode::Exhaustive ? "exhaustive" : "sampled") << '\n';
    if (report.mode == VerificationReport::Mode::Sampled) {
        out << "samples: " << report.samples << '\n' << "seed: " << report.seed << '\n';
    }
    out << "evaluations: " << report.evaluations << '\n';
    if (report.failure_bound) {
        std::ostringstream bound;
        bound.precision(3);
        bound << std::scientific << *report.failure_bound;
        out << "failure bound: " << bound.str() << '\n';
    }
    out << "result: " << (report.passed ? "pass" : "FAIL") << '\n';
    if (!report.passed) {
        if (!report.detail.empty()) out << "detail: " << report.detail << '\n';
        if (report.witness_subset) out << "witness subset: " << report.witness_subset->to_string() << '\n';
        if (report.witness) out << "witness:\n" << report.witness->to_string();
    }
    return out.str();
}

}  // namespace cullis
