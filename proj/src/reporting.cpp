#include "sqt/reporting.hpp"

#include <cstdio>

namespace sqt {

std::string format_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out = kSweepCsvHeader;
    out += '\n';
    for (std::size_t i = 0; i < result.r_values.size(); ++i)
        for (std::size_t j = 0; j < result.tau_values.size(); ++j) {
            const EntanglementReport& rep = result.at(i, j);
            out += format_g12(result.r_values[i]);
            out += ',';
            out += format_g12(result.tau_values[j]);
            out += ',';
            out += format_g12(rep.e_npt);
            out += ',';
            out += format_g12(rep.concurrence);
            out += ',';
            out += format_g12(rep.eof);
            out += ',';
            out += format_g12(rep.s_linear);
            out += ',';
            out += format_g12(rep.purity);
            out += '\n';
        }
    return out;
}

std::string prep_scan_csv(const PrepScanResult& result) {
    std::string out = "alpha,beta,e_npt\n";
    for (std::size_t i = 0; i < result.alphas.size(); ++i)
        for (std::size_t j = 0; j < result.betas.size(); ++j) {
            out += format_g12(result.alphas[i]);
            out += ',';
            out += format_g12(result.betas[j]);
            out += ',';
            out += format_g12(result.at(i, j));
            out += '\n';
        }
    return out;
}

}  // namespace sqt
