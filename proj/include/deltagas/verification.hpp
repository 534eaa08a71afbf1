#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltagas/asymptotics.hpp"

namespace deltagas {

struct ReportRow {
    std::string quantity;
    double x = 0.0;
    double numeric = 0.0;
    double series = 0.0;
    double residual = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::vector<ReportRow> rows;
    std::optional<OrderFit> fit;
    bool pass = false;
    std::string summary;
};

// Acceptance checks, one per suite, in acceptance order.
SuiteReport verify_strong_coupling();
SuiteReport verify_charge();
SuiteReport verify_energy();
SuiteReport verify_fint();
SuiteReport verify_factorization();
SuiteReport verify_kernel_decay();
SuiteReport verify_dual_route();
SuiteReport verify_gplus();
SuiteReport verify_bose();
SuiteReport verify_properties();

const std::vector<std::string>& suite_names();
// Throws invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name);

}  // namespace deltagas
