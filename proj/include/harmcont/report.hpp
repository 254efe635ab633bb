#pragma once

#include <string>

#include "harmcont/continuum.hpp"
#include "harmcont/dtn.hpp"
#include "harmcont/spectral.hpp"
#include "harmcont/tncheck.hpp"
#include "harmcont/transfer.hpp"

namespace harmcont {

// Structured text reports. All writers are deterministic: equal inputs give
// byte-identical documents. Index sets are printed 1-based.

std::string matrix_to_text(const MatQ& m);
std::string matrix_to_text(const MatD& m);
MatQ matrix_q_from_text(const std::string& text);

std::string transfer_report(const TransferOperator<Rational>& op, int rows, int cols);
std::string transfer_report(const TransferOperator<double>& op, int rows, int cols);
TransferOperator<Rational> transfer_from_report(const std::string& text);

std::string minor_certificate_report(const MinorCertificate& cert, const Rational& determinant);

std::string spectrum_report_text(const SpectrumReport& report);
// CSV row: descriptor,R,s,min_root_lower_bound,verdict
std::string spectrum_csv_row(const std::string& descriptor, int rows, int s,
                             const SpectrumReport& report);

std::string dtn_report(const DtNMap& map, int rows, int cols);

std::string probe_report(const DtnSpectrumProbe& probe);
DtnSpectrumProbe probe_from_report(const std::string& text);

std::string study_report(const RefinementStudy& study);
std::string study_csv(const RefinementStudy& study);

}  // namespace harmcont
