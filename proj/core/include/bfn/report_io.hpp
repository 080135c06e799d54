#pragma once

#include <string>
#include <vector>

#include "bfn/burgers.hpp"
#include "bfn/driver.hpp"

namespace bfn {

/// Render v with 17 significant digits, '.' decimal separator, no locale.
std::string format_double(double v);

void write_report_json(const BfnReport& report, const std::string& path);

/// Columns x, w0, wtilde0, rate; excluded nodes leave the rate cell empty.
void write_profile_csv(const BfnReport& report, const std::string& path);

/// Columns x then one rate column per horizon; NaN rates become empty cells.
void write_figure1_csv(const std::vector<double>& x,
                       const std::vector<double>& horizons,
                       const std::vector<std::vector<double>>& rates,
                       const std::string& path);

/// Gnuplot script that plots every rate column of the matching csv.
void write_figure1_plt(const std::string& csv_name, int n_horizons,
                       const std::string& note, const std::string& path);

/// Columns n, log10|b_n|, g_n for n = 2..2N; zero modes leave cells empty.
void write_bn_csv(const BnSequence& seq, const std::string& path);

}  // namespace bfn
