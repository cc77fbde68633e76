#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qlimit/optomech/sweep.hpp"

namespace qlimit::cli {

/// printf "%.12e".
std::string format_number(double v);

inline constexpr const char* kSweepHeader =
    "omega,S_f,S_q,SQL_f,UQL_f,SQL_q,UQL_q,lambda_re,lambda_im,stable";

inline constexpr const char* kFig2Header =
    "omega,SQL_f,UQL_f,SQL_q,UQL_q,S_f_detuned,S_q_detuned,S_f_locking,S_q_locking,"
    "lambda_re,lambda_im";

/// LF line endings; a point that failed is written as "ERROR:<reason>".
void write_sweep_csv(std::ostream& out, const optomech::SensitivityCurve& curve);

/// Detuned and locking curves on a shared grid; the reference columns come from
/// the detuned curve (both use the same oscillator).
void write_fig2_csv(std::ostream& out, const optomech::SensitivityCurve& detuned,
                    const optomech::SensitivityCurve& locking);

}  // namespace qlimit::cli
