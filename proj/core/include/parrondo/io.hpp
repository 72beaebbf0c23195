#pragma once

// Serialization: JSON reports for single analyses, CSV for matrices and
// sweeps.  Exact scalars render as "numerator/denominator", floats as
// decimals with 17 significant digits.

#include "parrondo/engine.hpp"
#include "parrondo/sim.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace parrondo {

std::string analyze_json(const AnalyzeReport& rep);
std::string pattern_json(const PatternReport& rep);
std::string simulation_json(const SimConfig& cfg, const SimulationResult& res,
                            const std::optional<CltDiagnostic>& clt = std::nullopt);

void write_matrix_csv(std::ostream& out, const Matrix<Rational>& m);
void write_matrix_csv(std::ostream& out, const Matrix<double>& m);
std::string matrix_json(const Matrix<Rational>& m);
std::string matrix_json(const Matrix<double>& m);

inline const char* sweep_csv_header() { return "r,s,N,rho,gamma_equiv,mu,sigma2,method,mode"; }

}  // namespace parrondo
