#pragma once

#include <complex>
#include <string>
#include <vector>

#include "su2q/diagnostics.hpp"
#include "su2q/fourier.hpp"
#include "su2q/group.hpp"
#include "su2q/quantize.hpp"
#include "su2q/symbols.hpp"

namespace su2q {

// JSON formats (complex numbers serialize as [re, im] everywhere):
//   grid     {"two_l_max": E, "nodes": [[x0,x1,x2,x3], ...], "weights": [...]}
//   function {"two_L": L, "coeffs": {"0": [[[re,im],...]], "1": ...}} keyed by two_l
//   samples  {"values": [[re,im], ...]} in grid node order
//   symbol   {"two_L", "x_two_L", "grid_ref": <grid>, "x_invariant",
//             "data": {"<two_l>": [node][row][col] -> [re,im]}}
// Malformed input raises std::invalid_argument with a schema diagnostic.

std::string grid_to_json(const QuadratureGrid& grid);
QuadratureGrid grid_from_json(const std::string& text);

std::string function_to_json(const BandLimitedFunction& f);
BandLimitedFunction function_from_json(const std::string& text);

std::string samples_to_json(const std::vector<std::complex<double>>& values);
std::vector<std::complex<double>> samples_from_json(const std::string& text);

std::string symbol_to_json(const Symbol& sigma);
Symbol symbol_from_json(const std::string& text);

std::string decay_report_to_json(const DecayReport& report);
std::string l2_report_to_json(const L2Report& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace su2q
