#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "harmonia/fourier.hpp"
#include "harmonia/resolvent.hpp"

namespace harmonia {

// Shortest-safe decimal rendering with 17 significant digits; parses back bit-exactly.
std::string format_double17(double x);
double parse_double(const std::string& text);

// Principal samples: header re_lambda,im_lambda,re_F,im_F.
void write_principal_csv(std::ostream& os, const TransformRecord& record);
// Discrete samples: header k,re_F,im_F.
void write_discrete_csv(std::ostream& os, const TransformRecord& record);
// Reads both tables back into one record (discrete table optional).
TransformRecord read_transform_csv(std::istream& principal, std::istream* discrete = nullptr, int n = 0);

std::string transform_record_to_json(const TransformRecord& record);
TransformRecord transform_record_from_json(const std::string& text);

// Header t,re_f,re_reconstruction,abs_error.
void write_reconstruction_csv(std::ostream& os, const std::vector<ReconstructionRow>& rows);
std::vector<ReconstructionRow> read_reconstruction_csv(std::istream& is);

}  // namespace harmonia
