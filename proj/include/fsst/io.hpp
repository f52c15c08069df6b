#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsst/signals.hpp"
#include "fsst/stft.hpp"

namespace fsst {

// Malformed or inconsistent input data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal that parses back to the same double; integral values keep
// a trailing ".0" (1.0, -0.0).
std::string format_double(double v);
// Strict parse of a full field; throws DataError naming `where` on failure.
double parse_double(const std::string& field, const std::string& where);

// Signal CSV: header `n,re,im`, N rows.
void write_signal_csv(std::ostream& os, const ComplexSignal& x);
ComplexSignal read_signal_csv(std::istream& is);

// Matrix CSV: header `n,l,re,im` (or `n,xi,power` for itvps), N^2 rows, row-major in n.
void write_matrix_csv(std::ostream& os, const TFMatrix& t);
// A complex file is tagged with `complex_kind`; a power file is always itvps.
TFMatrix read_matrix_csv(std::istream& is, TfKind complex_kind);

nlohmann::json model_to_json(const ComponentModel& model);
ComponentModel model_from_json(const nlohmann::json& j);

// Per-entry power used for display and metrics: the stored value for itvps,
// |.|^2 otherwise.
double entry_power(const TFMatrix& t, std::size_t n, std::size_t xi);

// Binary P5 heatmap, width N (time, left to right), height N (frequency, bin
// N-1 on the top row). Pixels are power or log10(1 + power), scaled so the
// largest maps to 255.
std::vector<std::uint8_t> render_heatmap(const TFMatrix& t, bool log_scale);
void write_pgm(std::ostream& os, const TFMatrix& t, bool log_scale);

std::string read_text_file(const std::filesystem::path& path);
// Throws DataError when the file cannot be opened for writing.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace fsst
