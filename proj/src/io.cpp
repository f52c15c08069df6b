#include "fsst/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace fsst {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  std::string s(buf.data(), end);
  if (std::isfinite(v) && s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

double parse_double(const std::string& field, const std::string& where) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = first + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw DataError(where + ": cannot parse number '" + field + "'");
  }
  return v;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, ',')) out.push_back(cur);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::string line_tag(std::size_t line_no) { return "line " + std::to_string(line_no); }

std::size_t parse_index(const std::string& field, const std::string& where) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw DataError(where + ": cannot parse index '" + field + "'");
  }
  return v;
}

}  // namespace

void write_signal_csv(std::ostream& os, const ComplexSignal& x) {
  os << "n,re,im\n";
  for (std::size_t n = 0; n < x.size(); ++n) {
    const cplx v = x.values()[n];
    os << n << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
  }
}

ComplexSignal read_signal_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || strip_cr(line) != "n,re,im") {
    throw DataError("line 1: expected header 'n,re,im'");
  }
  std::vector<cplx> values;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    const auto where = line_tag(line_no);
    if (fields.size() != 3) throw DataError(where + ": expected 3 fields, got " + std::to_string(fields.size()));
    if (parse_index(fields[0], where) != values.size()) {
      throw DataError(where + ": expected sample index " + std::to_string(values.size()));
    }
    values.emplace_back(parse_double(fields[1], where), parse_double(fields[2], where));
  }
  if (values.size() < 2) throw DataError("signal file needs at least 2 samples, got " + std::to_string(values.size()));
  return ComplexSignal(std::move(values));
}

void write_matrix_csv(std::ostream& os, const TFMatrix& t) {
  const bool power = t.kind() == TfKind::itvps;
  os << (power ? "n,xi,power\n" : "n,l,re,im\n");
  for (std::size_t n = 0; n < t.size(); ++n) {
    for (std::size_t l = 0; l < t.size(); ++l) {
      const cplx v = t(n, l);
      os << n << ',' << l << ',' << format_double(v.real());
      if (!power) os << ',' << format_double(v.imag());
      os << '\n';
    }
  }
}

TFMatrix read_matrix_csv(std::istream& is, TfKind complex_kind) {
  std::string line;
  if (!std::getline(is, line)) throw DataError("line 1: empty matrix file");
  line = strip_cr(line);
  bool power = false;
  if (line == "n,xi,power") {
    power = true;
  } else if (line != "n,l,re,im") {
    throw DataError("line 1: expected header 'n,l,re,im' or 'n,xi,power'");
  }
  const std::size_t width = power ? 3 : 4;
  std::vector<cplx> values;
  std::vector<std::pair<std::size_t, std::size_t>> index;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    const auto where = line_tag(line_no);
    if (fields.size() != width) {
      throw DataError(where + ": expected " + std::to_string(width) + " fields, got " + std::to_string(fields.size()));
    }
    index.emplace_back(parse_index(fields[0], where), parse_index(fields[1], where));
    const double re = parse_double(fields[2], where);
    const double im = power ? 0.0 : parse_double(fields[3], where);
    values.emplace_back(re, im);
  }
  if (values.empty()) throw DataError("matrix file has no data rows");
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(values.size()))));
  if (n * n != values.size() || n < 2) {
    throw DataError("matrix file has " + std::to_string(values.size()) + " rows, which is not N^2 for N >= 2");
  }
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i].first != i / n || index[i].second != i % n) {
      throw DataError(line_tag(i + 2) + ": expected entry (" + std::to_string(i / n) + "," + std::to_string(i % n) +
                      ") in row-major order");
    }
  }
  return TFMatrix(n, power ? TfKind::itvps : complex_kind, std::move(values));
}

nlohmann::json model_to_json(const ComponentModel& model) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : model.components) {
    comps.push_back({{"name", c.name},
                     {"amplitude", c.amplitude},
                     {"linear", c.linear},
                     {"quadratic", c.quadratic},
                     {"cos_amp", c.cos_amp},
                     {"cos_rate", c.cos_rate}});
  }
  return {{"signal", model.signal},
          {"N", model.n},
          {"K", model.count()},
          {"d", model.d},
          {"real_valued", model.real_valued},
          {"components", comps}};
}

ComponentModel model_from_json(const nlohmann::json& j) {
  try {
    ComponentModel m;
    m.signal = j.at("signal").get<std::string>();
    m.n = j.at("N").get<std::size_t>();
    m.d = j.at("d").get<std::int64_t>();
    m.real_valued = j.at("real_valued").get<bool>();
    for (const auto& c : j.at("components")) {
      m.components.push_back(Component{c.at("name").get<std::string>(), c.at("amplitude").get<double>(),
                                       c.at("linear").get<double>(), c.at("quadratic").get<double>(),
                                       c.at("cos_amp").get<double>(), c.at("cos_rate").get<double>()});
    }
    if (j.at("K").get<std::size_t>() != m.count()) throw DataError("model K does not match its component list");
    if (m.n < 2) throw DataError("model N must be at least 2");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed model JSON: ") + e.what());
  }
}

double entry_power(const TFMatrix& t, std::size_t n, std::size_t xi) {
  return t.kind() == TfKind::itvps ? t(n, xi).real() : std::norm(t(n, xi));
}

std::vector<std::uint8_t> render_heatmap(const TFMatrix& t, bool log_scale) {
  const std::size_t n_total = t.size();
  std::vector<double> level(n_total * n_total);
  double peak = 0.0;
  for (std::size_t n = 0; n < n_total; ++n) {
    for (std::size_t xi = 0; xi < n_total; ++xi) {
      const double p = std::max(0.0, entry_power(t, n, xi));
      const double v = log_scale ? std::log10(1.0 + p) : p;
      // Row 0 of the image is the highest frequency bin.
      level[(n_total - 1 - xi) * n_total + n] = v;
      peak = std::max(peak, v);
    }
  }
  std::vector<std::uint8_t> pixels(level.size(), 0);
  if (peak > 0.0) {
    std::transform(level.begin(), level.end(), pixels.begin(),
                   [peak](double v) { return static_cast<std::uint8_t>(std::lround(255.0 * v / peak)); });
  }
  return pixels;
}

void write_pgm(std::ostream& os, const TFMatrix& t, bool log_scale) {
  const auto pixels = render_heatmap(t, log_scale);
  os << "P5\n" << t.size() << ' ' << t.size() << "\n255\n";
  os.write(reinterpret_cast<const char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open '" + path.string() + "' for writing");
  out << contents;
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

}  // namespace fsst
