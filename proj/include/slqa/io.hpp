#pragma once

// Config-file parsing and output writers (CSV, SVG, JSON summary).
//
// Config format: flat "key = value" lines; '#' or ';' starts a comment;
// optional [section] headers are allowed and ignored (keys are global).
// CSV contract: header line, 12-significant-digit floats, LF endings,
// deterministic ordering, so identical configs reproduce byte-identical
// files.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace slqa {

inline std::string format_sig(double x, int sig = 12) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", sig, x);
  return buf;
}

class KeyValueConfig {
 public:
  KeyValueConfig() = default;

  static KeyValueConfig parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str(), path);
  }

  static KeyValueConfig parse_string(const std::string& text, const std::string& origin = "<string>") {
    KeyValueConfig cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto comment = line.find_first_of("#;");
      if (comment != std::string::npos) line = line.substr(0, comment);
      const std::string trimmed = trim(line);
      if (trimmed.empty()) continue;
      if (trimmed.front() == '[' && trimmed.back() == ']') continue;  // section header
      const auto eq = trimmed.find('=');
      if (eq == std::string::npos)
        throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                 ": expected 'key = value', got '" + trimmed + "'");
      const std::string key = trim(trimmed.substr(0, eq));
      const std::string value = trim(trimmed.substr(eq + 1));
      if (key.empty())
        throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": empty key");
      cfg.values_[key] = value;
    }
    return cfg;
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string get_string(const std::string& key, const std::string& fallback) const {
    touch(key);
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }

  double get_double(const std::string& key, double fallback) const {
    touch(key);
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    return parse_double(it->second, key);
  }

  long get_long(const std::string& key, long fallback) const {
    touch(key);
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
      size_t pos = 0;
      const long v = std::stol(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw std::runtime_error("config: key '" + key + "' is not an integer: " + it->second);
    }
  }

  std::vector<double> get_double_list(const std::string& key, std::vector<double> fallback) const {
    touch(key);
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::vector<double> out;
    std::string item;
    std::istringstream ss(it->second);
    while (std::getline(ss, item, ',')) out.push_back(parse_double(trim(item), key));
    if (out.empty())
      throw std::runtime_error("config: key '" + key + "' has an empty list");
    return out;
  }

  void set(const std::string& key, const std::string& value) { values_[key] = value; }

  // Keys present in the file but never read by the experiment layer.
  std::vector<std::string> unused_keys() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : values_)
      if (!touched_.count(k)) out.push_back(k);
    return out;
  }

  const std::map<std::string, std::string>& raw() const { return values_; }
  const std::string& origin() const { return origin_; }

 private:
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  static double parse_double(const std::string& s, const std::string& key) {
    try {
      size_t pos = 0;
      const double v = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw std::runtime_error("config: key '" + key + "' is not a number: " + s);
    }
  }

  void touch(const std::string& key) const { touched_.insert(key); }

  std::map<std::string, std::string> values_;
  std::string origin_;
  mutable std::set<std::string> touched_;
};

// One fidelity curve: column header then "time,fidelity" rows.
inline void write_curve_csv(const std::string& path, const std::vector<double>& times,
                            const std::vector<double>& fidelities) {
  if (times.size() != fidelities.size())
    throw std::invalid_argument("write_curve_csv: length mismatch");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "time_ns,fidelity\n";
  for (size_t i = 0; i < times.size(); ++i)
    out << format_sig(times[i]) << ',' << format_sig(fidelities[i]) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// Minimal polyline plot: axes, ticks, one polyline per series, legend.
inline void write_svg_plot(const std::string& path, const std::vector<SvgSeries>& series,
                           const std::string& title, const std::string& x_label,
                           const std::string& y_label, double y_min = 0.0, double y_max = 1.0) {
  const int W = 800, H = 520;
  const int L = 70, R = 160, T = 50, B = 60;  // margins
  double x_min = 0.0, x_max = 1.0;
  bool first = true;
  for (const auto& s : series)
    for (double v : s.x) {
      if (first || v < x_min) x_min = first ? v : std::min(x_min, v);
      if (first || v > x_max) x_max = first ? v : std::max(x_max, v);
      first = false;
    }
  if (x_max <= x_min) x_max = x_min + 1.0;
  const double pw = W - L - R, ph = H - T - B;
  auto px = [&](double v) { return L + pw * (v - x_min) / (x_max - x_min); };
  auto py = [&](double v) { return T + ph * (1.0 - (v - y_min) / (y_max - y_min)); };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n"
      << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n"
      << "<text x=\"" << (L + pw / 2) << "\" y=\"28\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
  // frame
  out << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  // ticks
  for (int i = 0; i <= 5; ++i) {
    const double xv = x_min + (x_max - x_min) * i / 5.0;
    const double yv = y_min + (y_max - y_min) * i / 5.0;
    out << "<line x1=\"" << px(xv) << "\" y1=\"" << (T + ph) << "\" x2=\"" << px(xv)
        << "\" y2=\"" << (T + ph + 5) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << px(xv) << "\" y=\"" << (T + ph + 20)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_sig(xv, 6) << "</text>\n"
        << "<line x1=\"" << (L - 5) << "\" y1=\"" << py(yv) << "\" x2=\"" << L << "\" y2=\""
        << py(yv) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << (L - 8) << "\" y=\"" << (py(yv) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_sig(yv, 3) << "</text>\n";
  }
  out << "<text x=\"" << (L + pw / 2) << "\" y=\"" << (H - 15)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << x_label
      << "</text>\n"
      << "<text x=\"18\" y=\"" << (T + ph / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 18 " << (T + ph / 2) << ")\">" << y_label << "</text>\n";
  // series
  int ci = 0;
  for (const auto& s : series) {
    const char* color = palette[ci % 8];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < s.x.size(); ++i) {
      if (i) out << ' ';
      out << format_sig(px(s.x[i]), 8) << ',' << format_sig(py(s.y[i]), 8);
    }
    out << "\"/>\n";
    const int ly = T + 18 + 20 * ci;
    out << "<line x1=\"" << (W - R + 12) << "\" y1=\"" << ly << "\" x2=\"" << (W - R + 42)
        << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << (W - R + 48) << "\" y=\"" << (ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label << "</text>\n";
    ++ci;
  }
  out << "</svg>\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory " + dir + ": " + ec.message());
}

}  // namespace slqa
