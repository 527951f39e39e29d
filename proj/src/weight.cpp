#include "dunkl/weight.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dunkl/error.hpp"

namespace dunkl {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

double parse_number(const std::string& s, const std::string& what) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) fail(ErrorKind::invalid_input, "bad number for " + what + ": '" + s + "'");
  return v;
}

}  // namespace

WeightSpec WeightSpec::power(double exponent, double coeff) {
  WeightSpec w;
  w.exponent_ = exponent;
  w.coeff_ = coeff;
  w.curve_ = Curve::power(coeff, exponent);
  w.label_ = "power:" + num(exponent) + (coeff == 1.0 ? "" : ":" + num(coeff));
  return w;
}

WeightSpec WeightSpec::tabulated(std::vector<double> t, std::vector<double> w) {
  WeightSpec out;
  out.kind_ = Kind::tabulated;
  out.curve_ = Curve::loglog(t, w);
  out.label_ = "tabulated(n=" + std::to_string(t.size()) + ")";
  return out;
}

WeightSpec WeightSpec::from_curve(Curve c, std::string label) {
  WeightSpec out;
  out.kind_ = Kind::curve;
  out.curve_ = std::move(c);
  out.label_ = std::move(label);
  return out;
}

WeightSpec WeightSpec::parse(const std::string& text) {
  if (text == "unit") return power(0.0);
  if (text == "zero") return power(0.0, 0.0);
  if (text.rfind("power:", 0) == 0) {
    const std::string rest = text.substr(6);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) return power(parse_number(rest, "weight exponent"));
    return power(parse_number(rest.substr(0, colon), "weight exponent"),
                 parse_number(rest.substr(colon + 1), "weight coefficient"));
  }
  if (text.rfind("table:", 0) == 0) {
    const std::string path = text.substr(6);
    std::ifstream in(path);
    if (!in) fail(ErrorKind::invalid_input, "cannot open weight table '" + path + "'");
    std::vector<double> t;
    std::vector<double> w;
    std::string line;
    while (std::getline(in, line)) {
      const auto comma = line.find(',');
      if (comma == std::string::npos) continue;
      char* end = nullptr;
      const double a = std::strtod(line.c_str(), &end);
      if (end == line.c_str()) continue;  // header
      t.push_back(a);
      w.push_back(parse_number(line.substr(comma + 1), "weight table value"));
    }
    WeightSpec out = tabulated(std::move(t), std::move(w));
    out.label_ = "table:" + path;
    return out;
  }
  fail(ErrorKind::invalid_input, "unknown weight '" + text + "' (expected power:<a>, unit, zero or table:<path>)");
}

}  // namespace dunkl
