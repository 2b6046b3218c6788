#include "bachflow/soliton.hpp"

#include <sstream>

namespace bachflow {

std::string_view to_string(SolitonType t) {
  switch (t) {
    case SolitonType::steady:
      return "steady";
    case SolitonType::shrinking:
      return "shrinking";
    case SolitonType::expanding:
      return "expanding";
    case SolitonType::none:
      return "none";
    case SolitonType::gaussian:
      return "gaussian";
  }
  return "none";
}

SolitonType parse_soliton_type(std::string_view text) {
  for (auto t : {SolitonType::steady, SolitonType::shrinking, SolitonType::expanding, SolitonType::none,
                 SolitonType::gaussian})
    if (to_string(t) == text) return t;
  throw UsageError("unknown soliton type '" + std::string(text) + "'");
}

namespace {

std::string coefficient_text(const Rational& r) { return to_string(r); }

std::string coefficient_text(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

template <class T>
std::string render(const std::vector<T>& q) {
  static const std::vector<std::vector<std::string>> vars = {{"r"}, {"x", "y"}, {"x", "y", "z"}};
  static const std::vector<std::string> linear = {"a", "b", "d"};
  const std::size_t k = q.size();
  if (k == 0 || k > vars.size()) return "f = const";
  const auto& v = vars[k - 1];

  std::string args;
  for (std::size_t i = 0; i < k; ++i) args += (i ? "," : "") + v[i];
  std::string out = "f(" + args + ") = ";

  bool all_equal = true;
  for (const auto& c : q) all_equal = all_equal && c == q[0];
  if (all_equal && q[0] != T{}) {
    if (k == 1) {
      out += coefficient_text(q[0]) + " r^2 + ";
    } else {
      std::string squares;
      for (std::size_t i = 0; i < k; ++i) squares += (i ? " + " : "") + v[i] + "^2";
      out += coefficient_text(q[0]) + " (" + squares + ") + ";
    }
  } else if (!all_equal) {
    for (std::size_t i = 0; i < k; ++i)
      if (q[i] != T{}) out += coefficient_text(q[i]) + " " + v[i] + "^2 + ";
  }
  for (std::size_t i = 0; i < k; ++i) out += linear[i] + " " + v[i] + " + ";
  out += k == 1 ? "b" : (k == 2 ? "d" : "k");
  return out;
}

}  // namespace

std::string potential_text(const Potential<Rational>& p) { return render(p.quadratic); }
std::string potential_text(const Potential<double>& p) { return render(p.quadratic); }

}  // namespace bachflow
