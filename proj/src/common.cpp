#include "dirichlet/common.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

namespace dirichlet {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooFewBoundaryNodes: return "TooFewBoundaryNodes";
    case ErrorCode::BoundaryNotIndependent: return "BoundaryNotIndependent";
    case ErrorCode::BoundaryValuesNotInjective: return "BoundaryValuesNotInjective";
    case ErrorCode::DisconnectedAfterNormalization: return "DisconnectedAfterNormalization";
    case ErrorCode::DisconnectedAugmentation: return "DisconnectedAugmentation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::NotSemicompatible: return "NotSemicompatible";
    case ErrorCode::OnHyperplane: return "OnHyperplane";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::NotPositiveWeights: return "NotPositiveWeights";
    case ErrorCode::DidNotConverge: return "DidNotConverge";
    case ErrorCode::RoundtripFailure: return "RoundtripFailure";
    case ErrorCode::NonzeroRemainder: return "NonzeroRemainder";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

Limits Limits::from_states(std::uint64_t states) {
  Limits limits;
  limits.max_states = states;
  int log2 = 0;
  while (log2 < 63 && (std::uint64_t{1} << (log2 + 1)) <= states) ++log2;
  limits.max_orientation_edges = log2;
  limits.max_tree_edges = log2;

  // Bell numbers via the Bell triangle, stopping once they exceed the budget.
  std::vector<long double> row{1.0L};
  int d = 1;
  while (true) {
    std::vector<long double> next{row.back()};
    for (long double x : row) next.push_back(next.back() + x);
    // next.front() is Bell(d)
    if (next.front() > static_cast<long double>(states) || d > 60) break;
    row = std::move(next);
    ++d;
  }
  limits.max_partition_vertices = d - 1;
  return limits;
}

Limits Limits::from_env() {
  const char* raw = std::getenv("DIRICHLET_MAX_STATES");
  if (raw == nullptr || *raw == '\0') return Limits{};
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) {
    throw Error(ErrorCode::MalformedInput,
                std::string("DIRICHLET_MAX_STATES is not a positive integer: ") + raw);
  }
  return from_states(value);
}

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Error {
    return Error(ErrorCode::MalformedInput, "not a rational number: '" + std::string(text) + "'");
  };
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw fail();

  auto is_integer = [](std::string_view v) {
    std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    }
    return true;
  };
  auto strip_plus = [](std::string v) {
    if (!v.empty() && v[0] == '+') v.erase(0, 1);
    return v;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den)) throw fail();
    BigInt p(strip_plus(num)), q(strip_plus(den));
    if (q == 0) throw fail();
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
    if (!is_integer(whole) || frac.empty()) throw fail();
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w(strip_plus(whole)), f(frac);
    BigInt num = abs(w) * scale + f;
    if (negative) num = -num;
    Rational r(num, scale);
    r.canonicalize();
    return r;
  }
  if (!is_integer(s)) throw fail();
  return Rational(BigInt(strip_plus(s)));
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace dirichlet
