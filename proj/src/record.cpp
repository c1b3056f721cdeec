#include "galelab/record.hpp"

#include <cctype>

#include "galelab/errors.hpp"

namespace galelab {

Json RunRecord::to_json() const {
  Json j;
  j["command"] = command;
  j["params"] = params;
  j["results"] = results;
  j["seed"] = seed;
  j["trials"] = trials ? Json(*trials) : Json(nullptr);
  j["wallclock_ms"] = wallclock_ms;
  j["version"] = version;
  return j;
}

RunRecord RunRecord::from_json(const Json& j) {
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  r.results = j.at("results");
  r.seed = j.at("seed").get<std::uint64_t>();
  if (!j.at("trials").is_null()) r.trials = j.at("trials").get<std::uint64_t>();
  r.wallclock_ms = j.at("wallclock_ms").get<std::int64_t>();
  r.version = j.at("version").get<std::string>();
  return r;
}

Json rational_json(const Rational& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}, {"decimal", to_decimal(q, 20)}};
}

Rational rational_from_json(const Json& j) {
  Rational q(Integer(j.at("num").get<std::string>(), 10), Integer(j.at("den").get<std::string>(), 10));
  q.canonicalize();
  return q;
}

Json estimate_json(const MCEstimate& est) {
  return Json{{"mean", est.mean},
              {"stderr", est.std_error},
              {"stderr_defined", est.std_error_defined},
              {"ci95", Json::array({est.ci_low, est.ci_high})},
              {"trials", est.trials},
              {"seed", est.seed},
              {"rejected", est.rejected}};
}

MCEstimate estimate_from_json(const Json& j) {
  MCEstimate est;
  est.mean = j.at("mean").get<double>();
  est.std_error = j.at("stderr").get<double>();
  est.std_error_defined = j.at("stderr_defined").get<bool>();
  est.ci_low = j.at("ci95").at(0).get<double>();
  est.ci_high = j.at("ci95").at(1).get<double>();
  est.trials = j.at("trials").get<std::uint64_t>();
  est.seed = j.at("seed").get<std::uint64_t>();
  est.rejected = j.at("rejected").get<std::uint64_t>();
  return est;
}

Rational parse_decimal(const std::string& text) {
  std::size_t i = 0;
  const auto fail = [&] { return DomainError("not a decimal number: '" + text + "'"); };
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits += text[i++];
    seen_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      --scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw fail();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    const std::string exponent = text.substr(i);
    if (exponent.empty()) throw fail();
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exponent, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != exponent.size() || e > 10000 || e < -10000) throw fail();
    scale += e;
    i = text.size();
  }
  if (i != text.size()) throw fail();
  Integer num(digits, 10);
  Integer pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational q = scale < 0 ? Rational(num, pow10) : Rational(num * pow10);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace galelab
