#include "orbitvol/rational.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "orbitvol/errors.hpp"

namespace orbitvol {

std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string rat_to_decimal_string(const Rat& q, int sig) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", sig, rat_to_double(q));
  return buf;
}

double rat_to_double(const Rat& q) { return q.convert_to<double>(); }

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Rat parse_rat(const std::string& raw) {
  const std::string s = trim(raw);
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(s)) throw ValidationError("not a rational: '" + raw + "'");
    return Rat(boost::multiprecision::mpz_int(s));
  }
  const std::string num = trim(s.substr(0, slash));
  const std::string den = trim(s.substr(slash + 1));
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw ValidationError("not a rational: '" + raw + "'");
  }
  boost::multiprecision::mpz_int n(num), d(den);
  if (d == 0) throw ValidationError("zero denominator in '" + raw + "'");
  return Rat(n, d);  // mpq construction canonicalizes
}

std::string vec_to_string(const RatVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += rat_to_string(v[i]);
  }
  return out;
}

RatVec parse_rat_vector(const std::string& s) {
  RatVec out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) out.push_back(parse_rat(item));
  if (out.empty()) throw ValidationError("empty vector literal");
  return out;
}

}  // namespace orbitvol
