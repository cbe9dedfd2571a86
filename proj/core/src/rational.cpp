#include "contlog/rational.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "contlog/error.hpp"

namespace contlog {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw InvalidInput("not a rational or decimal literal: '" + std::string(text) + "'");
}

mpz_class ten_to(unsigned long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
  return p;
}

mpq_class parse_fraction(std::string_view text, std::size_t slash) {
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) malformed(text);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  mpq_class q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

mpq_class parse_decimal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size() || exp_text.empty()) malformed(text);
    if (exponent > 100000 || exponent < -100000) malformed(text);
    body = body.substr(0, e);
  }

  std::string_view int_part = body;
  std::string_view frac_part;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) malformed(text);
  if (!int_part.empty() && !all_digits(int_part)) malformed(text);
  if (!frac_part.empty() && !all_digits(frac_part)) malformed(text);

  mpz_class mantissa(std::string(int_part) + std::string(frac_part), 10);
  exponent -= static_cast<long>(frac_part.size());

  mpq_class q(mantissa);
  if (exponent >= 0) {
    q *= ten_to(static_cast<unsigned long>(exponent));
  } else {
    q /= ten_to(static_cast<unsigned long>(-exponent));
  }
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) malformed(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) return parse_fraction(text, slash);
  return parse_decimal(text);
}

std::string format_rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_str(10);
}

}  // namespace contlog
