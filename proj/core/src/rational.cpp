#include "reconfrel/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace reconfrel {

Int pow10(int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

Rat parse_decimal(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty number");

  bool neg = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  auto slash = s.find('/', i);
  if (slash != std::string::npos) {
    Int num(s.substr(i, slash - i));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    Rat r(num, den);
    return neg ? -r : r;
  }

  std::string int_part, frac_part;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("malformed number: " + text);
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      (seen_dot ? frac_part : int_part) += c;
    } else {
      throw std::invalid_argument("malformed number: " + text);
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed number: " + text);

  Int num = int_part.empty() ? Int(0) : Int(int_part);
  num *= pow10(static_cast<int>(frac_part.size()));
  if (!frac_part.empty()) num += Int(frac_part);
  Rat r(num, pow10(static_cast<int>(frac_part.size())));
  return neg ? -r : r;
}

namespace {

// floor(value * 10^shift + 1/2) for value >= 0
Int round_half_up_scaled(const Rat& value, int shift) {
  Int num = numerator(value);
  Int den = denominator(value);
  if (shift >= 0)
    num *= pow10(shift);
  else
    den *= pow10(-shift);
  return (2 * num + den) / (2 * den);
}

}  // namespace

std::string fixed_decimal_string(const Rat& value, int decimals) {
  bool neg = value < 0;
  Rat a = neg ? Rat(-value) : value;
  Int n = round_half_up_scaled(a, decimals);
  Int scale = pow10(decimals);
  std::string out = (neg && n != 0) ? "-" : "";
  out += Int(n / scale).str();
  if (decimals > 0) {
    std::string frac = Int(n % scale).str();
    out += "." + std::string(decimals - frac.size(), '0') + frac;
  }
  return out;
}

std::string decimal_string(const Rat& value, int sig_digits) {
  if (sig_digits < 1) sig_digits = 1;
  if (value == 0) return "0";
  bool neg = value < 0;
  Rat a = neg ? Rat(-value) : value;

  // exponent e with 10^e <= a < 10^(e+1)
  int e = 0;
  {
    Rat t = a;
    if (t >= 1) {
      while (t >= 10) {
        t /= 10;
        ++e;
      }
    } else {
      while (t < 1) {
        t *= 10;
        --e;
      }
    }
  }

  Int n = round_half_up_scaled(a, sig_digits - 1 - e);
  if (n >= pow10(sig_digits)) {
    n /= 10;
    ++e;
  }
  std::string digits = n.str();

  std::string out = neg ? "-" : "";
  if (e >= static_cast<int>(digits.size()) - 1) {
    out += digits + std::string(e - (digits.size() - 1), '0');
    return out;
  }
  if (e >= 0) {
    out += digits.substr(0, e + 1) + "." + digits.substr(e + 1);
  } else {
    out += "0." + std::string(-e - 1, '0') + digits;
  }
  // strip trailing fractional zeros
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

std::string rational_string(const Rat& value) {
  Int num = numerator(value);
  Int den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace reconfrel
