#include "maxplus/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

mpq_class parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpq_class result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    result = mpq_class(mpz_class(std::string(num), 10), d);
    result.canonicalize();
  } else {
    std::string_view int_part = body;
    std::string_view frac_part;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
      int_part = body.substr(0, dot);
      frac_part = body.substr(dot + 1);
      if (!frac_part.empty() && !all_digits(frac_part)) {
        throw ParseError("malformed decimal '" + std::string(text) + "'");
      }
      if (int_part.empty() && frac_part.empty()) {
        throw ParseError("malformed decimal '" + std::string(text) + "'");
      }
    }
    if (!int_part.empty() && !all_digits(int_part)) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    if (int_part.empty() && frac_part.empty()) {
      throw ParseError("empty number");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    result = mpq_class(mpz_class(digits.empty() ? "0" : digits, 10), scale);
    result.canonicalize();
  }
  return negative ? mpq_class(-result) : result;
}

}  // namespace

Scalar::Scalar(mpq_class value) : kind_(Kind::Finite), value_(std::move(value)) {
  value_.canonicalize();
}

Scalar Scalar::pos_inf() {
  Scalar s;
  s.kind_ = Kind::PosInf;
  return s;
}

Scalar Scalar::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())) != 0) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0) text.remove_suffix(1);
  if (text == "-inf") return neg_inf();
  if (text == "+inf" || text == "inf") return pos_inf();
  return Scalar(parse_rational(text));
}

const mpq_class& Scalar::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("value() of an infinite scalar");
  return value_;
}

std::string Scalar::to_string() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "+inf";
    case Kind::Finite:
      break;
  }
  return rational_to_string(value_);
}

std::string rational_to_string(const mpq_class& q) {
  mpz_class den = q.get_den();
  unsigned twos = 0;
  unsigned fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2) != 0) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5) != 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return q.get_str(10);

  const unsigned places = std::max(twos, fives);
  if (places == 0) return q.get_num().get_str(10);

  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = q.get_num() * (scale / q.get_den());
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str(10);
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != Scalar::Kind::Finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != Scalar::Kind::Finite) return std::strong_ordering::equal;
  return cmp(a.value_, b.value_) <=> 0;
}

Scalar oplus(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

Scalar otimes(const Scalar& a, const Scalar& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return Scalar::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return Scalar::pos_inf();
  return Scalar(mpq_class(a.value() + b.value()));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace maxplus
