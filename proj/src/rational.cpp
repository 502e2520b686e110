// SPDX-License-Identifier: Apache-2.0
#include "pseudoarr/rational.hpp"

#include "pseudoarr/error.hpp"

#include <cmath>

namespace pseudoarr {

Rat sqrt_floor(const Rat &value, unsigned bits)
{
  if (sgn(value) <= 0) {
    return Rat(0);
  }
  // floor(sqrt(value) * 2^bits) = floor(sqrt(value * 4^bits)), and for a
  // rational a/b that equals isqrt(floor(a * 4^bits / b)).
  mpz_class scaled = value.get_num();
  scaled <<= 2 * bits;
  mpz_class quotient;
  mpz_fdiv_q(quotient.get_mpz_t(), scaled.get_mpz_t(), value.get_den().get_mpz_t());
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), quotient.get_mpz_t());
  mpz_class den = 1;
  den <<= bits;
  Rat result(root, den);
  result.canonicalize();
  return result;
}

std::string to_string(const Rat &value)
{
  if (value.get_den() == 1) {
    return value.get_num().get_str();
  }
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view text, bool allow_sign)
{
  if (text.empty()) {
    return false;
  }
  std::size_t i = 0;
  if (allow_sign && text[0] == '-') {
    i = 1;
  }
  if (i == text.size()) {
    return false;
  }
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view text)
{
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_text(num, true)) {
    return std::nullopt;
  }
  mpz_class n(std::string(num), 10);
  mpz_class d = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_text(den, false)) {
      return std::nullopt;
    }
    d = mpz_class(std::string(den), 10);
    if (d == 0) {
      return std::nullopt;
    }
  }
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat from_double(double value, unsigned bits)
{
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::InvalidArgument, "non-finite coordinate");
  }
  const double scaled = std::nearbyint(std::ldexp(value, static_cast<int>(bits)));
  mpz_class num(scaled);
  mpz_class den = 1;
  den <<= bits;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

const char *to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::TangentialContact: return "TangentialContact";
    case ErrorCode::TooManyIntersections: return "TooManyIntersections";
    case ErrorCode::VertexContact: return "VertexContact";
    case ErrorCode::TriplePoint: return "TriplePoint";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::IncompleteTriple: return "IncompleteTriple";
    case ErrorCode::UnknownSignature: return "UnknownSignature";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::DegenerateRadius: return "DegenerateRadius";
    case ErrorCode::NoFullWeightFace: return "NoFullWeightFace";
    case ErrorCode::ReversalCheckFailed: return "ReversalCheckFailed";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace pseudoarr
