#pragma once

// Text format for signed polynomials: a JSON array of [coefficient,
// exponents] pairs, the coefficient a decimal string (bare JSON integers are
// accepted too), the exponents an array of nonnegative integers.
//
//   [["1",[2,0,0]],["-1",[0,2,0]],["-1",[0,0,2]],["-1",[0,0,0]]]
//
// Fractional coefficients and negative exponents are rejected outright.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dio/fileio.hpp"
#include "dio/poly.hpp"

namespace dio {
namespace detail {

inline Int coeff_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_int(j.get<std::string>());
    } catch (const std::exception&) {
      throw std::runtime_error(where + ": coefficient is not a decimal integer: " + j.dump());
    }
  }
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  throw std::runtime_error(where + ": coefficient must be an integer or a decimal string, got " +
                           j.dump());
}

inline std::uint64_t exp_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0) throw std::runtime_error(where + ": negative exponent " + j.dump());
    return static_cast<std::uint64_t>(v);
  }
  throw std::runtime_error(where + ": exponent must be a nonnegative integer, got " + j.dump());
}

template <class Mono>
Mono mono_from_json(const nlohmann::json& j, const std::string& where, bool nonneg_coeff) {
  if (!j.is_array() || j.size() != 2 || !j[1].is_array())
    throw std::runtime_error(where + ": expected [coefficient, [exponents...]], got " + j.dump());
  Int coeff = coeff_from_json(j[0], where);
  if (nonneg_coeff && coeff < 0)
    throw std::runtime_error(where + ": coefficient must be nonnegative, got " + coeff.str());
  std::vector<std::uint64_t> exps;
  exps.reserve(j[1].size());
  for (std::size_t i = 0; i < j[1].size(); ++i)
    exps.push_back(exp_from_json(j[1][i], where + ", exponent " + std::to_string(i)));
  return Mono{std::move(coeff), std::move(exps)};
}

template <class Mono>
std::vector<Mono> mono_list_from_json(const nlohmann::json& j, const std::string& where,
                                      bool nonneg_coeff) {
  if (!j.is_array()) throw std::runtime_error(where + ": expected an array of monomials");
  std::vector<Mono> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(
        mono_from_json<Mono>(j[i], where + ", monomial " + std::to_string(i), nonneg_coeff));
  return out;
}

template <class Mono>
nlohmann::json mono_list_to_json(const std::vector<Mono>& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : p) {
    nlohmann::json exps = nlohmann::json::array();
    for (auto e : m.exps) exps.push_back(e);
    out.push_back(nlohmann::json::array({m.coeff.str(), std::move(exps)}));
  }
  return out;
}

}  // namespace detail

inline Poly parse_poly(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::runtime_error("polynomial: not valid JSON");
  return detail::mono_list_from_json<Monomial>(j, "polynomial", false);
}

inline std::string serialize_poly(const Poly& p) { return detail::mono_list_to_json(p).dump(); }

inline Poly load_poly_file(const std::string& path) {
  try {
    return parse_poly(read_text_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace dio
