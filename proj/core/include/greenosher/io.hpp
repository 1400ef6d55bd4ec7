#pragma once

#include <stdexcept>
#include <string>

#include "greenosher/greenosher.hpp"
#include "greenosher/support_body.hpp"

namespace greenosher {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Body file schema:
///   {"version": 1, "a0": <real>, "cos": [<real>...], "sin": [<real>...]}
/// Lists index harmonic k = 1 upward; absent trailing harmonics are zero.
/// load_body validates strict convexity and throws ValidationError on
/// rejection, ParseError on malformed input.
SupportBody load_body(const std::string& path);
void save_body(const SupportBody& body, const std::string& path);

SupportBody body_from_json_string(const std::string& text);
std::string body_to_json_string(const SupportBody& body);

std::string report_to_json(const GreenOsherReport& report);

}  // namespace greenosher
