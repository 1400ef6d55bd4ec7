#pragma once

#include <cstddef>
#include <stdexcept>

#include "greenosher/support_body.hpp"

namespace greenosher {

struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OriginClass { Interior, Tangent, Invalid };

const char* to_string(OriginClass c);

struct DilationCertificate {
  double r = 0.0;  // inradius r(K,L)
  double R = 0.0;  // outradius R(K,L)
  Vec2 x_in;       // witness translation: x_in + r L is inscribed in K
  Vec2 x_out;      // witness translation: x_out + R L covers K
  OriginClass origin_class = OriginClass::Invalid;
  bool at_dilation_position = false;
};

struct RadiusResult {
  double value = 0.0;
  Vec2 witness;
};

/// Largest t with x + t L contained in K, over all translations x.
/// Containment is enforced at grid nodes, post-verified on a 4x finer grid
/// and re-solved there if the violation exceeds 1e-9.
RadiusResult inradius(const SupportBody& k, const SupportBody& l,
                      std::size_t node_count = 1024);

/// Smallest t with x + t L covering K, over all translations x.
RadiusResult outradius(const SupportBody& k, const SupportBody& l,
                       std::size_t node_count = 1024);

struct DilationPlacement {
  SupportBody k;
  SupportBody l;
  DilationCertificate certificate;
};

/// Translates K and L so that r(K,L) L' <= K' <= R(K,L) L' as pointwise
/// support-function domination and the origin lies in both bodies.  Among
/// feasible translation pairs, the one of minimal norm is selected
/// (max-margin LP followed by a coordinate-descent polish).  Throws
/// Infeasible if no translations satisfy the constraints within slack 1e-6.
DilationPlacement to_dilation_position(const SupportBody& k,
                                       const SupportBody& l,
                                       std::size_t node_count = 1024);

/// Pre: pair at dilation position.  Interior if both support functions stay
/// above tol_boundary; Tangent if both minima vanish at grid-adjacent
/// angles; Invalid otherwise.
OriginClass classify_origin(const SupportBody& k, const SupportBody& l,
                            std::size_t node_count = 1024,
                            double tol_boundary = 1e-7);

}  // namespace greenosher
