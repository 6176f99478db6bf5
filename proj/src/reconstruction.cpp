//! \file reconstruction.cpp
//! \brief named scheme construction with default parameters

#include "mapweno/reconstruction.hpp"

namespace mapweno {

Scheme make_scheme(std::string_view name) {
  Scheme s;
  s.kind = mapping_from_string(name);
  switch (s.kind) {
    case MappingKind::im:
      s.params.k = 2;
      s.params.A = 0.1;
      break;
    case MappingKind::maim1:
      s.params.k = 10;
      s.params.A = 1e-6;
      s.params.ms = 0.06;
      break;
    case MappingKind::maim2:
      s.params.k = 2;
      s.params.A = 0.1;
      s.params.Q = 10.0;
      s.params.cfs = 1e-6;
      break;
    case MappingKind::maim3:
      s.params.k = 10;
      s.params.A = 1e-6;
      break;
    case MappingKind::maim4:
      s.params.k = 1;
      s.params.A = 1e-6;
      break;
    case MappingKind::maim5:
      s.params.k = 2;
      s.params.A = 1.0;
      s.params.C = 1.0;
      break;
    default:
      break;
  }
  validate(s.kind, s.params);
  return s;
}

}  // namespace mapweno
