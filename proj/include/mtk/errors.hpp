#pragma once

#include <stdexcept>
#include <string>

namespace mtk {

/// Malformed or inconsistent input data (maps to CLI exit status 1).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computed certificate failed its own check (exit status 2).
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured size bound was exceeded (exit status 1).
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mtk
