#pragma once

#include <stdexcept>
#include <string>

namespace nilsymp {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidRank : Error { using Error::Error; };
struct NotARoot : Error { using Error::Error; };
struct BadT : Error { using Error::Error; };
struct NotAFiltration : Error { using Error::Error; };
struct NotApplicable : Error { using Error::Error; };
struct AbelianInput : Error { using Error::Error; };
struct OddDim : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct NotNilpotent : Error { using Error::Error; };
struct JacobiFail : Error { using Error::Error; };
struct InvalidCase : Error { using Error::Error; };

}  // namespace nilsymp
