#ifndef RBPERM_ERRORS_HPP
#define RBPERM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rbperm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotABijection : Error {
  using Error::Error;
};
struct NotAPartition : Error {
  using Error::Error;
};
struct EmptyPermutation : Error {
  using Error::Error;
};
struct PositionOutOfRange : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct NonPositiveTheta : Error {
  using Error::Error;
};
struct UnsupportedCell : Error {
  using Error::Error;
};
struct SupportTooLarge : Error {
  using Error::Error;
};
struct NTooLarge : Error {
  using Error::Error;
};
struct EmptyInput : Error {
  using Error::Error;
};

}  // namespace rbperm

#endif
