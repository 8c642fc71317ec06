#ifndef SELFPOWER_ERRORS_HPP
#define SELFPOWER_ERRORS_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace selfpower {

// A configured budget (memory, enumeration count) would be exceeded.
// The message names the budget and the offending request.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Output file or journal trouble; carries the path in the message.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace selfpower

#endif
