#ifndef CMREG_ERRORS_HPP
#define CMREG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmreg {

/** Input text could not be parsed. `offset` is the byte position of the
 *  first offending character. */
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/** An operation that needs a nonzero ideal was handed the zero ideal. */
class zero_ideal_error : public std::domain_error {
public:
  explicit zero_ideal_error(const std::string& what) : std::domain_error(what) {}
};

/** A generator list contained the empty support, i.e. the unit ideal. */
class unit_ideal_error : public std::invalid_argument {
public:
  explicit unit_ideal_error(const std::string& what) : std::invalid_argument(what) {}
};

/** Linear-resolution queries on ideals with mixed generator degrees. */
class mixed_degree_error : public std::domain_error {
public:
  explicit mixed_degree_error(const std::string& what) : std::domain_error(what) {}
};

/** A theorem-backed check was asked outside its hypothesis. */
class not_applicable_error : public std::domain_error {
public:
  explicit not_applicable_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace cmreg

#endif
