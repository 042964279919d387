#ifndef COMAX_ERROR_HPP
#define COMAX_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace comax
{

enum class Errc
{
  invalid_parameter,
  resource_limit,
  syntax,
  semantic,
  ambient_mismatch,
  not_in_lattice,
  out_of_scope,
  unsupported_class,
  io,
  internal,
};

const char *to_string(Errc code);

/// Base of every error thrown by the library.
class Error : public std::runtime_error
{
public:
  Error(Errc code, const std::string &what)
  : std::runtime_error(what), _code(code)
  {}

  Errc code() const { return _code; }

private:
  Errc _code;
};

/**
 * Group-spec error positioned at a byte offset of the input: either a
 * syntax error (with the set of tokens that would have been accepted) or a
 * semantic error naming the violated parameter constraint.
 */
class ParseError : public Error
{
public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string &what, Errc code = Errc::syntax)
  : Error(code, what), _offset(offset), _expected(std::move(expected))
  {}

  std::size_t offset() const { return _offset; }
  const std::vector<std::string> &expected() const { return _expected; }

private:
  std::size_t _offset;
  std::vector<std::string> _expected;
};

} // namespace comax

#endif // COMAX_ERROR_HPP
