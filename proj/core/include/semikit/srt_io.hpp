#ifndef SEMIKIT_SRT_IO_HPP_
#define SEMIKIT_SRT_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "semikit/kernel.hpp"

namespace semikit {

  // .srt: `elements: n0 n1 ...`, then `add:` with n rows, then `mul:` with
  // n rows. '#' starts a comment. Errors are ParseError with file:line.
  FiniteSemiring parse_srt(std::string_view text,
                           std::string const& source = "<input>");
  FiniteSemiring read_srt(std::filesystem::path const& path);

  std::string to_srt(FiniteSemiring const& s);
  void        write_srt(std::filesystem::path const& path,
                        FiniteSemiring const&        s);

  std::string read_text(std::filesystem::path const& path);
  void        write_text(std::filesystem::path const& path,
                         std::string const&           text);

  namespace detail {

    struct SourceLine {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    // Non-blank lines with comments removed, split on whitespace.
    std::vector<SourceLine> tokenize(std::string_view text);

    [[noreturn]] void parse_error(std::string const& source,
                                  std::size_t        line,
                                  std::string const& message);

    // Parses one .srt block starting at lines[pos]; advances pos past it.
    FiniteSemiring parse_srt_block(std::vector<SourceLine> const& lines,
                                   std::size_t&                   pos,
                                   std::string const&             source);

  }  // namespace detail

}  // namespace semikit

#endif  // SEMIKIT_SRT_IO_HPP_
