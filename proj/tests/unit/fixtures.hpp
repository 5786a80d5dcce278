#ifndef SEMIKIT_TESTS_FIXTURES_HPP_
#define SEMIKIT_TESTS_FIXTURES_HPP_

#include <filesystem>
#include <string>

#include "semikit/kernel.hpp"
#include "semikit/srt_io.hpp"

namespace semikit::testing {

  inline std::filesystem::path data_dir() {
    return SEMIKIT_TEST_DATA_DIR;
  }

  // a, b, 0 with identical tables: a+a = b, everything else 0.
  inline FiniteSemiring example3() {
    return read_srt(data_dir() / "example3.srt");
  }

  inline FiniteSemiring ring_z2() {
    return parse_srt("elements: 0 1\nadd:\n0 1\n1 0\nmul:\n0 0\n0 1\n");
  }

  inline FiniteSemiring max_min() {
    return parse_srt("elements: 0 1\nadd:\n0 1\n1 1\nmul:\n0 0\n0 1\n");
  }

  inline FiniteSemiring xor_xor() {
    return parse_srt("elements: 0 1\nadd:\n0 1\n1 0\nmul:\n0 1\n1 0\n");
  }

  inline FiniteSemiring trivial() {
    return parse_srt("elements: e\nadd:\ne\nmul:\ne\n");
  }

  inline Element at(FiniteSemiring const& s, char const* name) {
    return s.find(name).value();
  }

}  // namespace semikit::testing

#endif  // SEMIKIT_TESTS_FIXTURES_HPP_
