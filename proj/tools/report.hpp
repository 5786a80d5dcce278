#ifndef SEMIKIT_TOOLS_REPORT_HPP_
#define SEMIKIT_TOOLS_REPORT_HPP_

#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace semikit::cli {

  // Flat `key: value` lines in insertion order. Keys are unique.
  class Report {
   public:
    void add(std::string key, std::string value);
    void add(std::string key, char const* value) {
      add(std::move(key), std::string(value));
    }
    void add(std::string key, bool value) {
      add(std::move(key), std::string(value ? "true" : "false"));
    }
    void add(std::string key, std::size_t value) {
      add(std::move(key), std::to_string(value));
    }

    [[nodiscard]] std::string str() const;

   private:
    std::vector<std::pair<std::string, std::string>> _lines;
    std::set<std::string>                            _keys;
  };

  std::ostream& operator<<(std::ostream& out, Report const& r);

}  // namespace semikit::cli

#endif  // SEMIKIT_TOOLS_REPORT_HPP_
