#include "report.hpp"

#include <stdexcept>

namespace semikit::cli {

  void Report::add(std::string key, std::string value) {
    if (!_keys.insert(key).second) {
      throw std::logic_error("duplicate report key " + key);
    }
    _lines.emplace_back(std::move(key), std::move(value));
  }

  std::string Report::str() const {
    std::string out;
    for (auto const& [key, value] : _lines) {
      out += key + ":" + (value.empty() ? "" : " " + value) + "\n";
    }
    return out;
  }

  std::ostream& operator<<(std::ostream& out, Report const& r) {
    return out << r.str();
  }

}  // namespace semikit::cli
