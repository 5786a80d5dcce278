#include "semikit/srt_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "semikit/error.hpp"

namespace semikit {

  namespace detail {

    std::vector<SourceLine> tokenize(std::string_view text) {
      std::vector<SourceLine> out;
      std::size_t             number = 0;
      std::size_t             start  = 0;
      while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++number;
        auto line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
          line = line.substr(0, hash);
        }
        std::istringstream       in{std::string(line)};
        std::vector<std::string> tokens;
        for (std::string tok; in >> tok;) {
          tokens.push_back(std::move(tok));
        }
        if (!tokens.empty()) {
          out.push_back({number, std::move(tokens)});
        }
        start = end + 1;
      }
      return out;
    }

    void parse_error(std::string const& source,
                     std::size_t        line,
                     std::string const& message) {
      throw Error(ErrorKind::ParseError,
                  source + ":" + std::to_string(line) + ": " + message);
    }

    namespace {

      std::size_t line_of(std::vector<SourceLine> const& lines,
                          std::size_t                    pos) {
        if (pos < lines.size()) {
          return lines[pos].number;
        }
        return lines.empty() ? 1 : lines.back().number + 1;
      }

      void expect_header(std::vector<SourceLine> const& lines,
                         std::size_t                    pos,
                         std::string const&             header,
                         std::string const&             source) {
        if (pos >= lines.size()) {
          parse_error(source,
                      line_of(lines, pos),
                      "missing '" + header + "' section");
        }
        auto const& toks = lines[pos].tokens;
        if (toks.front() != header) {
          parse_error(source,
                      lines[pos].number,
                      "expected '" + header + "', found '" + toks.front()
                          + "'");
        }
        if (toks.size() != 1) {
          parse_error(source,
                      lines[pos].number,
                      "unexpected content after '" + header + "'");
        }
      }

      OpTable parse_rows(std::vector<SourceLine> const&        lines,
                         std::size_t&                          pos,
                         std::map<std::string, Element> const& index,
                         std::string const&                    section,
                         std::string const&                    source) {
        auto const           n = index.size();
        std::vector<Element> entries;
        entries.reserve(n * n);
        for (std::size_t row = 0; row < n; ++row, ++pos) {
          if (pos >= lines.size()) {
            parse_error(source,
                        line_of(lines, pos),
                        "'" + section + "' table has " + std::to_string(row)
                            + " rows, expected " + std::to_string(n));
          }
          auto const& toks = lines[pos].tokens;
          if (toks.size() != n) {
            parse_error(source,
                        lines[pos].number,
                        "ragged row in '" + section + "': "
                            + std::to_string(toks.size())
                            + " entries, expected " + std::to_string(n));
          }
          for (auto const& tok : toks) {
            auto it = index.find(tok);
            if (it == index.end()) {
              parse_error(source,
                          lines[pos].number,
                          "unknown element name '" + tok + "'");
            }
            entries.push_back(it->second);
          }
        }
        return OpTable(n, std::move(entries));
      }

    }  // namespace

    FiniteSemiring parse_srt_block(std::vector<SourceLine> const& lines,
                                   std::size_t&                   pos,
                                   std::string const&             source) {
      if (pos >= lines.size() || lines[pos].tokens.front() != "elements:") {
        parse_error(source,
                    line_of(lines, pos),
                    "expected 'elements:' line");
      }
      auto const&                    head = lines[pos].tokens;
      std::vector<std::string>       names(head.begin() + 1, head.end());
      std::map<std::string, Element> index;
      if (names.empty()) {
        parse_error(source, lines[pos].number, "carrier must be nonempty");
      }
      for (auto const& nm : names) {
        if (!is_valid_name(nm) || nm.back() == ':') {
          parse_error(source,
                      lines[pos].number,
                      "invalid element name '" + nm + "'");
        }
        if (!index.emplace(nm, static_cast<Element>(index.size())).second) {
          parse_error(source,
                      lines[pos].number,
                      "duplicate element name '" + nm + "'");
        }
      }
      ++pos;
      expect_header(lines, pos, "add:", source);
      ++pos;
      auto add = parse_rows(lines, pos, index, "add", source);
      expect_header(lines, pos, "mul:", source);
      ++pos;
      auto mul = parse_rows(lines, pos, index, "mul", source);
      return FiniteSemiring(std::move(names), std::move(add), std::move(mul));
    }

  }  // namespace detail

  FiniteSemiring parse_srt(std::string_view text, std::string const& source) {
    auto        lines = detail::tokenize(text);
    std::size_t pos   = 0;
    auto        s     = detail::parse_srt_block(lines, pos, source);
    if (pos != lines.size()) {
      detail::parse_error(source,
                          lines[pos].number,
                          "unexpected content after 'mul' table");
    }
    return s;
  }

  std::string read_text(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::IoError, "cannot open " + path.string());
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  }

  void write_text(std::filesystem::path const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      throw Error(ErrorKind::IoError, "cannot write " + path.string());
    }
  }

  FiniteSemiring read_srt(std::filesystem::path const& path) {
    return parse_srt(read_text(path), path.string());
  }

  std::string to_srt(FiniteSemiring const& s) {
    auto const  n = static_cast<Element>(s.order());
    std::string out = "elements:";
    for (auto const& nm : s.names()) {
      out += " " + nm;
    }
    out += "\n";
    for (Op op : {Op::Add, Op::Mul}) {
      out += op == Op::Add ? "add:\n" : "mul:\n";
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          out += (b == 0 ? "" : " ") + s.name(s.apply(op, a, b));
        }
        out += "\n";
      }
    }
    return out;
  }

  void write_srt(std::filesystem::path const& path, FiniteSemiring const& s) {
    write_text(path, to_srt(s));
  }

}  // namespace semikit
