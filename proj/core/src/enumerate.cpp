#include "semikit/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "semikit/error.hpp"
#include "semikit/srt_io.hpp"

namespace semikit {

  namespace {

    using Table = std::vector<std::uint8_t>;

    constexpr std::uint8_t kEmpty = 0xFF;

    void require_at_most(std::size_t n, std::size_t bound, char const* what) {
      if (n == 0) {
        throw Error(ErrorKind::OutOfRange, "order must be positive");
      }
      if (n > bound) {
        throw Error(ErrorKind::BoundExceeded,
                    std::string(what) + " is limited to order "
                        + std::to_string(bound));
      }
    }

    // Every fully defined instance of (xy)z = x(yz) that involves the cell
    // (a, b) holds.
    bool associative_at(Table const& t, std::size_t n, std::size_t a,
                        std::size_t b) {
      auto at = [&](std::size_t x, std::size_t y) { return t[x * n + y]; };
      auto ok = [&](std::size_t x, std::size_t y, std::size_t z) {
        auto xy = at(x, y), yz = at(y, z);
        if (xy == kEmpty || yz == kEmpty) {
          return true;
        }
        auto l = at(xy, z), r = at(x, yz);
        return l == kEmpty || r == kEmpty || l == r;
      };
      for (std::size_t u = 0; u < n; ++u) {
        if (!ok(a, b, u) || !ok(u, a, b)) {
          return false;
        }
        for (std::size_t v = 0; v < n; ++v) {
          if ((at(u, v) == a && !ok(u, v, b))
              || (at(u, v) == b && !ok(a, u, v))) {
            return false;
          }
        }
      }
      return true;
    }

    // Both distributive laws wherever the multiplication is defined.
    bool distributive_at(Table const& add, Table const& mul, std::size_t n,
                         std::size_t a, std::size_t b) {
      auto m = [&](std::size_t x, std::size_t y) { return mul[x * n + y]; };
      auto p = [&](std::size_t x, std::size_t y) { return add[x * n + y]; };
      auto left = [&](std::size_t x, std::size_t y, std::size_t z) {
        auto l = m(x, p(y, z)), u = m(x, y), v = m(x, z);
        return l == kEmpty || u == kEmpty || v == kEmpty || l == p(u, v);
      };
      auto right = [&](std::size_t x, std::size_t y, std::size_t z) {
        auto l = m(p(y, z), x), u = m(y, x), v = m(z, x);
        return l == kEmpty || u == kEmpty || v == kEmpty || l == p(u, v);
      };
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          // (a, b) as x*y, x*z or x*(y+z); and mirrored.
          if (!left(a, b, y) || !left(a, y, b) || !right(b, a, y)
              || !right(b, y, a)) {
            return false;
          }
          if (p(y, z) == b && !left(a, y, z)) {
            return false;
          }
          if (p(y, z) == a && !right(b, y, z)) {
            return false;
          }
        }
      }
      return true;
    }

    bool distributive(Table const& add, Table const& mul, std::size_t n) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            auto bc = add[b * n + c];
            if (mul[a * n + bc] != add[mul[a * n + b] * n + mul[a * n + c]]
                || mul[bc * n + a]
                       != add[mul[b * n + a] * n + mul[c * n + a]]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    Table permuted(Table const& t, std::size_t n,
                   std::vector<std::uint8_t> const& perm) {
      Table out(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          out[perm[a] * n + perm[b]] = perm[t[a * n + b]];
        }
      }
      return out;
    }

    // Minimal concatenated encoding of the given tables.
    Table minimal_encoding(std::vector<Table const*> const& tables,
                           std::size_t                      n) {
      std::vector<std::uint8_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      Table best;
      do {
        Table code;
        for (auto const* t : tables) {
          auto p = permuted(*t, n, perm);
          code.insert(code.end(), p.begin(), p.end());
        }
        if (best.empty() || code < best) {
          best = std::move(code);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return best;
    }

    CanonicalForm canonical_of(Table const& add, Table const& mul,
                               std::size_t n) {
      return {n, minimal_encoding({&add, &mul}, n)};
    }

    template <typename Visit>
    void fill_semigroups(Table& t, std::size_t n, std::size_t cell,
                         Visit&& visit) {
      if (cell == n * n) {
        visit(t);
        return;
      }
      for (std::size_t v = 0; v < n; ++v) {
        t[cell] = static_cast<std::uint8_t>(v);
        if (associative_at(t, n, cell / n, cell % n)) {
          fill_semigroups(t, n, cell + 1, visit);
        }
      }
      t[cell] = kEmpty;
    }

    std::vector<Table> addition_representatives(
        std::vector<Table> const& semigroups,
        std::size_t               n) {
      std::set<Table> reps;
      for (auto const& t : semigroups) {
        reps.insert(minimal_encoding({&t}, n));
      }
      return {reps.begin(), reps.end()};
    }

    FiniteSemiring to_semiring(Table const& add, Table const& mul,
                               std::size_t n) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
      }
      return FiniteSemiring(std::move(names),
                            OpTable(n, {add.begin(), add.end()}),
                            OpTable(n, {mul.begin(), mul.end()}));
    }

    std::vector<FiniteSemiring> full_corpus(std::size_t n) {
      auto semigroups = labelled_semigroups(n);
      auto reps       = addition_representatives(semigroups, n);

      auto workers = std::min(worker_count(), reps.size());
      std::vector<std::set<CanonicalForm>> found(workers);
      std::vector<std::thread>             pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < reps.size(); i += workers) {
            for (auto const& mul : semigroups) {
              if (distributive(reps[i], mul, n)) {
                found[w].insert(canonical_of(reps[i], mul, n));
              }
            }
          }
        });
      }
      for (auto& t : pool) {
        t.join();
      }
      std::set<CanonicalForm> all;
      for (auto& f : found) {
        all.merge(f);
      }
      std::vector<FiniteSemiring> out;
      for (auto const& form : all) {
        out.push_back(from_canonical(form));
      }
      return out;
    }

    class RandomTables {
     public:
      RandomTables(std::size_t n, std::uint64_t seed) : _n(n), _rng(seed) {}

      // A random associative table, or nothing if the node budget ran out.
      std::optional<Table> semigroup() {
        Table t(_n * _n, kEmpty);
        _budget = kBudget;
        if (fill(t, 0, nullptr)) {
          return t;
        }
        return std::nullopt;
      }

      // A random multiplication distributing over add.
      std::optional<Table> multiplication(Table const& add) {
        Table t(_n * _n, kEmpty);
        _budget = kBudget;
        if (fill(t, 0, &add)) {
          return t;
        }
        return std::nullopt;
      }

     private:
      static constexpr std::size_t kBudget = 20000;

      bool fill(Table& t, std::size_t cell, Table const* add) {
        if (cell == _n * _n) {
          return true;
        }
        if (_budget == 0) {
          return false;
        }
        --_budget;
        std::vector<std::uint8_t> order(_n);
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t i = _n; i > 1; --i) {
          std::swap(order[i - 1], order[_rng() % i]);
        }
        auto a = cell / _n, b = cell % _n;
        for (auto v : order) {
          t[cell] = v;
          if (associative_at(t, _n, a, b)
              && (add == nullptr || distributive_at(*add, t, _n, a, b))
              && fill(t, cell + 1, add)) {
            return true;
          }
        }
        t[cell] = kEmpty;
        return false;
      }

      std::size_t     _n;
      std::mt19937_64 _rng;
      std::size_t     _budget = 0;
    };

  }  // namespace

  CanonicalForm canonical_form(FiniteSemiring const& s) {
    auto n = s.order();
    require_at_most(n, kCanonicalBound, "canonical form");
    Table add(s.add_table().entries().begin(), s.add_table().entries().end());
    Table mul(s.mul_table().entries().begin(), s.mul_table().entries().end());
    return canonical_of(add, mul, n);
  }

  FiniteSemiring from_canonical(CanonicalForm const& form) {
    auto  n = form.order;
    Table add(form.bytes.begin(), form.bytes.begin() + n * n);
    Table mul(form.bytes.begin() + n * n, form.bytes.end());
    return to_semiring(add, mul, n);
  }

  std::string canonical_hash(CanonicalForm const& form) {
    std::uint64_t h = 14695981039346656037ull;
    auto          mix = [&](std::uint8_t byte) {
      h ^= byte;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint8_t>(form.order));
    for (auto b : form.bytes) {
      mix(b);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
  }

  std::vector<Table> labelled_semigroups(std::size_t n) {
    require_at_most(n, kFullEnumerationBound, "full enumeration");
    std::vector<Table> out;
    Table              t(n * n, kEmpty);
    fill_semigroups(t, n, 0, [&](Table const& full) { out.push_back(full); });
    return out;
  }

  std::size_t worker_count() {
    if (auto const* env = std::getenv("SEMIKIT_WORKERS")) {
      char* end = nullptr;
      auto  v   = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return v;
      }
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }

  std::vector<FiniteSemiring> enumerate_semirings(
      std::size_t                  n,
      std::optional<SemiringClass> filter) {
    require_at_most(n, kFullEnumerationBound, "full enumeration");
    static std::mutex                                    lock;
    static std::map<std::size_t, std::vector<FiniteSemiring>> memo;
    std::vector<FiniteSemiring>                          corpus;
    {
      std::lock_guard guard(lock);
      auto            it = memo.find(n);
      if (it == memo.end()) {
        it = memo.emplace(n, full_corpus(n)).first;
      }
      corpus = it->second;
    }
    if (filter) {
      std::erase_if(corpus, [&](FiniteSemiring const& s) {
        return !has_class(s, *filter);
      });
    }
    return corpus;
  }

  std::vector<FiniteSemiring> sample_semirings(
      std::size_t                  n,
      std::size_t                  count,
      std::uint64_t                seed,
      std::optional<SemiringClass> filter) {
    require_at_most(n, kSamplingBound, "sampling");
    RandomTables            gen(n, seed);
    std::set<CanonicalForm> found;
    for (std::size_t attempt = 0; attempt < 50 * count + 100
                                  && found.size() < count;
         ++attempt) {
      auto add = gen.semigroup();
      if (!add) {
        continue;
      }
      auto mul = gen.multiplication(*add);
      if (!mul) {
        continue;
      }
      auto form = canonical_of(*add, *mul, n);
      if (found.count(form)) {
        continue;
      }
      if (filter && !has_class(from_canonical(form), *filter)) {
        continue;
      }
      found.insert(std::move(form));
    }
    std::vector<FiniteSemiring> out;
    for (auto const& form : found) {
      out.push_back(from_canonical(form));
    }
    return out;
  }

  std::string class_flags(FiniteSemiring const& s) {
    auto        report = classify(s);
    std::string out;
    for (auto c : kAllClasses) {
      if (report.holds(c)) {
        out += (out.empty() ? "" : ",") + std::string(class_tag(c));
      }
    }
    return out.empty() ? "-" : out;
  }

  std::string manifest(std::vector<FiniteSemiring> const& corpus) {
    std::string out;
    for (auto const& s : corpus) {
      out += canonical_hash(canonical_form(s)) + " "
             + std::to_string(s.order()) + " " + class_flags(s) + "\n";
    }
    return out;
  }

  void write_corpus(std::filesystem::path const&       dir,
                    std::vector<FiniteSemiring> const& corpus) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
      throw Error(ErrorKind::IoError, "cannot create " + dir.string());
    }
    std::set<std::string> hashes;
    for (auto const& s : corpus) {
      auto hash = canonical_hash(canonical_form(s));
      if (!hashes.insert(hash).second) {
        throw Error(ErrorKind::InternalTheoremViolation,
                    "canonical hash collision " + hash);
      }
      write_srt(dir / (hash + ".srt"), s);
    }
    write_text(dir / "manifest.txt", manifest(corpus));
  }

  std::vector<FiniteSemiring> read_corpus(std::filesystem::path const& dir) {
    auto                        text = read_text(dir / "manifest.txt");
    std::istringstream          in(text);
    std::string                 line;
    std::vector<FiniteSemiring> out;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string        hash;
      if (fields >> hash) {
        out.push_back(read_srt(dir / (hash + ".srt")));
      }
    }
    return out;
  }

  std::optional<FiniteSemiring> find_counterexample(ImplicationQuery const& q) {
    require_at_most(q.max_order, kFullEnumerationBound, "counterexample search");
    for (std::size_t n = 1; n <= q.max_order; ++n) {
      for (auto const& s : enumerate_semirings(n)) {
        if (has_class(s, q.premise) && !has_class(s, q.conclusion)) {
          return s;
        }
      }
    }
    return std::nullopt;
  }

}  // namespace semikit
