#include "semikit/relations.hpp"

#include <algorithm>
#include <map>

#include "semikit/elements.hpp"
#include "semikit/error.hpp"
#include "semikit/structure.hpp"

namespace semikit {

  Partition::Partition(std::vector<std::size_t> block_ids) {
    std::map<std::size_t, std::size_t> relabel;
    _ids.reserve(block_ids.size());
    for (auto id : block_ids) {
      auto [it, fresh] = relabel.emplace(id, relabel.size());
      _ids.push_back(it->second);
    }
    _num_blocks = relabel.size();
  }

  Partition Partition::identity(std::size_t n) {
    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
      ids[i] = i;
    }
    return Partition(std::move(ids));
  }

  Partition Partition::universal(std::size_t n) {
    return Partition(std::vector<std::size_t>(n, 0));
  }

  Partition Partition::from_equivalence(
      std::size_t                                  n,
      std::function<bool(Element, Element)> const& related) {
    std::vector<std::size_t> ids(n, n);
    std::size_t              next = 0;
    for (Element a = 0; a < n; ++a) {
      if (ids[a] != n) {
        continue;
      }
      ids[a] = next;
      for (Element b = a + 1; b < n; ++b) {
        if (ids[b] == n && related(a, b)) {
          ids[b] = next;
        }
      }
      ++next;
    }
    return Partition(std::move(ids));
  }

  std::vector<ElementSet> Partition::blocks() const {
    std::vector<ElementSet> out(_num_blocks);
    for (Element e = 0; e < _ids.size(); ++e) {
      out[_ids[e]].push_back(e);
    }
    return out;
  }

  bool Partition::refines(Partition const& coarser) const {
    if (coarser.order() != order()) {
      return false;
    }
    std::vector<std::size_t> image(_num_blocks, coarser.num_blocks());
    for (Element e = 0; e < _ids.size(); ++e) {
      auto& slot = image[_ids[e]];
      if (slot == coarser.num_blocks()) {
        slot = coarser.block(e);
      } else if (slot != coarser.block(e)) {
        return false;
      }
    }
    return true;
  }

  std::string format_partition(FiniteSemiring const& s, Partition const& p) {
    std::string out;
    for (auto const& b : p.blocks()) {
      out += out.empty() ? "" : " ";
      out += format_set(s, b);
    }
    return out;
  }

  GreenKind parse_green_kind(std::string const& text) {
    if (text == "L") return GreenKind::L;
    if (text == "R") return GreenKind::R;
    if (text == "H") return GreenKind::H;
    if (text == "D") return GreenKind::D;
    if (text == "J") return GreenKind::J;
    throw Error(ErrorKind::ParseError, "unknown Green's relation '" + text + "'");
  }

  char to_char(GreenKind kind) noexcept {
    switch (kind) {
      case GreenKind::L: return 'L';
      case GreenKind::R: return 'R';
      case GreenKind::H: return 'H';
      case GreenKind::D: return 'D';
      case GreenKind::J: return 'J';
    }
    return '?';
  }

  namespace {

    using Ideal = std::vector<char>;

    // Principal ideals of (S, +) with an identity adjoined.
    std::vector<Ideal> principal_ideals(FiniteSemiring const& s,
                                        GreenKind             kind) {
      auto const         n = static_cast<Element>(s.order());
      std::vector<Ideal> out(n, Ideal(n, 0));
      for (Element a = 0; a < n; ++a) {
        auto& I = out[a];
        I[a]    = 1;
        for (Element x = 0; x < n; ++x) {
          if (kind == GreenKind::L || kind == GreenKind::J) {
            I[s.add(x, a)] = 1;
          }
          if (kind == GreenKind::R || kind == GreenKind::J) {
            I[s.add(a, x)] = 1;
          }
          if (kind == GreenKind::J) {
            for (Element y = 0; y < n; ++y) {
              I[s.add(s.add(x, a), y)] = 1;
            }
          }
        }
      }
      return out;
    }

    using Matrix = std::vector<std::vector<char>>;

    Matrix base_relation(FiniteSemiring const& s, GreenKind kind) {
      auto const n = s.order();
      Matrix     m(n, std::vector<char>(n, 0));
      if (kind == GreenKind::H || kind == GreenKind::D) {
        auto l = base_relation(s, GreenKind::L);
        auto r = base_relation(s, GreenKind::R);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            if (kind == GreenKind::H) {
              m[a][b] = l[a][b] && r[a][b];
            } else {
              for (std::size_t c = 0; c < n && !m[a][b]; ++c) {
                m[a][b] = l[a][c] && r[c][b];
              }
            }
          }
        }
        return m;
      }
      auto ideals = principal_ideals(s, kind);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          m[a][b] = ideals[a] == ideals[b];
        }
      }
      return m;
    }

    Partition to_partition(FiniteSemiring const& s,
                           Matrix const&         m,
                           std::string const&    what) {
      auto const n = s.order();
      for (std::size_t a = 0; a < n; ++a) {
        if (!m[a][a]) {
          throw Error(ErrorKind::NotEquivalence,
                      what + " is not reflexive at " + s.name(a));
        }
        for (std::size_t b = 0; b < n; ++b) {
          if (m[a][b] != m[b][a]) {
            throw Error(ErrorKind::NotEquivalence,
                        what + " is not symmetric on " + s.name(a) + ", "
                            + s.name(b));
          }
          for (std::size_t c = 0; c < n; ++c) {
            if (m[a][b] && m[b][c] && !m[a][c]) {
              throw Error(ErrorKind::NotEquivalence,
                          what + " is not transitive on " + s.name(a) + ", "
                              + s.name(b) + ", " + s.name(c));
            }
          }
        }
      }
      return Partition::from_equivalence(
          n, [&](Element a, Element b) { return m[a][b] != 0; });
    }

  }  // namespace

  Partition green_plus(FiniteSemiring const& s, GreenKind kind) {
    return to_partition(s,
                        base_relation(s, kind),
                        std::string(1, to_char(kind)) + "+");
  }

  Partition green_star_plus(FiniteSemiring const& s, GreenKind kind) {
    auto const           n = s.order();
    std::vector<Element> r(n);
    for (Element a = 0; a < n; ++a) {
      r[a] = first_regular_multiple(s, a);
    }
    auto pulled = [&](GreenKind k) {
      auto   base = base_relation(s, k);
      Matrix m(n, std::vector<char>(n, 0));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          m[a][b] = base[r[a]][r[b]];
        }
      }
      return m;
    };
    Matrix m;
    if (kind == GreenKind::H || kind == GreenKind::D) {
      auto l = pulled(GreenKind::L);
      auto rr = pulled(GreenKind::R);
      m.assign(n, std::vector<char>(n, 0));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (kind == GreenKind::H) {
            m[a][b] = l[a][b] && rr[a][b];
          } else {
            for (std::size_t c = 0; c < n && !m[a][b]; ++c) {
              m[a][b] = l[a][c] && rr[c][b];
            }
          }
        }
      }
    } else {
      m = pulled(kind);
    }
    return to_partition(s, m, std::string(1, to_char(kind)) + "*+");
  }

  bool is_compatible(FiniteSemiring const& s, Partition const& p) {
    auto const n = static_cast<Element>(s.order());
    if (p.order() != n) {
      throw Error(ErrorKind::DimensionMismatch,
                  "partition order differs from the carrier order");
    }
    // Compatibility with translations by single elements suffices.
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        if (!p.related(a, b)) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          if (!p.related(s.add(a, c), s.add(b, c))
              || !p.related(s.add(c, a), s.add(c, b))
              || !p.related(s.mul(a, c), s.mul(b, c))
              || !p.related(s.mul(c, a), s.mul(c, b))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Congruence make_congruence(FiniteSemiring const& s, Partition p) {
    bool ok = is_compatible(s, p);
    return {std::move(p), ok};
  }

  std::vector<Congruence> enumerate_congruences(FiniteSemiring const& s,
                                                std::size_t           bound) {
    auto const n = static_cast<Element>(s.order());
    if (n > bound) {
      throw Error(ErrorKind::BoundExceeded,
                  "congruence enumeration needs order <= "
                      + std::to_string(bound) + ", got " + std::to_string(n));
    }
    std::vector<std::size_t>              rgs(n, 0);
    std::vector<std::vector<std::size_t>> found;

    // Checks the translation conditions whose operands and results are all
    // among the first k+1 assigned elements.
    auto prefix_ok = [&](Element k) {
      auto rel = [&](Element x, Element y) { return rgs[x] == rgs[y]; };
      for (Element a = 0; a <= k; ++a) {
        for (Element b = a + 1; b <= k; ++b) {
          if (!rel(a, b)) {
            continue;
          }
          for (Element c = 0; c <= k; ++c) {
            for (Op op : {Op::Add, Op::Mul}) {
              auto x1 = s.apply(op, a, c), y1 = s.apply(op, b, c);
              auto x2 = s.apply(op, c, a), y2 = s.apply(op, c, b);
              if (x1 <= k && y1 <= k && !rel(x1, y1)) {
                return false;
              }
              if (x2 <= k && y2 <= k && !rel(x2, y2)) {
                return false;
              }
            }
          }
        }
      }
      return true;
    };

    std::function<void(Element, std::size_t)> extend = [&](Element     k,
                                                            std::size_t used) {
      if (k == n) {
        found.push_back(rgs);
        return;
      }
      for (std::size_t b = 0; b <= used && b < n; ++b) {
        rgs[k] = b;
        if (prefix_ok(k)) {
          extend(k + 1, std::max(used, b + 1));
        }
      }
    };
    if (n > 0) {
      extend(0, 0);
    }

    std::vector<Congruence> out;
    for (auto& ids : found) {
      Partition p(ids);
      if (is_compatible(s, p)) {
        out.push_back({std::move(p), true});
      }
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      if (x.partition.num_blocks() != y.partition.num_blocks()) {
        return x.partition.num_blocks() > y.partition.num_blocks();
      }
      return x.partition.ids() < y.partition.ids();
    });
    return out;
  }

  bool is_idempotent_separating(FiniteSemiring const& s, Congruence const& c) {
    auto idem = additive_idempotents(s);
    for (std::size_t i = 0; i < idem.size(); ++i) {
      for (std::size_t j = i + 1; j < idem.size(); ++j) {
        if (c.partition.related(idem[i], idem[j])) {
          return false;
        }
      }
    }
    return true;
  }

  Congruence rees_congruence(FiniteSemiring const& s, ElementSet const& i) {
    if (!is_bi_ideal(s, i)) {
      throw Error(ErrorKind::NotBiIdeal,
                  format_set(s, i) + " is not a bi-ideal");
    }
    auto const               n  = s.order();
    auto                     in = membership(i, n);
    std::vector<std::size_t> ids(n);
    for (Element a = 0; a < n; ++a) {
      ids[a] = in[a] ? n : a;
    }
    auto c = make_congruence(s, Partition(std::move(ids)));
    if (!c.is_semiring_congruence) {
      throw Error(ErrorKind::InternalTheoremViolation,
                  "Rees relation of " + format_set(s, i)
                      + " is not a congruence");
    }
    return c;
  }

  FiniteSemiring quotient(FiniteSemiring const& s, Partition const& p) {
    if (!is_compatible(s, p)) {
      throw Error(ErrorKind::NotCongruence,
                  "partition " + format_partition(s, p)
                      + " is not a semiring congruence");
    }
    auto const               m      = p.num_blocks();
    auto                     blocks = p.blocks();
    std::vector<std::string> names;
    std::vector<Element>     add(m * m), mul(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      names.push_back(format_set(s, blocks[i]));
      for (std::size_t j = 0; j < m; ++j) {
        auto a = blocks[i].front(), b = blocks[j].front();
        add[i * m + j] = static_cast<Element>(p.block(s.add(a, b)));
        mul[i * m + j] = static_cast<Element>(p.block(s.mul(a, b)));
      }
    }
    return FiniteSemiring(std::move(names),
                          OpTable(m, std::move(add)),
                          OpTable(m, std::move(mul)));
  }

  FiniteSemiring quotient(FiniteSemiring const& s, Congruence const& c) {
    return quotient(s, c.partition);
  }

}  // namespace semikit
