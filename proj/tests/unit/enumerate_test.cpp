#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "semikit/classify.hpp"
#include "semikit/enumerate.hpp"
#include "semikit/error.hpp"

namespace semikit {
  namespace {

    using namespace semikit::testing;
    namespace fs = std::filesystem;

    template <typename F>
    ErrorKind kind_of(F&& f) {
      try {
        f();
      } catch (Error const& e) {
        return e.kind();
      }
      return ErrorKind::IoError;
    }

    FiniteSemiring from_tables(std::size_t                 n,
                               std::vector<Element> const& add,
                               std::vector<Element> const& mul) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
      }
      return FiniteSemiring(names, OpTable(n, add), OpTable(n, mul));
    }

    // Oracle: count_semirings.py and count_order4.py.
    TEST(Enumerate, CountsMatchOracle) {
      std::vector<std::size_t> expected{0, 1, 20, 316, 7652};
      for (std::size_t n = 1; n <= 4; ++n) {
        EXPECT_EQ(enumerate_semirings(n).size(), expected[n]) << n;
      }
    }

    TEST(Enumerate, LabelledSemigroupCounts) {
      std::vector<std::size_t> expected{0, 1, 8, 113, 3492};
      for (std::size_t n = 1; n <= 4; ++n) {
        EXPECT_EQ(labelled_semigroups(n).size(), expected[n]) << n;
      }
    }

    TEST(Enumerate, SortedValidAndDistinct) {
      auto corpus = enumerate_semirings(3);
      std::vector<CanonicalForm> forms;
      for (auto const& s : corpus) {
        EXPECT_TRUE(validate_semiring(s).verdict());
        forms.push_back(canonical_form(s));
        EXPECT_EQ(forms.back(), canonical_form(from_canonical(forms.back())));
      }
      EXPECT_TRUE(std::is_sorted(forms.begin(), forms.end()));
      EXPECT_EQ(std::set<CanonicalForm>(forms.begin(), forms.end()).size(),
                forms.size());
    }

    // Every table pair over {0, 1} that forms a semiring lands on an
    // emitted representative.
    TEST(Enumerate, CompleteAtOrderTwo) {
      std::set<CanonicalForm> emitted;
      for (auto const& s : enumerate_semirings(2)) {
        emitted.insert(canonical_form(s));
      }
      std::set<CanonicalForm> seen;
      for (unsigned a = 0; a < 16; ++a) {
        for (unsigned m = 0; m < 16; ++m) {
          std::vector<Element> add(4), mul(4);
          for (unsigned i = 0; i < 4; ++i) {
            add[i] = (a >> i) & 1u;
            mul[i] = (m >> i) & 1u;
          }
          auto s = from_tables(2, add, mul);
          if (validate_semiring(s).verdict()) {
            EXPECT_TRUE(emitted.count(canonical_form(s)));
            seen.insert(canonical_form(s));
          }
        }
      }
      EXPECT_EQ(seen, emitted);
    }

    TEST(Enumerate, QuasiSkewRingsOfOrderThreeContainExample) {
      auto target = canonical_form(example3());
      auto list = enumerate_semirings(3, SemiringClass::QuasiSkewRing);
      EXPECT_EQ(list.size(), 24u);
      EXPECT_TRUE(std::any_of(list.begin(), list.end(), [&](auto const& s) {
        return canonical_form(s) == target;
      }));
    }

    TEST(Enumerate, Bounds) {
      EXPECT_EQ(kind_of([] { enumerate_semirings(5); }),
                ErrorKind::BoundExceeded);
      EXPECT_EQ(kind_of([] { labelled_semigroups(5); }),
                ErrorKind::BoundExceeded);
      EXPECT_EQ(kind_of([] { sample_semirings(7, 1, 1); }),
                ErrorKind::BoundExceeded);
      EXPECT_EQ(kind_of([] { enumerate_semirings(0); }),
                ErrorKind::OutOfRange);
    }

    TEST(Canonical, Examples) {
      auto one = canonical_form(trivial());
      EXPECT_EQ(one.order, 1u);
      EXPECT_EQ(one.bytes, (std::vector<std::uint8_t>{0, 0}));
      EXPECT_NE(canonical_form(ring_z2()), canonical_form(max_min()));
    }

    TEST(Canonical, InvariantUnderRelabelling) {
      auto s    = example3();
      auto form = canonical_form(s);
      std::vector<Element> perm{0, 1, 2};
      do {
        EXPECT_EQ(canonical_form(permute(s, perm)), form);
      } while (std::next_permutation(perm.begin(), perm.end()));
      // a and b swapped in the element line only.
      auto swapped = parse_srt(
          "elements: b a 0\nadd:\n0 0 0\n0 b 0\n0 0 0\n"
          "mul:\n0 0 0\n0 b 0\n0 0 0\n");
      EXPECT_EQ(canonical_form(swapped), form);
    }

    TEST(Canonical, ClassesAreIsomorphismInvariant) {
      std::vector<Element> perm{2, 0, 1};
      for (auto const& s : enumerate_semirings(3)) {
        EXPECT_EQ(class_flags(permute(s, perm)), class_flags(s));
      }
    }

    TEST(Canonical, Bound) {
      std::vector<std::string> names;
      for (int i = 0; i < 9; ++i) {
        names.push_back("e" + std::to_string(i));
      }
      FiniteSemiring big(names, OpTable(9, std::vector<Element>(81, 0)),
                         OpTable(9, std::vector<Element>(81, 0)));
      EXPECT_EQ(kind_of([&] { canonical_form(big); }),
                ErrorKind::BoundExceeded);
    }

    // Oracle: hash_oracle.py.
    TEST(Canonical, HashMatchesOracle) {
      EXPECT_EQ(canonical_hash(canonical_form(example3())),
                "6203211772761778");
      EXPECT_EQ(canonical_hash(canonical_form(ring_z2())),
                "241d149de9e40790");
      EXPECT_EQ(canonical_hash(canonical_form(
                    from_tables(2, {0, 0, 0, 0}, {0, 0, 0, 0}))),
                "0cd92cf54dc615e5");
    }

    TEST(Sample, DeterministicDistinctAndValid) {
      auto a = sample_semirings(5, 40, 7);
      auto b = sample_semirings(5, 40, 7);
      ASSERT_EQ(a.size(), b.size());
      EXPECT_GE(a.size(), 30u);
      std::set<CanonicalForm> forms;
      for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_TRUE(a[i].same_tables(b[i]));
        EXPECT_TRUE(validate_semiring(a[i]).verdict());
        EXPECT_EQ(a[i].order(), 5u);
        forms.insert(canonical_form(a[i]));
      }
      EXPECT_EQ(forms.size(), a.size());
    }

    TEST(Sample, SubsetOfFullCorpus) {
      std::set<CanonicalForm> all;
      for (auto const& s : enumerate_semirings(3)) {
        all.insert(canonical_form(s));
      }
      auto sample = sample_semirings(3, 50, 3);
      EXPECT_FALSE(sample.empty());
      for (auto const& s : sample) {
        EXPECT_TRUE(all.count(canonical_form(s)));
      }
      for (auto const& s :
           sample_semirings(4, 10, 5, SemiringClass::QuasiSkewRing)) {
        EXPECT_TRUE(has_class(s, SemiringClass::QuasiSkewRing));
      }
    }

    TEST(Corpus, ManifestAndRoundTrip) {
      auto corpus = enumerate_semirings(2);
      auto text   = manifest(corpus);
      EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 20);
      EXPECT_EQ(text.substr(0, 19), "0cd92cf54dc615e5 2 ");
      auto dir = fs::temp_directory_path() / "semikit-corpus-test";
      fs::remove_all(dir);
      write_corpus(dir, corpus);
      EXPECT_EQ(read_text(dir / "manifest.txt"), text);
      EXPECT_TRUE(fs::exists(dir / "0cd92cf54dc615e5.srt"));
      auto back = read_corpus(dir);
      ASSERT_EQ(back.size(), corpus.size());
      for (std::size_t i = 0; i < back.size(); ++i) {
        EXPECT_EQ(canonical_form(back[i]), canonical_form(corpus[i]));
      }
      fs::remove_all(dir);
    }

    TEST(Counterexample, StronglyInverseImpliesInverse) {
      EXPECT_FALSE(find_counterexample(
          {SemiringClass::StronglyAdditivelyQuasiCompletelyInverse,
           SemiringClass::QuasiCompletelyInverse, 3}));
    }

    // The zero semiring on two elements is the first quasi skew-ring that
    // is not a skew-ring; the three-element example is another one.
    TEST(Counterexample, QuasiSkewRingNotSkewRing) {
      auto found = find_counterexample(
          {SemiringClass::QuasiSkewRing, SemiringClass::SkewRing, 3});
      ASSERT_TRUE(found);
      EXPECT_EQ(canonical_hash(canonical_form(*found)), "0cd92cf54dc615e5");
      EXPECT_TRUE(has_class(example3(), SemiringClass::QuasiSkewRing));
      EXPECT_FALSE(has_class(example3(), SemiringClass::SkewRing));
    }

    // Oracle: first quasi completely regular, not quasi completely inverse
    // member has add = [0,0,1,1] and mul = [0,0,0,1].
    TEST(Counterexample, QuasiCompletelyRegularNotInverse) {
      auto found =
          find_counterexample({SemiringClass::QuasiCompletelyRegular,
                               SemiringClass::QuasiCompletelyInverse, 4});
      ASSERT_TRUE(found);
      EXPECT_EQ(canonical_form(*found),
                canonical_form(from_tables(2, {0, 0, 1, 1}, {0, 0, 0, 1})));
    }

    TEST(Counterexample, Reflexive) {
      for (auto c : kAllClasses) {
        EXPECT_FALSE(find_counterexample({c, c, 3})) << class_name(c);
      }
    }

    TEST(Counterexample, Bound) {
      EXPECT_EQ(kind_of([] {
                  find_counterexample({SemiringClass::SkewRing,
                                       SemiringClass::SkewRing, 5});
                }),
                ErrorKind::BoundExceeded);
    }

  }  // namespace
}  // namespace semikit
