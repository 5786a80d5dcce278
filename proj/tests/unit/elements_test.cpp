#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "semikit/classify.hpp"
#include "semikit/elements.hpp"
#include "semikit/enumerate.hpp"

namespace semikit {
  namespace {

    using namespace semikit::testing;

    TEST(Idempotents, Examples) {
      auto s = example3();
      EXPECT_EQ(additive_idempotents(s), ElementSet{at(s, "0")});
      EXPECT_EQ(additive_idempotents(max_min()), (ElementSet{0, 1}));
      EXPECT_EQ(additive_idempotents(ring_z2()), ElementSet{0});
    }

    TEST(Inverses, Examples) {
      auto s = example3();
      EXPECT_EQ(additive_inverses(s, at(s, "0")).inverses,
                ElementSet{at(s, "0")});
      EXPECT_TRUE(additive_inverses(s, at(s, "a")).inverses.empty());
      EXPECT_EQ(additive_inverses(ring_z2(), 1).inverses, ElementSet{1});
    }

    TEST(ClassifyElement, ExampleA) {
      auto s = example3();
      auto c = classify_element(s, at(s, "a"));
      EXPECT_FALSE(c.additively_regular);
      EXPECT_FALSE(c.completely_regular);
      EXPECT_EQ(c.additively_quasi_regular_index, 3u);
      EXPECT_EQ(c.quasi_completely_regular_index, 3u);
      EXPECT_EQ(c.witness, at(s, "0"));
    }

    TEST(ClassifyElement, RingAndLattice) {
      for (auto const& s : {ring_z2(), max_min()}) {
        auto c = classify_element(s, 1);
        EXPECT_TRUE(c.completely_regular);
        EXPECT_EQ(c.quasi_completely_regular_index, 1u);
        EXPECT_EQ(c.witness, Element{1});
      }
    }

    TEST(ClassifyElement, InvariantsOnCorpus) {
      for (std::size_t n = 1; n <= 3; ++n) {
        for (auto const& s : enumerate_semirings(n)) {
          for (Element a = 0; a < n; ++a) {
            auto c = classify_element(s, a);
            if (c.completely_regular) {
              EXPECT_TRUE(c.additively_completely_regular);
            }
            if (c.additively_completely_regular) {
              EXPECT_TRUE(c.additively_regular);
            }
            EXPECT_GE(c.additively_quasi_regular_index, 1u);
            EXPECT_EQ(c.additively_quasi_regular_index == 1,
                      c.additively_regular);
            EXPECT_EQ(c.quasi_completely_regular_index == 1u,
                      c.completely_regular);
            if (c.witness) {
              auto na = repeat(s, a, *c.quasi_completely_regular_index, Op::Add);
              auto x  = *c.witness;
              EXPECT_EQ(s.add(s.add(x, na), x), x);
            }
          }
        }
      }
    }

    TEST(RegPlus, Examples) {
      auto s = example3();
      EXPECT_EQ(reg_plus(s), ElementSet{at(s, "0")});
      EXPECT_EQ(cr_set(s), ElementSet{at(s, "0")});
      EXPECT_EQ(reg_plus(ring_z2()), (ElementSet{0, 1}));
      EXPECT_EQ(cr_set(ring_z2()), (ElementSet{0, 1}));
      EXPECT_EQ(cr_set(max_min()), (ElementSet{0, 1}));
    }

    TEST(RegPlus, WholeCarrierOfEveryBLattice) {
      for (std::size_t n = 1; n <= 3; ++n) {
        for (auto const& s :
             enumerate_semirings(n, SemiringClass::BLattice)) {
          EXPECT_EQ(reg_plus(s), all_elements(n));
        }
      }
    }

    TEST(Powers, ExampleFirstRegularAndIdempotent) {
      auto s = example3();
      EXPECT_EQ(first_regular_multiple(s, at(s, "a")), at(s, "0"));
      EXPECT_EQ(idempotent_power(s, at(s, "b")), at(s, "0"));
      EXPECT_EQ(idempotent_power(ring_z2(), 1), Element{0});
    }

  }  // namespace
}  // namespace semikit
