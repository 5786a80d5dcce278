#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "semikit/blattice.hpp"
#include "semikit/classify.hpp"
#include "semikit/enumerate.hpp"
#include "semikit/error.hpp"
#include "semikit/structure.hpp"

namespace semikit {
  namespace {

    using namespace semikit::testing;

    FiniteSemiring clifford3() {
      return compose(read_sbl(data_dir() / "clifford3.sbl"));
    }

    TEST(Ideals, Examples) {
      auto s = example3();
      EXPECT_TRUE(is_bi_ideal(s, {at(s, "0")}));
      EXPECT_TRUE(is_ideal(s, {at(s, "0")}));
      for (auto const& t : {example3(), ring_z2(), max_min()}) {
        auto all = all_elements(t.order());
        EXPECT_TRUE(is_ideal(t, all));
        EXPECT_TRUE(is_k_ideal(t, all));
        EXPECT_TRUE(is_bi_ideal(t, all));
      }
      EXPECT_FALSE(is_k_ideal(max_min(), {1}));
    }

    TEST(QuasiSkewRing, Examples) {
      auto s = example3();
      auto q = quasi_skew_ring_check(s);
      EXPECT_TRUE(q.all());
      EXPECT_EQ(q.kernel, ElementSet{at(s, "0")});
      auto r = quasi_skew_ring_check(ring_z2());
      EXPECT_TRUE(r.all());
      EXPECT_EQ(r.kernel, (ElementSet{0, 1}));
      auto l = quasi_skew_ring_check(max_min());
      EXPECT_FALSE(l.unique_idempotent || l.skew_ring_core || l.nil_extension);
    }

    // Oracle: the three characterisations never disagree up to order 3;
    // 1, 4 and 24 quasi skew-rings.
    TEST(QuasiSkewRing, CharacterisationsAgreeOnCorpus) {
      std::vector<std::size_t> expected{0, 1, 4, 24};
      for (std::size_t n = 1; n <= 3; ++n) {
        std::size_t count = 0;
        for (auto const& s : enumerate_semirings(n)) {
          auto q = quasi_skew_ring_check(s);
          EXPECT_TRUE(q.consistent());
          count += q.all();
        }
        EXPECT_EQ(count, expected[n]);
      }
    }

    TEST(Kernel, Examples) {
      auto s = example3();
      EXPECT_EQ(skew_ring_kernel(s), ElementSet{at(s, "0")});
      EXPECT_EQ(skew_ring_kernel(ring_z2()), (ElementSet{0, 1}));
      auto c   = clifford3();
      ElementSet top{at(c, "0"), at(c, "1")};
      EXPECT_EQ(skew_ring_kernel(c, top), top);
      try {
        skew_ring_kernel(max_min());
        FAIL();
      } catch (Error const& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotQuasiSkewRing);
      }
    }

    TEST(NilExtension, Examples) {
      auto s = example3();
      EXPECT_TRUE(is_nil_extension(s, {at(s, "0")}));
      EXPECT_TRUE(is_nil_extension(s, all_elements(3)));
      EXPECT_THROW(is_nil_extension(s, {at(s, "a")}), Error);
    }

    TEST(Decompose, Example) {
      auto s = example3();
      auto d = decompose(s);
      ASSERT_EQ(d.size(), 1u);
      EXPECT_EQ(d.y.order(), 1u);
      EXPECT_EQ(d.kernels[0], ElementSet{at(s, "0")});
      EXPECT_EQ(d.nil_sets[0], (ElementSet{at(s, "a"), at(s, "b")}));
    }

    TEST(Decompose, BooleanLattice) {
      auto s = max_min();
      auto d = decompose(s);
      ASSERT_EQ(d.size(), 2u);
      EXPECT_EQ(canonical_form(d.y), canonical_form(s));
    }

    TEST(Decompose, ComposedClifford) {
      auto s = clifford3();
      auto d = decompose(s);
      ASSERT_EQ(d.size(), 2u);
      EXPECT_EQ(d.classes[d.class_of(at(s, "z"))], ElementSet{at(s, "z")});
      EXPECT_EQ(d.classes[d.class_of(at(s, "0"))],
                (ElementSet{at(s, "0"), at(s, "1")}));
      EXPECT_TRUE(is_b_lattice(d.y));
      EXPECT_TRUE(d.leq(d.class_of(at(s, "z")), d.class_of(at(s, "0"))));
    }

    TEST(Decompose, RejectsNonQuasiCompletelyRegular) {
      auto s = parse_srt("elements: 0 1\nadd:\n0 0\n0 1\nmul:\n0 0\n0 0\n");
      try {
        decompose(s);
        FAIL();
      } catch (Error const& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotQuasiCompletelyRegular);
      }
    }

    TEST(Psi, Example) {
      auto s = example3();
      auto d = decompose(s);
      auto p = psi(s, d);
      for (char const* x : {"a", "b", "0"}) {
        EXPECT_EQ(p(at(s, x)), at(s, "0")) << x;
      }
      EXPECT_EQ(psi_tilde(s, d), Partition::universal(3));
      EXPECT_TRUE(check_psi_homomorphism(s, d));
    }

    TEST(Psi, IdentityOnCompletelyRegular) {
      for (auto const& s : {ring_z2(), clifford3()}) {
        auto d = decompose(s);
        auto p = psi(s, d);
        for (Element a = 0; a < s.order(); ++a) {
          EXPECT_EQ(p(a), a);
        }
        EXPECT_EQ(psi_tilde(s, d), Partition::identity(s.order()));
        EXPECT_TRUE(check_psi_homomorphism(s, d));
      }
    }

    TEST(Psi, TildeIsIdentityExactlyOnCompletelyRegular) {
      for (std::size_t n = 1; n <= 3; ++n) {
        for (auto const& s : enumerate_semirings(
                 n, SemiringClass::StronglyAdditivelyQuasiCompletelyInverse)) {
          auto d = decompose(s);
          EXPECT_EQ(psi_tilde(s, d) == Partition::identity(n),
                    has_class(s, SemiringClass::CompletelyRegular));
        }
      }
    }

  }  // namespace
}  // namespace semikit
