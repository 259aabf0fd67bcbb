#include <gtest/gtest.h>

#include <random>

#include "kneading/atlas.hpp"
#include "kneading/errors.hpp"
#include "kneading/rho.hpp"

using namespace kneading;

namespace {

KneadingSequence seq(const char* text) { return KneadingSequence::parse(text); }
InternalAddress addr(std::vector<std::size_t> entries) { return {std::move(entries), true}; }

}  // namespace

TEST(Symbols, Differ) {
  EXPECT_FALSE(symbols_differ(Symbol::one, Symbol::one));
  EXPECT_TRUE(symbols_differ(Symbol::one, Symbol::zero));
  EXPECT_TRUE(symbols_differ(Symbol::star, Symbol::one));
}

TEST(Sequence, Entry) {
  const auto nu = seq("10110*");
  EXPECT_EQ(nu.entry(3), Symbol::one);
  EXPECT_EQ(nu.entry(6), Symbol::star);
  EXPECT_EQ(nu.entry(7), Symbol::one);
  EXPECT_THROW(nu.entry(0), DomainError);
}

TEST(Sequence, ParseRejectsMalformedInput) {
  EXPECT_THROW(seq("0110*"), ParseError);
  EXPECT_THROW(seq("1*0*"), ParseError);
  EXPECT_THROW(seq("1*1"), ParseError);
  EXPECT_THROW(seq("12*"), ParseError);
  EXPECT_THROW(seq(""), ParseError);
  EXPECT_TRUE(seq("10110*").is_star_periodic());
  EXPECT_FALSE(seq("10").is_star_periodic());
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho(seq("10110*"), 1), 2u);
  EXPECT_EQ(rho(seq("10110*"), 3), 6u);
  EXPECT_EQ(rho(seq("1"), 1), std::nullopt);
  EXPECT_EQ(rho(seq("10110*"), 6), std::nullopt);
}

TEST(Rho, Orbit) {
  EXPECT_EQ(rho_orbit(seq("10110*"), 1), (std::vector<std::size_t>{1, 2, 4, 5, 6}));
  EXPECT_EQ(rho_orbit(seq("1011010110*"), 1), (std::vector<std::size_t>{1, 2, 4, 5, 11}));
  EXPECT_EQ(rho_orbit(seq("10110*"), 3), (std::vector<std::size_t>{3, 6}));
}

TEST(InternalAddress, Examples) {
  EXPECT_EQ(internal_address(seq("10110*")).str(), "1-2-4-5-6");
  EXPECT_EQ(internal_address(seq("101*")).str(), "1-2-4");
  EXPECT_EQ(internal_address(seq("111*")).str(), "1-4");
  EXPECT_TRUE(internal_address(seq("10110*")).terminated);
}

TEST(InternalAddress, ParseRejectsMalformed) {
  EXPECT_THROW(InternalAddress::parse("2-3"), ParseError);
  EXPECT_THROW(InternalAddress::parse("1-3-3"), ParseError);
  EXPECT_THROW(InternalAddress::parse("1"), ParseError);
  EXPECT_THROW(InternalAddress::parse("1-x"), ParseError);
  EXPECT_EQ(InternalAddress::parse("1-2-4-5-6").entries, (std::vector<std::size_t>{1, 2, 4, 5, 6}));
}

TEST(AddressToSequence, Examples) {
  EXPECT_EQ(address_to_sequence(addr({1, 2, 4, 5, 6})), seq("10110*"));
  EXPECT_EQ(address_to_sequence(addr({1, 2, 4})), seq("101*"));
  EXPECT_EQ(address_to_sequence(addr({1, 2, 4, 5, 11})), seq("1011010110*"));
}

TEST(AddressToSequence, RoundTripUpToPeriod12) {
  for (const auto& nu : star_periodic_sequences(12, false)) {
    const auto a = internal_address(nu);
    ASSERT_EQ(a.entries.back(), nu.period()) << nu.str();
    ASSERT_EQ(address_to_sequence(a), nu) << nu.str();
  }
}

TEST(ExactPeriod, Examples) {
  EXPECT_EQ(exact_period(word_from_string("1010")), 2u);
  EXPECT_EQ(exact_period(word_from_string("101")), 3u);
  EXPECT_EQ(exact_period(word_from_string("111111")), 1u);
}

TEST(UpperLower, Examples) {
  auto ul = upper_lower(seq("1*"));
  EXPECT_EQ(ul.upper.str(), "10");
  EXPECT_EQ(ul.lower.str(), "11");
  ul = upper_lower(seq("10*"));
  EXPECT_EQ(ul.upper.str(), "100");
  EXPECT_EQ(ul.lower.str(), "101");
  ul = upper_lower(seq("10110*"));
  EXPECT_TRUE(internal_address(ul.upper).contains(6));
  EXPECT_FALSE(internal_address(ul.lower).contains(6));
}

TEST(UpperLower, UpperHasExactPeriodN) {
  for (const auto& nu : star_periodic_sequences(12, false)) {
    const auto ul = upper_lower(nu);
    EXPECT_EQ(exact_period(ul.upper.period_word()), nu.period()) << nu.str();
  }
}

TEST(UpperLower, LowerAddressSkipsN) {
  for (const auto& nu : star_periodic_sequences(10, false)) {
    EXPECT_FALSE(internal_address(upper_lower(nu).lower).contains(nu.period())) << nu.str();
  }
}

TEST(Itinerary, Shift) {
  EXPECT_EQ(Itinerary::parse("(*1)").shift(), Itinerary::parse("(1*)"));
  EXPECT_EQ(Itinerary::parse("(10)").shift(), Itinerary::parse("(01)"));
  EXPECT_EQ(Itinerary::parse("0(1)").shift(), Itinerary::parse("(1)"));
}

TEST(Itinerary, CanonicalForm) {
  EXPECT_EQ(Itinerary::parse("1(01)").str(), "(10)");
  EXPECT_EQ(Itinerary::parse("(1010)").str(), "(10)");
  EXPECT_EQ(Itinerary::parse("0(1)").str(), "0(1)");
  EXPECT_EQ(Itinerary::parse("(1)").at(5), Symbol::one);
}

// Properties of rho on random periodic sequences.
class RhoProperties : public ::testing::Test {
 protected:
  static constexpr int kSamples = 10000;
  std::mt19937 rng{20240611};

  KneadingSequence random_sequence() {
    std::uniform_int_distribution<std::size_t> len(1, 64);
    std::bernoulli_distribution bit(0.5);
    Word w{Symbol::one};
    const std::size_t n = len(rng);
    while (w.size() < n) w.push_back(bit(rng) ? Symbol::one : Symbol::zero);
    return KneadingSequence::periodic(std::move(w));
  }
};

TEST_F(RhoProperties, OrbitOfShiftedRhoContainsAddressEntries) {
  std::size_t checked = 0;
  for (int i = 0; i < kSamples; ++i) {
    const auto nu = random_sequence();
    for (std::size_t m : internal_address(nu, 200).entries) {
      for (std::size_t s = 1; s < m; ++s) {
        const auto rs = rho(nu, s);
        if (rs && *rs <= m) continue;
        const auto r = rho(nu, m - s);
        ASSERT_TRUE(r) << nu.str() << " m=" << m << " s=" << s;
        ASSERT_TRUE(in_rho_orbit(nu, *r - (m - s), m)) << nu.str() << " m=" << m << " s=" << s;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0u);
}

// Addresses of periodic sequences may be infinite; a finite one stops at an
// entry with infinite rho, which must be the exact period.
TEST_F(RhoProperties, InfiniteRhoOnAddressMeansExactPeriod) {
  std::size_t finite = 0;
  for (int i = 0; i < kSamples; ++i) {
    const auto nu = random_sequence();
    const auto a = internal_address(nu);
    for (std::size_t m : a.entries) {
      if (rho(nu, m)) continue;
      ASSERT_EQ(m, exact_period(nu.period_word())) << nu.str();
      ++finite;
    }
  }
  EXPECT_GT(finite, 0u);
}

TEST_F(RhoProperties, Translation) {
  for (int i = 0; i < kSamples; ++i) {
    const auto nu = random_sequence();
    for (std::size_t m = 1; m <= 2 * nu.period(); ++m) {
      const auto r = rho(nu, m);
      for (std::size_t k = 2; !r || *r > k * m; ++k) {
        ASSERT_EQ(rho(nu, k * m), r) << nu.str() << " m=" << m << " k=" << k;
        if (k * m > 4 * nu.period()) break;
      }
    }
  }
}
