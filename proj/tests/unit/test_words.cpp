#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "twobridge/error.hpp"
#include "twobridge/slope.hpp"
#include "twobridge/words.hpp"

using namespace twobridge;
using Int = std::int64_t;

namespace {

// Oracle: û = b^e1 a^e2 b^e3 ..., e_i = (-1)^floor(iq/p),
// u = a û b^((-1)^q) û⁻¹ for odd p and a û a⁻¹ û⁻¹ for even p.
std::string riley_oracle(Int q, Int p) {
  std::string hat;
  for (Int i = 1; i < p; ++i) {
    const bool neg = ((i * q) / p) % 2 == 1;
    const char g = (i % 2 == 1) ? 'b' : 'a';
    hat += neg ? static_cast<char>(g - 32) : g;
  }
  std::string inv(hat.rbegin(), hat.rend());
  for (char& c : inv) c = (c >= 'a') ? static_cast<char>(c - 32) : static_cast<char>(c + 32);
  const std::string mid = (p % 2 == 0) ? "A" : ((q % 2 == 0) ? "b" : "B");
  return "a" + hat + mid + inv;
}

Word random_word(std::mt19937& rng, std::size_t len) {
  static const Letter pool[] = {Letter::a(), Letter::A(), Letter::b(), Letter::B()};
  std::uniform_int_distribution<int> pick(0, 3);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(pool[pick(rng)]);
  return w;
}

// Deletes one adjacent inverse pair at a time until none is left.
Word naive_reduce(Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1].inverse()) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

Word naive_cyclic_reduce(Word w) {
  w = naive_reduce(w);
  while (w.size() >= 2 && w.front() == w.back().inverse()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

std::vector<Word> all_rotations(const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < std::max<std::size_t>(w.size(), 1); ++i) {
    Word r(w.begin() + static_cast<std::ptrdiff_t>(i % std::max<std::size_t>(w.size(), 1)), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i % std::max<std::size_t>(w.size(), 1)));
    out.push_back(r);
  }
  return out;
}

Word naive_inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

std::vector<Slope> unit_slopes(Int max_p) {
  std::vector<Slope> out;
  for (Int p = 1; p <= max_p; ++p) {
    for (Int q = 1; q <= p; ++q) {
      if (std::gcd(q, p) == 1) out.emplace_back(q, p);
    }
  }
  return out;
}

}  // namespace

TEST(Letter, OrderAndInverse) {
  EXPECT_LT(Letter::a(), Letter::A());
  EXPECT_LT(Letter::A(), Letter::b());
  EXPECT_LT(Letter::b(), Letter::B());
  EXPECT_EQ(Letter::a().inverse(), Letter::A());
  EXPECT_EQ(Letter::B().inverse(), Letter::b());
  EXPECT_EQ(to_char(Letter::A()), 'A');
}

TEST(Word, ParsePrintRoundTrip) {
  EXPECT_EQ(to_string(Word{}), "1");
  EXPECT_TRUE(parse_word("1").empty());
  EXPECT_EQ(to_string(parse_word("abAB")), "abAB");
  EXPECT_THROW(parse_word("abc"), ParseError);
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 1 + static_cast<std::size_t>(i % 17));
    EXPECT_EQ(parse_word(to_string(w)), w);
  }
}

TEST(Relator, KnownStrings) {
  EXPECT_EQ(to_string(u_hat(Slope(4, 7))), "bABabA");
  EXPECT_EQ(to_string(u_word(Slope(4, 7))), "abABabAbaBAbaB");
  EXPECT_TRUE(u_hat(Slope(1, 1)).empty());
  EXPECT_EQ(to_string(u_word(Slope(0, 1))), "ab");
  EXPECT_EQ(to_string(u_word(Slope(1, 1))), "aB");
  EXPECT_TRUE(u_word(Slope::infinity()).empty());
  EXPECT_THROW(u_hat(Slope(3, 2)), DomainError);
  EXPECT_THROW(u_word(Slope(-1, 2)), DomainError);
}

TEST(Relator, AllMethodsMatchOracle) {
  for (const auto& r : unit_slopes(120)) {
    const std::string expected = riley_oracle(r.num(), r.den());
    for (auto m : {RelatorMethod::Riley, RelatorMethod::Ceil, RelatorMethod::LatticeScan}) {
      EXPECT_EQ(to_string(u_word(r, m)), expected) << r.to_string() << " method " << static_cast<int>(m);
    }
  }
}

TEST(Relator, StructuralProperties) {
  for (const auto& r : unit_slopes(80)) {
    const Word u = u_word(r);
    ASSERT_EQ(u.size(), static_cast<std::size_t>(2 * r.den()));
    EXPECT_TRUE(is_alternating(u));
    EXPECT_TRUE(is_cyclically_alternating(u));
    EXPECT_TRUE(is_cyclically_reduced(u));
    EXPECT_EQ(naive_cyclic_reduce(u), u);
    EXPECT_FALSE(cyclic_equal(u, naive_inverse(u), false)) << r.to_string();
    // a <-> b swaps u_r with a cyclic permutation of u_r or its inverse.
    const Word swapped = apply_automorphism(u, Letter::b(), Letter::a());
    EXPECT_TRUE(cyclic_equal(u, swapped, true)) << r.to_string();
    const Word hat = u_hat(r);
    EXPECT_EQ(hat.size(), static_cast<std::size_t>(r.den() - 1));
    if (!hat.empty()) {
      EXPECT_EQ(hat.front().gen, Generator::B);
    }
  }
}

TEST(Relator, PositiveSlopesThroughShift) {
  // u_{s+1} is a cyclic permutation of the (a, b⁻¹) image of u_s, up to inverse.
  for (const auto& s : unit_slopes(30)) {
    const Word image = apply_automorphism(u_word(s), Letter::a(), Letter::B());
    EXPECT_TRUE(cyclic_equal(image, u_word_positive(s + 1), true)) << s.to_string();
  }
  EXPECT_EQ(u_word_positive(Slope(4, 7)), u_word(Slope(4, 7)));
}

TEST(Automorphism, Examples) {
  EXPECT_EQ(to_string(apply_automorphism(parse_word("ab"), Letter::a(), Letter::B())), "aB");
  EXPECT_EQ(apply_automorphism(parse_word("ab"), Letter::a(), Letter::B()), u_word(Slope(1, 1)));
  const Word u = u_word(Slope(4, 7));
  EXPECT_EQ(apply_automorphism(u, Letter::a(), Letter::b()), u);
  EXPECT_THROW(apply_automorphism(u, Letter::a(), Letter::A()), DomainError);
}

TEST(FreeReduce, Examples) {
  EXPECT_EQ(to_string(free_reduce(parse_word("abBa"))), "aa");
  EXPECT_EQ(cyclic_reduce(parse_word("Babb")), CyclicWord(parse_word("ab")));
  EXPECT_TRUE(free_reduce(parse_word("abBA")).empty());
}

TEST(FreeReduce, MatchesPairDeletionOracle) {
  std::mt19937 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Word w = random_word(rng, static_cast<std::size_t>(i % 24));
    const Word got = free_reduce(w);
    EXPECT_EQ(got, naive_reduce(w)) << to_string(w);
    EXPECT_TRUE(is_reduced(got));
    EXPECT_EQ(cyclic_reduce(w), CyclicWord(naive_cyclic_reduce(w))) << to_string(w);
    Word ww = w;
    const Word wi = naive_inverse(w);
    ww.insert(ww.end(), wi.begin(), wi.end());
    EXPECT_TRUE(free_reduce(ww).empty());
  }
}

TEST(CyclicWord, CanonicalIsLeastRotation) {
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Word w = naive_cyclic_reduce(random_word(rng, 1 + static_cast<std::size_t>(i % 15)));
    if (w.empty()) continue;
    const auto rots = all_rotations(w);
    const Word least = *std::min_element(rots.begin(), rots.end());
    EXPECT_EQ(CyclicWord(w).representative(), least);
    for (const auto& r : rots) EXPECT_EQ(CyclicWord(r), CyclicWord(w));
    EXPECT_EQ(CyclicWord(w).inverse(), CyclicWord(naive_inverse(w)));
  }
}

TEST(CyclicEqual, MatchesRotationSearch) {
  EXPECT_TRUE(cyclic_equal(parse_word("ab"), parse_word("ba"), false));
  const Word u = u_word(Slope(4, 7));
  EXPECT_FALSE(cyclic_equal(u, inverse(u), false));
  EXPECT_TRUE(cyclic_equal(u, inverse(u), true));

  std::mt19937 rng(5);
  for (int i = 0; i < 3000; ++i) {
    const std::size_t len = 1 + static_cast<std::size_t>(i % 6);
    const Word x = naive_cyclic_reduce(random_word(rng, len));
    const Word y = naive_cyclic_reduce(random_word(rng, len));
    bool rot = false, rot_inv = false;
    for (const auto& r : all_rotations(x)) {
      rot = rot || r == y;
      rot_inv = rot_inv || naive_inverse(r) == y;
    }
    EXPECT_EQ(cyclic_equal(x, y, false), rot);
    EXPECT_EQ(cyclic_equal(x, y, true), rot || rot_inv);
  }
}
