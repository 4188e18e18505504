#include <gtest/gtest.h>

#include "socle/error.hpp"
#include "socle/field.hpp"

using socle::Field;

TEST(Field, PrimeInversesMultiplyToOne) {
  Field f = Field::prime(101);
  for (int a = 1; a < 101; ++a) {
    auto x = f.from_int(a);
    EXPECT_TRUE(f.is_one(f.mul(x, f.inv(x)))) << a;
  }
}

TEST(Field, RationalArithmeticStaysInLowestTerms) {
  Field q = Field::rationals();
  auto s = q.add(q.from_fraction(1, 2), q.from_fraction(1, 3));
  EXPECT_EQ(q.to_string(s), "5/6");
  EXPECT_EQ(q.to_string(q.mul(q.from_fraction(2, 4), q.from_int(2))), "1");
  EXPECT_TRUE(q.is_negative(q.from_int(-3)));
}

TEST(Field, ResiduesPrintSymmetrically) {
  Field f = Field::prime(101);
  EXPECT_EQ(f.to_string(f.from_int(100)), "-1");
  EXPECT_EQ(f.to_string(f.from_int(50)), "50");
  EXPECT_EQ(f.to_string(f.from_int(51)), "-50");
  EXPECT_EQ(f.to_string(f.from_int(-205)), "-3");
}

TEST(Field, FractionsReduceModP) {
  Field f = Field::prime(7);
  auto half = f.from_fraction(1, 2);
  EXPECT_TRUE(f.is_one(f.mul(half, f.from_int(2))));
  EXPECT_THROW(f.reduce_rational(mpq_class(1, 7)), socle::Error);
}

TEST(Field, RejectsCompositeCharacteristic) {
  EXPECT_THROW(Field::prime(100), socle::PreconditionError);
  EXPECT_THROW(Field::prime(1), socle::PreconditionError);
  EXPECT_NO_THROW(Field::prime(2));
}

TEST(Field, InverseOfZeroFails) {
  EXPECT_THROW(Field::prime(5).inv(Field::prime(5).zero()), socle::Error);
  EXPECT_THROW(Field::rationals().inv(Field::rationals().zero()), socle::Error);
}

TEST(Field, Descriptors) {
  EXPECT_EQ(Field::rationals().descriptor(), "Q");
  EXPECT_EQ(Field::prime(101).descriptor(), "F101");
  EXPECT_FALSE(Field::prime(101) == Field::prime(103));
}
