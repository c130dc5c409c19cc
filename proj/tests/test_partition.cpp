#include "fatpart/partition.hpp"
#include "fatpart/randomdata.hpp"

#include <doctest.h>

using namespace fatpart;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }

std::vector<Partition> all_up_to(int W) {
    PartitionConstraints c;
    c.weight_min = 0;
    c.weight_max = W;
    return enumerate_partitions(c);
}
}  // namespace

TEST_CASE("partition construction and serialization") {
    CHECK(P("-").empty());
    CHECK(P("2,2,1,1").parts() == std::vector<int>{2, 2, 1, 1});
    CHECK(P("2,2,1,1").to_string() == "2,2,1,1");
    CHECK(P("-").to_string() == "-");
    CHECK(P("3,1").weight() == 4);
    CHECK(P("3,1").length() == 2);
    CHECK(Partition({3, 1, 0, 0}).length() == 2);  // trailing zeros stripped
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("enumeration matches the documented order and examples") {
    PartitionConstraints c;
    c.weight_min = 0;
    c.weight_max = 0;
    CHECK(enumerate_partitions(c) == std::vector<Partition>{Partition()});

    c.weight_min = c.weight_max = 4;
    std::vector<Partition> w4 = enumerate_partitions(c);
    CHECK(w4 == std::vector<Partition>{P("4"), P("3,1"), P("2,2"), P("2,1,1"), P("1,1,1,1")});

    c.weight_min = 0;
    c.weight_max = 4;
    c.filter = PartitionConstraints::Filter::fat;
    CHECK(enumerate_partitions(c) ==
          std::vector<Partition>{P("-"), P("1,1"), P("2,2"), P("1,1,1,1")});
    // brute filter oracle: fat iff lambda = mu∪mu for some mu
    c.filter = PartitionConstraints::Filter::all;
    for (const Partition& lam : enumerate_partitions(c)) {
        bool fat = lam.length() % 2 == 0;
        for (int i = 1; fat && i <= lam.length(); i += 2)
            if (lam.part(i) != lam.part(i + 1)) fat = false;
        CHECK(classify(lam).is_fat == fat);
    }

    c.weight_max = 41;
    CHECK_THROWS_AS(enumerate_partitions(c), std::invalid_argument);

    PartitionConstraints b;
    b.weight_min = 0;
    b.weight_max = 6;
    b.max_length = 2;
    b.max_part = 3;
    for (const Partition& lam : enumerate_partitions(b)) {
        CHECK(lam.length() <= 2);
        CHECK(lam.part(1) <= 3);
    }
}

TEST_CASE("conjugation") {
    CHECK(P("-").conjugate() == P("-"));
    CHECK(P("2,2").conjugate() == P("2,2"));
    CHECK(P("3,1").conjugate() == P("2,1,1"));
    for (const Partition& lam : all_up_to(12)) CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("classification") {
    CHECK(classify(P("2,2,1,1")).is_fat);
    CHECK_FALSE(classify(P("2,2,1,1")).is_even_parts);
    CHECK_FALSE(classify(P("4,2")).is_fat);
    CHECK(classify(P("4,2")).is_even_parts);
    PartitionClass empty = classify(P("-"));
    CHECK(empty.is_fat);
    CHECK(empty.is_even_parts);
    CHECK(empty.is_strict);
    // even parts <=> conjugate is fat
    for (const Partition& lam : all_up_to(12))
        CHECK(classify(lam).is_even_parts == classify(lam.conjugate()).is_fat);
}

TEST_CASE("fatten and split") {
    CHECK(fatten(P("-")) == P("-"));
    CHECK(fatten(P("2,1")) == P("2,2,1,1"));
    CHECK(fatten(P("3,3")) == P("3,3,3,3"));
    for (const Partition& mu : all_up_to(8)) {
        Partition fat = fatten(mu);
        CHECK(fat.weight() == 2 * mu.weight());
        CHECK(classify(fat).is_fat);
        CHECK(split_fat(fat) == mu);
    }
    CHECK_THROWS_AS(split_fat(P("2,1")), std::domain_error);
}

TEST_CASE("frobenius coordinates") {
    CHECK(frobenius(P("-")).arms.empty());
    FrobeniusCoords f22 = frobenius(P("2,2"));
    CHECK(f22.arms == std::vector<int>{1, 0});
    CHECK(f22.legs == std::vector<int>{1, 0});
    FrobeniusCoords f31 = frobenius(P("3,1"));
    CHECK(f31.arms == std::vector<int>{2});
    CHECK(f31.legs == std::vector<int>{1});
    for (const Partition& lam : all_up_to(10)) {
        FrobeniusCoords fc = frobenius(lam);
        CHECK(fc.arms.size() == fc.legs.size());
        for (size_t i = 0; i + 1 < fc.arms.size(); ++i) {
            CHECK(fc.arms[i] > fc.arms[i + 1]);
            CHECK(fc.legs[i] > fc.legs[i + 1]);
        }
        CHECK(from_frobenius(fc) == lam);
    }
}

TEST_CASE("content pochhammer") {
    CHECK(content_pochhammer(Rat(7, 3), P("-")) == Rat(1));
    CHECK(content_pochhammer(Rat(2), P("2,1")) == Rat(6));
    CHECK(content_pochhammer(Rat(3), P("1,1,1,1")) == Rat(0));
    CHECK(content_pochhammer(2.0, P("2,1")) == doctest::Approx(6.0));
}

TEST_CASE("symmetric group dimensions") {
    CHECK(dim_symmetric_group(P("-")) == 1);
    CHECK(dim_symmetric_group(P("2,1")) == 2);
    CHECK(dim_symmetric_group(P("2,2,1,1")) == 9);
    // hook-length oracle: d * hook_product == |lambda|!
    for (const Partition& lam : all_up_to(10))
        CHECK(dim_symmetric_group(lam) * hook_product(lam) == factorial(lam.weight()));
}

TEST_CASE("schur at p_infinity") {
    CHECK(schur_at_pinfty(P("-")) == Rat(1));
    CHECK(schur_at_pinfty(P("1,1")) == Rat(1, 2));
    CHECK(schur_at_pinfty(P("2,1")) == Rat(1, 3));
}
