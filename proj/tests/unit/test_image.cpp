#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "lip/image.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lip;

TEST_CASE("luminance uses BT.601 weights") {
    RgbImage rgb;
    rgb.width = 3;
    rgb.height = 1;
    rgb.data = {90, 90, 90, /**/ 255, 0, 0, /**/ 0, 0, 0};
    const GreyImage grey = luminance(rgb);
    CHECK(grey(0, 0) == doctest::Approx(90.0).epsilon(1e-12)); // weights sum to 1
    CHECK(grey(1, 0) == doctest::Approx(76.245).epsilon(1e-12));
    CHECK(grey(2, 0) == 0.0);
}

TEST_CASE("luminance rejects non-RGB payloads") {
    RgbImage rgb;
    rgb.width = 2;
    rgb.height = 1;
    rgb.data = {1, 2, 3, 4}; // 2 channels worth of bytes
    CHECK_THROWS_AS(luminance(rgb), std::domain_error);
}

TEST_CASE("lip transforms: identity operations leave the image unchanged") {
    testgen::Rng rng(101);
    const GreyImage img = testgen::random_image(rng, 8, 6, 1.0, 254.0);

    const GreyImage plus_zero = lip_transform_image(img, TransformOp::Add, 0.0, false);
    const GreyImage times_one = lip_transform_image(img, TransformOp::Mul, 1.0, false);
    for (std::size_t i = 0; i < img.size(); ++i) {
        CHECK(plus_zero.at_index(i) == img.at_index(i));
        CHECK(std::fabs(times_one.at_index(i) - img.at_index(i)) < 1e-12 * 256.0);
    }
}

TEST_CASE("lip transforms: darken then brighten restores the original") {
    testgen::Rng rng(102);
    const GreyImage img = testgen::random_image(rng, 8, 8, 65.0, 134.0);
    for (const bool in_complement : {false, true}) {
        const GreyImage dark = lip_transform_image(img, TransformOp::Add, 120.0, in_complement);
        const GreyImage back = lip_transform_image(dark, TransformOp::Sub, 120.0, in_complement);
        for (std::size_t i = 0; i < img.size(); ++i)
            CHECK(std::fabs(back.at_index(i) - img.at_index(i)) < 1e-9 * 256.0);
    }
}

TEST_CASE("lip transforms report the first offending pixel") {
    GreyImage img(3, 2, GreyScale(), 128.0);
    img(1, 1) = 60.0; // complement 195 < 120 is fine; 195 (-) 120 is fine
    img(2, 0) = 250.0; // complement 5 < 120 breaks Sub
    CHECK_THROWS_WITH_AS(lip_transform_image(img, TransformOp::Sub, 120.0, true),
                         doctest::Contains("(2, 0)"), std::domain_error);
    // LIP-adding 120 to the complement of a pixel at 0 overflows M-1
    GreyImage img2(2, 1, GreyScale(), 100.0);
    img2(0, 0) = 0.0;
    CHECK_THROWS_WITH_AS(lip_transform_image(img2, TransformOp::Add, 120.0, true),
                         doctest::Contains("(0, 0)"), std::domain_error);
    CHECK_THROWS_AS(lip_transform_image(img2, TransformOp::Add, 256.0, false),
                    std::domain_error);
}

TEST_CASE("quantize rounds and clamps") {
    GreyImage img(4, 1);
    img(0, 0) = 127.4;
    img(1, 0) = 255.7;
    img(2, 0) = 200.0;
    img(3, 0) = 0.49;
    const GreyImage q = quantize(img);
    CHECK(q(0, 0) == 127.0);
    CHECK(q(1, 0) == 255.0); // clamped to M-1
    CHECK(q(2, 0) == 200.0); // integers are fixed points
    CHECK(q(3, 0) == 0.0);
    CHECK(quantize(q).same_pixels(q));
}

TEST_CASE("dilation of a single pixel by the 3x3 square") {
    RegionMask mask(5, 5);
    mask.set(2, 2);
    const RegionMask out = dilate(mask, StructuringElement::square(3));
    CHECK(out.count() == 9);
    for (int y = 1; y <= 3; ++y)
        for (int x = 1; x <= 3; ++x) CHECK(out.test(x, y));

    // corner pixel: clipped to 4 pixels
    RegionMask corner(5, 5);
    corner.set(0, 0);
    CHECK(dilate(corner, StructuringElement::square(3)).count() == 4);
}

TEST_CASE("dilation edge cases: empty and saturated masks") {
    const StructuringElement se = StructuringElement::square(3);
    CHECK(dilate(RegionMask(6, 4), se).count() == 0);
    CHECK(dilate(RegionMask(6, 4, true), se) == RegionMask(6, 4, true));
}

TEST_CASE("dilation is extensive, increasing, and matches the brute force") {
    testgen::Rng rng(2024);
    const StructuringElement se = StructuringElement::square(3);
    for (int trial = 0; trial < 50; ++trial) {
        const RegionMask a = testgen::random_bits(rng, 16, 16, 0.2);
        RegionMask b = a;
        // b is a superset of a
        const RegionMask extra = testgen::random_bits(rng, 16, 16, 0.1);
        for (std::size_t i = 0; i < b.size(); ++i)
            if (extra.test_index(i)) b.set_index(i);

        const RegionMask da = dilate(a, se);
        CHECK(a.subset_of(da));                 // extensive (origin in SE)
        CHECK(da.subset_of(dilate(b, se)));     // increasing
        CHECK(da == oracle::dilate(a, se));     // matches definition
    }
}

TEST_CASE("structuring element validation") {
    CHECK_THROWS_AS(StructuringElement({{1, 0}, {0, 1}}), std::domain_error);
    CHECK_THROWS_AS(StructuringElement::square(4), std::domain_error);
    CHECK(StructuringElement::square(1).offsets().size() == 1);
}

TEST_CASE("dynamic range over regions") {
    GreyImage img(3, 1);
    img(0, 0) = 100.0;
    img(1, 0) = 150.0;
    img(2, 0) = 200.0;
    RegionMask all(3, 1, true);
    const DynamicRange dr = dynamic_range(img, all);
    CHECK(dr.lo == 100.0);
    CHECK(dr.hi == 200.0);
    CHECK(dr.contains(100.0));
    CHECK(dr.contains(200.0));
    CHECK(!dr.contains(99.9));

    const DynamicRange single = dynamic_range(img, testgen::single_pixel(3, 1, 1, 0));
    CHECK(single.lo == 150.0);
    CHECK(single.hi == 150.0);

    const GreyImage flat(4, 4, GreyScale(), 42.0);
    const DynamicRange c = dynamic_range(flat, RegionMask(4, 4, true));
    CHECK(c.lo == 42.0);
    CHECK(c.hi == 42.0);

    CHECK_THROWS_AS(dynamic_range(img, RegionMask(3, 1)), std::domain_error);
    CHECK_THROWS_AS(dynamic_range(img, RegionMask(2, 2, true)), std::domain_error);
}

TEST_CASE("components_touching keeps exactly the anchored components") {
    // two blobs; anchor touches only the left one
    RegionMask mask(7, 3);
    mask.set(0, 0);
    mask.set(1, 0);
    mask.set(1, 1);
    mask.set(5, 1);
    mask.set(6, 1);
    const RegionMask kept =
        components_touching(mask, testgen::single_pixel(7, 3, 1, 1), Connectivity::Four);
    CHECK(kept.count() == 3);
    CHECK(kept.test(0, 0));
    CHECK(!kept.test(5, 1));

    // 8-connectivity bridges a diagonal gap that 4-connectivity does not
    RegionMask diag(3, 3);
    diag.set(0, 0);
    diag.set(1, 1);
    const RegionMask anchor = testgen::single_pixel(3, 3, 0, 0);
    CHECK(components_touching(diag, anchor, Connectivity::Four).count() == 1);
    CHECK(components_touching(diag, anchor, Connectivity::Eight).count() == 2);
}

TEST_CASE("complement_image flips the scale and is involutive") {
    testgen::Rng rng(103);
    const GreyImage img = testgen::random_image(rng, 6, 5, 0.0, 255.0);
    const GreyImage c = complement_image(img);
    const GreyImage back = complement_image(c);
    for (std::size_t i = 0; i < img.size(); ++i) {
        CHECK(c.at_index(i) == 255.0 - img.at_index(i));
        CHECK(back.at_index(i) == doctest::Approx(img.at_index(i)).epsilon(1e-12));
    }

    // exact on integer-valued images
    const GreyImage q = quantize(img);
    CHECK(complement_image(complement_image(q)).same_pixels(q));

    GreyImage over(2, 1, GreyScale(), 10.0);
    over(1, 0) = 255.5;
    CHECK_THROWS_AS(complement_image(over), std::domain_error);
}
