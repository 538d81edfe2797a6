#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <vector>

#include "digits.hpp"
#include "errors.hpp"
#include "measures.hpp"

using em::DigitStream;

namespace {

const std::filesystem::path kDataDir = TEST_DATA_DIR;

std::vector<std::uint8_t> digits_of(const DigitStream& s) { return s.digits; }

}  // namespace

TEST_CASE("champernowne digits") {
    const auto c10 = em::champernowne_digits(10, 16);
    CHECK(digits_of(c10) ==
          std::vector<std::uint8_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 1, 0, 1, 1, 1, 2, 1});
    CHECK(c10.provenance == "champernowne");

    CHECK(em::champernowne_digits(10, 0).digits.empty());

    // concatenate 1, 10, 11, 100, 101 in binary
    const auto c2 = em::champernowne_digits(2, 10);
    CHECK(digits_of(c2) == std::vector<std::uint8_t>{1, 1, 0, 1, 1, 1, 0, 0, 1, 0});

    // prefix property
    const auto longer = em::champernowne_digits(10, 5000);
    const auto shorter = em::champernowne_digits(10, 1234);
    CHECK(std::equal(shorter.digits.begin(), shorter.digits.end(), longer.digits.begin()));

    CHECK_THROWS_AS(em::champernowne_digits(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(em::champernowne_digits(10, -1), std::invalid_argument);
}

TEST_CASE("pi digits match the bundled reference table") {
    const auto ref10 = em::load_digit_file(kDataDir / "pi_base10.txt");
    REQUIRE(ref10.base == 10);
    REQUIRE(ref10.count() >= 10000);

    const auto head = em::pi_digits(10, 6);
    CHECK(digits_of(head) == std::vector<std::uint8_t>{3, 1, 4, 1, 5, 9});
    CHECK(em::pi_digits(10, 1).digits == std::vector<std::uint8_t>{3});

    const auto computed = em::pi_digits(10, 1000);
    CHECK(std::equal(computed.digits.begin(), computed.digits.end(), ref10.digits.begin()));

    const auto ref2 = em::load_digit_file(kDataDir / "pi_base2.txt");
    REQUIRE(ref2.base == 2);
    const auto bits = em::pi_digits(2, 4);
    CHECK(digits_of(bits) == std::vector<std::uint8_t>{1, 1, 0, 0});
    const auto computed2 = em::pi_digits(2, 2048);
    CHECK(std::equal(computed2.digits.begin(), computed2.digits.end(), ref2.digits.begin()));

    CHECK_THROWS_AS(em::pi_digits(10, 200000), em::LimitError);
    CHECK_THROWS_AS(em::pi_digits(3, 10), std::invalid_argument);
}

TEST_CASE("binarize") {
    DigitStream s;
    s.base = 10;
    s.digits = {3, 1, 4, 1, 5, 9};
    s.provenance = "pi";
    const auto b = em::binarize(s);
    CHECK(digits_of(b) == std::vector<std::uint8_t>{0, 0, 0, 0, 1, 1});
    CHECK(b.base == 2);
    CHECK(b.provenance == "binarize(pi)");

    // base-2 input passes through
    const auto c2 = em::champernowne_digits(2, 10);
    const auto same = em::binarize(c2);
    CHECK(digits_of(same) == digits_of(c2));
    CHECK(same.provenance == c2.provenance);

    DigitStream fours;
    fours.base = 10;
    fours.digits = std::vector<std::uint8_t>(20, 4);
    fours.provenance = "test";
    for (const auto d : em::binarize(fours).digits) CHECK(d == 0);

    // idempotent once binary
    CHECK(digits_of(em::binarize(em::binarize(s))) == digits_of(em::binarize(s)));
}

TEST_CASE("digit file parsing") {
    const auto dir = std::filesystem::temp_directory_path() / "em_digit_test";
    std::filesystem::create_directories(dir);
    const auto write = [&](const std::string& name, const std::string& body) {
        std::ofstream out(dir / name);
        out << body;
        return dir / name;
    };

    const auto ok = em::load_digit_file(write("ok.txt", "# base=2\n0110\n"));
    CHECK(ok.base == 2);
    CHECK(digits_of(ok) == std::vector<std::uint8_t>{0, 1, 1, 0});
    CHECK(ok.provenance.rfind("file:", 0) == 0);

    const auto dec = em::load_digit_file(write("dec.txt", "# base=10\n314159\n"));
    CHECK(digits_of(dec) == std::vector<std::uint8_t>{3, 1, 4, 1, 5, 9});

    CHECK_THROWS_AS(em::load_digit_file(write("bad.txt", "# base=2\n0170\n")), em::IoError);
    CHECK_THROWS_AS(em::load_digit_file(write("nohdr.txt", "0110\n")), em::IoError);
    CHECK_THROWS_AS(em::load_digit_file(write("empty.txt", "# base=2\n")), em::IoError);
    CHECK_THROWS_AS(em::load_digit_file(dir / "missing.txt"), em::IoError);

    // writer/reader round-trip
    const auto stream = em::champernowne_digits(10, 500);
    em::write_digit_file(stream, dir / "round.txt");
    const auto back = em::load_digit_file(dir / "round.txt");
    CHECK(back.base == stream.base);
    CHECK(digits_of(back) == digits_of(stream));
    std::filesystem::remove_all(dir);
}

TEST_CASE("prng digits") {
    const auto a = em::prng_digits(2, 1000, 42);
    const auto b = em::prng_digits(2, 1000, 42);
    CHECK(digits_of(a) == digits_of(b));
    CHECK(a.provenance == "prng:42");

    CHECK(em::prng_digits(10, 0, 1).digits.empty());

    const auto big = em::prng_digits(2, 100000, 7);
    std::int64_t ones = 0;
    for (const auto d : big.digits) ones += d;
    const double frac = static_cast<double>(ones) / 100000.0;
    CHECK(frac > 0.49);
    CHECK(frac < 0.51);
}

TEST_CASE("desk-scale Borel normality proxy") {
    // single-bit empirical entropy of 10^4-digit streams
    const auto check_entropy = [](const DigitStream& bits) {
        std::int64_t ones = 0;
        for (const auto d : bits.digits) ones += d;
        const double p = static_cast<double>(ones) / static_cast<double>(bits.digits.size());
        CHECK(em::binary_entropy(p) >= 0.95);
    };
    check_entropy(em::champernowne_digits(2, 10000));
    check_entropy(em::binarize(em::pi_digits(10, 10000)));
}
