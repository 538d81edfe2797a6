#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace em {

// Finite base-b digit sequence with provenance. Provenance tags:
// "champernowne", "pi", "file:PATH", "prng:SEED"; binarize chains them.
struct DigitStream {
    std::int32_t base = 2;
    std::vector<std::uint8_t> digits;
    std::string provenance;

    std::int64_t count() const { return static_cast<std::int64_t>(digits.size()); }
};

// First `count` digits of the base-b Champernowne expansion, built by
// concatenating 1, 2, 3, ... in base b.
DigitStream champernowne_digits(std::int32_t base, std::int64_t count);

// Digits of pi including the integer part (base 10: 3,1,4,...; base 2:
// 1,1,0,0,...). Base 10 uses a bounded spigot, base 2 hex digit extraction.
// Counts beyond `budget` are refused (LimitError) - supply a digit file
// instead. Only bases 2 and 10 are supported.
inline constexpr std::int64_t kPiDigitBudget = 100'000;
DigitStream pi_digits(std::int32_t base, std::int64_t count, std::int64_t budget = kPiDigitBudget);

// Digit d maps to 0 if d < base/2 and to 1 otherwise; base-2 input passes
// through unchanged.
DigitStream binarize(const DigitStream& s);

// Digit file format: '#' comment lines, one of which must be "# base=B";
// digits are contiguous ASCII characters ('0'-'9', then 'a'-'z' for bases
// above ten); whitespace is ignored.
DigitStream load_digit_file(const std::filesystem::path& path);
std::string digit_file_text(const DigitStream& s);
void write_digit_file(const DigitStream& s, const std::filesystem::path& path);

// Seeded uniform digits; the control stream for experiments.
DigitStream prng_digits(std::int32_t base, std::int64_t count, std::uint64_t seed);

}  // namespace em
