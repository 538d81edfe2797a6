#include "digits.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "random.hpp"

namespace em {

namespace {

void check_base(std::int32_t base) {
    if (base < 2 || base > 36) throw std::invalid_argument("base must be in 2..36");
}

char digit_char(std::uint8_t d) { return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10); }

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    return -1;
}

}  // namespace

DigitStream champernowne_digits(std::int32_t base, std::int64_t count) {
    check_base(base);
    if (count < 0) throw std::invalid_argument("count must be non-negative");
    DigitStream s;
    s.base = base;
    s.provenance = "champernowne";
    s.digits.reserve(static_cast<std::size_t>(count));
    std::uint8_t buf[64];
    for (std::int64_t next = 1; std::cmp_less(s.digits.size(), count); ++next) {
        int len = 0;
        for (std::int64_t x = next; x > 0; x /= base) buf[len++] = static_cast<std::uint8_t>(x % base);
        for (int i = len - 1; i >= 0 && std::cmp_less(s.digits.size(), count); --i)
            s.digits.push_back(buf[i]);
    }
    return s;
}

namespace {

// Rabinowitz-Wagon spigot. Produces base-10 digits of pi starting with the
// integer part; predigits are buffered to absorb the 9-carry corrections.
std::vector<std::uint8_t> pi_spigot_base10(std::int64_t count) {
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(count));
    const std::int64_t want = count + 20;  // margin for buffered predigit and 9-runs
    const std::size_t len = static_cast<std::size_t>(want * 10 / 3 + 2);
    std::vector<std::uint64_t> a(len, 2);
    bool held_valid = false;
    std::uint64_t held = 0;
    std::int64_t nines = 0;
    auto emit = [&](std::uint64_t d) { out.push_back(static_cast<std::uint8_t>(d)); };
    for (std::int64_t iter = 0; iter < want && std::cmp_less(out.size(), count); ++iter) {
        std::uint64_t carry = 0;
        for (std::size_t i = len; i-- > 1;) {
            const std::uint64_t den = 2 * i + 1;
            const std::uint64_t x = 10 * a[i] + carry * (i + 1);
            a[i] = x % den;
            carry = x / den;
        }
        const std::uint64_t x = 10 * a[0] + carry;
        a[0] = x % 10;
        const std::uint64_t q = x / 10;  // predigit, 0..10
        if (q == 9) {
            ++nines;
        } else if (q == 10) {
            if (held_valid) emit(held + 1);
            for (; nines > 0; --nines) emit(0);
            held = 0;
            held_valid = true;
        } else {
            if (held_valid) emit(held);
            for (; nines > 0; --nines) emit(9);
            held = q;
            held_valid = true;
        }
    }
    if (held_valid && std::cmp_less(out.size(), count)) emit(held);
    while (std::cmp_less(out.size(), count) && nines > 0) {
        emit(9);
        --nines;
    }
    if (std::cmp_less(out.size(), count)) throw std::logic_error("spigot under-produced digits");
    out.resize(static_cast<std::size_t>(count));
    return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a * b % m; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

double frac(double x) { return x - std::floor(x); }

// Fractional part of 16^(d-1) * sum_k 1/(16^k (8k+j)); the modular split is
// the standard digit-extraction trick.
double bbp_partial(std::int64_t d, int j) {
    double s = 0.0;
    for (std::int64_t k = 0; k < d; ++k) {
        const std::uint64_t den = 8 * static_cast<std::uint64_t>(k) + j;
        s = frac(s + static_cast<double>(powmod(16, static_cast<std::uint64_t>(d - 1 - k), den)) /
                         static_cast<double>(den));
    }
    double t = 0.0;
    for (std::int64_t k = d;; ++k) {
        const double term = std::pow(16.0, static_cast<double>(d - 1 - k)) /
                            static_cast<double>(8 * k + j);
        if (term < 1e-18) break;
        t += term;
    }
    return frac(s + t);
}

// Hex digit of the fractional part of pi at 1-indexed position d.
int pi_hex_digit(std::int64_t d) {
    const double x = frac(4.0 * bbp_partial(d, 1) - 2.0 * bbp_partial(d, 4) -
                          bbp_partial(d, 5) - bbp_partial(d, 6) + 4.0);
    return static_cast<int>(x * 16.0);
}

std::vector<std::uint8_t> pi_bits_base2(std::int64_t count) {
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(count));
    // integer part: 11
    if (count >= 1) out.push_back(1);
    if (count >= 2) out.push_back(1);
    for (std::int64_t pos = 1; std::cmp_less(out.size(), count); ++pos) {
        const int h = pi_hex_digit(pos);
        for (int b = 3; b >= 0 && std::cmp_less(out.size(), count); --b)
            out.push_back(static_cast<std::uint8_t>((h >> b) & 1));
    }
    return out;
}

}  // namespace

DigitStream pi_digits(std::int32_t base, std::int64_t count, std::int64_t budget) {
    if (base != 2 && base != 10) throw std::invalid_argument("pi digits support base 2 and base 10 only");
    if (count < 0) throw std::invalid_argument("count must be non-negative");
    if (count > budget)
        throw LimitError("pi digit count exceeds the compute budget; supply a digit file instead");
    DigitStream s;
    s.base = base;
    s.provenance = "pi";
    s.digits = (base == 10) ? pi_spigot_base10(count) : pi_bits_base2(count);
    return s;
}

DigitStream binarize(const DigitStream& s) {
    if (s.base == 2) {
        DigitStream out = s;
        return out;
    }
    DigitStream out;
    out.base = 2;
    out.provenance = "binarize(" + s.provenance + ")";
    out.digits.reserve(s.digits.size());
    // 0 if digit < base/2, else 1
    for (const auto d : s.digits) out.digits.push_back(2 * d < s.base ? 0 : 1);
    return out;
}

DigitStream load_digit_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open digit file: " + path.string());
    DigitStream s;
    s.base = 0;
    s.provenance = "file:" + path.string();
    std::string line;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') {
            const auto pos = line.find("base=");
            if (pos != std::string::npos) {
                try {
                    s.base = std::stoi(line.substr(pos + 5));
                } catch (const std::exception&) {
                    throw IoError("bad base header in digit file: " + path.string());
                }
                if (s.base < 2 || s.base > 36)
                    throw IoError("digit file base out of range: " + path.string());
            }
            continue;
        }
        if (s.base == 0)
            throw IoError("digit file is missing the '# base=B' header: " + path.string());
        for (std::size_t i = start; i < line.size(); ++i) {
            const char c = line[i];
            if (c == ' ' || c == '\t' || c == '\r') continue;
            const int v = digit_value(c);
            if (v < 0 || v >= s.base)
                throw IoError(std::string("malformed digit '") + c + "' in " + path.string());
            s.digits.push_back(static_cast<std::uint8_t>(v));
        }
    }
    if (s.base == 0) throw IoError("digit file is missing the '# base=B' header: " + path.string());
    if (s.digits.empty()) throw IoError("digit file contains no digits: " + path.string());
    return s;
}

std::string digit_file_text(const DigitStream& s) {
    std::ostringstream out;
    out << "# base=" << s.base << "\n";
    out << "# provenance=" << s.provenance << "\n";
    for (std::size_t i = 0; i < s.digits.size(); ++i) {
        out << digit_char(s.digits[i]);
        if ((i + 1) % 80 == 0) out << "\n";
    }
    if (s.digits.size() % 80 != 0) out << "\n";
    return out.str();
}

void write_digit_file(const DigitStream& s, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << digit_file_text(s);
}

DigitStream prng_digits(std::int32_t base, std::int64_t count, std::uint64_t seed) {
    check_base(base);
    if (count < 0) throw std::invalid_argument("count must be non-negative");
    DigitStream s;
    s.base = base;
    s.provenance = "prng:" + std::to_string(seed);
    s.digits.reserve(static_cast<std::size_t>(count));
    Rng rng(seed);
    for (std::int64_t i = 0; i < count; ++i)
        s.digits.push_back(static_cast<std::uint8_t>(rng.below(static_cast<std::uint64_t>(base))));
    return s;
}

}  // namespace em
