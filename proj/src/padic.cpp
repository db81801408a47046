#include "bsroots/padic.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace bsroots {

namespace {

using i128 = __int128;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::uint64_t mod_inverse(i128 a, i128 n) {
    i128 t = 0, new_t = 1, r = n, new_r = ((a % n) + n) % n;
    while (new_r != 0) {
        i128 q = r / new_r;
        i128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("denominator not invertible modulo p^k");
    if (t < 0) t += n;
    return static_cast<std::uint64_t>(t);
}

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
    return v;
}

}  // namespace

PAdicRational::PAdicRational(std::int64_t num, std::int64_t den, std::uint64_t p)
    : num_(num), den_(den), p_(p) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (static_cast<std::uint64_t>(den_) % p_ == 0)
        throw std::invalid_argument("denominator divisible by p: " + to_string());
}

PAdicRational PAdicRational::parse(const std::string& text, std::uint64_t p) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    // Accept the unicode minus sign as well.
    for (std::size_t pos; (pos = s.find("\xE2\x88\x92")) != std::string::npos;) s.replace(pos, 3, "-");
    const auto slash = s.find('/');
    if (slash == std::string::npos) return PAdicRational(parse_int(s), 1, p);
    return PAdicRational(parse_int(std::string_view(s).substr(0, slash)),
                         parse_int(std::string_view(s).substr(slash + 1)), p);
}

PAdicRational PAdicRational::translate_into_unit_interval() const {
    // alpha - floor(alpha) - 1 lies in [-1, 0).
    return *this + (-floor_div(num_, den_) - 1);
}

bool PAdicRational::congruent_mod_z(const PAdicRational& other) const {
    return den_ == other.den_ && (num_ - other.num_) % den_ == 0;
}

PAdicRational PAdicRational::operator+(std::int64_t k) const {
    return PAdicRational(num_ + k * den_, den_, p_);
}

std::string PAdicRational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator<(const PAdicRational& a, const PAdicRational& b) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r > (std::uint64_t{1} << 62) / p) throw std::overflow_error("p^k exceeds 2^62");
        r *= p;
    }
    return r;
}

std::uint64_t truncate_below(const PAdicRational& alpha, unsigned k) {
    const std::uint64_t pk = checked_pow(alpha.p(), k);
    if (pk == 1) return 0;
    const i128 mod = pk;
    i128 n = static_cast<i128>(alpha.num()) % mod;
    if (n < 0) n += mod;
    const i128 inv = mod_inverse(alpha.den(), mod);
    return static_cast<std::uint64_t>((n * inv) % mod);
}

std::vector<std::uint64_t> digits(const PAdicRational& alpha, unsigned k) {
    // Peel one digit at a time so large p never needs p^k.
    std::vector<std::uint64_t> out;
    out.reserve(k);
    PAdicRational rest = alpha;
    for (unsigned i = 0; i < k; ++i) {
        out.push_back(truncate_below(rest, 1));
        rest = truncate_above(rest, 1);
    }
    return out;
}

PAdicRational truncate_above(const PAdicRational& alpha, unsigned k) {
    const std::uint64_t pk = checked_pow(alpha.p(), k);
    const i128 low = truncate_below(alpha, k);
    const i128 shifted = static_cast<i128>(alpha.num()) - low * alpha.den();
    // shifted is divisible by p^k because low == alpha mod p^k.
    const i128 q = shifted / static_cast<i128>(pk);
    if (q > INT64_MAX || q < INT64_MIN) throw std::overflow_error("truncate_above overflow");
    return PAdicRational(static_cast<std::int64_t>(q), alpha.den(), alpha.p());
}

std::vector<PAdicRational> reconstruct(std::uint64_t residue, std::uint64_t p, unsigned N,
                                       std::int64_t den_bound, std::int64_t num_bound) {
    const std::uint64_t mod = checked_pow(p, N);
    const auto smod = static_cast<i128>(mod);
    std::vector<PAdicRational> out;
    for (std::int64_t v = 1; v <= den_bound; ++v) {
        if (static_cast<std::uint64_t>(v) % p == 0) continue;
        // u runs over the class residue*v mod p^N inside [-num_bound, num_bound].
        const i128 base = (static_cast<i128>(residue % mod) * v) % smod;
        i128 u = base - ((base + num_bound) / smod) * smod;
        for (; u <= num_bound; u += smod) {
            if (u < -num_bound) continue;
            if (std::gcd(static_cast<std::int64_t>(u), v) != 1) continue;
            out.emplace_back(static_cast<std::int64_t>(u), v, p);
        }
    }
    std::sort(out.begin(), out.end(), [](const PAdicRational& a, const PAdicRational& b) {
        return a.den() != b.den() ? a.den() < b.den() : a.num() < b.num();
    });
    return out;
}

}  // namespace bsroots
