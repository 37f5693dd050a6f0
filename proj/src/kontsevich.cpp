#include "f0f2/kontsevich.hpp"

#include <cassert>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "f0f2/closed_forms.hpp"

namespace f0f2 {

std::optional<Count> CountTable::find(const CountKey& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = computed_.find(key); it != computed_.end()) return it->second;
    if (!paranoid_) {
        if (auto it = loaded_.find(key); it != loaded_.end()) return it->second;
    }
    return std::nullopt;
}

void CountTable::insert(const CountKey& key, const Count& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = loaded_.find(key); it != loaded_.end() && it->second != value) {
        ++mismatches_;
        std::ostringstream os;
        os << "cache mismatch for key (a=" << key.a << ", f=" << key.f
           << "): cached " << it->second << " vs recomputed " << value;
        throw std::logic_error(os.str());
    }
    auto [it, fresh] = computed_.emplace(key, value);
    if (!fresh && it->second != value)
        throw std::logic_error("memo table saw two different values for one key");
}

size_t CountTable::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    size_t n = computed_.size();
    for (const auto& [k, v] : loaded_)
        if (!computed_.count(k)) ++n;
    return n;
}

namespace {

constexpr char kMagic[8] = {'F', '0', 'F', '2', 'C', 'N', 'T', '1'};
constexpr std::uint8_t kVersion = 1;

void put_varint(std::string& out, std::uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<char>((v & 0x7f) | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<char>(v));
}

void put_signed_varint(std::string& out, std::int64_t v) {
    put_varint(out, (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63));
}

std::uint64_t get_varint(std::istream& in) {
    std::uint64_t v = 0;
    int shift = 0;
    while (true) {
        int c = in.get();
        if (c == EOF) throw std::runtime_error("truncated cache file");
        v |= static_cast<std::uint64_t>(c & 0x7f) << shift;
        if (!(c & 0x80)) return v;
        shift += 7;
        if (shift > 63) throw std::runtime_error("varint overflow in cache file");
    }
}

std::int64_t get_signed_varint(std::istream& in) {
    std::uint64_t u = get_varint(in);
    return static_cast<std::int64_t>(u >> 1) ^ -static_cast<std::int64_t>(u & 1);
}

} // namespace

void CountTable::save(const std::filesystem::path& file) const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::map<CountKey, Count> all = loaded_;
    for (const auto& [k, v] : computed_) all[k] = v;

    std::string out(kMagic, sizeof(kMagic));
    out.push_back(static_cast<char>(kVersion));
    for (const auto& [key, value] : all) {
        out.push_back(key.surface == Surface::F0 ? 0 : 2);
        put_varint(out, static_cast<std::uint64_t>(key.a));
        put_signed_varint(out, key.f);
        put_varint(out, static_cast<std::uint64_t>(key.g));
        assert(value >= 0);
        std::string bytes;
        Count v = value;
        while (v > 0) {
            bytes.push_back(static_cast<char>(static_cast<unsigned>(v & 0xff)));
            v >>= 8;
        }
        std::reverse(bytes.begin(), bytes.end()); // big-endian
        put_varint(out, bytes.size());
        out += bytes;
    }
    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write cache file " + file.string());
    os.write(out.data(), static_cast<std::streamsize>(out.size()));
}

void CountTable::load(const std::filesystem::path& file) {
    std::ifstream is(file, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read cache file " + file.string());
    char magic[8];
    is.read(magic, 8);
    if (is.gcount() != 8 || !std::equal(magic, magic + 8, kMagic))
        throw std::runtime_error("bad magic in cache file " + file.string());
    int version = is.get();
    if (version != kVersion)
        throw std::runtime_error("unsupported cache format version " + std::to_string(version));

    std::lock_guard<std::mutex> lock(mutex_);
    while (true) {
        int s = is.get();
        if (s == EOF) break;
        CountKey key;
        key.surface = s == 0 ? Surface::F0 : Surface::F2;
        key.a = static_cast<int>(get_varint(is));
        key.f = static_cast<int>(get_signed_varint(is));
        key.g = static_cast<int>(get_varint(is));
        std::uint64_t len = get_varint(is);
        Count value = 0;
        for (std::uint64_t i = 0; i < len; ++i) {
            int c = is.get();
            if (c == EOF) throw std::runtime_error("truncated cache file");
            value = (value << 8) | c;
        }
        loaded_[key] = value;
    }
}

BigInt phi0(int a1, int b1, int a2, int b2, int a, int b) {
    BigInt mixed = BigInt(a1) * b2 + BigInt(a2) * b1 + BigInt(2) * a1 * a2;
    long long top = 4LL * a + 2 * b - 4;
    long long low = 4LL * a1 + 2 * b1;
    return BigInt(2 * a1 + b1) * (2 * a2 + b2) * mixed * binom(top, low - 2) -
           BigInt(2 * a1 + b1) * (2 * a1 + b1) * mixed * binom(top, low - 1);
}

BigInt phi21(int a1, int b1, int a2, int b2, int a, int b) {
    return phi0(a1, b1, a2, b2, a, b); // same displayed expression
}

BigInt phi22(int a1, int b1, int a2, int b2, int a, int b) {
    BigInt bb = BigInt(b1) * b2;
    long long top = 4LL * a + 2 * b - 4;
    long long low = 4LL * a1 + 2 * b1;
    return BigInt(2) * (2 * a1 + b1) * (2 * a2 + b2) * bb * binom(top, low - 2) -
           BigInt(2) * (2 * a1 + b1) * (2 * a1 + b1) * bb * binom(top, low - 1);
}

namespace {

Count halve_exactly(const BigInt& sum, const char* what, int a, int second) {
    if (sum < 0 || sum % 2 != 0) {
        std::ostringstream os;
        os << "recursion sum for " << what << "(" << a << "," << second
           << ") is not an exact nonnegative half: " << sum;
        throw std::logic_error(os.str());
    }
    return sum / 2;
}

} // namespace

Count n0_f2(int a, int b, CountTable* table) {
    if (a < 0) throw std::invalid_argument("n0_f2 needs a >= 0");
    if (b < 0) return 0; // zero extension
    if (a == 0 && b == 1) return 1;
    if (a + b < 1) throw std::invalid_argument("n0_f2 needs a+b >= 1");

    CountTable local;
    if (!table) table = &local;
    CountKey key{Surface::F2, a, b, 0, true};
    if (auto hit = table->find(key)) return *hit;

    BigInt sum = 0;
    // Splits of (a, b), endpoints excluded.
    for (int a1 = 0; a1 <= a; ++a1) {
        for (int b1 = 0; b1 <= b; ++b1) {
            if ((a1 == 0 && b1 == 0) || (a1 == a && b1 == b)) continue;
            int a2 = a - a1, b2 = b - b1;
            BigInt coeff = phi21(a1, b1, a2, b2, a, b);
            if (coeff != 0) sum += coeff * n0_f2(a1, b1, table) * n0_f2(a2, b2, table);
        }
    }
    // Splits of (a-1, b+2) with 0 <= a1 <= a-1 and 0 < b1 < b+2.
    for (int a1 = 0; a1 <= a - 1; ++a1) {
        for (int b1 = 1; b1 <= b + 1; ++b1) {
            int a2 = a - 1 - a1, b2 = b + 2 - b1;
            BigInt coeff = phi22(a1, b1, a2, b2, a, b);
            if (coeff != 0) sum += coeff * n0_f2(a1, b1, table) * n0_f2(a2, b2, table);
        }
    }
    Count value = halve_exactly(sum, "N0_F2", a, b);
    table->insert(key, value);
    return value;
}

Count n0_f0(int a, int c, CountTable* table) {
    if (a < 0 || c < 0) throw std::invalid_argument("n0_f0 needs a, c >= 0");
    if (a + c < 1) throw std::invalid_argument("n0_f0 needs a+c >= 1");
    if ((a == 0 && c == 1) || (a == 1 && c == 0)) return 1;

    CountTable local;
    if (!table) table = &local;
    CountKey key{Surface::F0, a, c, 0, true};
    if (auto hit = table->find(key)) return *hit;

    const int b = c - a;
    BigInt sum = 0;
    // Splits (a1, c1) + (a2, c2) = (a, c), endpoints excluded; in class
    // coordinates b1 = c1 - a1 this is the stated range -a1 <= b1 <= b+a2.
    for (int a1 = 0; a1 <= a; ++a1) {
        for (int c1 = 0; c1 <= c; ++c1) {
            if ((a1 == 0 && c1 == 0) || (a1 == a && c1 == c)) continue;
            int a2 = a - a1, c2 = c - c1;
            int b1 = c1 - a1, b2 = c2 - a2;
            BigInt coeff = phi0(a1, b1, a2, b2, a, b);
            if (coeff != 0) sum += coeff * n0_f0(a1, c1, table) * n0_f0(a2, c2, table);
        }
    }
    Count value = halve_exactly(sum, "N0_F0", a, c);
    table->insert(key, value);
    return value;
}

IdentityInstance main_identity_check_g0(int a, int b, CountTable* table) {
    if (a < 0 || b < -a || 2 * a + b < 1)
        throw std::invalid_argument("identity check needs a >= 0, b >= -a, 2a+b >= 1");
    CountTable local;
    if (!table) table = &local;

    IdentityInstance r;
    r.a = a;
    r.b = b;
    r.lhs = n0_f0(a, a + b, table);
    r.rhs = 0;
    std::ostringstream w;
    w << r.lhs << " =";
    for (int k = 0; k <= a; ++k) {
        Count binomial = binom(b + 2LL * k, k);
        Count factor = n0_f2(a - k, b + 2 * k, table);
        r.terms.push_back({binomial, factor});
        r.rhs += binomial * factor;
        w << (k == 0 ? " " : " + ");
        if (binomial == 1)
            w << factor;
        else
            w << binomial << "*" << factor;
    }
    r.pass = r.lhs == r.rhs;
    r.witness = w.str();
    return r;
}

} // namespace f0f2
