#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "f0f2/bigint.hpp"
#include "f0f2/geometry.hpp"

namespace f0f2 {

struct CountKey {
    Surface surface = Surface::F2;
    int a = 0;
    int f = 0; // printed second parameter (a+b on F0, b on F2)
    int g = 0;
    bool irreducible = true;

    friend auto operator<=>(const CountKey&, const CountKey&) = default;
};

// Write-once memo table for recursion results, with optional persistence.
// Values loaded from a cache file are kept apart from freshly computed
// ones; in paranoid mode lookups ignore the loaded values, so everything
// is recomputed and compared against the file on insert.
class CountTable {
  public:
    std::optional<Count> find(const CountKey& key) const;
    void insert(const CountKey& key, const Count& value);

    void set_paranoid(bool on) { paranoid_ = on; }
    bool paranoid() const { return paranoid_; }

    // Cache file: magic "F0F2CNT1", format version byte, then records of
    // (surface byte, a varint, f zigzag varint, g varint, count as
    // length-prefixed big-endian magnitude bytes).
    void load(const std::filesystem::path& file);
    void save(const std::filesystem::path& file) const;

    size_t size() const;
    size_t mismatches_detected() const { return mismatches_; }

  private:
    mutable std::mutex mutex_;
    std::map<CountKey, Count> computed_;
    std::map<CountKey, Count> loaded_;
    bool paranoid_ = false;
    size_t mismatches_ = 0;
};

// Recursion coefficients. a1+a2 and b1+b2 split (a,b) for phi0/phi21 and
// (a-1, b+2) for phi22; the binomial tops use the outer class (a,b).
BigInt phi0(int a1, int b1, int a2, int b2, int a, int b);
BigInt phi21(int a1, int b1, int a2, int b2, int a, int b);
BigInt phi22(int a1, int b1, int a2, int b2, int a, int b);

// Genus-0 irreducible counts by the two recursions, memoized in `table`
// (a local table is used when none is given). Base cases: N_F2(0,1) = 1
// and N_F2(.,b<0) = 0; N_F0(0,1) = N_F0(1,0) = 1. Every recursion halving
// must be exact; a remainder throws std::logic_error.
Count n0_f2(int a, int b, CountTable* table = nullptr);
Count n0_f0(int a, int c, CountTable* table = nullptr); // c = printed a+b

// One instance of the degeneration identity at genus 0, in the augmented
// form with the k = a summand included:
//   N^0_F0(a, a+b) = sum_{k=0}^{a} C(b+2k, k) N^0_F2(a-k, b+2k).
// Valid on the extended domain b >= -a, 2a+b >= 1.
struct IdentityInstance {
    int a = 0;
    int b = 0;
    Count lhs;
    Count rhs;
    std::vector<std::pair<Count, Count>> terms; // (binomial, N_F2 factor) per k
    bool pass = false;
    std::string witness; // e.g. "12 = 10 + 2*1 + 6*0"
};
IdentityInstance main_identity_check_g0(int a, int b, CountTable* table = nullptr);

} // namespace f0f2
