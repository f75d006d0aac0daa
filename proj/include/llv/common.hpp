#pragma once

// Shared basic types for the llv library: exact checked integer arithmetic,
// the two orthogonal algebra families B/D, and weights of their weight
// lattices stored as doubled integers (value = stored/2, so half-integral
// spin weights stay exact).

#include <array>
#include <cstring>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace llv {

using std::int64_t;

// ---------------------------------------------------------------------------
// Errors

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct dimension_mismatch_error : error {
    using error::error;
};
struct precondition_error : error {
    using error::error;
};
struct not_a_character_error : error {
    using error::error;
};
struct indivisible_error : error {
    using error::error;
};
struct out_of_range_error : error {
    using error::error;
};
struct overflow_error : error {
    using error::error;
};
struct disambiguation_error : error {
    using error::error;
};

// ---------------------------------------------------------------------------
// Checked 64-bit arithmetic. All multiplicities and counts in this library
// are exact; an operation that would wrap throws instead of producing a
// silently wrong value.

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in subtraction");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
    return r;
}

// ---------------------------------------------------------------------------
// Algebra: so(m) of type B_r (m = 2r+1) or D_r (m = 2r).

enum class Family : char { B = 'B', D = 'D' };

struct Algebra {
    Family family = Family::B;
    int rank = 1;

    Algebra() = default;
    Algebra(Family f, int r) : family(f), rank(r) {
        if (f == Family::B && r < 1) throw precondition_error("type B needs rank >= 1");
        if (f == Family::D && r < 2) throw precondition_error("type D needs rank >= 2");
    }

    static Algebra B(int r) { return Algebra(Family::B, r); }
    static Algebra D(int r) { return Algebra(Family::D, r); }

    // so(m) with m the dimension of the standard module
    static Algebra so(int m) {
        if (m % 2 == 1) return B((m - 1) / 2);
        return D(m / 2);
    }

    int so_dim() const { return family == Family::B ? 2 * rank + 1 : 2 * rank; }

    bool operator==(const Algebra& o) const { return family == o.family && rank == o.rank; }
    bool operator!=(const Algebra& o) const { return !(*this == o); }

    std::string name() const {
        return std::string(1, static_cast<char>(family)) + std::to_string(rank);
    }

    static Algebra parse(const std::string& s) {
        if (s.size() < 2 || (s[0] != 'B' && s[0] != 'D'))
            throw precondition_error("bad algebra name: " + s);
        int r = std::atoi(s.c_str() + 1);
        return Algebra(s[0] == 'B' ? Family::B : Family::D, r);
    }
};

// ---------------------------------------------------------------------------
// Weight: point of the (half-)integer weight lattice in epsilon coordinates,
// stored doubled. Fixed-size storage keeps Character maps allocation-free.

constexpr int kMaxRank = 16;

struct Weight {
    std::array<int16_t, kMaxRank> d{};  // doubled coordinates, zero-padded
    int16_t rank = 0;

    Weight() = default;
    explicit Weight(int r) : rank(static_cast<int16_t>(r)) {
        if (r < 0 || r > kMaxRank) throw out_of_range_error("weight rank out of range");
    }

    static Weight from_doubled(const std::vector<int>& v) {
        Weight w(static_cast<int>(v.size()));
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] < INT16_MIN || v[i] > INT16_MAX)
                throw out_of_range_error("weight coordinate out of range");
            w.d[i] = static_cast<int16_t>(v[i]);
        }
        return w;
    }

    // integer coordinates (doubled internally)
    static Weight from_ints(std::initializer_list<int> v) {
        Weight w(static_cast<int>(v.size()));
        int i = 0;
        for (int x : v) w.d[i++] = static_cast<int16_t>(2 * x);
        return w;
    }

    std::vector<int> doubled() const { return std::vector<int>(d.begin(), d.begin() + rank); }

    bool operator==(const Weight& o) const { return rank == o.rank && d == o.d; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    // lexicographic on doubled coordinates
    bool operator<(const Weight& o) const {
        if (rank != o.rank) return rank < o.rank;
        return d < o.d;
    }

    bool is_zero() const {
        for (int i = 0; i < rank; ++i)
            if (d[i] != 0) return false;
        return true;
    }

    bool is_integral() const {  // integer coordinates (all doubled entries even)
        for (int i = 0; i < rank; ++i)
            if (d[i] & 1) return false;
        return true;
    }

    // all doubled entries share one parity (the weight lattice condition)
    bool has_common_parity() const {
        if (rank == 0) return true;
        int p = d[0] & 1;
        for (int i = 1; i < rank; ++i)
            if ((d[i] & 1) != p) return false;
        return true;
    }

    // l1 norm in doubled units
    int64_t l1_doubled() const {
        int64_t s = 0;
        for (int i = 0; i < rank; ++i) s += std::abs(static_cast<int>(d[i]));
        return s;
    }

    std::string str() const {  // "2,1" / "3/2,1/2" / "0" for the zero weight
        std::ostringstream os;
        for (int i = 0; i < rank; ++i) {
            if (i) os << ',';
            if (d[i] % 2 == 0)
                os << d[i] / 2;
            else
                os << d[i] << "/2";
        }
        return os.str();
    }

    // compact display form: trailing zeros dropped, "(2,1)" style, "(0)" for zero
    std::string display() const {
        int last = rank;
        while (last > 0 && d[last - 1] == 0) --last;
        if (last == 0) return "(0)";
        std::ostringstream os;
        os << '(';
        for (int i = 0; i < last; ++i) {
            if (i) os << ',';
            if (d[i] % 2 == 0)
                os << d[i] / 2;
            else
                os << d[i] << "/2";
        }
        os << ')';
        return os.str();
    }
};

// parse "2,1,0" or "1/2,1/2" (the "/2" suffix marks a half-integer entry),
// zero-padded to the target rank when shorter
inline Weight parse_weight(const std::string& s, int rank) {
    std::vector<int> doubled;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw precondition_error("empty weight coordinate in: " + s);
        size_t slash = tok.find('/');
        if (slash != std::string::npos) {
            if (tok.substr(slash + 1) != "2")
                throw precondition_error("only /2 denominators are supported: " + tok);
            doubled.push_back(std::stoi(tok.substr(0, slash)));
        } else {
            doubled.push_back(2 * std::stoi(tok));
        }
    }
    if (static_cast<int>(doubled.size()) > rank)
        throw dimension_mismatch_error("weight has more coordinates than the rank");
    doubled.resize(rank, 0);
    return Weight::from_doubled(doubled);
}

struct WeightHash {
    size_t operator()(const Weight& w) const {
        // the 16 int16 coordinates viewed as four 64-bit words, mixed splitmix-style
        uint64_t words[4];
        std::memcpy(words, w.d.data(), sizeof words);
        uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(w.rank);
        for (uint64_t word : words) {
            uint64_t x = word + 0x9e3779b97f4a7c15ull + h;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
            h = x ^ (x >> 31);
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace llv
